#ifndef DCOPT_PROGRAM_HPP
#define DCOPT_PROGRAM_HPP

#include <cstddef>
#include <functional>
#include <optional>

#include "dcopt/data.hpp"
#include "dcopt/subproblem.hpp"
#include "dcopt/vector.hpp"

namespace dcopt {

// Constants attached to a DC program. rho_* are strong convexity moduli of
// the two sides, l_avg the average smoothness constant of the components,
// l_r2 the smoothness of r2, sigma_sq the component-gradient variance bound
// (known for synthetic streams, otherwise estimated).
struct ProblemConstants {
  double rho_g_r1 = 0.0;
  double rho_h_r2 = 0.0;
  double l_avg = 0.0;
  double l_r2 = 0.0;
  std::optional<double> sigma_sq;
};

// A difference-of-convex program F = G - H + r1 - r2 with H = (1/N) sum h_i,
// represented through its component oracles. Immutable after construction;
// oracles are pure and reentrant, so one program can back many concurrent
// runs.
struct DcProgram {
  std::size_t dim = 0;

  std::function<double(const Vector&)> value_g;
  std::function<void(const Vector&, Vector&)> grad_g;

  // Finite-sum component oracles; n_components == 0 means no finite-sum
  // access (pure streaming program).
  std::size_t n_components = 0;
  std::function<double(std::size_t, const Vector&)> component_value;
  std::function<void(std::size_t, const Vector&, Vector&)> component_grad;

  std::function<double(const Vector&)> value_r1;
  std::function<double(const Vector&)> value_r2;
  // A member of the subdifferential of r2; the gradient where r2 is smooth.
  std::function<void(const Vector&, Vector&)> subgrad_r2;

  // Per-instance oracles of the same loss, for streamed samples.
  std::function<double(const SparseExample&, const Vector&)> instance_value;
  std::function<void(const SparseExample&, const Vector&, Vector&)> instance_grad;

  SubproblemSpec subproblem = QuadraticL1{1.0, 0.0};

  ProblemConstants constants;
  double rho_shift = 0.0;

  bool has_components() const { return n_components > 0; }
  bool has_instance_oracles() const { return static_cast<bool>(instance_grad); }

  // argmin_x G(x) + r1(x) - <c, x>
  Vector solve_subproblem(const Vector& c, double* residual = nullptr) const {
    return dcopt::solve_subproblem(subproblem, c, residual);
  }
};

// F(x) = G(x) - H(x) + r1(x) - r2(x), with H the exact average over all
// components. Requires finite-sum access.
double evaluate_F(const DcProgram& prog, const Vector& x);

// Exact full gradient of H at x (average of component gradients, fixed
// summation order). Requires finite-sum access.
void full_grad_h(const DcProgram& prog, const Vector& x, Vector& out);

// Adds eta/2 ||x||^2 to both DC components. The objective is unchanged;
// both strong convexity constants rise by eta.
DcProgram apply_rho_shift(const DcProgram& prog, double eta);

// (1/N) sum_i ||grad h_i(x) - grad H(x)||^2, by enumeration.
double component_grad_variance(const DcProgram& prog, const Vector& x);

}  // namespace dcopt

#endif
