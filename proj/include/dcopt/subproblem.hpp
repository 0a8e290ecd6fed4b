#ifndef DCOPT_SUBPROBLEM_HPP
#define DCOPT_SUBPROBLEM_HPP

#include <cstddef>
#include <functional>
#include <variant>

#include "dcopt/vector.hpp"

namespace dcopt {

// Convex subproblem of the outer loop: argmin_x G(x) + r1(x) - <c, x>.
// Closed forms where the structure allows, certified proximal-gradient
// iteration otherwise.

// G = q/2 ||x||^2, r1 = l1_weight ||x||_1
struct QuadraticL1 {
  double quad_coeff;
  double l1_weight;
};

// G = q/2 ||X||_F^2, r1 = weight * sum_j ||row_j(X)||_2; X is n_rows x n_cols
// flattened column-major (column k occupies [k*n_rows, (k+1)*n_rows)).
struct QuadraticGroupL2 {
  double quad_coeff;
  double group_weight;
  std::size_t n_rows;
  std::size_t n_cols;
};

// G = |x| in one dimension, r1 = 0 (the nonsmooth 1-D special case).
struct AbsValue1D {};

// Smooth strongly convex G plus prox-friendly r1, solved by proximal
// gradient on G(x) - <c,x> until the fixed-point residual drops below tol.
struct GenericStronglyConvex {
  std::function<double(const Vector&)> value;
  std::function<void(const Vector&, Vector&)> grad;
  // out = prox_{step * r1}(v)
  std::function<void(const Vector&, double, Vector&)> prox;
  double mu;         // strong convexity of the smooth part
  double lipschitz;  // gradient Lipschitz constant of the smooth part
  double tolerance = 1e-10;
  std::size_t max_iters = 100000;
};

using SubproblemSpec =
    std::variant<QuadraticL1, QuadraticGroupL2, AbsValue1D, GenericStronglyConvex>;

Vector solve_quadratic_l1(double quad_coeff, double l1_weight, const Vector& c);

Vector solve_quadratic_group_l2(double quad_coeff, double group_weight,
                                std::size_t n_rows, std::size_t n_cols,
                                const Vector& c);

// argmin |x| - c x over the reals: 0 for |c| <= 1, unbounded otherwise.
double solve_abs_1d(double c);

Vector solve_generic(const GenericStronglyConvex& spec, const Vector& c,
                     double* residual_out = nullptr);

// Dispatch over the spec; residual_out gets 0 for closed forms.
Vector solve_subproblem(const SubproblemSpec& spec, const Vector& c,
                        double* residual_out = nullptr);

// Value of G(x) + r1(x) for the subproblem's own objective (used by the gap
// metric and optimality checks).
double subproblem_g_r1_value(const SubproblemSpec& spec, const Vector& x);

// Same subproblem with eta/2 ||x||^2 added to the smooth part (rho-shift).
SubproblemSpec shift_subproblem(const SubproblemSpec& spec, double eta);

}  // namespace dcopt

#endif
