#ifndef DCOPT_PROBLEMS_HPP
#define DCOPT_PROBLEMS_HPP

#include <memory>
#include <string>

#include "dcopt/data.hpp"
#include "dcopt/metrics.hpp"
#include "dcopt/program.hpp"

namespace dcopt {

// Nonconvex logistic classification with the exponential regularizer
// r(w) = sum_j lambda (1 - exp(-alpha |w_j|)), put into DC form with a
// quadratic majorant: G = q/2||w||^2, h_i = q/2||w||^2 - phi_i, and the
// regularizer split r = r1 - r2 with r1 = lambda*alpha ||w||_1 (so the
// subproblem stays in closed form).

struct BinaryLogisticSpec {
  std::shared_ptr<const Dataset> dataset;
  double lambda = 0.0;  // <= 0 means default 1/n
  double alpha = 5.0;
  double eta_shift = 0.0;
};

struct MultiClassLogisticSpec {
  std::shared_ptr<const Dataset> dataset;
  double lambda = 0.0;
  double alpha = 5.0;
  double eta_shift = 0.0;
};

struct BuiltProblem {
  DcProgram program;
  SubdiffModel model;
  std::string name;
};

// Smoothness constant of the binary loss phi(m) = (1 - 1/(1+e^{-m}))^2:
// (39 + 55 sqrt(33))/2304 * max_i ||a_i||^2.
double binary_smoothness(const Dataset& ds);

// Multi-class softmax loss: (c-1)/c * max_i ||a_i||^2.
double multiclass_smoothness(const Dataset& ds);

BuiltProblem build_binary_dc(const BinaryLogisticSpec& spec);
BuiltProblem build_multiclass_dc(const MultiClassLogisticSpec& spec);

// The one-dimensional min |x| program (G = |x|, H = r1 = r2 = 0) whose
// critical distance stays 1 off the optimum while the gap shrinks like |x|.
BuiltProblem make_abs_program();

}  // namespace dcopt

#endif
