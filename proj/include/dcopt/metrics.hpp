#ifndef DCOPT_METRICS_HPP
#define DCOPT_METRICS_HPP

#include <functional>
#include <variant>

#include "dcopt/program.hpp"

namespace dcopt {

// Closed-form descriptions of dist(v, subdiff(G+r1)(x)) for the shapes the
// toolkit ships, plus an escape hatch for anything else.

// G+r1 differentiable; the distance is ||v - grad(G+r1)(x)|| using grad_g
// (r1 must be identically zero for this model).
struct SmoothOnlyModel {};

// G = q/2||x||^2, r1 = l1 ||x||_1. Coordinate-wise: a nonzero coordinate
// contributes (v_j - q x_j - l1 sign x_j)^2, a zero one max(|v_j|-l1, 0)^2.
struct QuadraticPlusL1Model {
  double quad_coeff;
  double l1_weight;
};

// Row-group analogue for G = q/2||X||_F^2, r1 = w * sum_j ||row_j||.
struct QuadraticPlusGroupL2Model {
  double quad_coeff;
  double group_weight;
  std::size_t n_rows;
  std::size_t n_cols;
};

// (x, v) -> distance from v to subdiff(G+r1)(x).
struct CustomModel {
  std::function<double(const Vector&, const Vector&)> distance;
};

using SubdiffModel = std::variant<SmoothOnlyModel, QuadraticPlusL1Model,
                                  QuadraticPlusGroupL2Model, CustomModel>;

// Euclidean distance from grad(H+r2)(x) to subdiff(G+r1)(x). Uses the exact
// full gradient of H, so this is the single-sample value of the criticality
// measure; callers average over seeds where the expectation is wanted.
double critical_distance(const DcProgram& prog, const SubdiffModel& model,
                         const Vector& x);

// Same, but with grad(H+r2)(x) supplied by the caller (online mode feeds a
// pool-exact or windowed estimate here).
double critical_distance_at(const SubdiffModel& model, const Vector& x,
                            const Vector& v);

// gap(x_t) = max_x (G+r1)(x_t) - (G+r1)(x) - <lin, x_t - x> with the inner
// max solved through the program's subproblem oracle. lin is the H+r2
// linearization at the previous iterate (or a declared surrogate). Throws
// when the inner problem is unbounded.
double gap_function(const DcProgram& prog, const Vector& x_t, const Vector& lin);

}  // namespace dcopt

#endif
