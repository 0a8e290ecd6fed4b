#ifndef DCOPT_VECTOR_HPP
#define DCOPT_VECTOR_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dcopt/kernels.hpp"

namespace dcopt {

using Vector = std::vector<double>;

inline double dot(const Vector& a, const Vector& b) {
  return kernels::active().dot(a.data(), b.data(), a.size());
}

inline double nrm2sq(const Vector& a) {
  return kernels::active().nrm2sq(a.data(), a.size());
}

inline double nrm2(const Vector& a) { return std::sqrt(nrm2sq(a)); }

// y += alpha * x
inline void axpy(double alpha, const Vector& x, Vector& y) {
  kernels::active().axpy(alpha, x.data(), y.data(), x.size());
}

inline void scale(double alpha, Vector& x) {
  kernels::active().scale(alpha, x.data(), x.size());
}

// out = alpha * x
inline void scale_copy(double alpha, const Vector& x, Vector& out) {
  out.resize(x.size());
  kernels::active().scale_copy(alpha, x.data(), out.data(), x.size());
}

inline void fill_zero(Vector& x) { x.assign(x.size(), 0.0); }

inline double dist_sq(const Vector& a, const Vector& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

inline double dist(const Vector& a, const Vector& b) {
  return std::sqrt(dist_sq(a, b));
}

inline bool all_finite(const Vector& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

inline void require_dim(const Vector& x, std::size_t n, const char* what) {
  if (x.size() != n) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace dcopt

#endif
