#ifndef DCOPT_KERNELS_HPP
#define DCOPT_KERNELS_HPP

#include <cstddef>
#include <string>

namespace dcopt::kernels {

// Dense vector primitives used by the inner loops. Every operation has a
// scalar reference implementation and, on x86-64 with AVX2+FMA, a SIMD
// variant; the active table is picked once at startup. SIMD variants may
// reassociate sums, so results can differ from the scalar path by rounding;
// within one process the selection is fixed, which keeps runs reproducible.
struct Ops {
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*nrm2sq)(const double* a, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // x *= alpha
  void (*scale)(double alpha, double* x, std::size_t n);
  // out = alpha * x
  void (*scale_copy)(double alpha, const double* x, double* out, std::size_t n);
  // out[i] = sign(c[i]) * max(|c[i]| - lambda, 0) * inv_q
  void (*soft_threshold_scale)(const double* c, double lambda, double inv_q,
                               double* out, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();

// AVX2 table, or nullptr when the binary or the CPU lacks support.
const Ops* avx2_ops();

// Runtime-selected table. Honors DCOPT_KERNELS={scalar,avx2} if set.
const Ops& active();

}  // namespace dcopt::kernels

#endif
