#ifndef DCOPT_ESTIMATORS_HPP
#define DCOPT_ESTIMATORS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "dcopt/data.hpp"
#include "dcopt/program.hpp"
#include "dcopt/rng.hpp"
#include "dcopt/vector.hpp"

namespace dcopt {

enum class Branch { Refresh, Correction };

// How the small-batch correction of PAGE is charged. The paper's cost
// expression b + T(pb + (1-p)b') charges the correction at b' gradients per
// iteration even though the update touches each sampled index at two points;
// OracleCalls charges the literal 2b'. Both totals appear in the trace.
enum class Accounting { PaperUnits, OracleCalls };

struct StepInfo {
  Branch branch = Branch::Refresh;
  std::uint64_t used = 0;          // per the active accounting convention
  std::uint64_t oracle_calls = 0;  // literal component-gradient evaluations
};

// Uniform access to component gradients for the estimators. Finite-sum mode
// draws indices i.i.d. with replacement (the b = N refresh enumerates all
// indices deterministically); online mode draws fresh examples from a
// stream. Component-gradient evaluations are counted here, one owner per
// run, so budget accounting can be checked against the oracle exactly.
class BatchSampler {
 public:
  virtual ~BatchSampler() = default;

  virtual bool finite() const = 0;
  virtual std::size_t n_components() const = 0;
  virtual std::size_t dim() const = 0;

  // Index draws use the caller's rng (the run stream); stream draws advance
  // the stream's own rng.
  virtual void draw(std::size_t k, Rng& rng) = 0;
  // Deterministic full batch 0..N-1; finite-sum only.
  virtual void use_all() = 0;

  virtual std::size_t batch_size() const = 0;
  virtual const std::vector<std::uint32_t>& batch_indices() const = 0;

  // Mean component gradient over the current batch, fixed summation order.
  virtual void mean_grad(const Vector& x, Vector& out) = 0;
  // Mean of grad h_i(x_new) - grad h_i(x_old) over the current batch.
  virtual void mean_grad_diff(const Vector& x_new, const Vector& x_old,
                              Vector& out) = 0;
  // Single component gradient by index; finite-sum only.
  virtual void grad_component(std::size_t index, const Vector& x, Vector& out) = 0;

  virtual std::uint64_t grad_eval_count() const = 0;
};

std::unique_ptr<BatchSampler> make_finite_sampler(const DcProgram& prog);
std::unique_ptr<BatchSampler> make_stream_sampler(const DcProgram& prog,
                                                  StreamSource& stream);

// --- PAGE ---------------------------------------------------------------

struct PageState {
  Vector g;       // current estimator g^t
  Vector x_prev;  // point at which g was formed
  double p = 1.0;
  std::size_t b = 0;
  std::size_t b_small = 0;
  Rng rng;
};

// g^0 = mean of a size-b sample of component gradients at x0 (all indices
// when b = N in finite-sum mode). The Bernoulli and index draws of the whole
// run flow from the state's rng, seeded here.
PageState page_init(BatchSampler& sampler, const Vector& x0, double p,
                    std::size_t b, std::size_t b_small, std::uint64_t seed);

// One PAGE update at x_new: with probability p a fresh size-b average,
// otherwise g + mean(grad h_i(x_new) - grad h_i(x_prev)) over b' draws.
// The Bernoulli draw happens before any index draw.
StepInfo page_step(PageState& state, BatchSampler& sampler, const Vector& x_new,
                   Accounting accounting = Accounting::PaperUnits);

// --- baselines ----------------------------------------------------------

struct SvrgState {
  Vector snapshot_x;
  Vector snapshot_grad;  // full gradient at the snapshot
  Vector g;
  std::size_t b_small = 0;
  std::size_t epoch = 0;  // snapshot refresh period m
  std::uint64_t steps_done = 0;
  Rng rng;
};

SvrgState svrg_init(BatchSampler& sampler, const Vector& x0, std::size_t b_small,
                    std::size_t epoch, std::uint64_t seed);
StepInfo svrg_step(SvrgState& state, BatchSampler& sampler, const Vector& x_new);

struct SagaState {
  std::vector<Vector> table;  // stored component gradients, N x dim
  Vector avg;                 // running average of the table
  Vector g;
  std::size_t b_small = 0;
  Rng rng;
};

SagaState saga_init(BatchSampler& sampler, const Vector& x0, std::size_t b_small,
                    std::uint64_t seed);
StepInfo saga_step(SagaState& state, BatchSampler& sampler, const Vector& x_new);

// SAG keeps the same table but uses the post-update table average (biased).
struct SagState {
  std::vector<Vector> table;
  Vector avg;
  Vector g;
  std::size_t b_small = 0;
  Rng rng;
};

SagState sag_init(BatchSampler& sampler, const Vector& x0, std::size_t b_small,
                  std::uint64_t seed);
StepInfo sag_step(SagState& state, BatchSampler& sampler, const Vector& x_new);

}  // namespace dcopt

#endif
