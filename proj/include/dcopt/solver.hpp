#ifndef DCOPT_SOLVER_HPP
#define DCOPT_SOLVER_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dcopt/estimators.hpp"
#include "dcopt/metrics.hpp"
#include "dcopt/program.hpp"

namespace dcopt {

enum class Mode { FiniteSum, Online };

enum class Method { DcaPage, DcaSvrg, DcaSaga, Sdca, Dca };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct SigmaSqSource {
  enum class Kind { Provided, PilotEstimate };
  Kind kind = Kind::PilotEstimate;
  double provided = 0.0;
  std::size_t pilot_batch = 512;

  static SigmaSqSource value(double sigma_sq) {
    return {Kind::Provided, sigma_sq, 0};
  }
  static SigmaSqSource pilot(std::size_t batch = 512) {
    return {Kind::PilotEstimate, 0.0, batch};
  }
};

struct SolverConfig {
  Mode mode = Mode::FiniteSum;
  // 0 selects the theorem defaults: finite-sum b = N, b' = ceil(sqrt(N)),
  // p = 1/b'; online b = ceil(sigma^2/(alpha eps^2)), b' = ceil(sqrt(b)).
  std::size_t b = 0;
  std::size_t b_small = 0;
  double p = 0.0;
  double eta_shift = 0.0;  // informational; the shift is baked into the program
  double epsilon = 1e-2;
  std::size_t max_iters = 1000;
  std::uint64_t budget_cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t seed = 0;
  double subproblem_tolerance = 1e-10;
  SigmaSqSource sigma_sq_source;
  Accounting accounting = Accounting::PaperUnits;
  bool early_stop = false;          // stop once d <= epsilon at a checkpoint
  std::size_t metric_interval = 0;  // 0 = ceil(sqrt(N)) resp. ceil(sqrt(b))
  std::size_t eval_window = 2048;   // online objective-estimate window
  std::size_t svrg_epoch = 0;       // 0 = ceil(N / b')
};

struct IterationRecord {
  std::uint64_t t = 0;
  double f_value = 0.0;
  std::uint64_t grad_count = 0;    // cumulative, active accounting convention
  std::uint64_t oracle_calls = 0;  // cumulative, literal oracle invocations
  std::optional<double> d_value;
  std::optional<double> gap_value;      // true-gradient gap, checkpoints only
  std::optional<double> gap_surrogate;  // one-step gap under g^t + w^t
  double step_norm = 0.0;
  Branch branch = Branch::Refresh;
  double subproblem_residual = 0.0;
};

struct Trace {
  std::string method;
  std::uint64_t seed = 0;
  SolverConfig config;
  std::vector<IterationRecord> records;  // index 0 holds the t = 0 state
  std::size_t output_index = 0;          // uniform in [1, T] for stochastic runs
  Vector x_hat;
  Vector x_final;
  // All iterates x^0..x^T when dim * max_iters stays small enough to keep;
  // otherwise empty and x_hat comes from a single-slot reservoir.
  std::vector<Vector> iterates;
  std::uint64_t total_grad_count = 0;
  std::uint64_t total_oracle_calls = 0;
};

struct ParameterSelection {
  std::size_t b = 0;
  std::size_t b_small = 0;
  double p = 1.0;
  double predicted_iterations = 0.0;
  double predicted_budget = 0.0;
  bool b_small_feasible = true;
  double suggested_eta = 0.0;  // minimal shift making the b' window nonempty
  double c_const = 0.0;        // online: C = (L+L_r2)^2 + L^2
  double alpha = 0.0;          // online: rho L / (4 (4C + rho L))
};

// Theorem-default batch sizes and probability, with the predicted iteration
// count and gradient budget for a caller-supplied Delta_0 = F(x0) - F*.
// In finite-sum mode n_or_sigma_sq is N; online it is sigma^2.
ParameterSelection select_parameters(Mode mode, double n_or_sigma_sq,
                                     const ProblemConstants& constants,
                                     double epsilon, double delta0,
                                     bool allow_shift = true);

// Sample variance of instance gradients at x over a pilot draw from the
// stream, inflated by 2 for safety.
double pilot_sigma_sq(const DcProgram& prog, StreamSource& stream,
                      const Vector& x, std::size_t pilot_batch);

Trace run_dca_page(const DcProgram& prog, const SolverConfig& cfg,
                   const Vector& x0, const SubdiffModel* model = nullptr,
                   StreamSource* stream = nullptr);

// Deterministic full-gradient DCA; linearizes H + r2 at every iterate.
Trace run_standard_dca(const DcProgram& prog, const SolverConfig& cfg,
                       const Vector& x0, const SubdiffModel* model = nullptr);

// Finite-sum only; online mode throws "estimator requires finite sum".
Trace run_dca_svrg(const DcProgram& prog, const SolverConfig& cfg,
                   const Vector& x0, const SubdiffModel* model = nullptr);
Trace run_dca_saga(const DcProgram& prog, const SolverConfig& cfg,
                   const Vector& x0, const SubdiffModel* model = nullptr);
Trace run_sdca(const DcProgram& prog, const SolverConfig& cfg, const Vector& x0,
               const SubdiffModel* model = nullptr);

Trace run_method(Method method, const DcProgram& prog, const SolverConfig& cfg,
                 const Vector& x0, const SubdiffModel* model = nullptr,
                 StreamSource* stream = nullptr);

}  // namespace dcopt

#endif
