#ifndef DCOPT_TRACE_IO_HPP
#define DCOPT_TRACE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dcopt/solver.hpp"

namespace dcopt {

// Trace CSV schema (one header row, comma-delimited, UTF-8):
//   t,grad_count,oracle_calls,F,d,gap,gap_surrogate,step_norm,branch,residual
// Absent metric values serialize as empty fields. Doubles are written with
// std::to_chars shortest round-trip form, so serialization is byte-stable
// for identical traces and lossless to reparse.
void write_trace_csv(const Trace& trace, std::ostream& out);
std::string trace_csv_string(const Trace& trace);
void write_trace_csv_file(const Trace& trace, const std::string& path);

std::vector<IterationRecord> read_trace_csv(std::istream& in);
std::vector<IterationRecord> read_trace_csv_file(const std::string& path);

// Budget-vs-loss summary: gradient counts binned into log-spaced buckets,
// best-so-far objective per run at each bucket edge, quartiles across runs.
struct BudgetSummary {
  std::vector<double> budget;  // bucket edges
  std::vector<double> median_f;
  std::vector<double> q25_f;
  std::vector<double> q75_f;
};

BudgetSummary summarize_runs(const std::vector<std::vector<IterationRecord>>& runs,
                             std::size_t n_buckets, double budget_lo,
                             double budget_hi);

// Interpolated order statistic of an unsorted sample.
double quantile(std::vector<double> values, double q);

}  // namespace dcopt

#endif
