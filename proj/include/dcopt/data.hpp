#ifndef DCOPT_DATA_HPP
#define DCOPT_DATA_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcopt/rng.hpp"
#include "dcopt/vector.hpp"

namespace dcopt {

// One sparse observation. Indices are 0-based internally; the LIBSVM wire
// format is 1-based and strictly increasing per line.
struct SparseExample {
  std::vector<std::uint32_t> indices;
  std::vector<double> values;
  double label = 0.0;

  double dot(const Vector& x) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      acc += values[k] * x[indices[k]];
    }
    return acc;
  }

  // x[idx] += alpha * value
  void axpy_into(double alpha, Vector& x) const {
    for (std::size_t k = 0; k < indices.size(); ++k) {
      x[indices[k]] += alpha * values[k];
    }
  }

  double nrm2sq() const {
    double acc = 0.0;
    for (double v : values) acc += v * v;
    return acc;
  }
};

enum class LabelScheme { Binary, BinaryFromZeroOne, Multiclass };

struct Dataset {
  std::vector<SparseExample> examples;
  std::size_t n_features = 0;
  int n_classes = 0;
  LabelScheme label_scheme = LabelScheme::Binary;
  bool normalized = false;

  std::size_t size() const { return examples.size(); }

  // Label mapped to {-1,+1}; requires a binary scheme.
  double binary_label(std::size_t i) const {
    const double y = examples[i].label;
    if (label_scheme == LabelScheme::BinaryFromZeroOne) {
      return y == 0.0 ? -1.0 : 1.0;
    }
    return y;
  }

  // Label mapped to a class id in [0, n_classes).
  int class_label(std::size_t i) const {
    return static_cast<int>(examples[i].label) - 1;
  }

  double max_row_nrm2sq() const {
    double m = 0.0;
    for (const auto& ex : examples) {
      const double s = ex.nrm2sq();
      if (s > m) m = s;
    }
    return m;
  }

  // Per-feature max-abs scaling, applied in place.
  void normalize_max_abs();
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  std::size_t line;
};

// LIBSVM text format: "<label> <idx>:<val> ...", '#' starts a comment,
// blank lines are skipped. Throws ParseError with the offending line number.
Dataset parse_libsvm(std::istream& in);
Dataset parse_libsvm_file(const std::string& path);

// Inverse of parse_libsvm; original labels are written back untouched.
void serialize_libsvm(const Dataset& ds, std::ostream& out);
std::string serialize_libsvm(const Dataset& ds);

struct SyntheticBinary {
  Dataset dataset;
  Vector planted_w;
};

// Sparse Gaussian features, labels sign(a' w*) flipped with prob `noise`.
// Rows are rescaled to Euclidean norm `row_norm` so max ||a_i||^2 is known.
SyntheticBinary generate_synthetic_binary(std::size_t n, std::size_t d,
                                          double sparsity, double noise,
                                          std::uint64_t seed,
                                          double row_norm = 1.0);

struct SyntheticMulticlass {
  Dataset dataset;
  Vector planted_w;  // d*c, column-major by class
};

SyntheticMulticlass generate_synthetic_multiclass(std::size_t n, std::size_t d,
                                                  int n_classes, double sparsity,
                                                  double noise,
                                                  std::uint64_t seed,
                                                  double row_norm = 1.0);

// I.i.d. sample source for the online mode. Single-owner: holds the stream
// RNG. Either backed by a finite pool (uniform draws with replacement, so
// population statistics are exactly computable) or by a generator closure.
class StreamSource {
 public:
  static StreamSource from_pool(Dataset pool, std::uint64_t seed);
  static StreamSource from_generator(std::function<SparseExample(Rng&)> gen,
                                     std::uint64_t seed);

  const SparseExample& next();

  bool has_pool() const { return !pool_.examples.empty(); }
  const Dataset& pool() const { return pool_; }

  // Exact component-gradient variance at a reference point, when known.
  std::optional<double> true_sigma_sq;

 private:
  StreamSource() = default;
  Dataset pool_;
  std::function<SparseExample(Rng&)> gen_;
  SparseExample scratch_;
  Rng rng_;
};

// Draws k examples, advancing the source.
std::vector<SparseExample> stream_sample(StreamSource& source, std::size_t k);

}  // namespace dcopt

#endif
