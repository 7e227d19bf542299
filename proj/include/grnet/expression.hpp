#ifndef GRNET_EXPRESSION_HPP
#define GRNET_EXPRESSION_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "grnet/errors.hpp"

namespace grnet {

/// Measurement scale of an expression matrix. Fold-change arithmetic differs
/// between linear intensities and log2-transformed values, so the tag is
/// threaded through the whole pipeline.
enum class Scale { Linear, Log2, Unknown };

std::string to_string(Scale s);

/// Dense genes x samples grid. Missing measurements are stored as NaN; every
/// present cell is finite. Row i belongs to gene_ids[i], column j to
/// sample_ids[j].
struct ExpressionMatrix {
  std::vector<std::string> gene_ids;
  std::vector<std::string> sample_ids;
  std::vector<double> values;  // row-major, rows() * cols() entries
  Scale scale = Scale::Unknown;

  std::size_t rows() const { return gene_ids.size(); }
  std::size_t cols() const { return sample_ids.size(); }

  double at(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }
  double& at(std::size_t r, std::size_t c) { return values[r * cols() + c]; }

  bool is_missing(std::size_t r, std::size_t c) const { return std::isnan(at(r, c)); }

  std::span<const double> row(std::size_t r) const {
    return {values.data() + r * cols(), cols()};
  }

  std::size_t missing_count(std::size_t r) const {
    std::size_t n = 0;
    for (double v : row(r))
      if (std::isnan(v)) ++n;
    return n;
  }

  bool has_missing() const {
    for (double v : values)
      if (std::isnan(v)) return true;
    return false;
  }

  /// Index of the first row named `gene`, or npos.
  std::size_t find_gene(const std::string& gene) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Checks structural invariants: dimensions consistent, sample ids unique,
  /// every present value finite. Throws DataError on violation.
  void check(bool require_unique_genes = false) const;
};

/// Assignment of samples to exactly two condition labels. condition_a is the
/// label seen first in the input; Welch/fold-change sign conventions treat it
/// as the reference (x) group.
struct SampleGrouping {
  std::string condition_a;
  std::string condition_b;
  std::map<std::string, std::string> assignment;  // sample id -> label

  std::size_t count(const std::string& label) const;

  /// Swaps the two condition labels. Used by the sign-antisymmetry tests.
  SampleGrouping swapped() const;
};

/// Column indices of a matrix split by condition, in matrix column order.
struct ConditionColumns {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
};

/// Resolves a grouping against a matrix. Every assigned sample must exist in
/// the matrix and each condition must keep >= 2 samples; matrix columns not
/// mentioned in the grouping are ignored.
ConditionColumns split_columns(const ExpressionMatrix& m, const SampleGrouping& g);

}  // namespace grnet

#endif
