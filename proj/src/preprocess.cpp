#include "grnet/preprocess.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace grnet {

namespace {

double present_mean(const ExpressionMatrix& m, std::size_t r) {
  double sum = 0;
  std::size_t n = 0;
  for (double v : m.row(r)) {
    if (!std::isnan(v)) {
      sum += v;
      ++n;
    }
  }
  if (n == 0)
    throw NumericError("gene '" + m.gene_ids[r] + "' has no present values; cannot impute");
  return sum / static_cast<double>(n);
}

ExpressionMatrix keep_rows(const ExpressionMatrix& m, const std::vector<std::size_t>& rows) {
  ExpressionMatrix out;
  out.sample_ids = m.sample_ids;
  out.scale = m.scale;
  out.gene_ids.reserve(rows.size());
  out.values.reserve(rows.size() * m.cols());
  for (std::size_t r : rows) {
    out.gene_ids.push_back(m.gene_ids[r]);
    auto row = m.row(r);
    out.values.insert(out.values.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

ExpressionMatrix handle_missing(const ExpressionMatrix& m, const PreprocessPolicy& p) {
  if (p.max_missing_fraction < 0.0 || p.max_missing_fraction > 1.0)
    throw ArgumentError("max_missing_fraction must be in [0, 1]");

  std::vector<std::size_t> keep;
  keep.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (p.missing_policy == MissingPolicy::DropGeneOver && m.cols() > 0) {
      double frac = static_cast<double>(m.missing_count(r)) / static_cast<double>(m.cols());
      if (frac > p.max_missing_fraction) continue;
    }
    keep.push_back(r);
  }

  ExpressionMatrix out = keep_rows(m, keep);
  for (std::size_t r = 0; r < out.rows(); ++r) {
    if (out.missing_count(r) == 0) continue;
    double mean = present_mean(out, r);
    for (std::size_t c = 0; c < out.cols(); ++c)
      if (out.is_missing(r, c)) out.at(r, c) = mean;
  }
  return out;
}

ExpressionMatrix handle_unnamed(const ExpressionMatrix& m, const PreprocessPolicy& p) {
  if (p.unnamed_policy == UnnamedPolicy::Drop) {
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m.gene_ids[r].empty()) keep.push_back(r);
    return keep_rows(m, keep);
  }
  ExpressionMatrix out = m;
  for (std::size_t r = 0; r < out.rows(); ++r) {
    if (!out.gene_ids[r].empty()) continue;
    std::string id = "unnamed_" + std::to_string(r + 1);
    while (out.find_gene(id) != ExpressionMatrix::npos) id += "_";
    out.gene_ids[r] = id;
  }
  return out;
}

ExpressionMatrix collapse_duplicates(const ExpressionMatrix& m, const PreprocessPolicy& p) {
  // Group rows by gene id, keeping first-occurrence order.
  std::unordered_map<std::string, std::size_t> first_of;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto [it, inserted] = first_of.emplace(m.gene_ids[r], groups.size());
    if (inserted)
      groups.push_back({r});
    else
      groups[it->second].push_back(r);
  }

  ExpressionMatrix out;
  out.sample_ids = m.sample_ids;
  out.scale = m.scale;
  out.gene_ids.reserve(groups.size());
  out.values.reserve(groups.size() * m.cols());
  for (const auto& rows : groups) {
    out.gene_ids.push_back(m.gene_ids[rows[0]]);
    if (rows.size() == 1 || p.duplicate_policy == DuplicatePolicy::KeepFirst) {
      auto row = m.row(rows[0]);
      out.values.insert(out.values.end(), row.begin(), row.end());
    } else if (p.duplicate_policy == DuplicatePolicy::MeanCollapse) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        double sum = 0;
        for (std::size_t r : rows) sum += m.at(r, c);
        out.values.push_back(sum / static_cast<double>(rows.size()));
      }
    } else {  // MaxMeanExpression
      std::size_t best = rows[0];
      double best_mean = -std::numeric_limits<double>::infinity();
      for (std::size_t r : rows) {
        double sum = 0;
        for (double v : m.row(r)) sum += v;
        double mean = m.cols() > 0 ? sum / static_cast<double>(m.cols()) : 0.0;
        if (mean > best_mean) {
          best_mean = mean;
          best = r;
        }
      }
      auto row = m.row(best);
      out.values.insert(out.values.end(), row.begin(), row.end());
    }
  }
  return out;
}

Scale detect_scale(const ExpressionMatrix& m) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : m.values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (m.values.empty()) return Scale::Log2;  // nothing to contradict a log scale
  if (hi - lo < 30.0 && (lo < 0.0 || hi < 30.0)) return Scale::Log2;
  return Scale::Linear;
}

ExpressionMatrix preprocess(const ExpressionMatrix& m, const PreprocessPolicy& p) {
  return collapse_duplicates(handle_unnamed(handle_missing(m, p), p), p);
}

}  // namespace grnet
