#include "grnet/expression.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace grnet {

std::string to_string(Scale s) {
  switch (s) {
    case Scale::Linear: return "linear";
    case Scale::Log2: return "log2";
    case Scale::Unknown: return "unknown";
  }
  return "unknown";
}

std::size_t ExpressionMatrix::find_gene(const std::string& gene) const {
  auto it = std::find(gene_ids.begin(), gene_ids.end(), gene);
  return it == gene_ids.end() ? npos : static_cast<std::size_t>(it - gene_ids.begin());
}

void ExpressionMatrix::check(bool require_unique_genes) const {
  if (values.size() != rows() * cols())
    throw DataError("expression matrix: value grid is " + std::to_string(values.size()) +
                    " cells, expected " + std::to_string(rows() * cols()));
  std::unordered_set<std::string> seen;
  for (const auto& s : sample_ids)
    if (!seen.insert(s).second)
      throw DataError("expression matrix: duplicate sample id '" + s + "'");
  if (require_unique_genes) {
    seen.clear();
    for (const auto& g : gene_ids)
      if (!seen.insert(g).second)
        throw DataError("expression matrix: duplicate gene id '" + g + "'");
  }
  for (double v : values)
    if (std::isinf(v))
      throw DataError("expression matrix: non-finite value present");
}

std::size_t SampleGrouping::count(const std::string& label) const {
  std::size_t n = 0;
  for (const auto& [sample, l] : assignment)
    if (l == label) ++n;
  return n;
}

SampleGrouping SampleGrouping::swapped() const {
  SampleGrouping g;
  g.condition_a = condition_b;
  g.condition_b = condition_a;
  g.assignment = assignment;
  return g;
}

ConditionColumns split_columns(const ExpressionMatrix& m, const SampleGrouping& g) {
  std::unordered_map<std::string, std::size_t> col_of;
  col_of.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) col_of.emplace(m.sample_ids[c], c);

  for (const auto& [sample, label] : g.assignment)
    if (!col_of.count(sample))
      throw DataError("grouped sample '" + sample + "' not present in the expression matrix");

  ConditionColumns cc;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto it = g.assignment.find(m.sample_ids[c]);
    if (it == g.assignment.end()) continue;  // ungrouped samples are ignored
    if (it->second == g.condition_a)
      cc.a.push_back(c);
    else if (it->second == g.condition_b)
      cc.b.push_back(c);
    else
      throw DataError("sample '" + it->first + "' carries unknown condition '" + it->second + "'");
  }
  if (cc.a.size() < 2)
    throw DataError("condition '" + g.condition_a + "' has " + std::to_string(cc.a.size()) +
                    " samples in the matrix; at least 2 required");
  if (cc.b.size() < 2)
    throw DataError("condition '" + g.condition_b + "' has " + std::to_string(cc.b.size()) +
                    " samples in the matrix; at least 2 required");
  return cc;
}

}  // namespace grnet
