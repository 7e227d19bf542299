#ifndef GRNET_NETINFER_HPP
#define GRNET_NETINFER_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>

#include "grnet/expression.hpp"
#include "grnet/network.hpp"

namespace grnet {

/// Pearson correlation coefficient, computed in the mean-centered form and
/// clamped to [-1, 1]. Requires equal lengths >= 2; a constant sequence has
/// no defined correlation and throws NumericError.
double pearson(std::span<const double> x, std::span<const double> y);

/// Symmetric gene-by-gene correlation grid with unit diagonal. Genes whose
/// profile is constant have no defined correlation; their rows/columns are
/// flagged undefined and never produce edges.
struct CorrelationMatrix {
  std::vector<std::string> gene_ids;
  std::vector<double> r;             // n*n row-major; NaN where undefined
  std::vector<std::uint8_t> defined;  // per gene

  std::size_t size() const { return gene_ids.size(); }
  double at(std::size_t i, std::size_t j) const { return r[i * size() + j]; }
  bool pair_defined(std::size_t i, std::size_t j) const { return defined[i] && defined[j]; }
};

/// All pairwise correlations over every sample column (conditions pooled).
/// Requires no missing cells and >= 2 samples. Cells are independent, so the
/// result is identical for any thread count.
CorrelationMatrix correlation_matrix(const ExpressionMatrix& m, unsigned threads = 1);

/// Keeps pairs with |r| >= tau as edges; positive r becomes Activation,
/// negative r Repression. tau must lie in (0, 1]. Output is canonical and
/// undirected; genes that end up with no strong partner are not nodes.
GeneNetwork threshold_edges(const CorrelationMatrix& c, double tau);

enum class OrientPolicy { KeepUndirected, LexicographicSource, HigherVarianceSource };

/// Applies a direction heuristic to an undirected network. Correlation is
/// symmetric, so any direction here is a labeling convention, not an
/// inference; KeepUndirected is the honest default. HigherVarianceSource
/// points each edge from the endpoint with larger expression variance
/// (ties broken lexicographically) and needs the expression matrix.
GeneNetwork orient_edges(const GeneNetwork& net, OrientPolicy policy,
                         const ExpressionMatrix* m = nullptr);

/// Reads a directed signed edge list: whitespace-delimited rows of
/// "source target sign" with sign + or -, "#" comments and blank lines
/// allowed. Weights are set to the +-1 sentinels.
GeneNetwork load_edge_list(std::istream& in);
GeneNetwork load_edge_list(std::string_view text);

}  // namespace grnet

#endif
