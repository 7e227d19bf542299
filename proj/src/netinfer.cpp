#include "grnet/netinfer.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "grnet/parallel.hpp"

namespace grnet {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("pearson: length mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw ArgumentError("pearson: need at least 2 samples");

  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw NumericError("pearson: constant input sequence, correlation undefined");
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

CorrelationMatrix correlation_matrix(const ExpressionMatrix& m, unsigned threads) {
  if (m.cols() < 2) throw DataError("correlation_matrix: need at least 2 samples");
  if (m.has_missing()) throw DataError("correlation_matrix: matrix has missing cells");

  const std::size_t n = m.rows();
  CorrelationMatrix c;
  c.gene_ids = m.gene_ids;
  c.r.assign(n * n, std::numeric_limits<double>::quiet_NaN());
  c.defined.assign(n, 0);

  // Center rows once; constant genes stay flagged undefined.
  std::vector<double> centered(n * m.cols());
  std::vector<double> norms(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = m.row(i);
    double mean = 0;
    for (double v : row) mean += v;
    mean /= static_cast<double>(m.cols());
    double ss = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double d = row[j] - mean;
      centered[i * m.cols() + j] = d;
      ss += d * d;
    }
    norms[i] = ss;
    c.defined[i] = ss > 0.0 ? 1 : 0;
    if (c.defined[i]) c.r[i * n + i] = 1.0;
  }

  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (!c.defined[i]) continue;
      const double* xi = centered.data() + i * m.cols();
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!c.defined[j]) continue;
        const double* xj = centered.data() + j * m.cols();
        double sxy = 0;
        for (std::size_t k = 0; k < m.cols(); ++k) sxy += xi[k] * xj[k];
        const double r = std::clamp(sxy / std::sqrt(norms[i] * norms[j]), -1.0, 1.0);
        c.r[i * n + j] = r;
        c.r[j * n + i] = r;
      }
    }
  });
  return c;
}

GeneNetwork threshold_edges(const CorrelationMatrix& c, double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) throw ArgumentError("threshold tau must be in (0, 1]");
  GeneNetwork net;
  net.orientation = Orientation::Undirected;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!c.defined[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!c.defined[j]) continue;
      const double r = c.at(i, j);
      if (std::fabs(r) < tau) continue;
      Edge e;
      e.source = c.gene_ids[i];
      e.target = c.gene_ids[j];
      e.weight = r;
      e.sign = sign_of_weight(r);
      net.edges.push_back(std::move(e));
      net.nodes.push_back(c.gene_ids[i]);
      net.nodes.push_back(c.gene_ids[j]);
    }
  }
  net.canonicalize();
  return net;
}

GeneNetwork orient_edges(const GeneNetwork& net, OrientPolicy policy,
                         const ExpressionMatrix* m) {
  if (net.orientation != Orientation::Undirected)
    throw ArgumentError("orient_edges expects an undirected network");
  if (policy == OrientPolicy::KeepUndirected) return net;

  GeneNetwork out = net;
  out.orientation = Orientation::Heuristic;
  if (policy == OrientPolicy::LexicographicSource) {
    // Canonical undirected storage already has source < target.
    for (auto& e : out.edges)
      if (e.target < e.source) std::swap(e.source, e.target);
  } else {
    if (m == nullptr)
      throw ArgumentError("HigherVarianceSource orientation needs the expression matrix");
    std::unordered_map<std::string, double> variance;
    for (const auto& node : out.nodes) {
      const std::size_t idx = m->find_gene(node);
      if (idx == ExpressionMatrix::npos)
        throw DataError("orient_edges: node '" + node + "' not found in expression matrix");
      auto row = m->row(idx);
      double mean = 0;
      for (double v : row) mean += v;
      mean /= static_cast<double>(row.size());
      double ss = 0;
      for (double v : row) ss += (v - mean) * (v - mean);
      variance[node] = row.size() > 1 ? ss / static_cast<double>(row.size() - 1) : 0.0;
    }
    for (auto& e : out.edges) {
      const double vs = variance[e.source];
      const double vt = variance[e.target];
      const bool swap = vt > vs || (vt == vs && e.target < e.source);
      if (swap) std::swap(e.source, e.target);
    }
  }
  out.canonicalize();
  return out;
}

GeneNetwork load_edge_list(std::istream& in) {
  GeneNetwork net;
  net.orientation = Orientation::Directed;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string source, target, sign, extra;
    if (!(fields >> source)) continue;  // blank line
    if (!(fields >> target >> sign))
      throw ParseError("edge list row needs 3 columns: source target sign", line_no);
    if (fields >> extra) throw ParseError("edge list row has more than 3 columns", line_no);

    Edge e;
    e.source = std::move(source);
    e.target = std::move(target);
    if (sign == "+") {
      e.sign = Sign::Activation;
      e.weight = 1.0;
    } else if (sign == "-") {
      e.sign = Sign::Repression;
      e.weight = -1.0;
    } else {
      throw ParseError("sign must be '+' or '-', got '" + sign + "'", line_no);
    }
    net.nodes.push_back(e.source);
    net.nodes.push_back(e.target);
    net.edges.push_back(std::move(e));
  }
  net.canonicalize();
  net.check();
  return net;
}

GeneNetwork load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

}  // namespace grnet
