#include "grnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>
#include <utility>

namespace grnet {

std::string to_string(Sign s) { return s == Sign::Activation ? "activation" : "repression"; }

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::Undirected: return "undirected";
    case Orientation::Heuristic: return "heuristic";
    case Orientation::Directed: return "directed";
  }
  return "undirected";
}

Sign sign_of_weight(double w) {
  if (w > 0.0) return Sign::Activation;
  if (w < 0.0) return Sign::Repression;
  throw DataError("edge weight 0 has no sign");
}

std::size_t GeneNetwork::activation_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(),
                    [](const Edge& e) { return e.sign == Sign::Activation; }));
}

std::size_t GeneNetwork::repression_count() const {
  return edges.size() - activation_count();
}

void GeneNetwork::canonicalize() {
  if (orientation == Orientation::Undirected)
    for (auto& e : edges)
      if (e.target < e.source) std::swap(e.source, e.target);
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  });
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
}

void GeneNetwork::check() const {
  std::unordered_set<std::string> node_set(nodes.begin(), nodes.end());
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : edges) {
    if (e.source == e.target) throw DataError("self-edge on '" + e.source + "'");
    if (!node_set.count(e.source) || !node_set.count(e.target))
      throw DataError("edge " + e.source + "->" + e.target + " references a missing node");
    if (!std::isfinite(e.weight) || e.weight == 0.0)
      throw DataError("edge " + e.source + "->" + e.target + " has unusable weight");
    if (sign_of_weight(e.weight) != e.sign)
      throw DataError("edge " + e.source + "->" + e.target + " sign disagrees with weight");
    auto key = directed() ? std::make_pair(e.source, e.target)
                          : std::make_pair(std::min(e.source, e.target),
                                           std::max(e.source, e.target));
    if (!seen.insert(key).second)
      throw DataError("duplicate edge between '" + key.first + "' and '" + key.second + "'");
  }
}

}  // namespace grnet
