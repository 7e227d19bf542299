#include "grnet/topology.hpp"

#include <algorithm>
#include <unordered_map>

namespace grnet {

DegreeMap degrees(const GeneNetwork& net) {
  DegreeMap d;
  for (const auto& n : net.nodes) d.emplace(n, Degree{});
  for (const auto& e : net.edges) {
    if (net.directed()) {
      ++d[e.source].out;
      ++d[e.target].in;
    } else {
      // Incident count, recorded identically in all three fields.
      ++d[e.source].in;
      ++d[e.source].out;
      ++d[e.source].total;
      ++d[e.target].in;
      ++d[e.target].out;
      ++d[e.target].total;
    }
  }
  if (net.directed())
    for (auto& [id, deg] : d) deg.total = deg.in + deg.out;
  return d;
}

std::vector<std::pair<std::string, std::size_t>> hubs(const GeneNetwork& net,
                                                      std::size_t min_degree) {
  if (min_degree < 1) throw ArgumentError("hubs: min_degree must be >= 1");
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& [id, deg] : degrees(net))
    if (deg.total >= min_degree) out.emplace_back(id, deg.total);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

std::pair<std::set<std::string>, std::set<std::string>> sources_sinks(const GeneNetwork& net) {
  if (!net.directed())
    throw ArgumentError("sources_sinks is not applicable to an undirected network");
  std::set<std::string> sources, sinks;
  for (const auto& [id, deg] : degrees(net)) {
    if (deg.in == 0 && deg.out > 0) sources.insert(id);
    if (deg.out == 0 && deg.in > 0) sinks.insert(id);
  }
  return {sources, sinks};
}

std::vector<std::vector<std::string>> weak_components(const GeneNetwork& net) {
  // Union-find over node indices; edges merge regardless of direction.
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < net.nodes.size(); ++i) index.emplace(net.nodes[i], i);
  std::vector<std::size_t> parent(net.nodes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : net.edges) {
    const std::size_t a = find(index.at(e.source));
    const std::size_t b = find(index.at(e.target));
    if (a != b) parent[a] = b;
  }

  std::unordered_map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < net.nodes.size(); ++i)
    groups[find(i)].push_back(net.nodes[i]);

  std::vector<std::vector<std::string>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

std::map<std::size_t, std::size_t> degree_distribution(const GeneNetwork& net) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& [id, deg] : degrees(net)) ++hist[deg.total];
  return hist;
}

TopologyReport analyze_topology(const GeneNetwork& net, std::size_t min_hub_degree) {
  TopologyReport r;
  r.orientation = net.orientation;
  r.per_node = degrees(net);
  r.hub_list = hubs(net, min_hub_degree);
  r.min_hub_degree = min_hub_degree;
  if (net.directed()) std::tie(r.sources, r.sinks) = sources_sinks(net);
  r.components = weak_components(net);
  r.degree_histogram = degree_distribution(net);
  r.node_count = net.nodes.size();
  r.edge_count = net.edges.size();
  r.activation_count = net.activation_count();
  r.repression_count = net.repression_count();
  return r;
}

}  // namespace grnet
