#ifndef GRNET_TOPOLOGY_HPP
#define GRNET_TOPOLOGY_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grnet/network.hpp"

namespace grnet {

/// Degrees of one node. For undirected networks in == out == total ==
/// incident-edge count (not doubled); for directed networks total = in + out.
struct Degree {
  std::size_t in = 0;
  std::size_t out = 0;
  std::size_t total = 0;
};

using DegreeMap = std::map<std::string, Degree>;

DegreeMap degrees(const GeneNetwork& net);

/// Nodes with total degree >= min_degree, sorted by descending degree then
/// ascending gene id. min_degree must be >= 1.
std::vector<std::pair<std::string, std::size_t>> hubs(const GeneNetwork& net,
                                                      std::size_t min_degree);

/// Sources (in == 0, out > 0) and sinks (out == 0, in > 0). Only meaningful
/// when edges have direction; throws ArgumentError for undirected networks.
std::pair<std::set<std::string>, std::set<std::string>> sources_sinks(const GeneNetwork& net);

/// Weakly connected components (direction ignored), ordered by descending
/// size then by lexicographically smallest member; members sorted.
std::vector<std::vector<std::string>> weak_components(const GeneNetwork& net);

/// total-degree histogram covering every node; counts sum to the node count.
std::map<std::size_t, std::size_t> degree_distribution(const GeneNetwork& net);

struct TopologyReport {
  Orientation orientation = Orientation::Undirected;
  DegreeMap per_node;
  std::vector<std::pair<std::string, std::size_t>> hub_list;
  std::size_t min_hub_degree = 6;
  std::set<std::string> sources;  // empty for undirected networks
  std::set<std::string> sinks;
  std::vector<std::vector<std::string>> components;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t activation_count = 0;
  std::size_t repression_count = 0;
};

TopologyReport analyze_topology(const GeneNetwork& net, std::size_t min_hub_degree = 6);

}  // namespace grnet

#endif
