#ifndef GRNET_NETWORK_HPP
#define GRNET_NETWORK_HPP

#include <string>
#include <vector>

#include "grnet/errors.hpp"

namespace grnet {

enum class Sign { Activation, Repression };

/// How edge direction should be read. Undirected: source/target are just the
/// lexicographically ordered endpoints. Heuristic: directions were assigned
/// by an orientation policy, not measured. Directed: directions came with
/// the data (edge-list or SIF input).
enum class Orientation { Undirected, Heuristic, Directed };

std::string to_string(Sign s);
std::string to_string(Orientation o);

struct Edge {
  std::string source;
  std::string target;
  Sign sign = Sign::Activation;
  double weight = 1.0;  // correlation r; sign(weight) agrees with `sign`

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Signed gene network. Nodes are exactly the edge endpoints (plus any
/// explicitly isolated nodes from parsed files), sorted lexicographically;
/// edges are sorted by (source, target). Undirected networks store each edge
/// with source < target.
struct GeneNetwork {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  Orientation orientation = Orientation::Undirected;

  bool directed() const { return orientation != Orientation::Undirected; }
  std::size_t activation_count() const;
  std::size_t repression_count() const;

  /// Sorts nodes and edges into canonical order (and sorts endpoints within
  /// each edge when undirected).
  void canonicalize();

  /// Verifies invariants: sign/weight agreement, no self-edges, no duplicate
  /// pairs (unordered for undirected networks, ordered otherwise), every
  /// endpoint listed in nodes. Throws DataError.
  void check() const;
};

Sign sign_of_weight(double w);

}  // namespace grnet

#endif
