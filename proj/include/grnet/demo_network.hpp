#ifndef GRNET_DEMO_NETWORK_HPP
#define GRNET_DEMO_NETWORK_HPP

#include <string_view>

#include "grnet/network.hpp"

namespace grnet {

/// Bundled demo dataset: a published prostate-cancer regulatory network of
/// 29 genes and 55 signed, directed relations (52 activations, 3
/// repressions). Lets the topology and export paths run end to end without
/// any external download. Edge weights are +-1 sentinels; the source data
/// publishes only the signs.
std::string_view demo_network_edge_list();

/// The same network parsed into a directed GeneNetwork.
GeneNetwork demo_network();

}  // namespace grnet

#endif
