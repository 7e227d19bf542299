#ifndef GRNET_NETIO_HPP
#define GRNET_NETIO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "grnet/diffexpr.hpp"
#include "grnet/network.hpp"
#include "grnet/topology.hpp"

namespace grnet {

enum class NetFormat { SIF, GraphML, DOT, JSON };

std::string to_string(NetFormat f);
NetFormat net_format_from_string(const std::string& name);

/// Export settings. The sign labels become SIF relation strings and
/// GraphML/DOT/JSON sign attributes; they must be distinct and non-empty.
struct ExportConfig {
  NetFormat format = NetFormat::SIF;
  bool include_weights = true;
  std::string activation_label = "activates";
  std::string repression_label = "represses";
};

/// Serializes a network. SIF: one "source<TAB>relation<TAB>target" line per
/// edge plus bare lines for isolated nodes. GraphML: XML with sign/weight
/// edge attributes and edgedefault matching the orientation. DOT:
/// digraph/graph with dashed repression edges. JSON: nodes + edges arrays.
/// Edges always appear in canonical order; output is LF/UTF-8.
std::string export_network(const GeneNetwork& net, const ExportConfig& cfg = {});

/// Parses SIF produced by export_network. Relation labels are mapped through
/// `relation_signs` (defaults to the default ExportConfig labels); unknown
/// labels are an error. SIF carries no weights, so weights are +-1.
GeneNetwork parse_sif(std::istream& in,
                      const std::map<std::string, Sign>* relation_signs = nullptr);
GeneNetwork parse_sif(std::string_view text,
                      const std::map<std::string, Sign>* relation_signs = nullptr);

/// Lossless JSON round trip for pipeline composition.
std::string network_json(const GeneNetwork& net, bool include_weights = true);
GeneNetwork network_from_json(std::string_view text);

/// Topology report as TSV (columns: gene_id, in_degree, out_degree,
/// total_degree, is_hub, is_source, is_sink, component_id) and as JSON.
std::string topology_tsv(const TopologyReport& r);
std::string topology_json_string(const TopologyReport& r);

/// Thresholds and input shape for the consolidated run report.
struct RunParams {
  std::size_t input_genes = 0;
  std::size_t input_samples = 0;
  std::size_t preprocessed_genes = 0;
  double alpha = 0.001;
  double min_fold = 5.0;
  FoldMode fold_mode = FoldMode::Ratio;
  double tau = 0.85;
  Scale scale = Scale::Unknown;
  std::vector<std::string> warnings;
};

/// Deterministic JSON run report: input dimensions, thresholds, per-stage
/// survivor counts, edge/sign counts and the hub list. `table` may be null
/// when the run had no filtering stage (fixture/topology-only runs).
std::string export_report(const DiffExprTable* table, const GeneNetwork& net,
                          const TopologyReport& topo, const RunParams& params);

}  // namespace grnet

#endif
