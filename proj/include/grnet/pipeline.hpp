#ifndef GRNET_PIPELINE_HPP
#define GRNET_PIPELINE_HPP

#include <string>
#include <vector>

#include "grnet/diffexpr.hpp"
#include "grnet/expression.hpp"
#include "grnet/netinfer.hpp"
#include "grnet/netio.hpp"
#include "grnet/preprocess.hpp"
#include "grnet/topology.hpp"

namespace grnet {

enum class InputFormat { Auto, Tsv, SeriesMatrix };
enum class ScaleChoice { Auto, Linear, Log2 };

struct PipelineConfig {
  std::string input_path;
  InputFormat input_format = InputFormat::Auto;
  std::string group_map_path;
  bool group_map_header = false;

  double alpha = 0.001;
  double min_fold = 5.0;
  FoldMode fold_mode = FoldMode::Ratio;
  double tau = 0.85;
  ScaleChoice scale = ScaleChoice::Auto;

  PreprocessPolicy prep;
  OrientPolicy orient = OrientPolicy::KeepUndirected;
  std::size_t min_hub_degree = 6;

  std::string out_dir = ".";
  std::vector<NetFormat> formats = {NetFormat::JSON, NetFormat::SIF};
  unsigned threads = 1;

  // Correlating tens of thousands of unfiltered genes is almost always a
  // mistake; refuse beyond this many pairs unless forced.
  std::size_t max_pairs = 10'000'000;
  bool force_large = false;
};

/// Validates every threshold in the config against its operation's domain.
/// Throws ArgumentError; called by run_pipeline before any computation.
void validate_config(const PipelineConfig& cfg);

/// In-memory result of a full pipeline run, before artifact writing.
struct PipelineResult {
  ExpressionMatrix preprocessed;
  Scale resolved_scale = Scale::Unknown;
  DiffExprTable table;
  ExpressionMatrix filtered;
  GeneNetwork network;
  TopologyReport topology;
  RunParams params;
};

/// Runs parse -> preprocess -> two-stage filter -> correlation -> threshold
/// -> orient -> topology. Pure function of (config, input bytes).
PipelineResult run_pipeline_in_memory(const PipelineConfig& cfg);

/// Same, then writes artifacts under cfg.out_dir: expression_preprocessed.tsv,
/// diffexpr.tsv, expression_filtered.tsv, network.<fmt> per requested format,
/// topology.tsv, topology.json, report.json. An empty post-filter gene set is
/// not an error; it produces an empty network and a report warning.
void run_pipeline(const PipelineConfig& cfg);

/// Resolves the scale of a preprocessed matrix: explicit choice wins; Auto
/// runs detect_scale and refuses a Linear verdict if negatives are present.
Scale resolve_scale(const ExpressionMatrix& m, ScaleChoice choice);

/// Reads an expression file, sniffing series-matrix vs plain TSV when Auto
/// (series-matrix files start with "!"-prefixed metadata).
ExpressionMatrix load_expression(const std::string& path, InputFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace grnet

#endif
