#include "grnet/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "grnet/expr_io.hpp"

namespace grnet {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("failed writing '" + path + "'");
}

ExpressionMatrix load_expression(const std::string& path, InputFormat format) {
  const std::string text = read_file(path);
  if (format == InputFormat::Auto)
    format = (!text.empty() && text.front() == '!') ? InputFormat::SeriesMatrix : InputFormat::Tsv;
  return format == InputFormat::SeriesMatrix ? parse_series_matrix(text)
                                             : parse_expression_tsv(text);
}

Scale resolve_scale(const ExpressionMatrix& m, ScaleChoice choice) {
  if (choice == ScaleChoice::Linear) return Scale::Linear;
  if (choice == ScaleChoice::Log2) return Scale::Log2;
  const Scale detected = detect_scale(m);
  if (detected == Scale::Linear)
    for (double v : m.values)
      if (v < 0.0)
        throw DataError(
            "scale detection says linear but negative values are present; "
            "pass --scale linear or --scale log2 explicitly");
  return detected;
}

void validate_config(const PipelineConfig& cfg) {
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) throw ArgumentError("alpha must be in [0, 1]");
  if (cfg.min_fold < 0.0) throw ArgumentError("min_fold must be >= 0");
  if (!(cfg.tau > 0.0 && cfg.tau <= 1.0)) throw ArgumentError("tau must be in (0, 1]");
  if (cfg.prep.max_missing_fraction < 0.0 || cfg.prep.max_missing_fraction > 1.0)
    throw ArgumentError("max missing fraction must be in [0, 1]");
  if (cfg.threads < 1) throw ArgumentError("threads must be >= 1");
  if (cfg.input_path.empty()) throw ArgumentError("input path is required");
  if (cfg.group_map_path.empty()) throw ArgumentError("group map path is required");
}

PipelineResult run_pipeline_in_memory(const PipelineConfig& cfg) {
  validate_config(cfg);

  PipelineResult res;
  const ExpressionMatrix raw = load_expression(cfg.input_path, cfg.input_format);
  const SampleGrouping groups = parse_group_map(read_file(cfg.group_map_path),
                                                cfg.group_map_header);

  res.params.input_genes = raw.rows();
  res.params.input_samples = raw.cols();
  res.params.alpha = cfg.alpha;
  res.params.min_fold = cfg.min_fold;
  res.params.fold_mode = cfg.fold_mode;
  res.params.tau = cfg.tau;

  res.preprocessed = preprocess(raw, cfg.prep);
  res.params.preprocessed_genes = res.preprocessed.rows();
  res.resolved_scale = resolve_scale(res.preprocessed, cfg.scale);
  res.preprocessed.scale = res.resolved_scale;
  res.params.scale = res.resolved_scale;

  FilterOptions fopts;
  fopts.alpha = cfg.alpha;
  fopts.min_fold = cfg.min_fold;
  fopts.fold_mode = cfg.fold_mode;
  fopts.threads = cfg.threads;
  FilterResult filter = two_stage_filter(res.preprocessed, groups, res.resolved_scale, fopts);
  res.table = std::move(filter.table);
  res.filtered = std::move(filter.filtered);

  const std::size_t g = res.filtered.rows();
  const std::size_t pairs = g * (g - (g > 0 ? 1 : 0)) / 2;
  if (pairs > cfg.max_pairs && !cfg.force_large)
    throw ArgumentError(std::to_string(g) + " genes -> " + std::to_string(pairs) +
                        " correlation pairs exceeds the guard (" + std::to_string(cfg.max_pairs) +
                        "); filter harder or pass --force");

  if (g == 0) {
    res.params.warnings.push_back("no genes passed the two-stage filter; network is empty");
    res.network.orientation = Orientation::Undirected;
  } else {
    const CorrelationMatrix corr = correlation_matrix(res.filtered, cfg.threads);
    res.network = threshold_edges(corr, cfg.tau);
    if (cfg.orient != OrientPolicy::KeepUndirected)
      res.network = orient_edges(res.network, cfg.orient, &res.filtered);
  }
  res.topology = analyze_topology(res.network, cfg.min_hub_degree);
  return res;
}

void run_pipeline(const PipelineConfig& cfg) {
  PipelineResult res = run_pipeline_in_memory(cfg);

  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  const auto out = [&](const std::string& name) { return (fs::path(cfg.out_dir) / name).string(); };

  write_file(out("expression_preprocessed.tsv"), expression_tsv_string(res.preprocessed));
  write_file(out("diffexpr.tsv"), diffexpr_tsv_string(res.table));
  write_file(out("expression_filtered.tsv"), expression_tsv_string(res.filtered));
  for (NetFormat f : cfg.formats) {
    ExportConfig ecfg;
    ecfg.format = f;
    write_file(out("network." + to_string(f)), export_network(res.network, ecfg));
  }
  write_file(out("topology.tsv"), topology_tsv(res.topology));
  write_file(out("topology.json"), topology_json_string(res.topology));
  write_file(out("report.json"), export_report(&res.table, res.network, res.topology, res.params));
}

}  // namespace grnet
