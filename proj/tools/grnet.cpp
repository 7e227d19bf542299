// grnet: reconstruct signed gene co-expression networks from two-condition
// expression matrices (t-test + fold-change filtering, Pearson thresholding)
// and analyze/export the resulting graphs.

#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grnet/demo_network.hpp"
#include "grnet/expr_io.hpp"
#include "grnet/netio.hpp"
#include "grnet/pipeline.hpp"
#include "grnet/synthbench.hpp"

namespace {

using namespace grnet;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

InputFormat parse_input_format(const std::string& s) {
  if (s == "auto") return InputFormat::Auto;
  if (s == "tsv") return InputFormat::Tsv;
  if (s == "series") return InputFormat::SeriesMatrix;
  throw ArgumentError("--input-format must be auto|tsv|series");
}

ScaleChoice parse_scale_choice(const std::string& s) {
  if (s == "auto") return ScaleChoice::Auto;
  if (s == "linear") return ScaleChoice::Linear;
  if (s == "log2") return ScaleChoice::Log2;
  throw ArgumentError("--scale must be auto|linear|log2");
}

FoldMode parse_fold_mode(const std::string& s) {
  if (s == "ratio") return FoldMode::Ratio;
  if (s == "log-diff") return FoldMode::LogDiff;
  throw ArgumentError("--fold-mode must be ratio|log-diff");
}

OrientPolicy parse_orient(const std::string& s) {
  if (s == "none") return OrientPolicy::KeepUndirected;
  if (s == "lex") return OrientPolicy::LexicographicSource;
  if (s == "var") return OrientPolicy::HigherVarianceSource;
  throw ArgumentError("--orient must be none|lex|var");
}

void apply_missing_policy(PreprocessPolicy& p, const std::string& s) {
  if (s == "impute") {
    p.missing_policy = MissingPolicy::ImputeRowMean;
    return;
  }
  if (s.rfind("drop:", 0) == 0) {
    p.missing_policy = MissingPolicy::DropGeneOver;
    try {
      p.max_missing_fraction = std::stod(s.substr(5));
    } catch (const std::exception&) {
      throw ArgumentError("--missing-policy drop:<fraction> needs a number");
    }
    return;
  }
  throw ArgumentError("--missing-policy must be drop:<fraction>|impute");
}

void apply_duplicate_policy(PreprocessPolicy& p, const std::string& s) {
  if (s == "mean")
    p.duplicate_policy = DuplicatePolicy::MeanCollapse;
  else if (s == "maxmean")
    p.duplicate_policy = DuplicatePolicy::MaxMeanExpression;
  else if (s == "first")
    p.duplicate_policy = DuplicatePolicy::KeepFirst;
  else
    throw ArgumentError("--duplicate-policy must be mean|maxmean|first");
}

void apply_unnamed_policy(PreprocessPolicy& p, const std::string& s) {
  if (s == "drop")
    p.unnamed_policy = UnnamedPolicy::Drop;
  else if (s == "synthetic")
    p.unnamed_policy = UnnamedPolicy::SyntheticId;
  else
    throw ArgumentError("--unnamed-policy must be drop|synthetic");
}

std::vector<NetFormat> parse_formats(const std::vector<std::string>& names) {
  std::vector<NetFormat> out;
  for (const auto& n : names) out.push_back(net_format_from_string(n));
  return out;
}

ModuleSpec parse_module_spec(const std::string& s) {
  // SIZE:RHO[:SIGNS], e.g. 10:0.95 or 4:0.9:++-+
  ModuleSpec mod;
  const auto c1 = s.find(':');
  if (c1 == std::string::npos) throw ArgumentError("--module needs SIZE:RHO[:SIGNS]");
  const auto c2 = s.find(':', c1 + 1);
  try {
    mod.member_count = std::stoul(s.substr(0, c1));
    mod.latent_correlation = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  } catch (const std::exception&) {
    throw ArgumentError("--module needs numeric SIZE:RHO, got '" + s + "'");
  }
  if (c2 != std::string::npos) {
    for (char c : s.substr(c2 + 1)) {
      if (c == '+')
        mod.signs.push_back(1);
      else if (c == '-')
        mod.signs.push_back(-1);
      else
        throw ArgumentError("--module sign pattern may contain only + and -");
    }
  }
  return mod;
}

GeneNetwork load_network_file(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return network_from_json(text);
  return parse_sif(text);
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ArgumentError("expected a boolean, got '" + v + "'");
}

// Flat key=value config for the run subcommand. Keys mirror the flag names;
// '#' starts a comment. A key set on the command line (or via GRNET_* env)
// wins over the file.
void apply_run_config(const std::string& path, CLI::App* run,
                      const std::map<std::string, std::function<void(const std::string&)>>& set) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t");
    line = line.substr(begin, end - begin + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line is not key=value", line_no);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto strip = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t");
      if (b == std::string::npos) {
        s.clear();
        return;
      }
      const auto e = s.find_last_not_of(" \t");
      s = s.substr(b, e - b + 1);
    };
    strip(key);
    strip(value);
    auto it = set.find(key);
    if (it == set.end()) throw ParseError("unknown config key '" + key + "'", line_no);
    const CLI::Option* opt = run->get_option_no_throw("--" + key);
    if (opt != nullptr && opt->count() > 0) continue;  // flag/env takes precedence
    it->second(value);
  }
}

// --- subcommand bodies -----------------------------------------------------

struct IngestArgs {
  std::string input, out;
  std::string input_format = "auto";
  std::string missing_policy = "drop:0.5";
  std::string duplicate_policy = "mean";
  std::string unnamed_policy = "drop";
  std::string delimiter = "tab";
  std::vector<std::string> missing_tokens;
};

char parse_delimiter(const std::string& s) {
  if (s == "tab" || s == "\\t" || s == "\t") return '\t';
  if (s == "comma") return ',';
  if (s == "semicolon") return ';';
  if (s.size() == 1) return s[0];
  throw ArgumentError("--delimiter must be a single character (or tab|comma|semicolon)");
}

int cmd_ingest(const IngestArgs& a) {
  PreprocessPolicy p;
  apply_missing_policy(p, a.missing_policy);
  apply_duplicate_policy(p, a.duplicate_policy);
  apply_unnamed_policy(p, a.unnamed_policy);
  TsvOptions opts;
  opts.delimiter = parse_delimiter(a.delimiter);
  if (!a.missing_tokens.empty()) opts.missing_tokens = a.missing_tokens;

  const InputFormat fmt = parse_input_format(a.input_format);
  ExpressionMatrix m;
  if (fmt == InputFormat::Auto || fmt == InputFormat::SeriesMatrix) {
    const std::string text = read_file(a.input);
    if (fmt == InputFormat::SeriesMatrix || (!text.empty() && text.front() == '!'))
      m = parse_series_matrix(text);
    else
      m = parse_expression_tsv(text, opts);
  } else {
    m = parse_expression_tsv(read_file(a.input), opts);
  }
  m = preprocess(m, p);
  emit(a.out, expression_tsv_string(m));
  return 0;
}

struct FilterArgs {
  std::string input, groups, table_out, filtered_out;
  bool groups_header = false;
  double alpha = 0.001;
  double min_fold = 5.0;
  std::string fold_mode = "ratio";
  std::string scale = "auto";
  unsigned threads = 1;
};

int cmd_filter(const FilterArgs& a) {
  const ExpressionMatrix m = load_expression(a.input, InputFormat::Auto);
  const SampleGrouping g = parse_group_map(read_file(a.groups), a.groups_header);
  const Scale scale = resolve_scale(m, parse_scale_choice(a.scale));
  FilterOptions opts;
  opts.alpha = a.alpha;
  opts.min_fold = a.min_fold;
  opts.fold_mode = parse_fold_mode(a.fold_mode);
  opts.threads = a.threads;
  FilterResult res = two_stage_filter(m, g, scale, opts);
  emit(a.table_out, diffexpr_tsv_string(res.table));
  if (!a.filtered_out.empty()) write_file(a.filtered_out, expression_tsv_string(res.filtered));
  return 0;
}

struct InferArgs {
  std::string input, out;
  double tau = 0.85;
  std::string orient = "none";
  std::string format = "json";
  unsigned threads = 1;
  bool force = false;
  std::size_t max_pairs = 10'000'000;
};

int cmd_infer(const InferArgs& a) {
  const ExpressionMatrix m = load_expression(a.input, InputFormat::Auto);
  const std::size_t g = m.rows();
  const std::size_t pairs = g > 0 ? g * (g - 1) / 2 : 0;
  if (pairs > a.max_pairs && !a.force)
    throw ArgumentError(std::to_string(g) + " genes -> " + std::to_string(pairs) +
                        " correlation pairs exceeds the guard (" + std::to_string(a.max_pairs) +
                        "); run `filter` first or pass --force");
  const CorrelationMatrix corr = correlation_matrix(m, a.threads);
  GeneNetwork net = threshold_edges(corr, a.tau);
  const OrientPolicy policy = parse_orient(a.orient);
  if (policy != OrientPolicy::KeepUndirected) net = orient_edges(net, policy, &m);
  ExportConfig cfg;
  cfg.format = net_format_from_string(a.format);
  emit(a.out, export_network(net, cfg));
  return 0;
}

struct TopologyArgs {
  std::string network, out;
  std::size_t min_hub_degree = 6;
  std::string format = "tsv";
};

int cmd_topology(const TopologyArgs& a) {
  const GeneNetwork net = load_network_file(a.network);
  const TopologyReport rep = analyze_topology(net, a.min_hub_degree);
  if (a.format == "tsv")
    emit(a.out, topology_tsv(rep));
  else if (a.format == "json")
    emit(a.out, topology_json_string(rep));
  else
    throw ArgumentError("--format must be tsv|json");
  return 0;
}

struct ExportArgs {
  std::string network, out;
  std::string format = "sif";
  bool no_weights = false;
  std::string activation_label = "activates";
  std::string repression_label = "represses";
};

int cmd_export(const ExportArgs& a) {
  const GeneNetwork net = load_network_file(a.network);
  ExportConfig cfg;
  cfg.format = net_format_from_string(a.format);
  cfg.include_weights = !a.no_weights;
  cfg.activation_label = a.activation_label;
  cfg.repression_label = a.repression_label;
  emit(a.out, export_network(net, cfg));
  return 0;
}

struct BenchArgs {
  std::size_t genes = 100;
  std::size_t samples = 200;
  std::vector<std::string> modules;
  double noise_sd = 1.0;
  std::uint64_t seed = 42;
  double tau = 0.85;
  unsigned threads = 1;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  SynthSpec spec;
  spec.n_genes = a.genes;
  spec.n_samples = a.samples;
  spec.noise_sd = a.noise_sd;
  spec.seed = a.seed;
  for (const auto& s : a.modules) spec.modules.push_back(parse_module_spec(s));
  const SynthData data = generate_synthetic(spec);
  const CorrelationMatrix corr = correlation_matrix(data.matrix, a.threads);
  const GeneNetwork net = threshold_edges(corr, a.tau);
  const BenchResult res = evaluate(net, data.truth);
  emit(a.out, bench_result_json(res));
  return 0;
}

struct FixtureArgs {
  std::size_t min_hub_degree = 6;
  std::string out_dir;
  std::vector<std::string> formats = {"json", "sif"};
};

int cmd_fixture(const FixtureArgs& a) {
  const GeneNetwork net = demo_network();
  const TopologyReport rep = analyze_topology(net, a.min_hub_degree);

  std::cout << "demo network: " << rep.node_count << " genes, " << rep.edge_count
            << " relations (" << rep.activation_count << " activations, "
            << rep.repression_count << " repressions)\n";
  std::cout << "hubs (total degree >= " << a.min_hub_degree << "):\n";
  for (const auto& [id, deg] : rep.hub_list)
    std::cout << "  " << id << "\t" << deg << "\n";

  if (!a.out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(a.out_dir);
    const auto out = [&](const std::string& n) { return (fs::path(a.out_dir) / n).string(); };
    for (const auto& f : a.formats) {
      ExportConfig cfg;
      cfg.format = net_format_from_string(f);
      write_file(out("network." + f), export_network(net, cfg));
    }
    write_file(out("topology.tsv"), topology_tsv(rep));
    write_file(out("topology.json"), topology_json_string(rep));
    RunParams params;
    params.input_genes = rep.node_count;
    params.input_samples = 0;
    params.preprocessed_genes = rep.node_count;
    write_file(out("report.json"), export_report(nullptr, net, rep, params));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed gene co-expression network reconstruction and analysis"};
  app.require_subcommand(1);

  // run: full pipeline
  PipelineConfig cfg;
  std::string run_input_format = "auto", run_scale = "auto", run_fold_mode = "ratio";
  std::string run_orient = "none", run_missing = "drop:0.5", run_duplicate = "mean";
  std::string run_unnamed = "drop";
  std::vector<std::string> run_formats = {"json", "sif"};
  cfg.out_dir = "grnet_out";

  auto* run = app.add_subcommand("run", "run the full pipeline: parse, preprocess, filter, "
                                        "correlate, threshold, analyze, export");
  std::string run_config_path;
  run->add_option("--config", run_config_path, "flat key=value config file; flags override it");
  run->add_option("--input", cfg.input_path, "expression matrix (TSV or GEO series matrix)")
      ->envname("GRNET_INPUT");
  run->add_option("--input-format", run_input_format, "auto|tsv|series")->envname("GRNET_INPUT_FORMAT");
  run->add_option("--groups", cfg.group_map_path, "two-column sample->condition map")
      ->envname("GRNET_GROUPS");
  run->add_flag("--groups-header,--header", cfg.group_map_header,
                "skip the group map's first line");
  run->add_option("--alpha", cfg.alpha, "stage-1 p-value cutoff")->envname("GRNET_ALPHA");
  run->add_option("--min-fold", cfg.min_fold, "stage-2 fold-change cutoff")->envname("GRNET_MIN_FOLD");
  run->add_option("--fold-mode", run_fold_mode, "ratio|log-diff")->envname("GRNET_FOLD_MODE");
  run->add_option("--tau,--threshold", cfg.tau, "correlation threshold in (0,1]")->envname("GRNET_TAU");
  run->add_option("--scale", run_scale, "auto|linear|log2")->envname("GRNET_SCALE");
  run->add_option("--missing-policy", run_missing, "drop:<fraction>|impute");
  run->add_option("--duplicate-policy", run_duplicate, "mean|maxmean|first");
  run->add_option("--unnamed-policy", run_unnamed, "drop|synthetic");
  run->add_option("--orient", run_orient, "none|lex|var");
  run->add_option("--min-hub-degree", cfg.min_hub_degree, "hub cutoff for the topology report");
  run->add_option("--out-dir", cfg.out_dir, "artifact directory")->envname("GRNET_OUT_DIR");
  run->add_option("--formats", run_formats, "network export formats (sif graphml dot json)")
      ->delimiter(',');
  run->add_option("--threads", cfg.threads, "worker threads (output is thread-count invariant)")
      ->envname("GRNET_THREADS");
  run->add_flag("--force", cfg.force_large, "override the correlation pair-count guard");

  const std::map<std::string, std::function<void(const std::string&)>> run_config_keys = {
      {"input", [&](const std::string& v) { cfg.input_path = v; }},
      {"input-format", [&](const std::string& v) { run_input_format = v; }},
      {"groups", [&](const std::string& v) { cfg.group_map_path = v; }},
      {"groups-header", [&](const std::string& v) { cfg.group_map_header = parse_bool(v); }},
      {"alpha", [&](const std::string& v) { cfg.alpha = std::stod(v); }},
      {"min-fold", [&](const std::string& v) { cfg.min_fold = std::stod(v); }},
      {"fold-mode", [&](const std::string& v) { run_fold_mode = v; }},
      {"tau", [&](const std::string& v) { cfg.tau = std::stod(v); }},
      {"scale", [&](const std::string& v) { run_scale = v; }},
      {"missing-policy", [&](const std::string& v) { run_missing = v; }},
      {"duplicate-policy", [&](const std::string& v) { run_duplicate = v; }},
      {"unnamed-policy", [&](const std::string& v) { run_unnamed = v; }},
      {"orient", [&](const std::string& v) { run_orient = v; }},
      {"min-hub-degree", [&](const std::string& v) { cfg.min_hub_degree = std::stoul(v); }},
      {"out-dir", [&](const std::string& v) { cfg.out_dir = v; }},
      {"formats",
       [&](const std::string& v) {
         run_formats.clear();
         std::istringstream ss(v);
         std::string item;
         while (std::getline(ss, item, ',')) run_formats.push_back(item);
       }},
      {"threads", [&](const std::string& v) { cfg.threads = unsigned(std::stoul(v)); }},
      {"force", [&](const std::string& v) { cfg.force_large = parse_bool(v); }},
  };

  IngestArgs ingest;
  auto* ing = app.add_subcommand("ingest", "parse and preprocess an expression matrix");
  ing->add_option("--input", ingest.input)->required();
  ing->add_option("--input-format", ingest.input_format, "auto|tsv|series");
  ing->add_option("--delimiter", ingest.delimiter, "field delimiter for plain TSV input");
  ing->add_option("--missing-token", ingest.missing_tokens,
                  "tokens treated as missing (replaces the defaults; repeatable)");
  ing->add_option("--missing-policy", ingest.missing_policy, "drop:<fraction>|impute");
  ing->add_option("--duplicate-policy", ingest.duplicate_policy, "mean|maxmean|first");
  ing->add_option("--unnamed-policy", ingest.unnamed_policy, "drop|synthetic");
  ing->add_option("--out", ingest.out, "output TSV (default stdout)");

  FilterArgs filter;
  auto* fil = app.add_subcommand("filter", "two-stage differential-expression filter");
  fil->add_option("--input", filter.input)->required();
  fil->add_option("--groups", filter.groups)->required();
  fil->add_flag("--groups-header,--header", filter.groups_header);
  fil->add_option("--alpha", filter.alpha);
  fil->add_option("--min-fold", filter.min_fold);
  fil->add_option("--fold-mode", filter.fold_mode, "ratio|log-diff");
  fil->add_option("--scale", filter.scale, "auto|linear|log2");
  fil->add_option("--threads", filter.threads);
  fil->add_option("--table-out", filter.table_out, "stats table TSV (default stdout)");
  fil->add_option("--filtered-out", filter.filtered_out, "surviving-genes matrix TSV");

  InferArgs infer;
  auto* inf = app.add_subcommand("infer", "correlation network from a filtered matrix");
  inf->add_option("--input", infer.input)->required();
  inf->add_option("--tau,--threshold", infer.tau);
  inf->add_option("--orient", infer.orient, "none|lex|var");
  inf->add_option("--format", infer.format, "sif|graphml|dot|json");
  inf->add_option("--threads", infer.threads);
  inf->add_flag("--force", infer.force, "override the pair-count guard");
  inf->add_option("--out", infer.out, "output file (default stdout)");

  TopologyArgs topo;
  auto* top = app.add_subcommand("topology", "degree/hub/component report for a network");
  top->add_option("--network", topo.network, "network file (JSON or SIF)")->required();
  top->add_option("--min-hub-degree", topo.min_hub_degree);
  top->add_option("--format", topo.format, "tsv|json");
  top->add_option("--out", topo.out, "output file (default stdout)");

  ExportArgs exp;
  auto* ex = app.add_subcommand("export", "convert a network to sif|graphml|dot|json");
  ex->add_option("--network", exp.network, "network file (JSON or SIF)")->required();
  ex->add_option("--format", exp.format, "sif|graphml|dot|json")->required();
  ex->add_flag("--no-weights", exp.no_weights, "omit weights from the output");
  ex->add_option("--activation-label", exp.activation_label);
  ex->add_option("--repression-label", exp.repression_label);
  ex->add_option("--out", exp.out, "output file (default stdout)");

  BenchArgs bench;
  auto* ben = app.add_subcommand("bench", "planted-module recovery benchmark");
  ben->add_option("--genes", bench.genes);
  ben->add_option("--samples", bench.samples);
  ben->add_option("--module", bench.modules, "SIZE:RHO[:SIGNS], repeatable")->required();
  ben->add_option("--noise-sd", bench.noise_sd, "sd of background genes");
  ben->add_option("--seed", bench.seed);
  ben->add_option("--tau,--threshold", bench.tau);
  ben->add_option("--threads", bench.threads);
  ben->add_option("--out", bench.out, "output file (default stdout)");

  FixtureArgs fixture;
  auto* fix = app.add_subcommand("fixture", "topology + exports for the bundled demo network");
  fix->add_option("--min-hub-degree", fixture.min_hub_degree);
  fix->add_option("--out-dir", fixture.out_dir, "also write network/topology/report files");
  fix->add_option("--formats", fixture.formats, "export formats when --out-dir is set")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) {
      if (!run_config_path.empty()) apply_run_config(run_config_path, run, run_config_keys);
      cfg.input_format = parse_input_format(run_input_format);
      cfg.scale = parse_scale_choice(run_scale);
      cfg.fold_mode = parse_fold_mode(run_fold_mode);
      cfg.orient = parse_orient(run_orient);
      apply_missing_policy(cfg.prep, run_missing);
      apply_duplicate_policy(cfg.prep, run_duplicate);
      apply_unnamed_policy(cfg.prep, run_unnamed);
      cfg.formats = parse_formats(run_formats);
      validate_config(cfg);
      run_pipeline(cfg);
      std::cout << "wrote artifacts to " << cfg.out_dir << "\n";
      return 0;
    }
    if (ing->parsed()) return cmd_ingest(ingest);
    if (fil->parsed()) return cmd_filter(filter);
    if (inf->parsed()) return cmd_infer(infer);
    if (top->parsed()) return cmd_topology(topo);
    if (ex->parsed()) return cmd_export(exp);
    if (ben->parsed()) return cmd_bench(bench);
    if (fix->parsed()) return cmd_fixture(fixture);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
