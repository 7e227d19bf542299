#include "grnet/netio.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "grnet/expr_io.hpp"

namespace grnet {

using ordered_json = nlohmann::ordered_json;

std::string to_string(NetFormat f) {
  switch (f) {
    case NetFormat::SIF: return "sif";
    case NetFormat::GraphML: return "graphml";
    case NetFormat::DOT: return "dot";
    case NetFormat::JSON: return "json";
  }
  return "sif";
}

NetFormat net_format_from_string(const std::string& name) {
  if (name == "sif") return NetFormat::SIF;
  if (name == "graphml") return NetFormat::GraphML;
  if (name == "dot") return NetFormat::DOT;
  if (name == "json") return NetFormat::JSON;
  throw ArgumentError("unknown network format '" + name + "' (sif|graphml|dot|json)");
}

namespace {

void check_labels(const ExportConfig& cfg) {
  if (cfg.activation_label.empty() || cfg.repression_label.empty() ||
      cfg.activation_label == cfg.repression_label)
    throw ArgumentError("sign labels must be distinct and non-empty");
}

const std::string& label_of(const Edge& e, const ExportConfig& cfg) {
  return e.sign == Sign::Activation ? cfg.activation_label : cfg.repression_label;
}

std::set<std::string> isolated_nodes(const GeneNetwork& net) {
  std::set<std::string> iso(net.nodes.begin(), net.nodes.end());
  for (const auto& e : net.edges) {
    iso.erase(e.source);
    iso.erase(e.target);
  }
  return iso;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string export_sif(const GeneNetwork& net, const ExportConfig& cfg) {
  std::ostringstream out;
  for (const auto& e : net.edges)
    out << e.source << '\t' << label_of(e, cfg) << '\t' << e.target << '\n';
  for (const auto& n : isolated_nodes(net)) out << n << '\n';
  return out.str();
}

std::string export_graphml(const GeneNetwork& net, const ExportConfig& cfg) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"sign\" for=\"edge\" attr.name=\"sign\" attr.type=\"string\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
      << "  <graph id=\"G\" edgedefault=\"" << (net.directed() ? "directed" : "undirected")
      << "\">\n";
  for (const auto& n : net.nodes)
    out << "    <node id=\"" << xml_escape(n) << "\"/>\n";
  std::size_t k = 0;
  for (const auto& e : net.edges) {
    out << "    <edge id=\"e" << k++ << "\" source=\"" << xml_escape(e.source)
        << "\" target=\"" << xml_escape(e.target) << "\">\n"
        << "      <data key=\"sign\">" << xml_escape(label_of(e, cfg)) << "</data>\n";
    if (cfg.include_weights)
      out << "      <data key=\"weight\">" << format_double(e.weight) << "</data>\n";
    out << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string export_dot(const GeneNetwork& net, const ExportConfig& cfg) {
  std::ostringstream out;
  const bool dir = net.directed();
  out << (dir ? "digraph" : "graph") << " gene_network {\n";
  for (const auto& n : net.nodes) out << "  " << dot_quote(n) << ";\n";
  for (const auto& e : net.edges) {
    out << "  " << dot_quote(e.source) << (dir ? " -> " : " -- ") << dot_quote(e.target)
        << " [label=" << dot_quote(label_of(e, cfg));
    // corr, not graphviz's layout-affecting `weight` (which must be >= 0)
    if (cfg.include_weights) out << ", corr=" << dot_quote(format_double(e.weight));
    if (e.sign == Sign::Repression) {
      out << ", style=dashed";
      if (dir) out << ", arrowhead=tee";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

ordered_json network_to_json(const GeneNetwork& net, const ExportConfig& cfg) {
  ordered_json j;
  j["orientation"] = to_string(net.orientation);
  j["nodes"] = net.nodes;
  j["edges"] = ordered_json::array();
  for (const auto& e : net.edges) {
    ordered_json je;
    je["source"] = e.source;
    je["target"] = e.target;
    je["sign"] = label_of(e, cfg);
    if (cfg.include_weights) je["weight"] = e.weight;
    j["edges"].push_back(std::move(je));
  }
  return j;
}

}  // namespace

std::string export_network(const GeneNetwork& net, const ExportConfig& cfg) {
  check_labels(cfg);
  switch (cfg.format) {
    case NetFormat::SIF: return export_sif(net, cfg);
    case NetFormat::GraphML: return export_graphml(net, cfg);
    case NetFormat::DOT: return export_dot(net, cfg);
    case NetFormat::JSON: return network_to_json(net, cfg).dump(2) + "\n";
  }
  throw ArgumentError("unknown export format");
}

GeneNetwork parse_sif(std::istream& in, const std::map<std::string, Sign>* relation_signs) {
  static const std::map<std::string, Sign> kDefault = {{"activates", Sign::Activation},
                                                       {"represses", Sign::Repression}};
  const auto& signs = relation_signs ? *relation_signs : kDefault;

  GeneNetwork net;
  net.orientation = Orientation::Directed;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      auto pos = line.find('\t', start);
      if (pos == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    if (fields.size() == 1) {
      net.nodes.push_back(fields[0]);  // isolated node
      continue;
    }
    if (fields.size() != 3)
      throw ParseError("SIF line needs 1 (bare node) or 3 fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    auto it = signs.find(fields[1]);
    if (it == signs.end())
      throw ParseError("unknown SIF relation '" + fields[1] + "'", line_no);
    Edge e;
    e.source = fields[0];
    e.target = fields[2];
    e.sign = it->second;
    e.weight = e.sign == Sign::Activation ? 1.0 : -1.0;
    net.nodes.push_back(e.source);
    net.nodes.push_back(e.target);
    net.edges.push_back(std::move(e));
  }
  net.canonicalize();
  net.check();
  return net;
}

GeneNetwork parse_sif(std::string_view text, const std::map<std::string, Sign>* relation_signs) {
  std::istringstream in{std::string(text)};
  return parse_sif(in, relation_signs);
}

std::string network_json(const GeneNetwork& net, bool include_weights) {
  ExportConfig cfg;
  cfg.format = NetFormat::JSON;
  cfg.include_weights = include_weights;
  return network_to_json(net, cfg).dump(2) + "\n";
}

GeneNetwork network_from_json(std::string_view text) {
  GeneNetwork net;
  try {
    const ordered_json j = ordered_json::parse(text);
    const std::string orient = j.value("orientation", "undirected");
    if (orient == "undirected")
      net.orientation = Orientation::Undirected;
    else if (orient == "heuristic")
      net.orientation = Orientation::Heuristic;
    else if (orient == "directed")
      net.orientation = Orientation::Directed;
    else
      throw ParseError("network JSON: unknown orientation '" + orient + "'");
    for (const auto& n : j.at("nodes")) net.nodes.push_back(n.get<std::string>());
    for (const auto& je : j.at("edges")) {
      Edge e;
      e.source = je.at("source").get<std::string>();
      e.target = je.at("target").get<std::string>();
      const std::string sign = je.at("sign").get<std::string>();
      if (sign == "activates")
        e.sign = Sign::Activation;
      else if (sign == "represses")
        e.sign = Sign::Repression;
      else
        throw ParseError("network JSON: unknown sign '" + sign + "'");
      e.weight = je.contains("weight") ? je.at("weight").get<double>()
                                       : (e.sign == Sign::Activation ? 1.0 : -1.0);
      net.edges.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("network JSON: ") + e.what());
  }
  net.canonicalize();
  net.check();
  return net;
}

std::string topology_tsv(const TopologyReport& r) {
  // component id of each node under the report's pinned component order
  std::map<std::string, std::size_t> comp_of;
  for (std::size_t i = 0; i < r.components.size(); ++i)
    for (const auto& n : r.components[i]) comp_of[n] = i;
  std::set<std::string> hub_set;
  for (const auto& [id, deg] : r.hub_list) hub_set.insert(id);

  std::ostringstream out;
  out << "gene_id\tin_degree\tout_degree\ttotal_degree\tis_hub\tis_source\tis_sink\t"
         "component_id\n";
  for (const auto& [id, deg] : r.per_node) {
    out << id << '\t' << deg.in << '\t' << deg.out << '\t' << deg.total << '\t'
        << (hub_set.count(id) ? 1 : 0) << '\t' << (r.sources.count(id) ? 1 : 0) << '\t'
        << (r.sinks.count(id) ? 1 : 0) << '\t' << comp_of[id] << '\n';
  }
  return out.str();
}

namespace {

ordered_json topology_to_json(const TopologyReport& r) {
  ordered_json j;
  j["orientation"] = to_string(r.orientation);
  j["nodes"] = r.node_count;
  j["edges"] = r.edge_count;
  j["activations"] = r.activation_count;
  j["repressions"] = r.repression_count;
  j["min_hub_degree"] = r.min_hub_degree;
  j["degrees"] = ordered_json::object();
  for (const auto& [id, deg] : r.per_node) {
    ordered_json jd;
    jd["in"] = deg.in;
    jd["out"] = deg.out;
    jd["total"] = deg.total;
    j["degrees"][id] = std::move(jd);
  }
  j["hubs"] = ordered_json::array();
  for (const auto& [id, deg] : r.hub_list) j["hubs"].push_back({{"gene", id}, {"degree", deg}});
  j["sources"] = r.sources;
  j["sinks"] = r.sinks;
  j["components"] = r.components;
  j["degree_histogram"] = ordered_json::object();
  for (const auto& [deg, count] : r.degree_histogram)
    j["degree_histogram"][std::to_string(deg)] = count;
  return j;
}

}  // namespace

std::string topology_json_string(const TopologyReport& r) {
  return topology_to_json(r).dump(2) + "\n";
}

std::string export_report(const DiffExprTable* table, const GeneNetwork& net,
                          const TopologyReport& topo, const RunParams& params) {
  ordered_json j;
  j["input"] = {{"genes", params.input_genes}, {"samples", params.input_samples}};
  j["preprocessed_genes"] = params.preprocessed_genes;
  j["thresholds"] = {
      {"alpha", params.alpha},
      {"min_fold", params.min_fold},
      {"fold_mode", params.fold_mode == FoldMode::Ratio ? "ratio" : "log-diff"},
      {"tau", params.tau},
  };
  j["scale"] = to_string(params.scale);
  if (table != nullptr) {
    std::size_t pass_p = 0, pass_fc = 0, pass_both = 0;
    for (const auto& rec : *table) {
      pass_p += rec.passed_p;
      pass_fc += rec.passed_fc;
      pass_both += rec.passed_p && rec.passed_fc;
    }
    j["filter"] = {
        {"tested", table->size()},
        {"passed_p", pass_p},
        {"passed_fc", pass_fc},
        {"passed_both", pass_both},
    };
  }
  j["network"] = {
      {"orientation", to_string(net.orientation)},
      {"nodes", net.nodes.size()},
      {"edges", net.edges.size()},
      {"activations", net.activation_count()},
      {"repressions", net.repression_count()},
  };
  j["hubs"] = ordered_json::array();
  for (const auto& [id, deg] : topo.hub_list)
    j["hubs"].push_back({{"gene", id}, {"degree", deg}});
  j["components"] = topo.components.size();
  j["warnings"] = params.warnings;
  return j.dump(2) + "\n";
}

}  // namespace grnet
