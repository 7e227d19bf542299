#include "grnet/expr_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace grnet {

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

bool is_missing_token(std::string_view field, const TsvOptions& opts) {
  for (const auto& tok : opts.missing_tokens)
    if (iequals(field, tok)) return true;
  return false;
}

std::vector<std::string_view> split(std::string_view line, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string_view strip_quotes(std::string_view f) {
  if (f.size() >= 2 && f.front() == '"' && f.back() == '"')
    return f.substr(1, f.size() - 2);
  return f;
}

// Reads one logical line, accepting LF and CRLF. Returns false at EOF.
bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

double parse_cell(std::string_view field, const TsvOptions& opts, std::size_t line_no,
                  std::size_t col_no) {
  if (is_missing_token(field, opts)) return std::numeric_limits<double>::quiet_NaN();
  double v;
  auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
    throw ParseError("expected a number or missing token, got '" + std::string(field) + "'",
                     line_no, col_no);
  if (!std::isfinite(v))
    throw ParseError("non-finite value '" + std::string(field) + "'", line_no, col_no);
  return v;
}

// Shared table reader for the plain-TSV and series-matrix paths. `lines`
// carries (text, original line number) so errors point at the source file.
ExpressionMatrix parse_table(const std::vector<std::pair<std::string, std::size_t>>& lines,
                             const TsvOptions& opts, bool strip_field_quotes,
                             bool require_id_ref) {
  if (lines.empty()) throw ParseError("empty input: no header row");

  auto fields_of = [&](std::string_view text) {
    auto fields = split(text, opts.delimiter);
    if (strip_field_quotes)
      for (auto& f : fields) f = strip_quotes(f);
    return fields;
  };

  const auto& [header_text, header_no] = lines.front();
  auto header = fields_of(header_text);
  if (require_id_ref && header[0] != "ID_REF")
    throw ParseError("series-matrix table header must start with ID_REF, got '" +
                         std::string(header[0]) + "'",
                     header_no, 1);

  ExpressionMatrix m;
  m.sample_ids.assign(header.begin() + 1, header.end());
  {
    std::unordered_set<std::string> seen;
    for (const auto& s : m.sample_ids)
      if (!seen.insert(s).second)
        throw ParseError("duplicate sample id '" + s + "' in header", header_no);
  }

  const std::size_t ncols = header.size();
  m.gene_ids.reserve(lines.size() - 1);
  m.values.reserve((lines.size() - 1) * m.sample_ids.size());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [text, line_no] = lines[i];
    auto fields = fields_of(text);
    if (fields.size() != ncols)
      throw ParseError("row has " + std::to_string(fields.size()) + " fields, header has " +
                           std::to_string(ncols),
                       line_no);
    m.gene_ids.emplace_back(fields[0]);
    for (std::size_t c = 1; c < ncols; ++c)
      m.values.push_back(parse_cell(fields[c], opts, line_no, c + 1));
  }
  m.scale = Scale::Unknown;
  return m;
}

}  // namespace

ExpressionMatrix parse_expression_tsv(std::istream& in, const TsvOptions& opts) {
  std::vector<std::pair<std::string, std::size_t>> lines;
  std::string line;
  std::size_t line_no = 0;
  while (read_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;  // blank lines (incl. trailing newline) are not rows
    lines.emplace_back(line, line_no);
  }
  return parse_table(lines, opts, /*strip_field_quotes=*/false, /*require_id_ref=*/false);
}

ExpressionMatrix parse_expression_tsv(std::string_view text, const TsvOptions& opts) {
  std::istringstream in{std::string(text)};
  return parse_expression_tsv(in, opts);
}

ExpressionMatrix parse_series_matrix(std::istream& in) {
  static constexpr std::string_view kBegin = "!series_matrix_table_begin";
  static constexpr std::string_view kEnd = "!series_matrix_table_end";

  std::vector<std::pair<std::string, std::size_t>> lines;
  std::string line;
  std::size_t line_no = 0;
  bool in_table = false, saw_begin = false, saw_end = false;
  while (read_line(in, line)) {
    ++line_no;
    if (!in_table) {
      if (line == kBegin) {
        in_table = true;
        saw_begin = true;
      }
      continue;  // metadata outside the table is ignored
    }
    if (line == kEnd) {
      saw_end = true;
      break;
    }
    if (line.empty()) continue;
    lines.emplace_back(line, line_no);
  }
  if (!saw_begin) throw ParseError("series matrix: missing !series_matrix_table_begin sentinel");
  if (!saw_end) throw ParseError("series matrix: missing !series_matrix_table_end sentinel");
  return parse_table(lines, TsvOptions{}, /*strip_field_quotes=*/true, /*require_id_ref=*/true);
}

ExpressionMatrix parse_series_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_series_matrix(in);
}

SampleGrouping parse_group_map(std::istream& in, bool skip_header) {
  SampleGrouping g;
  std::vector<std::string> labels;  // first-seen order
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (read_line(in, line)) {
    ++line_no;
    if (first && skip_header) {
      first = false;
      continue;
    }
    first = false;
    if (line.empty()) continue;

    // Two whitespace-delimited columns: sample id, condition label.
    std::istringstream fields(line);
    std::string sample, label, extra;
    if (!(fields >> sample >> label))
      throw ParseError("group map row needs two columns: sample id and condition", line_no);
    if (fields >> extra)
      throw ParseError("group map row has more than two columns", line_no);

    if (g.assignment.count(sample))
      throw DataError("group map: duplicate sample id '" + sample + "'");
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(label);
    g.assignment.emplace(sample, label);
  }

  if (labels.size() != 2) {
    std::string seen;
    for (const auto& l : labels) seen += (seen.empty() ? "" : ", ") + l;
    throw DataError("group map must use exactly two condition labels, found " +
                    std::to_string(labels.size()) + (seen.empty() ? "" : ": " + seen));
  }
  g.condition_a = labels[0];
  g.condition_b = labels[1];
  for (const auto& label : labels) {
    std::size_t n = g.count(label);
    if (n < 2)
      throw DataError("condition '" + label + "' has " + std::to_string(n) +
                      " sample(s); at least 2 required");
  }
  return g;
}

SampleGrouping parse_group_map(std::string_view text, bool skip_header) {
  std::istringstream in{std::string(text)};
  return parse_group_map(in, skip_header);
}

void write_expression_tsv(const ExpressionMatrix& m, std::ostream& out, const TsvOptions& opts) {
  const char d = opts.delimiter;
  out << "gene_id";
  for (const auto& s : m.sample_ids) out << d << s;
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << m.gene_ids[r];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << d;
      if (m.is_missing(r, c))
        out << opts.missing_output;
      else
        out << format_double(m.at(r, c));
    }
    out << '\n';
  }
}

std::string expression_tsv_string(const ExpressionMatrix& m, const TsvOptions& opts) {
  std::ostringstream out;
  write_expression_tsv(m, out, opts);
  return out.str();
}

}  // namespace grnet
