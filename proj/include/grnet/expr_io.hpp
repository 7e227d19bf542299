#ifndef GRNET_EXPR_IO_HPP
#define GRNET_EXPR_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "grnet/expression.hpp"

namespace grnet {

/// Options for the plain expression-TSV reader/writer. Fields are split on
/// `delimiter` with no quoting; a field equal to one of `missing_tokens`
/// (case-insensitive) is a missing measurement.
struct TsvOptions {
  char delimiter = '\t';
  std::vector<std::string> missing_tokens = {"", "NA", "null", "NaN"};
  std::string missing_output = "NA";  // token the writer emits for missing cells
};

/// Parses a matrix from tab-separated text. First line is a header whose
/// first cell is arbitrary and whose remaining cells are sample ids; each data
/// row is gene_id followed by one numeric-or-missing field per sample.
/// LF and CRLF line endings are both accepted. Result scale is Unknown.
ExpressionMatrix parse_expression_tsv(std::istream& in, const TsvOptions& opts = {});
ExpressionMatrix parse_expression_tsv(std::string_view text, const TsvOptions& opts = {});

/// Parses a GEO series-matrix file: "!"-prefixed metadata lines are skipped,
/// the tab-separated table between !series_matrix_table_begin and
/// !series_matrix_table_end is read with the rules above. Double quotes
/// around fields are stripped. Header's first cell must be ID_REF.
ExpressionMatrix parse_series_matrix(std::istream& in);
ExpressionMatrix parse_series_matrix(std::string_view text);

/// Parses a two-column sample->condition map. Exactly two distinct labels
/// must occur, each covering >= 2 samples; condition_a is the first label
/// seen. `skip_header` drops line 1.
SampleGrouping parse_group_map(std::istream& in, bool skip_header = false);
SampleGrouping parse_group_map(std::string_view text, bool skip_header = false);

/// Writes a matrix as TSV. Present values use the shortest representation
/// that round-trips bit-for-bit; missing cells get opts.missing_output.
void write_expression_tsv(const ExpressionMatrix& m, std::ostream& out,
                          const TsvOptions& opts = {});
std::string expression_tsv_string(const ExpressionMatrix& m, const TsvOptions& opts = {});

/// Shortest decimal representation of v that parses back to exactly v.
std::string format_double(double v);

}  // namespace grnet

#endif
