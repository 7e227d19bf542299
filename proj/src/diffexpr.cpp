#include "grnet/diffexpr.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "grnet/expr_io.hpp"
#include "grnet/parallel.hpp"
#include "grnet/student_t.hpp"

namespace grnet {

namespace {

// Two-pass mean/variance over the selected columns of one gene row.
void mean_var(const ExpressionMatrix& m, std::size_t gene, const std::vector<std::size_t>& cols,
              double& mean, double& var) {
  const std::size_t n = cols.size();
  double sum = 0;
  for (std::size_t c : cols) sum += m.at(gene, c);
  mean = sum / static_cast<double>(n);
  double ss = 0;
  for (std::size_t c : cols) {
    const double d = m.at(gene, c) - mean;
    ss += d * d;
  }
  var = ss / static_cast<double>(n - 1);
}

DiffExprRecord make_record(const ExpressionMatrix& m, const ConditionColumns& cc,
                           std::size_t gene, Scale scale, double alpha, double fc_cutoff) {
  DiffExprRecord rec;
  rec.gene_id = m.gene_ids[gene];
  rec.stats = group_stats(m, cc, gene);

  try {
    rec.fold_change = fold_change(rec.stats, scale);
  } catch (const NumericError& e) {
    throw NumericError("gene '" + rec.gene_id + "': " + e.what());
  }

  if (rec.stats.var_a == 0.0 && rec.stats.var_b == 0.0) {
    rec.degenerate = true;
    rec.t = std::numeric_limits<double>::quiet_NaN();
    rec.df = std::numeric_limits<double>::quiet_NaN();
    rec.p_value = (rec.stats.mean_a == rec.stats.mean_b) ? 1.0 : 0.0;
  } else {
    rec.t = welch_t(rec.stats);
    rec.df = welch_df(rec.stats);
    rec.p_value = t_pvalue(rec.t, rec.df);
  }
  rec.passed_p = rec.p_value <= alpha;
  rec.passed_fc = std::fabs(rec.fold_change) >= fc_cutoff;
  return rec;
}

}  // namespace

GroupStats group_stats(const ExpressionMatrix& m, const SampleGrouping& g,
                       std::size_t gene_index) {
  return group_stats(m, split_columns(m, g), gene_index);
}

GroupStats group_stats(const ExpressionMatrix& m, const ConditionColumns& cc,
                       std::size_t gene_index) {
  if (gene_index >= m.rows()) throw ArgumentError("group_stats: gene index out of range");
  if (cc.a.size() < 2 || cc.b.size() < 2)
    throw DataError("group_stats: each condition needs at least 2 samples");
  GroupStats s;
  s.n_a = cc.a.size();
  s.n_b = cc.b.size();
  mean_var(m, gene_index, cc.a, s.mean_a, s.var_a);
  mean_var(m, gene_index, cc.b, s.mean_b, s.var_b);
  return s;
}

double welch_t(const GroupStats& s) {
  if (s.var_a == 0.0 && s.var_b == 0.0)
    throw NumericError("welch_t: both group variances are zero; no finite t statistic");
  const double se = std::sqrt(s.var_a / static_cast<double>(s.n_a) +
                              s.var_b / static_cast<double>(s.n_b));
  return (s.mean_b - s.mean_a) / se;
}

double welch_df(const GroupStats& s) {
  if (s.var_a == 0.0 && s.var_b == 0.0)
    throw NumericError("welch_df: both group variances are zero");
  const double ra = s.var_a / static_cast<double>(s.n_a);
  const double rb = s.var_b / static_cast<double>(s.n_b);
  const double num = (ra + rb) * (ra + rb);
  const double den = ra * ra / static_cast<double>(s.n_a - 1) +
                     rb * rb / static_cast<double>(s.n_b - 1);
  return num / den;
}

double t_pvalue(double t, double df) { return student_t_two_tailed_p(t, df); }

double fold_change(const GroupStats& s, Scale scale) {
  if (scale == Scale::Log2) return s.mean_b - s.mean_a;
  if (scale == Scale::Linear) {
    if (!(s.mean_a > 0.0) || !(s.mean_b > 0.0))
      throw NumericError("linear-scale fold change requires positive group means (got " +
                         format_double(s.mean_a) + ", " + format_double(s.mean_b) + ")");
    return std::log2(s.mean_b / s.mean_a);
  }
  throw ArgumentError("fold_change: scale must be resolved to Linear or Log2");
}

double fold_cutoff_log2(double min_fold, FoldMode mode) {
  if (min_fold < 0.0) throw ArgumentError("min_fold must be >= 0");
  if (mode == FoldMode::LogDiff) return min_fold;
  // |log2 ratio| >= log2(min_fold); min_fold == 0 disables the stage.
  return std::log2(min_fold);
}

FilterResult two_stage_filter(const ExpressionMatrix& m, const SampleGrouping& g, Scale scale,
                              const FilterOptions& opts) {
  if (!(opts.alpha >= 0.0 && opts.alpha <= 1.0)) throw ArgumentError("alpha must be in [0, 1]");
  if (m.has_missing())
    throw DataError("two_stage_filter requires a matrix with no missing cells");
  m.check(/*require_unique_genes=*/true);
  const double cutoff = fold_cutoff_log2(opts.min_fold, opts.fold_mode);
  const ConditionColumns cc = split_columns(m, g);

  FilterResult res;
  res.table.resize(m.rows());
  parallel_for(m.rows(), opts.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      res.table[i] = make_record(m, cc, i, scale, opts.alpha, cutoff);
  });

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < res.table.size(); ++i)
    if (res.table[i].passed_p && res.table[i].passed_fc) keep.push_back(i);

  res.filtered.sample_ids = m.sample_ids;
  res.filtered.scale = m.scale;
  res.filtered.gene_ids.reserve(keep.size());
  res.filtered.values.reserve(keep.size() * m.cols());
  for (std::size_t i : keep) {
    res.filtered.gene_ids.push_back(m.gene_ids[i]);
    auto row = m.row(i);
    res.filtered.values.insert(res.filtered.values.end(), row.begin(), row.end());
  }
  return res;
}

void write_diffexpr_tsv(const DiffExprTable& table, std::ostream& out) {
  out << "gene_id\tmean_a\tmean_b\tvar_a\tvar_b\tt\tdf\tp_value\tfold_change\tpassed_p\t"
         "passed_fc\n";
  for (const auto& r : table) {
    out << r.gene_id << '\t' << format_double(r.stats.mean_a) << '\t'
        << format_double(r.stats.mean_b) << '\t' << format_double(r.stats.var_a) << '\t'
        << format_double(r.stats.var_b) << '\t';
    if (r.degenerate)
      out << "NA\tNA\t";
    else
      out << format_double(r.t) << '\t' << format_double(r.df) << '\t';
    out << format_double(r.p_value) << '\t' << format_double(r.fold_change) << '\t'
        << (r.passed_p ? 1 : 0) << '\t' << (r.passed_fc ? 1 : 0) << '\n';
  }
}

std::string diffexpr_tsv_string(const DiffExprTable& table) {
  std::ostringstream out;
  write_diffexpr_tsv(table, out);
  return out.str();
}

}  // namespace grnet
