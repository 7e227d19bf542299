#ifndef GRNET_DIFFEXPR_HPP
#define GRNET_DIFFEXPR_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "grnet/expression.hpp"

namespace grnet {

/// Per-gene condition summary. Condition a is the reference (x) group,
/// condition b the comparison (y) group; variances are unbiased (n-1).
struct GroupStats {
  double mean_a = 0;
  double mean_b = 0;
  double var_a = 0;
  double var_b = 0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
};

/// One row of the differential-expression table. For genes where both group
/// variances are zero the t statistic has no finite value: `degenerate` is
/// set, t and df are NaN, and p is 0 when the means differ (unbounded signal)
/// or 1 when they are equal (no signal).
struct DiffExprRecord {
  std::string gene_id;
  GroupStats stats;
  double t = 0;
  double df = 0;
  double p_value = 1;
  double fold_change = 0;  // always in log2 units
  bool degenerate = false;
  bool passed_p = false;
  bool passed_fc = false;
};

using DiffExprTable = std::vector<DiffExprRecord>;

/// How the --min-fold threshold is interpreted. Ratio: the threshold is in
/// fold units and a gene passes when |FC| >= log2(min_fold). LogDiff: the
/// threshold is compared against |FC| directly in log2 units.
enum class FoldMode { Ratio, LogDiff };

struct FilterOptions {
  double alpha = 0.001;
  double min_fold = 5.0;
  FoldMode fold_mode = FoldMode::Ratio;
  unsigned threads = 1;
};

struct FilterResult {
  DiffExprTable table;        // one record per input gene, input order
  ExpressionMatrix filtered;  // genes with passed_p && passed_fc, input order
};

/// Means, unbiased variances and sizes of the two condition groups for one
/// gene row. Throws if a grouped sample is absent or a condition has < 2
/// samples.
GroupStats group_stats(const ExpressionMatrix& m, const SampleGrouping& g,
                       std::size_t gene_index);
GroupStats group_stats(const ExpressionMatrix& m, const ConditionColumns& cc,
                       std::size_t gene_index);

/// Unequal-variance t statistic (mean_b - mean_a) / sqrt(var_a/n_a + var_b/n_b).
/// Positive t means condition b exceeds condition a. Throws NumericError when
/// both variances are zero.
double welch_t(const GroupStats& s);

/// Welch-Satterthwaite effective degrees of freedom.
double welch_df(const GroupStats& s);

/// Two-tailed p-value for a t statistic (regularized incomplete beta route).
double t_pvalue(double t, double df);

/// Log2 fold change of condition b over condition a. Linear inputs take
/// log2(mean_b/mean_a) and require positive means; Log2 inputs take
/// mean_b - mean_a.
double fold_change(const GroupStats& s, Scale scale);

/// The log2-units cutoff implied by min_fold under the given mode.
double fold_cutoff_log2(double min_fold, FoldMode mode);

/// Stage-1 (p <= alpha) and stage-2 (|FC| >= cutoff) filtering. Both flags
/// are computed for every gene; selection is their conjunction. Requires a
/// preprocessed matrix (no missing cells, unique gene ids) and a known scale.
FilterResult two_stage_filter(const ExpressionMatrix& m, const SampleGrouping& g,
                              Scale scale, const FilterOptions& opts = {});

/// Tab-separated table: gene_id, mean_a, mean_b, var_a, var_b, t, df,
/// p_value, fold_change, passed_p, passed_fc. Degenerate rows print NA for
/// t and df.
void write_diffexpr_tsv(const DiffExprTable& table, std::ostream& out);
std::string diffexpr_tsv_string(const DiffExprTable& table);

}  // namespace grnet

#endif
