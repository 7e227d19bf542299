#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "grnet/diffexpr.hpp"
#include "grnet/expr_io.hpp"
#include "grnet/rng.hpp"

using namespace grnet;

namespace {

ExpressionMatrix two_group_matrix(const std::vector<std::string>& genes,
                                  const std::vector<std::vector<double>>& a_vals,
                                  const std::vector<std::vector<double>>& b_vals,
                                  SampleGrouping& g) {
  ExpressionMatrix m;
  m.gene_ids = genes;
  const std::size_t na = a_vals[0].size(), nb = b_vals[0].size();
  for (std::size_t i = 0; i < na; ++i) {
    m.sample_ids.push_back("a" + std::to_string(i));
    g.assignment["a" + std::to_string(i)] = "tissue";
  }
  for (std::size_t i = 0; i < nb; ++i) {
    m.sample_ids.push_back("b" + std::to_string(i));
    g.assignment["b" + std::to_string(i)] = "cultured";
  }
  g.condition_a = "tissue";
  g.condition_b = "cultured";
  for (std::size_t r = 0; r < genes.size(); ++r) {
    m.values.insert(m.values.end(), a_vals[r].begin(), a_vals[r].end());
    m.values.insert(m.values.end(), b_vals[r].begin(), b_vals[r].end());
  }
  return m;
}

}  // namespace

TEST_CASE("group_stats: hand-computed example") {
  SampleGrouping g;
  auto m = two_group_matrix({"X"}, {{1, 2, 3}}, {{4, 5, 6}}, g);
  auto s = group_stats(m, g, 0);
  CHECK(s.mean_a == 2.0);
  CHECK(s.mean_b == 5.0);
  CHECK(s.var_a == 1.0);  // unbiased variance of {1,2,3}
  CHECK(s.var_b == 1.0);
  CHECK(s.n_a == 3);
  CHECK(s.n_b == 3);
}

TEST_CASE("group_stats: constant group and error paths") {
  SampleGrouping g;
  auto m = two_group_matrix({"X"}, {{5, 5, 5, 5}}, {{1, 2, 2, 3}}, g);
  auto s = group_stats(m, g, 0);
  CHECK(s.mean_a == 5.0);
  CHECK(s.var_a == 0.0);

  CHECK_THROWS_AS(group_stats(m, g, 5), ArgumentError);

  SampleGrouping tiny;
  tiny.condition_a = "tissue";
  tiny.condition_b = "cultured";
  tiny.assignment = {{"a0", "tissue"}, {"a1", "cultured"}, {"a2", "cultured"}};
  ExpressionMatrix m2;
  m2.gene_ids = {"X"};
  m2.sample_ids = {"a0", "a1", "a2"};
  m2.values = {1, 2, 3};
  CHECK_THROWS_AS(group_stats(m2, tiny, 0), DataError);  // tissue has 1 sample

  SampleGrouping ghost;
  ghost.condition_a = "t";
  ghost.condition_b = "c";
  ghost.assignment = {{"zz", "t"}, {"a0", "t"}, {"a1", "c"}, {"a2", "c"}};
  CHECK_THROWS_AS(group_stats(m2, ghost, 0), DataError);  // zz not in matrix
}

TEST_CASE("welch_t: value and conventions") {
  GroupStats s{.mean_a = 2, .mean_b = 5, .var_a = 1, .var_b = 1, .n_a = 3, .n_b = 3};
  CHECK(welch_t(s) == doctest::Approx(3.674234614).epsilon(1e-9));
  CHECK(welch_t(s) == doctest::Approx(std::sqrt(13.5)).epsilon(1e-15));

  GroupStats flat{.mean_a = 4, .mean_b = 4, .var_a = 2, .var_b = 5, .n_a = 4, .n_b = 6};
  CHECK(welch_t(flat) == 0.0);

  GroupStats degen{.mean_a = 1, .mean_b = 2, .var_a = 0, .var_b = 0, .n_a = 3, .n_b = 3};
  CHECK_THROWS_AS(welch_t(degen), NumericError);
  CHECK_THROWS_AS(welch_df(degen), NumericError);
}

TEST_CASE("welch_df: Satterthwaite values") {
  GroupStats s{.mean_a = 0, .mean_b = 0, .var_a = 1, .var_b = 1, .n_a = 3, .n_b = 3};
  CHECK(welch_df(s) == doctest::Approx(4.0).epsilon(1e-12));

  // equal variances and equal n collapse to the pooled df
  for (std::size_t n : {3u, 5u, 9u}) {
    GroupStats eq{.mean_a = 0, .mean_b = 0, .var_a = 2.5, .var_b = 2.5, .n_a = n, .n_b = n};
    CHECK(welch_df(eq) == doctest::Approx(double(2 * n - 2)).epsilon(1e-12));
  }

  GroupStats onesided{.mean_a = 0, .mean_b = 0, .var_a = 0, .var_b = 1, .n_a = 5, .n_b = 5};
  CHECK(welch_df(onesided) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("fold_change: both scales") {
  GroupStats lin{.mean_a = 4, .mean_b = 32, .var_a = 1, .var_b = 1, .n_a = 3, .n_b = 3};
  CHECK(fold_change(lin, Scale::Linear) == doctest::Approx(3.0).epsilon(1e-15));

  GroupStats log{.mean_a = 2, .mean_b = 7, .var_a = 1, .var_b = 1, .n_a = 3, .n_b = 3};
  CHECK(fold_change(log, Scale::Log2) == 5.0);

  GroupStats equal{.mean_a = 3, .mean_b = 3, .var_a = 1, .var_b = 1, .n_a = 3, .n_b = 3};
  CHECK(fold_change(equal, Scale::Linear) == 0.0);
  CHECK(fold_change(equal, Scale::Log2) == 0.0);

  GroupStats bad{.mean_a = -1, .mean_b = 3, .var_a = 1, .var_b = 1, .n_a = 3, .n_b = 3};
  CHECK_THROWS_AS(fold_change(bad, Scale::Linear), NumericError);
  CHECK_THROWS_AS(fold_change(bad, Scale::Unknown), ArgumentError);
}

TEST_CASE("fold_cutoff_log2") {
  CHECK(fold_cutoff_log2(5.0, FoldMode::Ratio) == doctest::Approx(std::log2(5.0)));
  CHECK(fold_cutoff_log2(5.0, FoldMode::LogDiff) == 5.0);
  CHECK(fold_cutoff_log2(0.0, FoldMode::Ratio) == -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(fold_cutoff_log2(-1.0, FoldMode::Ratio), ArgumentError);
}

TEST_CASE("two_stage_filter: vacuous thresholds pass everything") {
  SampleGrouping g;
  auto m = two_group_matrix({"A", "B", "C"}, {{1, 2}, {5, 6}, {0, 1}},
                            {{2, 3}, {5.5, 6.5}, {9, 10}}, g);
  m.scale = Scale::Log2;
  FilterOptions opts;
  opts.alpha = 1.0;
  opts.min_fold = 0.0;
  auto res = two_stage_filter(m, g, Scale::Log2, opts);
  CHECK(res.table.size() == 3);
  CHECK(res.filtered.rows() == 3);
  for (const auto& rec : res.table) {
    CHECK(rec.passed_p);
    CHECK(rec.passed_fc);
  }
}

TEST_CASE("two_stage_filter: conjunction of independent flags, original order") {
  SampleGrouping g;
  // big: huge fold change and clean separation; smallfc: significant but tiny FC;
  // noisy: big FC but no significance.
  auto m = two_group_matrix({"big", "smallfc", "noisy"},
                            {{1.0, 1.1, 0.9, 1.0}, {1.0, 1.01, 0.99, 1.0}, {0, 8, 1, 9}},
                            {{9.0, 9.1, 8.9, 9.0}, {1.5, 1.51, 1.49, 1.5}, {4, 14, 3, 13}}, g);
  FilterOptions opts;
  opts.alpha = 0.001;
  opts.min_fold = 5.0;  // log2(5) ~ 2.32
  auto res = two_stage_filter(m, g, Scale::Log2, opts);
  REQUIRE(res.table.size() == 3);
  CHECK(res.table[0].passed_p);
  CHECK(res.table[0].passed_fc);
  CHECK(res.table[1].passed_p);
  CHECK_FALSE(res.table[1].passed_fc);
  CHECK_FALSE(res.table[2].passed_p);
  CHECK(res.table[2].passed_fc);
  CHECK(res.filtered.gene_ids == std::vector<std::string>{"big"});
}

TEST_CASE("two_stage_filter: degenerate flat genes don't abort the run") {
  SampleGrouping g;
  auto m = two_group_matrix({"flat_same", "flat_diff"}, {{3, 3, 3}, {1, 1, 1}},
                            {{3, 3, 3}, {7, 7, 7}}, g);
  auto res = two_stage_filter(m, g, Scale::Log2, {});
  REQUIRE(res.table.size() == 2);
  CHECK(res.table[0].degenerate);
  CHECK(res.table[0].p_value == 1.0);
  CHECK(std::isnan(res.table[0].t));
  CHECK(res.table[1].degenerate);
  CHECK(res.table[1].p_value == 0.0);
  CHECK(res.table[1].passed_p);
  CHECK(res.table[1].fold_change == 6.0);
}

TEST_CASE("two_stage_filter: sign antisymmetry under group swap") {
  Xoshiro256pp rng(21);
  SampleGrouping g;
  std::vector<std::vector<double>> a, b;
  std::vector<std::string> genes;
  for (int i = 0; i < 12; ++i) {
    genes.push_back("g" + std::to_string(i));
    std::vector<double> ra, rb;
    for (int k = 0; k < 5; ++k) ra.push_back(rng.normal() + 2);
    for (int k = 0; k < 7; ++k) rb.push_back(rng.normal() * 1.5 - 1);
    a.push_back(ra);
    b.push_back(rb);
  }
  auto m = two_group_matrix(genes, a, b, g);
  auto fwd = two_stage_filter(m, g, Scale::Log2, {});
  auto rev = two_stage_filter(m, g.swapped(), Scale::Log2, {});
  for (std::size_t i = 0; i < fwd.table.size(); ++i) {
    CHECK(fwd.table[i].t == doctest::Approx(-rev.table[i].t).epsilon(1e-12));
    CHECK(fwd.table[i].fold_change == doctest::Approx(-rev.table[i].fold_change).epsilon(1e-12));
    CHECK(fwd.table[i].p_value == doctest::Approx(rev.table[i].p_value).epsilon(1e-12));
    CHECK(fwd.table[i].passed_p == rev.table[i].passed_p);
    CHECK(fwd.table[i].passed_fc == rev.table[i].passed_fc);
  }
}

TEST_CASE("two_stage_filter: shift invariance on the log2 scale") {
  Xoshiro256pp rng(22);
  SampleGrouping g;
  std::vector<std::vector<double>> a = {{1.2, 2.4, 0.8}, {5, 6, 7}};
  std::vector<std::vector<double>> b = {{4.5, 5.0, 4.0}, {5.1, 6.1, 7.1}};
  auto m = two_group_matrix({"p", "q"}, a, b, g);
  auto base = two_stage_filter(m, g, Scale::Log2, {});
  auto shifted = m;
  for (auto& v : shifted.values) v += 13.75;
  auto res = two_stage_filter(shifted, g, Scale::Log2, {});
  for (std::size_t i = 0; i < base.table.size(); ++i) {
    CHECK(res.table[i].t == doctest::Approx(base.table[i].t).epsilon(1e-9));
    CHECK(res.table[i].df == doctest::Approx(base.table[i].df).epsilon(1e-9));
    CHECK(res.table[i].p_value == doctest::Approx(base.table[i].p_value).epsilon(1e-9));
    CHECK(res.table[i].fold_change == doctest::Approx(base.table[i].fold_change).epsilon(1e-9));
  }
}

TEST_CASE("two_stage_filter: scale invariance on the linear scale") {
  SampleGrouping g;
  auto m = two_group_matrix({"p", "q"}, {{10, 12, 11}, {100, 90, 110}},
                            {{50, 55, 60}, {20, 30, 25}}, g);
  auto base = two_stage_filter(m, g, Scale::Linear, {});
  auto scaled = m;
  for (auto& v : scaled.values) v *= 7.25;
  auto res = two_stage_filter(scaled, g, Scale::Linear, {});
  for (std::size_t i = 0; i < base.table.size(); ++i) {
    CHECK(res.table[i].t == doctest::Approx(base.table[i].t).epsilon(1e-9));
    CHECK(res.table[i].fold_change == doctest::Approx(base.table[i].fold_change).epsilon(1e-9));
  }
}

TEST_CASE("two_stage_filter: linear scale with a nonpositive mean names the gene") {
  SampleGrouping g;
  auto m = two_group_matrix({"BADGENE"}, {{-5, -6, -7}}, {{1, 2, 3}}, g);
  try {
    two_stage_filter(m, g, Scale::Linear, {});
    FAIL("expected NumericError");
  } catch (const NumericError& e) {
    CHECK(std::string(e.what()).find("BADGENE") != std::string::npos);
  }
}

TEST_CASE("two_stage_filter: permutation equivariance") {
  Xoshiro256pp rng(23);
  SampleGrouping g;
  std::vector<std::string> genes;
  std::vector<std::vector<double>> a, b;
  for (int i = 0; i < 10; ++i) {
    genes.push_back("g" + std::to_string(i));
    std::vector<double> ra, rb;
    for (int k = 0; k < 4; ++k) ra.push_back(rng.normal());
    for (int k = 0; k < 4; ++k) rb.push_back(rng.normal() + (i % 3));
    a.push_back(ra);
    b.push_back(rb);
  }
  auto m = two_group_matrix(genes, a, b, g);
  auto base = two_stage_filter(m, g, Scale::Log2, {});

  // rotate rows by 3
  ExpressionMatrix perm;
  perm.sample_ids = m.sample_ids;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::size_t src = (i + 3) % m.rows();
    perm.gene_ids.push_back(m.gene_ids[src]);
    auto row = m.row(src);
    perm.values.insert(perm.values.end(), row.begin(), row.end());
  }
  auto permuted = two_stage_filter(perm, g, Scale::Log2, {});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::size_t src = (i + 3) % m.rows();
    CHECK(permuted.table[i].gene_id == base.table[src].gene_id);
    CHECK(permuted.table[i].p_value == base.table[src].p_value);
    CHECK(permuted.table[i].fold_change == base.table[src].fold_change);
    CHECK(permuted.table[i].passed_p == base.table[src].passed_p);
    CHECK(permuted.table[i].passed_fc == base.table[src].passed_fc);
  }
  // same surviving set
  std::set<std::string> s1(base.filtered.gene_ids.begin(), base.filtered.gene_ids.end());
  std::set<std::string> s2(permuted.filtered.gene_ids.begin(), permuted.filtered.gene_ids.end());
  CHECK(s1 == s2);
}

TEST_CASE("two_stage_filter: thread count does not change results") {
  Xoshiro256pp rng(24);
  SampleGrouping g;
  std::vector<std::string> genes;
  std::vector<std::vector<double>> a, b;
  for (int i = 0; i < 101; ++i) {
    genes.push_back("g" + std::to_string(i));
    std::vector<double> ra, rb;
    for (int k = 0; k < 6; ++k) ra.push_back(rng.normal());
    for (int k = 0; k < 6; ++k) rb.push_back(rng.normal() * 2 + 1);
    a.push_back(ra);
    b.push_back(rb);
  }
  auto m = two_group_matrix(genes, a, b, g);
  FilterOptions opt1, opt8;
  opt8.threads = 8;
  auto r1 = two_stage_filter(m, g, Scale::Log2, opt1);
  auto r8 = two_stage_filter(m, g, Scale::Log2, opt8);
  CHECK(diffexpr_tsv_string(r1.table) == diffexpr_tsv_string(r8.table));
  CHECK(expression_tsv_string(r1.filtered) == expression_tsv_string(r8.filtered));
}

TEST_CASE("diffexpr TSV shape") {
  SampleGrouping g;
  auto m = two_group_matrix({"A", "B"}, {{3, 3, 3}, {1, 2, 3}}, {{3, 3, 3}, {9, 8, 7}}, g);
  auto res = two_stage_filter(m, g, Scale::Log2, {});
  const std::string tsv = diffexpr_tsv_string(res.table);
  CHECK(tsv.find("gene_id\tmean_a\tmean_b\tvar_a\tvar_b\tt\tdf\tp_value\tfold_change\tpassed_p\tpassed_fc\n") == 0);
  CHECK(tsv.find("A\t3\t3\t0\t0\tNA\tNA\t1\t0\t") != std::string::npos);  // degenerate row
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 3);
}

TEST_CASE("filter rejects missing cells and duplicate genes") {
  SampleGrouping g;
  auto m = two_group_matrix({"A", "A"}, {{1, 2}, {1, 2}}, {{3, 4}, {3, 4}}, g);
  CHECK_THROWS_AS(two_stage_filter(m, g, Scale::Log2, {}), DataError);
  auto m2 = two_group_matrix({"A"}, {{1, 2}}, {{3, 4}}, g);
  m2.values[0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(two_stage_filter(m2, g, Scale::Log2, {}), DataError);
}
