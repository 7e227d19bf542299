#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "grnet/demo_network.hpp"
#include "grnet/netinfer.hpp"
#include "grnet/rng.hpp"
#include "oracles.hpp"

using namespace grnet;

TEST_CASE("pearson: perfect linear relationships") {
  std::vector<double> x = {1, 2, 3, 4};
  std::vector<double> y;
  for (double v : x) y.push_back(2 * v + 1);
  CHECK(pearson(x, y) == 1.0);
  std::vector<double> neg;
  for (double v : x) neg.push_back(-v);
  CHECK(pearson(x, neg) == -1.0);
}

TEST_CASE("pearson: hand-computed value 0.8") {
  std::vector<double> x = {1, 2, 3, 4};
  std::vector<double> y = {1, 3, 2, 4};
  CHECK(pearson(x, y) == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("pearson: domain errors") {
  std::vector<double> x = {1, 2, 3};
  std::vector<double> c = {5, 5, 5};
  CHECK_THROWS_AS(pearson(x, c), NumericError);
  CHECK_THROWS_AS(pearson(c, x), NumericError);
  std::vector<double> one = {1};
  CHECK_THROWS_AS(pearson(one, one), ArgumentError);
  std::vector<double> two = {1, 2};
  CHECK_THROWS_AS(pearson(x, two), ArgumentError);
}

TEST_CASE("pearson: symmetry, affine invariance, raw-sums agreement") {
  Xoshiro256pp rng(31);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 2 + rng.next() % 40;
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = rng.uniform() * 20.0;
    for (auto& v : y) v = rng.uniform() * 20.0;
    double r;
    try {
      r = pearson(x, y);
    } catch (const NumericError&) {
      continue;
    }
    CHECK(pearson(y, x) == r);  // exact symmetry
    CHECK(std::fabs(r - oracle::pearson_raw_sums(x, y)) < 1e-10);

    const double a = 0.5 + rng.uniform() * 4.0;
    const double b = (rng.uniform() - 0.5) * 100.0;
    std::vector<double> xt(n);
    for (std::size_t i = 0; i < n; ++i) xt[i] = a * x[i] + b;
    CHECK(std::fabs(pearson(xt, y) - r) < 1e-12);
    CHECK(std::fabs(pearson(x, xt) - 1.0) < 1e-12);
    for (auto& v : xt) v = -v;
    CHECK(std::fabs(pearson(x, xt) + 1.0) < 1e-12);
  }
}

TEST_CASE("correlation_matrix: basic shapes") {
  ExpressionMatrix m;
  m.gene_ids = {"A", "B"};
  m.sample_ids = {"s1", "s2", "s3"};
  m.values = {1, 2, 3, 1, 2, 3};
  auto c = correlation_matrix(m);
  CHECK(c.size() == 2);
  CHECK(c.at(0, 1) == 1.0);
  CHECK(c.at(1, 0) == 1.0);
  CHECK(c.at(0, 0) == 1.0);

  ExpressionMatrix single;
  single.gene_ids = {"A"};
  single.sample_ids = {"s1", "s2"};
  single.values = {1, 2};
  auto c1 = correlation_matrix(single);
  CHECK(c1.size() == 1);
  CHECK(c1.at(0, 0) == 1.0);

  ExpressionMatrix narrow;
  narrow.gene_ids = {"A"};
  narrow.sample_ids = {"s1"};
  narrow.values = {1};
  CHECK_THROWS_AS(correlation_matrix(narrow), DataError);
}

TEST_CASE("correlation_matrix: constant genes are flagged undefined") {
  ExpressionMatrix m;
  m.gene_ids = {"A", "CONST", "B"};
  m.sample_ids = {"s1", "s2", "s3"};
  m.values = {1, 2, 3, 4, 4, 4, 3, 2, 1};
  auto c = correlation_matrix(m);
  CHECK(c.defined[0]);
  CHECK_FALSE(c.defined[1]);
  CHECK(c.defined[2]);
  CHECK(std::isnan(c.at(0, 1)));
  CHECK(c.at(0, 2) == -1.0);
  // undefined genes never produce edges
  auto net = threshold_edges(c, 0.5);
  CHECK(net.nodes == std::vector<std::string>{"A", "B"});
  REQUIRE(net.edges.size() == 1);
  CHECK(net.edges[0].sign == Sign::Repression);
}

TEST_CASE("correlation_matrix: thread-count invariance (bitwise)") {
  Xoshiro256pp rng(32);
  ExpressionMatrix m;
  for (int i = 0; i < 40; ++i) m.gene_ids.push_back("g" + std::to_string(i));
  for (int s = 0; s < 17; ++s) m.sample_ids.push_back("s" + std::to_string(s));
  for (std::size_t i = 0; i < 40u * 17u; ++i) m.values.push_back(rng.normal());
  auto c1 = correlation_matrix(m, 1);
  auto c8 = correlation_matrix(m, 8);
  REQUIRE(c1.r.size() == c8.r.size());
  for (std::size_t i = 0; i < c1.r.size(); ++i) {
    if (std::isnan(c1.r[i]))
      CHECK(std::isnan(c8.r[i]));
    else
      CHECK(c1.r[i] == c8.r[i]);
  }
}

TEST_CASE("threshold_edges: basic behavior and argument checks") {
  ExpressionMatrix m;
  m.gene_ids = {"A", "B", "C"};
  m.sample_ids = {"s1", "s2", "s3", "s4"};
  // A and B strongly positively correlated, C noise-ish
  m.values = {1, 2, 3, 4, 1.1, 2.0, 3.1, 3.9, 5, -2, 4, 1};
  auto c = correlation_matrix(m);
  auto net = threshold_edges(c, 0.85);
  REQUIRE(net.edges.size() == 1);
  CHECK(net.edges[0].source == "A");
  CHECK(net.edges[0].target == "B");
  CHECK(net.edges[0].sign == Sign::Activation);
  CHECK(net.orientation == Orientation::Undirected);
  CHECK(std::fabs(net.edges[0].weight) >= 0.85);

  CHECK_THROWS_AS(threshold_edges(c, 0.0), ArgumentError);
  CHECK_THROWS_AS(threshold_edges(c, 1.0000001), ArgumentError);
  CHECK_THROWS_AS(threshold_edges(c, -0.5), ArgumentError);
}

TEST_CASE("threshold_edges: tau-nesting and brute-force edge count") {
  Xoshiro256pp rng(33);
  for (int rep = 0; rep < 50; ++rep) {
    ExpressionMatrix m;
    const std::size_t genes = 2 + rng.next() % 18;
    const std::size_t samples = 3 + rng.next() % 10;
    for (std::size_t i = 0; i < genes; ++i) m.gene_ids.push_back("g" + std::to_string(i));
    for (std::size_t s = 0; s < samples; ++s) m.sample_ids.push_back("s" + std::to_string(s));
    const double base = rng.normal();
    for (std::size_t i = 0; i < genes * samples; ++i)
      m.values.push_back(rng.next() % 4 == 0 ? base : rng.normal());
    auto c = correlation_matrix(m);

    const double tau1 = 0.2 + rng.uniform() * 0.5;
    const double tau2 = tau1 + rng.uniform() * (1.0 - tau1);
    auto n1 = threshold_edges(c, tau1);
    auto n2 = threshold_edges(c, tau2);

    std::set<std::pair<std::string, std::string>> e1, e2;
    for (const auto& e : n1.edges) e1.emplace(e.source, e.target);
    for (const auto& e : n2.edges) e2.emplace(e.source, e.target);
    for (const auto& e : e2) CHECK(e1.count(e));  // nesting

    // exact brute-force count
    std::size_t expected = 0;
    for (std::size_t i = 0; i < genes; ++i)
      for (std::size_t j = i + 1; j < genes; ++j)
        if (c.pair_defined(i, j) && std::fabs(c.at(i, j)) >= tau1) ++expected;
    CHECK(n1.edges.size() == expected);
    n1.check();
  }
}

TEST_CASE("orient_edges: policies") {
  ExpressionMatrix m;
  m.gene_ids = {"RND2", "BNIP3"};
  m.sample_ids = {"s1", "s2", "s3"};
  m.values = {1, 2, 3, 1.0, 2.1, 2.9};
  auto net = threshold_edges(correlation_matrix(m), 0.85);
  REQUIRE(net.edges.size() == 1);

  auto keep = orient_edges(net, OrientPolicy::KeepUndirected);
  CHECK(keep.orientation == Orientation::Undirected);
  CHECK(keep.edges == net.edges);

  auto lex = orient_edges(net, OrientPolicy::LexicographicSource);
  CHECK(lex.orientation == Orientation::Heuristic);
  CHECK(lex.edges[0].source == "BNIP3");
  CHECK(lex.edges[0].target == "RND2");

  // RND2 has variance 1, BNIP3 ~0.9; higher-variance endpoint becomes source
  auto var = orient_edges(net, OrientPolicy::HigherVarianceSource, &m);
  CHECK(var.orientation == Orientation::Heuristic);
  CHECK(var.edges[0].source == "RND2");
  CHECK(var.edges[0].target == "BNIP3");
  CHECK(var.edges[0].weight == net.edges[0].weight);
  CHECK(var.edges[0].sign == net.edges[0].sign);

  CHECK_THROWS_AS(orient_edges(net, OrientPolicy::HigherVarianceSource), ArgumentError);
  ExpressionMatrix other;
  other.gene_ids = {"X"};
  other.sample_ids = {"s1", "s2"};
  other.values = {1, 2};
  CHECK_THROWS_AS(orient_edges(net, OrientPolicy::HigherVarianceSource, &other), DataError);
  CHECK_THROWS_AS(orient_edges(lex, OrientPolicy::LexicographicSource), ArgumentError);
}

TEST_CASE("orient_edges preserves the unordered edge set, signs and weights") {
  Xoshiro256pp rng(34);
  ExpressionMatrix m;
  const std::size_t genes = 12, samples = 8;
  for (std::size_t i = 0; i < genes; ++i) m.gene_ids.push_back("g" + std::to_string(i));
  for (std::size_t s = 0; s < samples; ++s) m.sample_ids.push_back("s" + std::to_string(s));
  std::vector<double> latent(samples);
  for (auto& v : latent) v = rng.normal();
  for (std::size_t i = 0; i < genes; ++i)
    for (std::size_t s = 0; s < samples; ++s)
      m.values.push_back((i % 2 ? 1 : -1) * latent[s] + 0.3 * rng.normal());
  auto net = threshold_edges(correlation_matrix(m), 0.6);
  for (auto policy : {OrientPolicy::LexicographicSource, OrientPolicy::HigherVarianceSource}) {
    auto oriented = orient_edges(net, policy, &m);
    REQUIRE(oriented.edges.size() == net.edges.size());
    std::set<std::tuple<std::string, std::string, double>> before, after;
    for (const auto& e : net.edges)
      before.emplace(std::min(e.source, e.target), std::max(e.source, e.target), e.weight);
    for (const auto& e : oriented.edges)
      after.emplace(std::min(e.source, e.target), std::max(e.source, e.target), e.weight);
    CHECK(before == after);
  }
}

TEST_CASE("load_edge_list: demo network and parse errors") {
  auto net = demo_network();
  CHECK(net.nodes.size() == 29);
  CHECK(net.edges.size() == 55);
  CHECK(net.orientation == Orientation::Directed);
  CHECK(net.activation_count() == 52);
  CHECK(net.repression_count() == 3);

  auto one = load_edge_list("SRPX2 CSTF1 -\n");
  REQUIRE(one.edges.size() == 1);
  CHECK(one.edges[0].sign == Sign::Repression);
  CHECK(one.edges[0].weight == -1.0);

  auto empty = load_edge_list("");
  CHECK(empty.nodes.empty());
  CHECK(empty.edges.empty());

  auto commented = load_edge_list("# comment\n\nA B +  # trailing\n");
  CHECK(commented.edges.size() == 1);

  CHECK_THROWS_AS(load_edge_list("A B\n"), ParseError);
  CHECK_THROWS_AS(load_edge_list("A B *\n"), ParseError);
  CHECK_THROWS_AS(load_edge_list("A B + extra\n"), ParseError);
}
