#include "grnet/synthbench.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "grnet/rng.hpp"

namespace grnet {

namespace {

std::string padded_id(const char* prefix, std::size_t index, std::size_t width) {
  std::string num = std::to_string(index + 1);
  std::string out = prefix;
  out.append(width > num.size() ? width - num.size() : 0, '0');
  out += num;
  return out;
}

std::size_t digits(std::size_t n) {
  std::size_t d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

}  // namespace

SynthData generate_synthetic(const SynthSpec& spec) {
  std::size_t module_total = 0;
  for (const auto& mod : spec.modules) {
    if (mod.member_count < 2)
      throw ArgumentError("synthetic module needs at least 2 member genes");
    if (!(mod.latent_correlation > 0.0 && mod.latent_correlation <= 1.0))
      throw ArgumentError("latent_correlation must be in (0, 1]");
    if (!mod.signs.empty() && mod.signs.size() != mod.member_count)
      throw ArgumentError("sign pattern length must equal member_count");
    for (int s : mod.signs)
      if (s != 1 && s != -1) throw ArgumentError("sign pattern entries must be +-1");
    module_total += mod.member_count;
  }
  if (module_total > spec.n_genes)
    throw ArgumentError("modules claim more genes than n_genes");
  if (!(spec.noise_sd > 0.0)) throw ArgumentError("noise_sd must be > 0");
  if (spec.n_samples < 2) throw ArgumentError("need at least 2 samples");

  const std::size_t gw = digits(spec.n_genes);
  const std::size_t sw = digits(spec.n_samples);

  SynthData out;
  out.matrix.scale = Scale::Log2;
  out.matrix.gene_ids.reserve(spec.n_genes);
  for (std::size_t i = 0; i < spec.n_genes; ++i)
    out.matrix.gene_ids.push_back(padded_id("G", i, gw));
  out.matrix.sample_ids.reserve(spec.n_samples);
  for (std::size_t i = 0; i < spec.n_samples; ++i)
    out.matrix.sample_ids.push_back(padded_id("S", i, sw));
  out.matrix.values.assign(spec.n_genes * spec.n_samples, 0.0);

  // Draw order is fixed: per module, the latent vector then each member's
  // noise; then background genes row by row. Module genes occupy the first
  // rows in module order.
  Xoshiro256pp rng(spec.seed);
  std::size_t next_row = 0;
  for (const auto& mod : spec.modules) {
    std::vector<double> latent(spec.n_samples);
    for (auto& v : latent) v = rng.normal();
    const double rho = mod.latent_correlation;
    const double noise_sd = std::sqrt((1.0 - rho) / rho);  // unit latent variance
    for (std::size_t k = 0; k < mod.member_count; ++k) {
      const double sign = (!mod.signs.empty() && mod.signs[k] == -1) ? -1.0 : 1.0;
      const std::size_t row = next_row + k;
      for (std::size_t s = 0; s < spec.n_samples; ++s) {
        double v = sign * latent[s];
        if (noise_sd > 0.0) v += noise_sd * rng.normal();
        out.matrix.at(row, s) = v;
      }
    }
    // truth: every unordered within-module pair, sign = product of loadings
    for (std::size_t a = 0; a < mod.member_count; ++a) {
      const int sa = mod.signs.empty() ? 1 : mod.signs[a];
      for (std::size_t b = a + 1; b < mod.member_count; ++b) {
        const int sb = mod.signs.empty() ? 1 : mod.signs[b];
        SignedPair p;
        p.first = out.matrix.gene_ids[next_row + a];
        p.second = out.matrix.gene_ids[next_row + b];
        p.sign = (sa * sb > 0) ? Sign::Activation : Sign::Repression;
        out.truth.push_back(std::move(p));
      }
    }
    next_row += mod.member_count;
  }
  for (std::size_t row = next_row; row < spec.n_genes; ++row)
    for (std::size_t s = 0; s < spec.n_samples; ++s)
      out.matrix.at(row, s) = spec.noise_sd * rng.normal();

  std::sort(out.truth.begin(), out.truth.end());
  return out;
}

BenchResult make_bench_result(std::size_t tp, std::size_t fp, std::size_t fn) {
  BenchResult r;
  r.true_positive = tp;
  r.false_positive = fp;
  r.false_negative = fn;
  r.precision = (tp + fp == 0) ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  r.recall = (tp + fn == 0) ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  r.f1 = (r.precision + r.recall == 0.0)
             ? 0.0
             : 2.0 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

BenchResult evaluate(const GeneNetwork& inferred, const std::vector<SignedPair>& truth) {
  std::set<SignedPair> truth_set(truth.begin(), truth.end());
  // Direction is ignored; A->B and B->A with one sign are the same claim.
  std::set<SignedPair> inferred_set;
  for (const auto& e : inferred.edges) {
    SignedPair p;
    p.first = std::min(e.source, e.target);
    p.second = std::max(e.source, e.target);
    p.sign = e.sign;
    inferred_set.insert(std::move(p));
  }
  std::size_t tp = 0, fp = 0;
  for (const auto& p : inferred_set) {
    if (truth_set.erase(p))
      ++tp;
    else
      ++fp;  // wrong pair, or right pair with wrong sign (also left as FN)
  }
  const std::size_t fn = truth_set.size();
  return make_bench_result(tp, fp, fn);
}

std::string bench_result_json(const BenchResult& r) {
  nlohmann::ordered_json j;
  j["true_positive"] = r.true_positive;
  j["false_positive"] = r.false_positive;
  j["false_negative"] = r.false_negative;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  return j.dump(2) + "\n";
}

}  // namespace grnet
