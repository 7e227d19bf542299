#ifndef GRNET_SYNTHBENCH_HPP
#define GRNET_SYNTHBENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "grnet/expression.hpp"
#include "grnet/network.hpp"

namespace grnet {

/// One planted co-expression module: `member_count` genes sharing a latent
/// profile with expected pairwise |correlation| = latent_correlation. An
/// empty sign pattern means all members load positively; otherwise it gives
/// one +-1 per member, and a pair's true sign is the product of its members'
/// signs.
struct ModuleSpec {
  std::size_t member_count = 0;
  double latent_correlation = 1.0;  // in (0, 1]
  std::vector<int> signs;           // empty, or member_count entries of +-1
};

struct SynthSpec {
  std::size_t n_genes = 0;
  std::size_t n_samples = 0;
  std::vector<ModuleSpec> modules;
  double noise_sd = 1.0;  // sd of background (non-module) genes, > 0
  std::uint64_t seed = 0;
};

/// Unordered gene pair with the planted regulatory sign; first < second.
struct SignedPair {
  std::string first;
  std::string second;
  Sign sign = Sign::Activation;

  friend bool operator==(const SignedPair&, const SignedPair&) = default;
  friend auto operator<=>(const SignedPair&, const SignedPair&) = default;
};

struct SynthData {
  ExpressionMatrix matrix;        // scale = Log2 (values are already additive)
  std::vector<SignedPair> truth;  // all within-module pairs, sorted
};

/// Deterministic synthetic matrix with planted modules. Member gene =
/// sign * latent + noise, with noise variance (1-rho)/rho against a unit
/// latent, so the expected in-module pairwise correlation is rho. Identical
/// spec+seed reproduces the matrix bit for bit.
SynthData generate_synthetic(const SynthSpec& spec);

struct BenchResult {
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t false_negative = 0;
  double precision = 1.0;  // 1 when TP+FP == 0
  double recall = 1.0;     // 1 when TP+FN == 0
  double f1 = 0.0;
};

BenchResult make_bench_result(std::size_t tp, std::size_t fp, std::size_t fn);

/// Compares an inferred network against planted truth on unordered pairs.
/// A true positive needs both the pair and the sign to match; a recovered
/// pair with the wrong sign counts as FP and FN simultaneously.
BenchResult evaluate(const GeneNetwork& inferred, const std::vector<SignedPair>& truth);

std::string bench_result_json(const BenchResult& r);

}  // namespace grnet

#endif
