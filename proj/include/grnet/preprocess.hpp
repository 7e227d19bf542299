#ifndef GRNET_PREPROCESS_HPP
#define GRNET_PREPROCESS_HPP

#include "grnet/expression.hpp"

namespace grnet {

enum class MissingPolicy { DropGeneOver, ImputeRowMean };
enum class DuplicatePolicy { MeanCollapse, MaxMeanExpression, KeepFirst };
enum class UnnamedPolicy { Drop, SyntheticId };

struct PreprocessPolicy {
  MissingPolicy missing_policy = MissingPolicy::DropGeneOver;
  double max_missing_fraction = 0.5;  // used by DropGeneOver
  DuplicatePolicy duplicate_policy = DuplicatePolicy::MeanCollapse;
  UnnamedPolicy unnamed_policy = UnnamedPolicy::Drop;
};

/// Resolves missing cells. DropGeneOver removes genes whose missing fraction
/// exceeds max_missing_fraction, then imputes the rest with the gene's mean
/// over present cells; ImputeRowMean keeps every gene and imputes. The output
/// has no missing cells. A gene with every cell missing that survives the
/// drop rule is an error (it has no mean).
ExpressionMatrix handle_missing(const ExpressionMatrix& m, const PreprocessPolicy& p);

/// Resolves rows whose gene id is empty: Drop removes them, SyntheticId
/// assigns "unnamed_<row>" (1-based input row position).
ExpressionMatrix handle_unnamed(const ExpressionMatrix& m, const PreprocessPolicy& p);

/// Collapses rows sharing a gene id. MeanCollapse averages them per sample,
/// MaxMeanExpression keeps the row with the highest mean (first on ties),
/// KeepFirst keeps the first occurrence. Requires no missing cells. Gene
/// order follows first occurrence.
ExpressionMatrix collapse_duplicates(const ExpressionMatrix& m, const PreprocessPolicy& p);

/// Heuristic scale classification of a matrix with no missing cells:
/// Log2 when the value range is < 30 and either negatives are present or the
/// maximum is < 30; Linear otherwise. Advisory only; the CLI --scale flag
/// always wins.
Scale detect_scale(const ExpressionMatrix& m);

/// Full cleanup in pipeline order: handle_missing, handle_unnamed,
/// collapse_duplicates.
ExpressionMatrix preprocess(const ExpressionMatrix& m, const PreprocessPolicy& p);

}  // namespace grnet

#endif
