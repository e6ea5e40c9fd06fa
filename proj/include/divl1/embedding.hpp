#pragma once

#include <vector>

#include "divl1/diversity.hpp"
#include "divl1/points.hpp"
#include "divl1/profiles.hpp"
#include "divl1/splits.hpp"

namespace divl1 {

// Distortion bound certified by the constructive pipeline: factor 2 from the
// concave majorant, factor 2 from matching each truncation function to a
// capped one, factor 5 from the phi lower bound, doubled on the i = 1 branch.
inline constexpr double kCertifiedDistortionBound = 40.0;

struct EllChoice {
  int i = 0;            // truncation index with lambda_i > 0
  int ell = 0;          // chosen split cardinality
  double lambda = 0.0;  // basis coefficient
  double per_split_weight = 0.0;  // lambda_i / (2 C(n-2, ell-1))
};

// Original vs embedded values with the distortion certificate
// c = c1 * c2, c1 = max delta/delta-hat, c2 = max delta-hat/delta over
// subsets of size >= 2.
struct EmbeddingReport {
  struct Row {
    // Subset bitmask, or the cardinality-minus-one index k when the report
    // is per cardinality (rows_by_cardinality).
    Subset key = 0;
    double original = 0.0;
    double embedded = 0.0;
    double ratio = 0.0;  // embedded / original
  };

  int n = 0;
  bool rows_by_cardinality = false;
  std::vector<Row> rows;
  double c1 = 1.0;
  double c2 = 1.0;
  double distortion = 1.0;
  bool finite = true;  // false if some embedded value vanishes on |A| >= 2
  double certified_bound = 0.0;  // 0 when no bound is claimed
  std::vector<EllChoice> choices;
};

struct SymmetricEmbedding {
  SplitWeighting weights;
  // False when expanding the weighting would exceed max_splits; the report
  // and choices are still exact.
  bool weights_materialized = true;
  EmbeddingReport report;
};

// The constructive pipeline: concave majorant, truncation-basis coefficients,
// one split cardinality per active coefficient, uniform weights on all
// subsets of that cardinality. The result's profile is
// delta-hat(A) = sum_i lambda_i phi_{ell(i)}(|A|-1) and the report certifies
// distortion <= kCertifiedDistortionBound.
SymmetricEmbedding build_symmetric_embedding(const SymmetricProfile& f,
                                             std::size_t max_splits = std::size_t{1} << 22);

// Per-cardinality profile of the embedding, ghat(k) = sum_i lambda_i phi_{ell(i)}(k).
Eigen::VectorXd embedded_profile(int n, const std::vector<EllChoice>& choices);

// Distortion of `embedded` relative to `original` over all subsets of
// size >= 2. Requires equal ground sets.
EmbeddingReport distortion(const FiniteDiversity& original, const FiniteDiversity& embedded);
EmbeddingReport distortion(const FiniteDiversity& original, const PointConfiguration& embedded);
EmbeddingReport distortion(const FiniteDiversity& original, const SplitWeighting& embedded);

}  // namespace divl1
