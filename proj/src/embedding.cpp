#include "divl1/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "divl1/binomials.hpp"
#include "divl1/phi.hpp"

namespace divl1 {
namespace {

// Folds per-row ratios into the two scaling constants; infinite when an
// embedded value vanishes against a positive original.
void finalize_certificate(EmbeddingReport& report) {
  double c1 = 1.0, c2 = 1.0;
  bool finite = true;
  for (const auto& row : report.rows) {
    if (row.original <= 0.0) continue;
    if (row.embedded <= 0.0) {
      finite = false;
      continue;
    }
    c1 = std::max(c1, row.original / row.embedded);
    c2 = std::max(c2, row.embedded / row.original);
  }
  report.c1 = c1;
  report.c2 = c2;
  report.finite = finite;
  report.distortion = finite ? c1 * c2 : std::numeric_limits<double>::infinity();
}

EmbeddingReport distortion_impl(const FiniteDiversity& original,
                                const std::function<double(Subset)>& embedded, int embedded_n) {
  const int n = original.n();
  if (n != embedded_n) throw std::invalid_argument("distortion: ground set sizes differ");

  EmbeddingReport report;
  report.n = n;
  const Subset limit = Subset{1} << n;
  report.rows.reserve(limit);
  for (Subset a = 0; a < limit; ++a) {
    if (subset_size(a) < 2) continue;
    EmbeddingReport::Row row;
    row.key = a;
    row.original = original.value(a);
    row.embedded = embedded(a);
    row.ratio = row.embedded > 0.0 ? row.embedded / row.original
                                   : std::numeric_limits<double>::infinity();
    report.rows.push_back(row);
  }
  finalize_certificate(report);
  return report;
}

}  // namespace

Eigen::VectorXd embedded_profile(int n, const std::vector<EllChoice>& choices) {
  Eigen::VectorXd ghat = Eigen::VectorXd::Zero(n);
  for (const auto& choice : choices)
    for (int k = 0; k < n; ++k) ghat(k) += choice.lambda * phi(n, choice.ell, k);
  return ghat;
}

SymmetricEmbedding build_symmetric_embedding(const SymmetricProfile& f, std::size_t max_splits) {
  const int n = f.n();
  const ProfileVerdict verdict = validate_profile(f);
  if (!verdict)
    throw std::invalid_argument("build_symmetric_embedding: invalid profile: " + verdict.describe());

  SymmetricEmbedding result{SplitWeighting(n), true, {}};
  result.report.n = n;
  result.report.rows_by_cardinality = true;
  result.report.certified_bound = kCertifiedDistortionBound;

  if (n == 1) {
    // The unique diversity on one point is identically zero; nothing to embed.
    result.report.rows.push_back({0, 0.0, 0.0, 0.0});
    return result;
  }

  const ConcaveProfile g = concave_majorant(f);
  const BasisCoefficients lambda = basis_coefficients(g);

  std::size_t total_splits = 0;
  for (int i = 1; i <= n - 1; ++i) {
    if (lambda.lambda(i - 1) <= 0.0) continue;
    EllChoice choice;
    choice.i = i;
    choice.ell = choose_ell(n, i);
    choice.lambda = lambda.lambda(i - 1);
    choice.per_split_weight = choice.lambda / (2.0 * static_cast<double>(binomial(n - 2, choice.ell - 1)));
    result.report.choices.push_back(choice);
    total_splits += static_cast<std::size_t>(binomial(n, choice.ell));
  }

  if (total_splits <= max_splits) {
    for (const auto& choice : result.report.choices) {
      for (Subset b = first_of_size(choice.ell); b != 0; b = next_same_size(b, n))
        result.weights.add(b, choice.per_split_weight);
    }
  } else {
    result.weights_materialized = false;
  }

  const Eigen::VectorXd ghat = embedded_profile(n, result.report.choices);
  for (int k = 0; k < n; ++k) {
    EmbeddingReport::Row row;
    row.key = static_cast<Subset>(k);
    row.original = f(k);
    row.embedded = ghat(k);
    row.ratio = k >= 1 ? ghat(k) / f(k) : 0.0;
    result.report.rows.push_back(row);
  }
  finalize_certificate(result.report);
  return result;
}

EmbeddingReport distortion(const FiniteDiversity& original, const FiniteDiversity& embedded) {
  return distortion_impl(
      original, [&embedded](Subset a) { return embedded.value(a); }, embedded.n());
}

EmbeddingReport distortion(const FiniteDiversity& original, const PointConfiguration& embedded) {
  return distortion_impl(
      original, [&embedded](Subset a) { return l1_diversity_value(embedded, a); }, embedded.n());
}

EmbeddingReport distortion(const FiniteDiversity& original, const SplitWeighting& embedded) {
  return distortion_impl(
      original, [&embedded](Subset a) { return eval_split_combination(embedded, a); }, embedded.n());
}

}  // namespace divl1
