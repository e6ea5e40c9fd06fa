#include "divl1/splits.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

namespace divl1 {
namespace {

using Rational = boost::multiprecision::cpp_rational;

template <class Scalar>
struct MobiusResult {
  std::vector<Scalar> side_weights;    // per-side w_B, index = bitmask
  std::map<Subset, Scalar> canonical;  // summed over the two sides of each split
  Scalar min_side = Scalar(0);
};

template <class Scalar>
MobiusResult<Scalar> mobius_weights(const FiniteDiversity& div) {
  const int n = div.n();
  const Subset limit = Subset{1} << n;
  const Subset x = full_set(n);

  std::vector<Scalar> signed_vals(limit);
  for (Subset a = 0; a < limit; ++a) {
    const Scalar v = Scalar(div.value(a));
    signed_vals[a] = (subset_size(a) % 2 == 0) ? v : -v;
  }
  superset_sum_transform(n, signed_vals);

  MobiusResult<Scalar> out;
  out.side_weights.assign(limit, Scalar(0));
  for (Subset b = 1; b < x; ++b) {
    // w_B = 1/2 (-1)^{|B|+1} sum_{A >= B} (-1)^{|A|} delta(A)
    Scalar w = signed_vals[b] / 2;
    if (subset_size(b) % 2 == 0) w = -w;
    out.side_weights[b] = w;
    if (w < out.min_side) out.min_side = w;
    out.canonical[canonical_split(b, n)] += w;
  }
  return out;
}

}  // namespace

SplitWeighting::SplitWeighting(int n, std::map<Subset, double> weights) : n_(n) {
  for (const auto& [b, w] : weights) {
    if (b != canonical_split(b, n))
      throw std::invalid_argument("split " + subset_to_string(b) + " is not a canonical representative");
    if (!std::isfinite(w) || w < 0.0)
      throw std::invalid_argument("split weights must be finite and non-negative");
  }
  weights_ = std::move(weights);
}

void SplitWeighting::add(Subset b, double w) {
  if (!std::isfinite(w) || w < 0.0)
    throw std::invalid_argument("split weights must be finite and non-negative");
  if (w == 0.0) return;
  weights_[canonical_split(b, n_)] += w;
}

double split_diversity_eval(int n, Subset u, Subset a) {
  const Subset x = full_set(n);
  if (u == 0 || u == x || (u & ~x) != 0)
    throw std::invalid_argument("split side must be a non-empty proper subset");
  if ((a & ~x) != 0) throw std::out_of_range("subset outside ground set");
  return ((a & u) != 0 && (a & ~u & x) != 0) ? 1.0 : 0.0;
}

double eval_split_combination(const SplitWeighting& w, Subset a) {
  const Subset x = full_set(w.n());
  if ((a & ~x) != 0) throw std::out_of_range("subset outside ground set");
  double sum = 0.0;
  for (const auto& [b, weight] : w.weights())
    if ((a & b) != 0 && (a & (x & ~b)) != 0) sum += weight;
  return sum;
}

SplitWeighting SplitDecomposition::nonnegative() const {
  SplitWeighting w(n);
  for (const auto& [b, weight] : weights)
    if (weight > 0.0) w.add(b, weight);
  return w;
}

SplitDecomposition split_weights_from_diversity(const FiniteDiversity& div, MobiusMode mode) {
  const int n = div.n();
  const int cap = mode == MobiusMode::exact ? 12 : 16;
  if (n > cap)
    throw std::out_of_range("split_weights_from_diversity: n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));

  SplitDecomposition out;
  out.n = n;
  const Subset limit = Subset{1} << n;

  if (mode == MobiusMode::floating) {
    auto mob = mobius_weights<double>(div);
    out.weights = std::move(mob.canonical);
    out.min_side_weight = mob.min_side;

    std::vector<double> clamped = std::move(mob.side_weights);
    for (double& w : clamped) w = std::max(w, 0.0);
    const std::vector<double> reconstructed = split_combination_table(n, std::move(clamped));
    double max_err = 0.0;
    for (Subset a = 0; a < limit; ++a)
      max_err = std::max(max_err, std::abs(reconstructed[a] - div.value(a)));
    out.max_reconstruction_error = max_err;
    out.embeddable = out.min_side_weight >= -kDefaultTolerance && max_err <= kDefaultTolerance;
    return out;
  }

  auto mob = mobius_weights<Rational>(div);
  for (const auto& [b, w] : mob.canonical) out.weights[b] = w.convert_to<double>();
  out.min_side_weight = mob.min_side.convert_to<double>();

  std::vector<Rational> clamped = std::move(mob.side_weights);
  for (Rational& w : clamped)
    if (w < 0) w = 0;
  const std::vector<Rational> reconstructed = split_combination_table(n, std::move(clamped));
  Rational max_err = 0;
  for (Subset a = 0; a < limit; ++a) {
    const Rational err = abs(reconstructed[a] - Rational(div.value(a)));
    if (err > max_err) max_err = err;
  }
  out.max_reconstruction_error = max_err.convert_to<double>();
  out.embeddable = mob.min_side >= 0 && max_err == 0;
  return out;
}

}  // namespace divl1
