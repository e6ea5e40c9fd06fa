#pragma once

#include <map>
#include <vector>

#include "divl1/diversity.hpp"
#include "divl1/subsets.hpp"

namespace divl1 {

// Non-negative weights on splits (bipartitions) of the ground set, keyed by
// the canonical representative: the side of the split not containing
// element 0. The L1-embeddable representation of a diversity.
class SplitWeighting {
 public:
  explicit SplitWeighting(int n) : n_(n) { full_set(n); }
  SplitWeighting(int n, std::map<Subset, double> weights);

  int n() const { return n_; }
  const std::map<Subset, double>& weights() const { return weights_; }
  bool empty() const { return weights_.empty(); }

  // Adds w to the split containing b as one side (b is canonicalized).
  void add(Subset b, double w);

 private:
  int n_;
  std::map<Subset, double> weights_;
};

// Split diversity: 1 iff the split U | X-U cuts A into two nonempty parts.
// Throws if U is empty or the full ground set.
double split_diversity_eval(int n, Subset u, Subset a);

// Sum over stored splits of weight * split indicator.
double eval_split_combination(const SplitWeighting& w, Subset a);

// Result of Moebius inversion over the subset lattice: the unique signed
// split weights reproducing the diversity, summed over the two sides of
// each split and keyed by canonical representative.
struct SplitDecomposition {
  int n = 0;
  std::map<Subset, double> weights;  // canonical representative -> signed weight
  double min_side_weight = 0.0;      // most negative per-side Moebius weight
  double max_reconstruction_error = 0.0;
  bool embeddable = false;

  // Weights clamped to zero from below.
  SplitWeighting nonnegative() const;
};

enum class MobiusMode {
  floating,  // double arithmetic, verdict with 1e-9 tolерances
  exact,     // rational arithmetic, exact verdict (n <= 12)
};

// w_B = 1/2 sum over supersets A of B of (-1)^{|A|+|B|+1} delta(A), for every
// nonempty proper B; embeddable iff all per-side weights are >= -1e-9 and the
// clamped weighting reproduces delta within 1e-9 on every subset (both exact
// in MobiusMode::exact). Caps: n <= 16 floating, n <= 12 exact.
SplitDecomposition split_weights_from_diversity(const FiniteDiversity& div,
                                                MobiusMode mode = MobiusMode::floating);

// In-place superset-sum (zeta) transform: vals[B] <- sum over A >= B of vals[A].
template <class Scalar>
void superset_sum_transform(int n, std::vector<Scalar>& vals) {
  const Subset limit = Subset{1} << n;
  for (int i = 0; i < n; ++i)
    for (Subset m = 0; m < limit; ++m)
      if (!contains(m, i)) vals[m] += vals[m | (Subset{1} << i)];
}

// In-place subset-sum (zeta) transform: vals[M] <- sum over B <= M of vals[B].
template <class Scalar>
void subset_sum_transform(int n, std::vector<Scalar>& vals) {
  const Subset limit = Subset{1} << n;
  for (int i = 0; i < n; ++i)
    for (Subset m = 0; m < limit; ++m)
      if (contains(m, i)) vals[m] += vals[m & ~(Subset{1} << i)];
}

// delta-hat(A) = sum_B w_B * [B splits A] for every subset at once, from
// per-side weights indexed by bitmask (entries at the empty and full set
// are ignored). Uses [B splits A] = 1 - [A subset of B] - [A disjoint from B]
// for nonempty A, so the whole table costs O(n 2^n).
template <class Scalar>
std::vector<Scalar> split_combination_table(int n, std::vector<Scalar> side_weights) {
  const Subset limit = Subset{1} << n;
  side_weights[0] = Scalar(0);
  side_weights[limit - 1] = Scalar(0);
  Scalar total(0);
  for (const Scalar& w : side_weights) total += w;

  std::vector<Scalar> sup = side_weights;
  superset_sum_transform(n, sup);
  std::vector<Scalar> sub = std::move(side_weights);
  subset_sum_transform(n, sub);

  std::vector<Scalar> values(limit, Scalar(0));
  for (Subset a = 1; a < limit; ++a) values[a] = total - sup[a] - sub[(limit - 1) & ~a];
  return values;
}

}  // namespace divl1
