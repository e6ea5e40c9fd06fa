#pragma once

#include <cstdint>

#include "divl1/diversity.hpp"
#include "divl1/points.hpp"
#include "divl1/profiles.hpp"

namespace divl1 {

// delta(A) = max pairwise Euclidean distance within A.
FiniteDiversity diameter_diversity(const PointSet& points);
FiniteDiversity diameter_diversity(const Metric& m);

// delta(A) = sum over coordinates of the coordinate range within A.
FiniteDiversity l1_box_diversity(const PointSet& points);

// delta(A) = half the length of the shortest tour through A; d(a, b) for
// pairs. Held-Karp over all subsets at once. Requires n <= 13.
FiniteDiversity tsp_diversity(const Metric& m);

// delta(A) = length of a minimum Steiner tree for A in the complete graph
// on the ground set (Steiner points drawn from the ground set itself),
// Dreyfus-Wagner dynamic program. Requires n <= 10.
FiniteDiversity steiner_diversity(const Metric& m);

// Truncation profile f(k) = min(i, k). Requires 1 <= i <= n-1.
SymmetricProfile truncation_diversity(int n, int i);

// The non-concave staircase profile f = (0, 1, 1, 2, 2, ...): f(1)=f(2)=1
// and f(k)=2 for k > 2, truncated to length n.
SymmetricProfile staircase_profile(int n);

// Deterministic random subadditive profile: a concave base with decreasing
// increments, then each value from index 1 on is redrawn downward by up to
// 50% inside the window that keeps S1-S3 valid, so non-concave instances
// occur with positive probability and no rejection loop is needed.
SymmetricProfile random_subadditive_profile(int n, std::uint64_t seed);

// Points uniform in the unit cube. Requires 1 <= dim <= 4.
PointSet random_point_set(int n, int dim, std::uint64_t seed);

// The metric induced by the L2 distances of a random point set.
Metric random_euclidean_metric(int n, std::uint64_t seed);

}  // namespace divl1
