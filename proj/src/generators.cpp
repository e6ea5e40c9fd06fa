#include "divl1/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace divl1 {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Metric metric_from_points(const PointSet& points) {
  const int n = points.n();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      d(a, b) = d(b, a) = (points.coords.row(a) - points.coords.row(b)).norm();
  return Metric{d};
}

FiniteDiversity diameter_from_metric(const Eigen::MatrixXd& d) {
  const int n = static_cast<int>(d.rows());
  if (n > FiniteDiversity::kMaxN) throw std::out_of_range("diameter_diversity: n too large");
  const Subset limit = Subset{1} << n;
  std::vector<double> table(limit, 0.0);
  for (Subset a = 0; a < limit; ++a) {
    if (subset_size(a) < 2) continue;
    double best = 0.0;
    const std::vector<int> elems = subset_elements(a);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        best = std::max(best, d(elems[i], elems[j]));
    table[a] = best;
  }
  return FiniteDiversity(n, std::move(table));
}

}  // namespace

FiniteDiversity diameter_diversity(const PointSet& points) {
  return diameter_from_metric(metric_from_points(points).d);
}

FiniteDiversity diameter_diversity(const Metric& m) { return diameter_from_metric(m.d); }

FiniteDiversity l1_box_diversity(const PointSet& points) {
  const int n = points.n();
  if (n > FiniteDiversity::kMaxN) throw std::out_of_range("l1_box_diversity: n too large");
  const Subset limit = Subset{1} << n;
  std::vector<double> table(limit, 0.0);
  for (Subset a = 0; a < limit; ++a)
    if (subset_size(a) >= 2) table[a] = l1_diversity_value(points, a);
  return FiniteDiversity(n, std::move(table));
}

FiniteDiversity tsp_diversity(const Metric& m) {
  const int n = m.n();
  if (n < 1 || n > 13) throw std::out_of_range("tsp_diversity: n must be in [1, 13]");
  const Subset limit = Subset{1} << n;

  // path[s][j]: shortest path that starts at the lowest element of s, visits
  // all of s, and ends at j in s. Shared across all subsets.
  std::vector<std::vector<double>> path(limit);
  std::vector<double> table(limit, 0.0);
  for (Subset s = 1; s < limit; ++s) {
    path[s].assign(static_cast<std::size_t>(n), kInf);
    const int start = std::countr_zero(s);
    if (subset_size(s) == 1) {
      path[s][static_cast<std::size_t>(start)] = 0.0;
      continue;
    }
    for (int j = 0; j < n; ++j) {
      if (!contains(s, j) || j == start) continue;
      const Subset prev = s & ~(Subset{1} << j);
      double best = kInf;
      for (int i = 0; i < n; ++i) {
        if (!contains(prev, i)) continue;
        const double cand = path[prev][static_cast<std::size_t>(i)] + m(i, j);
        best = std::min(best, cand);
      }
      path[s][static_cast<std::size_t>(j)] = best;
    }

    const int size = subset_size(s);
    if (size == 2) {
      const int j = std::countr_zero(s & (s - 1));
      table[s] = m(start, j);
    } else {
      double tour = kInf;
      for (int j = 0; j < n; ++j) {
        if (!contains(s, j) || j == start) continue;
        tour = std::min(tour, path[s][static_cast<std::size_t>(j)] + m(j, start));
      }
      table[s] = tour / 2.0;
    }
  }
  return FiniteDiversity(n, std::move(table));
}

FiniteDiversity steiner_diversity(const Metric& m) {
  const int n = m.n();
  if (n < 1 || n > 10) throw std::out_of_range("steiner_diversity: n must be in [1, 10]");
  const Subset limit = Subset{1} << n;

  // tree[d][v]: length of a minimum tree connecting the terminal set d plus
  // vertex v. Merge step over sub-splits, then one metric relaxation pass
  // (the metric closure makes multi-hop relaxation unnecessary).
  std::vector<std::vector<double>> tree(limit, std::vector<double>(static_cast<std::size_t>(n), kInf));
  for (int t = 0; t < n; ++t)
    for (int v = 0; v < n; ++v) tree[Subset{1} << t][static_cast<std::size_t>(v)] = m(t, v);

  for (Subset d = 1; d < limit; ++d) {
    if (subset_size(d) < 2) continue;
    auto& row = tree[d];
    for (int v = 0; v < n; ++v) {
      double best = kInf;
      for (Subset e = (d - 1) & d; e > (d & ~e); e = (e - 1) & d)
        best = std::min(best, tree[e][static_cast<std::size_t>(v)] +
                                  tree[d & ~e][static_cast<std::size_t>(v)]);
      row[static_cast<std::size_t>(v)] = best;
    }
    for (int v = 0; v < n; ++v) {
      double best = row[static_cast<std::size_t>(v)];
      for (int u = 0; u < n; ++u)
        best = std::min(best, row[static_cast<std::size_t>(u)] + m(u, v));
      row[static_cast<std::size_t>(v)] = best;
    }
  }

  std::vector<double> table(limit, 0.0);
  for (Subset a = 0; a < limit; ++a) {
    if (subset_size(a) < 2) continue;
    const int anchor = std::countr_zero(a);
    table[a] = tree[a & ~(Subset{1} << anchor)][static_cast<std::size_t>(anchor)];
  }
  return FiniteDiversity(n, std::move(table));
}

SymmetricProfile truncation_diversity(int n, int i) {
  if (n < 2) throw std::out_of_range("truncation_diversity: n must be >= 2");
  if (i < 1 || i > n - 1) throw std::out_of_range("truncation_diversity: i out of range [1, n-1]");
  Eigen::VectorXd f(n);
  for (int k = 0; k < n; ++k) f(k) = static_cast<double>(std::min(i, k));
  return SymmetricProfile{f};
}

SymmetricProfile staircase_profile(int n) {
  if (n < 2) throw std::out_of_range("staircase_profile: n must be >= 2");
  Eigen::VectorXd f(n);
  f(0) = 0.0;
  for (int k = 1; k < n; ++k) f(k) = k <= 2 ? 1.0 : 2.0;
  return SymmetricProfile{f};
}

SymmetricProfile random_subadditive_profile(int n, std::uint64_t seed) {
  if (n < 2) throw std::out_of_range("random_subadditive_profile: n must be >= 2");
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Concave base: positive increments sorted to be non-increasing.
  std::vector<double> inc(static_cast<std::size_t>(n - 1));
  for (double& v : inc) v = 0.05 + 0.95 * unit(rng);
  std::sort(inc.begin(), inc.end(), std::greater<>());
  Eigen::VectorXd base(n);
  base(0) = 0.0;
  for (int k = 1; k < n; ++k) base(k) = base(k - 1) + inc[static_cast<std::size_t>(k - 1)];

  // Redraw each value inside [max(h(k-1), base/2, S3 floor-free),
  // min(base, pairwise S3 ceiling)]; the window is never empty because the
  // base is subadditive and every kept value stays within a factor 2 of it.
  Eigen::VectorXd h(n);
  h(0) = 0.0;
  for (int k = 1; k < n; ++k) {
    double ceiling = base(k);
    for (int j = 1; j <= k / 2; ++j) ceiling = std::min(ceiling, h(j) + h(k - j));
    const double floor = std::max(h(k - 1), 0.5 * base(k));
    h(k) = floor + (ceiling - floor) * unit(rng);
  }
  SymmetricProfile profile{h};
  const ProfileVerdict verdict = validate_profile(profile);
  if (!verdict)
    throw std::logic_error("random_subadditive_profile: generated profile invalid: " + verdict.describe());
  return profile;
}

PointSet random_point_set(int n, int dim, std::uint64_t seed) {
  if (n < 1) throw std::out_of_range("random_point_set: n must be >= 1");
  if (dim < 1 || dim > 4) throw std::out_of_range("random_point_set: dim must be in [1, 4]");
  std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd coords(n, dim);
  for (int p = 0; p < n; ++p)
    for (int j = 0; j < dim; ++j) coords(p, j) = unit(rng);
  return PointSet{std::move(coords)};
}

Metric random_euclidean_metric(int n, std::uint64_t seed) {
  return metric_from_points(random_point_set(n, 3, seed));
}

}  // namespace divl1
