#include "divl1/points.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace divl1 {

double l1_diversity_value(const PointConfiguration& points, Subset a) {
  const int n = points.n();
  if ((a & ~full_set(n)) != 0) throw std::out_of_range("subset outside ground set");
  if (subset_size(a) <= 1) return 0.0;

  double sum = 0.0;
  for (int j = 0; j < points.dim(); ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Subset rest = a; rest;) {
      const int p = std::countr_zero(rest);
      rest &= rest - 1;
      const double v = points.coords(p, j);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    sum += hi - lo;
  }
  return sum;
}

PointConfiguration coordinates_from_weights(const SplitWeighting& w) {
  const int n = w.n();
  Eigen::Index active = 0;
  for (const auto& [b, weight] : w.weights())
    if (weight > 0.0) ++active;

  Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(n, active);
  Eigen::Index col = 0;
  for (const auto& [b, weight] : w.weights()) {
    if (weight <= 0.0) continue;
    for (int p = 0; p < n; ++p)
      if (contains(b, p)) coords(p, col) = weight;
    ++col;
  }
  return PointConfiguration{std::move(coords)};
}

}  // namespace divl1
