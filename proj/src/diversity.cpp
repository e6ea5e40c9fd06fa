#include "divl1/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace divl1 {
namespace {

void require_table_shape(int n, const std::vector<double>& table, int n_cap) {
  if (n < 1 || n > n_cap)
    throw std::out_of_range("ground set size " + std::to_string(n) + " outside [1, " +
                            std::to_string(n_cap) + "]");
  if (table.size() != (std::size_t{1} << n))
    throw std::invalid_argument("value table must have 2^n entries");
}

AxiomVerdict check_d1(int n, const std::vector<double>& table) {
  AxiomVerdict v;
  const Subset limit = Subset{1} << n;
  for (Subset a = 0; a < limit; ++a) {
    const double val = table[a];
    const bool ok = subset_size(a) <= 1 ? val == 0.0 : (std::isfinite(val) && val > 0.0);
    if (!ok) {
      v.pass = false;
      v.kind = AxiomVerdict::Kind::d1;
      v.a = a;
      return v;
    }
  }
  return v;
}

}  // namespace

FiniteDiversity::FiniteDiversity(int n, std::vector<double> table) : n_(n), table_(std::move(table)) {
  require_table_shape(n, table_, kMaxN);
  const AxiomVerdict d1 = check_d1(n_, table_);
  if (!d1) throw std::invalid_argument("FiniteDiversity: " + d1.describe());
}

double FiniteDiversity::value(Subset a) const {
  if ((a & ~full_set(n_)) != 0)
    throw std::out_of_range("subset " + subset_to_string(a) + " outside ground set of size " +
                            std::to_string(n_));
  return table_[a];
}

Metric Metric::from_matrix(const Eigen::MatrixXd& d, double tol) {
  const int n = static_cast<int>(d.rows());
  if (d.cols() != n) throw std::invalid_argument("metric matrix must be square");
  for (int a = 0; a < n; ++a) {
    if (d(a, a) != 0.0) throw std::invalid_argument("metric has nonzero diagonal");
    for (int b = 0; b < n; ++b) {
      if (!std::isfinite(d(a, b)) || d(a, b) < 0.0)
        throw std::invalid_argument("metric entries must be finite and non-negative");
      if (a != b && d(a, b) <= 0.0)
        throw std::invalid_argument("distinct points at distance 0");
      if (std::abs(d(a, b) - d(b, a)) > tol)
        throw std::invalid_argument("metric matrix is not symmetric");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (d(a, c) > d(a, b) + d(b, c) + tol)
          throw std::invalid_argument("triangle inequality fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
  return Metric{d};
}

std::string AxiomVerdict::describe() const {
  switch (kind) {
    case Kind::none:
      return "pass";
    case Kind::d1:
      return "D1 violated on A=" + subset_to_string(a);
    case Kind::d2:
      return "D2 violated: A=" + subset_to_string(a) + " B=" + subset_to_string(b) +
             " C=" + subset_to_string(c);
    case Kind::monotonicity:
      return "monotonicity violated: delta(" + subset_to_string(a) + ") > delta(" +
             subset_to_string(b) + ")";
  }
  return "unknown";
}

AxiomVerdict check_axioms_exhaustive(int n, const std::vector<double>& table, int n_cap) {
  require_table_shape(n, table, n_cap);
  AxiomVerdict v = check_d1(n, table);
  if (!v) return v;

  const Subset limit = Subset{1} << n;
  for (Subset a = 0; a < limit; ++a) {
    for (Subset b = 1; b < limit; ++b) {
      const double ab = table[a | b];
      for (Subset c = 0; c < limit; ++c) {
        if (ab + table[b | c] < table[a | c] - kBoundarySlack) {
          v.pass = false;
          v.kind = AxiomVerdict::Kind::d2;
          v.a = a;
          v.b = b;
          v.c = c;
          return v;
        }
      }
    }
  }
  return v;
}

AxiomVerdict check_axioms_exhaustive(const FiniteDiversity& div, int n_cap) {
  return check_axioms_exhaustive(div.n(), div.table(), n_cap);
}

AxiomVerdict check_axioms_reduced(int n, const std::vector<double>& table) {
  require_table_shape(n, table, kMaxGroundSetSize);
  AxiomVerdict v = check_d1(n, table);
  if (!v) return v;

  const Subset limit = Subset{1} << n;
  for (Subset a = 0; a < limit; ++a) {
    for (int e = 0; e < n; ++e) {
      if (contains(a, e)) continue;
      const Subset bigger = a | (Subset{1} << e);
      if (table[a] > table[bigger] + kBoundarySlack) {
        v.pass = false;
        v.kind = AxiomVerdict::Kind::monotonicity;
        v.a = a;
        v.b = bigger;
        return v;
      }
    }
  }
  for (Subset a = 0; a < limit; ++a) {
    for (int e = 0; e < n; ++e) {
      const Subset b = Subset{1} << e;
      const double ab = table[a | b];
      for (Subset c = 0; c < limit; ++c) {
        if (ab + table[b | c] < table[a | c] - kBoundarySlack) {
          v.pass = false;
          v.kind = AxiomVerdict::Kind::d2;
          v.a = a;
          v.b = b;
          v.c = c;
          return v;
        }
      }
    }
  }
  return v;
}

AxiomVerdict check_axioms_reduced(const FiniteDiversity& div) {
  return check_axioms_reduced(div.n(), div.table());
}

Metric induced_metric(const FiniteDiversity& div) {
  const int n = div.n();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      d(a, b) = d(b, a) = div.value((Subset{1} << a) | (Subset{1} << b));
  return Metric{d};
}

double skewness(const FiniteDiversity& div) {
  const int n = div.n();
  if (n < 2) throw std::invalid_argument("skewness requires n >= 2");
  std::vector<double> lo(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> hi(static_cast<std::size_t>(n) + 1, 0.0);
  const Subset limit = Subset{1} << n;
  for (std::size_t k = 2; k <= static_cast<std::size_t>(n); ++k)
    lo[k] = std::numeric_limits<double>::infinity();
  for (Subset a = 0; a < limit; ++a) {
    const int k = subset_size(a);
    if (k < 2) continue;
    const double val = div.value(a);
    lo[static_cast<std::size_t>(k)] = std::min(lo[static_cast<std::size_t>(k)], val);
    hi[static_cast<std::size_t>(k)] = std::max(hi[static_cast<std::size_t>(k)], val);
  }
  double gamma = 1.0;
  for (int k = 2; k <= n; ++k) gamma = std::max(gamma, hi[static_cast<std::size_t>(k)] / lo[static_cast<std::size_t>(k)]);
  return gamma;
}

SymmetricProfile symmetrize(const FiniteDiversity& div) {
  const int n = div.n();
  Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
  const Subset limit = Subset{1} << n;
  for (Subset a = 0; a < limit; ++a) {
    const int k = subset_size(a) - 1;
    if (k >= 1) f(k) = std::max(f(k), div.value(a));
  }
  return SymmetricProfile{f};
}

FiniteDiversity diversity_from_profile(const SymmetricProfile& profile) {
  const int n = profile.n();
  if (n > FiniteDiversity::kMaxN)
    throw std::out_of_range("explicit table too large for n = " + std::to_string(n));
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (Subset a = 0; a < (Subset{1} << n); ++a) {
    const int size = subset_size(a);
    if (size >= 2) table[a] = profile(size - 1);
  }
  return FiniteDiversity(n, std::move(table));
}

}  // namespace divl1
