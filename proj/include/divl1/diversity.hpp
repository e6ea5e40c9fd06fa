#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "divl1/profiles.hpp"
#include "divl1/subsets.hpp"

namespace divl1 {

// Total assignment of non-negative values to the subsets of {0..n-1},
// stored densely (index = bitmask). Construction validates (D1) eagerly:
// finite values, zero exactly on subsets of size <= 1. (D2) is exponential
// and checked on demand via check_axioms_*.
//
// Instances are immutable after construction.
class FiniteDiversity {
 public:
  // Explicit tables above this size are impractical (2^n values).
  static constexpr int kMaxN = 20;

  // `table` has 2^n entries indexed by subset bitmask.
  FiniteDiversity(int n, std::vector<double> table);

  int n() const { return n_; }
  double operator()(Subset a) const { return value(a); }

  // Stored value of the subset; 0 on subsets of size <= 1.
  // Throws std::out_of_range if a is not a subset of the ground set.
  double value(Subset a) const;

  const std::vector<double>& table() const { return table_; }

 private:
  int n_;
  std::vector<double> table_;
};

// Symmetric n x n distance matrix with zero diagonal. Construction checks
// symmetry, positivity off the diagonal and the triangle inequality.
struct Metric {
  Eigen::MatrixXd d;

  static Metric from_matrix(const Eigen::MatrixXd& d, double tol = kDefaultTolerance);

  int n() const { return static_cast<int>(d.rows()); }
  double operator()(int a, int b) const { return d(a, b); }
};

struct AxiomVerdict {
  enum class Kind { none, d1, d2, monotonicity };

  bool pass = true;
  Kind kind = Kind::none;
  // d1: `a` is the offending subset. d2: the triple (a, b, c) violates
  // delta(A u B) + delta(B u C) >= delta(A u C). monotonicity: a is a
  // subset of b with delta(a) > delta(b).
  Subset a = 0, b = 0, c = 0;

  explicit operator bool() const { return pass; }
  std::string describe() const;
};

// (D1) + exhaustive (D2) over all triples (A, B, C) with B nonempty,
// in ascending bitmask order; reports the first violation. Inequalities
// are checked with kBoundarySlack. Cost grows as 8^n.
AxiomVerdict check_axioms_exhaustive(int n, const std::vector<double>& table, int n_cap = 8);
AxiomVerdict check_axioms_exhaustive(const FiniteDiversity& div, int n_cap = 8);

// (D1) + monotonicity under single-element extension + (D2) restricted to
// singleton B. Agrees with the exhaustive check (validated empirically in
// the acceptance suite). Cost grows as 4^n * n.
AxiomVerdict check_axioms_reduced(int n, const std::vector<double>& table);
AxiomVerdict check_axioms_reduced(const FiniteDiversity& div);

// d(a, b) = delta({a, b}).
Metric induced_metric(const FiniteDiversity& div);

// Skewness gamma = max delta(A)/delta(B) over |A| = |B| > 1. Requires n >= 2.
double skewness(const FiniteDiversity& div);

// Cardinality-wise maxima: f(k) = max{delta(A) : |A| = k+1}. The result
// satisfies S1-S3 and delta(A) <= f(|A|-1) <= gamma * delta(A).
SymmetricProfile symmetrize(const FiniteDiversity& div);

// The symmetric diversity with delta(A) = f(|A|-1) as an explicit table.
FiniteDiversity diversity_from_profile(const SymmetricProfile& profile);

}  // namespace divl1
