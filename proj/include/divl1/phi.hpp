#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace divl1 {

// Exact value of phi_ell(k) as an integer fraction. For fixed (n, ell) every
// k shares the denominator 2*C(n-2, ell-1), so identities between entries of
// one row reduce to integer comparisons of numerators.
struct PhiExact {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// phi_ell(k) = (C(n,ell) - C(n-k-1,n-ell) - C(n-k-1,ell)) / (2 C(n-2,ell-1)),
// the symmetric profile of the uniform weighting on cardinality-ell splits.
// Requires n >= 2, 1 <= ell <= n-1, 0 <= k <= n-1, n <= kMaxBinomialN.
PhiExact phi_exact(int n, int ell, int k);
double phi(int n, int ell, int k);

// Saturation level x(ell) = phi_ell(n-1) = n(n-1) / (2 ell (n-ell)).
// Requires 1 <= ell <= n/2.
double x_of_ell(int n, int ell);

// Capped truncation function: min(x, k). Requires x > 0, k >= 0.
double capped_psi(double x, int k);

// The cardinality ell in {1..n/2} whose capped function approximates the
// truncation basis element psi_i within a factor of 2: ell = floor(n/2) for
// i = 1, otherwise the smallest ell with x(ell) <= i (then x(ell) <= i <= 2 x(ell)).
// Requires n >= 2, 1 <= i <= n-1.
int choose_ell(int n, int i);

// min over 1 <= ell <= n/2 and integer k with x(ell) <= k <= n-1 of
// phi_ell(k) / Psi_{x(ell)}(k). Evaluated through the falling-factorial
// ratio form, so it is stable for n far beyond the exact-binomial range.
// The minimum is >= 1/5 for every n; n = 2 yields 1.
double verify_pesky_bound(int n);

// Rows ell = 1..n-1, columns k = 0..n-1 of phi_ell(k).
struct PhiTable {
  int n = 0;
  Eigen::MatrixXd table;  // (n-1) x n

  double operator()(int ell, int k) const { return table(ell - 1, k); }
};

PhiTable make_phi_table(int n);

}  // namespace divl1
