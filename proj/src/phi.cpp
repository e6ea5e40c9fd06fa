#include "divl1/phi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "divl1/binomials.hpp"

namespace divl1 {
namespace {

void require_phi_range(int n, int ell, int k) {
  if (n < 2) throw std::out_of_range("phi: n must be >= 2");
  if (ell < 1 || ell > n - 1) throw std::out_of_range("phi: ell out of range [1, n-1]");
  if (k < 0 || k > n - 1) throw std::out_of_range("phi: k out of range [0, n-1]");
}

}  // namespace

PhiExact phi_exact(int n, int ell, int k) {
  require_phi_range(n, ell, k);
  PhiExact v;
  v.num = binomial(n, ell) - binomial(n - k - 1, n - ell) - binomial(n - k - 1, ell);
  v.den = 2 * binomial(n - 2, ell - 1);
  return v;
}

double phi(int n, int ell, int k) { return phi_exact(n, ell, k).to_double(); }

double x_of_ell(int n, int ell) {
  if (n < 2) throw std::out_of_range("x_of_ell: n must be >= 2");
  if (ell < 1 || ell > n / 2) throw std::out_of_range("x_of_ell: ell out of range [1, n/2]");
  return static_cast<double>(n) * (n - 1) / (2.0 * ell * (n - ell));
}

double capped_psi(double x, int k) {
  if (!(x > 0.0)) throw std::invalid_argument("capped_psi: x must be positive");
  if (k < 0) throw std::out_of_range("capped_psi: k must be >= 0");
  return std::min(x, static_cast<double>(k));
}

int choose_ell(int n, int i) {
  if (n < 2) throw std::out_of_range("choose_ell: n must be >= 2");
  if (i < 1 || i > n - 1) throw std::out_of_range("choose_ell: i out of range [1, n-1]");
  const int half = n / 2;
  if (i == 1) return half;

  // x(ell) is non-increasing and x(n/2) <= 2 <= i, so the scan terminates.
  // x(ell) <= i  <=>  n(n-1) <= 2 ell (n-ell) i, exact in 64-bit integers.
  const std::int64_t nn1 = static_cast<std::int64_t>(n) * (n - 1);
  for (int ell = 1; ell <= half; ++ell) {
    const std::int64_t scaled = 2LL * ell * (n - ell) * i;
    if (nn1 <= scaled) {
      // Sandwich i <= 2 x(ell), again exactly: i ell (n-ell) <= n(n-1).
      if (static_cast<std::int64_t>(i) * ell * (n - ell) > nn1)
        throw std::logic_error("choose_ell: sandwich x(ell) <= i <= 2 x(ell) failed");
      return ell;
    }
  }
  throw std::logic_error("choose_ell: no qualifying ell found");
}

double verify_pesky_bound(int n) {
  if (n < 2) throw std::out_of_range("verify_pesky_bound: n must be >= 2");
  double min_ratio = 1.0;
  for (int ell = 1; ell <= n / 2; ++ell) {
    // Smallest integer k with k >= x(ell), via exact integer ceil division.
    const std::int64_t num = static_cast<std::int64_t>(n) * (n - 1);
    const std::int64_t den = 2LL * ell * (n - ell);
    const int k_start = static_cast<int>((num + den - 1) / den);

    // phi_ell(k) / x(ell) = 1 - prod_{t=0..k} (ell-t)/(n-t)
    //                         - prod_{t=0..k} (n-ell-t)/(n-t),
    // built incrementally; in this k-range Psi_{x(ell)}(k) = x(ell).
    double prod_small = 1.0, prod_large = 1.0;
    for (int t = 0; t < k_start; ++t) {
      prod_small *= std::max(0.0, static_cast<double>(ell - t)) / (n - t);
      prod_large *= std::max(0.0, static_cast<double>(n - ell - t)) / (n - t);
    }
    for (int k = k_start; k <= n - 1; ++k) {
      prod_small *= std::max(0.0, static_cast<double>(ell - k)) / (n - k);
      prod_large *= std::max(0.0, static_cast<double>(n - ell - k)) / (n - k);
      min_ratio = std::min(min_ratio, 1.0 - prod_small - prod_large);
    }
  }
  return min_ratio;
}

PhiTable make_phi_table(int n) {
  if (n < 2 || n > kMaxBinomialN)
    throw std::out_of_range("make_phi_table: n out of range [2, " + std::to_string(kMaxBinomialN) + "]");
  PhiTable t;
  t.n = n;
  t.table.resize(n - 1, n);
  for (int ell = 1; ell <= n - 1; ++ell)
    for (int k = 0; k <= n - 1; ++k) t.table(ell - 1, k) = phi(n, ell, k);
  return t;
}

}  // namespace divl1
