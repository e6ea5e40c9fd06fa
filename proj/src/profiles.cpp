#include "divl1/profiles.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace divl1 {

std::string ProfileVerdict::describe() const {
  switch (violated) {
    case Axiom::none:
      return "pass";
    case Axiom::s1:
      return j == 0 ? "S1 violated: f(0) != 0"
                    : "S1 violated: f(" + std::to_string(j) + ") <= 0";
    case Axiom::s2:
      return "S2 violated: f(" + std::to_string(j) + ") > f(" + std::to_string(j + 1) + ")";
    case Axiom::s3:
      return "S3 violated: f(" + std::to_string(j + k) + ") > f(" + std::to_string(j) +
             ") + f(" + std::to_string(k) + ")";
  }
  return "unknown";
}

ProfileVerdict validate_profile(const Eigen::VectorXd& f) {
  const int n = static_cast<int>(f.size());
  if (n < 1) throw std::invalid_argument("profile must have length >= 1");

  ProfileVerdict v;
  if (f(0) != 0.0) {
    v.pass = false;
    v.violated = ProfileVerdict::Axiom::s1;
    v.j = 0;
    return v;
  }
  for (int k = 1; k < n; ++k) {
    if (!(f(k) > 0.0) || !std::isfinite(f(k))) {
      v.pass = false;
      v.violated = ProfileVerdict::Axiom::s1;
      v.j = k;
      return v;
    }
  }
  for (int k = 0; k + 1 < n; ++k) {
    if (f(k) > f(k + 1) + kBoundarySlack) {
      v.pass = false;
      v.violated = ProfileVerdict::Axiom::s2;
      v.j = k;
      return v;
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j; j + k < n; ++k) {
      if (f(j + k) > f(j) + f(k) + kBoundarySlack) {
        v.pass = false;
        v.violated = ProfileVerdict::Axiom::s3;
        v.j = j;
        v.k = k;
        return v;
      }
    }
  }
  return v;
}

double psi(int i, int j) {
  if (i < 1) throw std::out_of_range("psi: i must be >= 1");
  if (j < 0) throw std::out_of_range("psi: j must be >= 0");
  return static_cast<double>(std::min(i, j));
}

ConcaveProfile concave_majorant(const SymmetricProfile& f) {
  const ProfileVerdict verdict = validate_profile(f);
  if (!verdict)
    throw std::invalid_argument("concave_majorant: invalid profile: " + verdict.describe());

  const int n = f.n();
  Eigen::VectorXd g(n);
  if (n == 1) {
    g(0) = 0.0;
    return ConcaveProfile{g};
  }

  // Upper convex hull of the points (k, f(k)), monotone-chain scan.
  // Collinear middle points are dropped; interpolation restores them.
  std::vector<int> hull;
  hull.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2];
      const int b = hull[hull.size() - 1];
      // Keep b only if it lies strictly above the chord a -> k.
      const double cross =
          (static_cast<double>(b - a)) * (f(k) - f(a)) - (static_cast<double>(k - a)) * (f(b) - f(a));
      if (cross >= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(k);
  }

  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const int a = hull[s];
    const int b = hull[s + 1];
    for (int k = a; k <= b; ++k) {
      const double t = static_cast<double>(k - a) / static_cast<double>(b - a);
      g(k) = (1.0 - t) * f(a) + t * f(b);
    }
  }
  g(0) = 0.0;
  g(n - 1) = f(n - 1);

  // Non-decreasing clamp; min of two concave functions stays concave.
  const double top = g(n - 1);
  for (int k = 0; k < n; ++k) g(k) = std::min(g(k), top);

  return ConcaveProfile{g};
}

BasisCoefficients basis_coefficients(const ConcaveProfile& g) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("basis_coefficients: empty profile");
  if (g(0) != 0.0) throw std::invalid_argument("basis_coefficients: g(0) != 0");
  for (int k = 0; k + 1 < n; ++k)
    if (g(k) > g(k + 1) + kBoundarySlack)
      throw std::invalid_argument("basis_coefficients: g is not non-decreasing");
  for (int k = 1; k + 1 < n; ++k)
    if (2.0 * g(k) + kBoundarySlack < g(k - 1) + g(k + 1))
      throw std::invalid_argument("basis_coefficients: g is not concave");

  Eigen::VectorXd lambda(n - 1);
  for (int i = 1; i <= n - 2; ++i) lambda(i - 1) = 2.0 * g(i) - g(i + 1) - g(i - 1);
  if (n >= 2) lambda(n - 2) = g(n - 1) - g(n - 2);
  // Concavity can sit on the boundary; clear rounding dust.
  for (int i = 0; i < n - 1; ++i) lambda(i) = std::max(lambda(i), 0.0);
  return BasisCoefficients{lambda};
}

double reconstruct_from_basis(const BasisCoefficients& coeffs, int j) {
  if (j < 0 || j >= coeffs.n())
    throw std::out_of_range("reconstruct_from_basis: j out of range");
  double sum = 0.0;
  for (int i = 1; i <= coeffs.n() - 1; ++i)
    sum += coeffs.lambda(i - 1) * static_cast<double>(std::min(i, j));
  return sum;
}

}  // namespace divl1
