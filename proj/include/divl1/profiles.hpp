#pragma once

#include <Eigen/Core>
#include <string>

namespace divl1 {

// Default comparison tolerance for floating-point checks throughout the
// library. Individual operations take it as a parameter where it matters.
inline constexpr double kDefaultTolerance = 1e-9;

// Slack used when checking inequalities that the theory satisfies with
// equality (subadditivity of symmetric profiles sits exactly on the
// boundary).
inline constexpr double kBoundarySlack = 1e-12;

// Profile of a symmetric diversity: f[k] is the common value of every
// (k+1)-element subset, k = 0..n-1.
struct SymmetricProfile {
  Eigen::VectorXd f;

  int n() const { return static_cast<int>(f.size()); }
  double operator()(int k) const { return f(k); }
};

// Concave non-decreasing majorant of a profile.
struct ConcaveProfile {
  Eigen::VectorXd g;

  int n() const { return static_cast<int>(g.size()); }
  double operator()(int k) const { return g(k); }
};

// Non-negative coefficients lambda_1..lambda_{n-1} on the truncation basis
// psi_i = min(i, .). lambda(i-1) stores lambda_i; zero entries are retained.
struct BasisCoefficients {
  Eigen::VectorXd lambda;

  int n() const { return static_cast<int>(lambda.size()) + 1; }
};

struct ProfileVerdict {
  enum class Axiom { none, s1, s2, s3 };

  bool pass = true;
  Axiom violated = Axiom::none;
  int j = -1, k = -1;  // witness indices for the violated axiom

  explicit operator bool() const { return pass; }
  std::string describe() const;
};

// Checks S1 (f(0)=0, f(k)>0 for k>=1), S2 (non-decreasing) and
// S3 (f(j+k) <= f(j)+f(k)); S2/S3 are checked with kBoundarySlack.
ProfileVerdict validate_profile(const Eigen::VectorXd& f);
inline ProfileVerdict validate_profile(const SymmetricProfile& p) { return validate_profile(p.f); }

// Truncation basis function psi_i(j) = min(i, j). Requires i >= 1, j >= 0.
double psi(int i, int j);

// Pointwise-least concave function above f on {0..n-1}, clamped to be
// non-decreasing (g[k] <- min(g[k], g[n-1])). Guarantees f <= g <= 2f.
// Throws if f fails validate_profile.
ConcaveProfile concave_majorant(const SymmetricProfile& f);

// lambda_i = 2g(i) - g(i+1) - g(i-1) for i < n-1 and
// lambda_{n-1} = g(n-1) - g(n-2). Throws if g is not concave and
// non-decreasing with g(0) = 0.
BasisCoefficients basis_coefficients(const ConcaveProfile& g);

// Sum of lambda_i * min(i, j).
double reconstruct_from_basis(const BasisCoefficients& coeffs, int j);

}  // namespace divl1
