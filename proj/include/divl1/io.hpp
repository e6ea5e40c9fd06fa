#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "divl1/diversity.hpp"
#include "divl1/phi.hpp"
#include "divl1/points.hpp"
#include "divl1/profiles.hpp"
#include "divl1/splits.hpp"

namespace divl1 {

// File-format or I/O failure, as opposed to a mathematical verdict.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A diversity value table as read from disk, before any axiom checking.
// The table is total over subsets of size >= 2 but the values may be
// arbitrary finite numbers.
struct RawDiversity {
  int n = 0;
  std::vector<double> table;

  FiniteDiversity checked() const { return FiniteDiversity(n, table); }
};

inline constexpr int kMaxJsonDiversityN = 16;

// {"n": ..., "values": [{"set": [sorted indices], "value": v}, ...]},
// every subset of size >= 2 exactly once.
std::string diversity_to_json(int n, const std::vector<double>& table);
inline std::string diversity_to_json(const FiniteDiversity& d) {
  return diversity_to_json(d.n(), d.table());
}
RawDiversity diversity_from_json(const std::string& text);

// {"n": ..., "f": [f0, ..., f_{n-1}]}
std::string profile_to_json(const SymmetricProfile& p);
SymmetricProfile profile_from_json(const std::string& text);

// {"n": ..., "splits": [{"set": [...], "weight": w}, ...]}, canonical
// representatives only.
std::string weighting_to_json(const SplitWeighting& w);
SplitWeighting weighting_from_json(const std::string& text);

// {"dim": d, "points": [[...], ...]}
std::string points_to_json(const PointConfiguration& p);
PointConfiguration points_from_json(const std::string& text);

// CSV with header "point,coord_0,...", one row per point.
std::string coordinates_to_csv(const PointConfiguration& p);

// CSV with header "n,l,k,phi,psi,psi_cap": the phi table alongside the
// truncation functions psi_l(k) = min(l, k) and the capped functions
// Psi_{x(l)}(k), with x(l) = phi_l(n-1).
std::string phi_table_to_csv(const PhiTable& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// %.12g, locale-independent.
std::string format_double(double v);

}  // namespace divl1
