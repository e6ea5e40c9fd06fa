#include "divl1/binomials.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace divl1 {
namespace {

using Table = std::array<std::array<std::int64_t, kMaxBinomialN + 1>, kMaxBinomialN + 1>;

Table build_pascal() {
  Table t{};
  for (int a = 0; a <= kMaxBinomialN; ++a) {
    t[a][0] = 1;
    for (int b = 1; b <= a; ++b)
      t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? t[a - 1][b] : 0);
  }
  return t;
}

const Table& pascal() {
  static const Table t = build_pascal();
  return t;
}

}  // namespace

std::int64_t binomial(int a, int b) {
  if (a > kMaxBinomialN)
    throw std::out_of_range("binomial: a = " + std::to_string(a) + " exceeds exact 64-bit range");
  if (a < 0 || b < 0 || b > a) return 0;
  return pascal()[a][b];
}

}  // namespace divl1
