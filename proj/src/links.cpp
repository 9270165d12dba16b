#include "alexobs/links.hpp"

#include <stdexcept>
#include <string>

namespace alexobs {

LaurentPoly LocalXiTable::at(int l) const {
  auto it = entries.find(l);
  if (it != entries.end()) return it->second;
  if (l == 0) return LaurentPoly::from_terms({{1, 1}, {0, -1}});
  return LaurentPoly::one();
}

LocalXiTable xi_from_brieskorn(int n, int s, const BrieskornData& b) {
  if (n < 1) throw std::invalid_argument("hypersurface dimension must be >= 1");
  if (s < 0 || s > n) throw std::invalid_argument("stratum dimension out of range");
  LocalXiTable table;
  table.s = s;
  const LaurentPoly t_minus_one = LaurentPoly::from_terms({{1, 1}, {0, -1}});
  if (s == n) {
    if (!b.exponents.empty()) {
      throw std::invalid_argument(
          "top-dimensional stratum has an S^1 link; no exponents expected");
    }
    table.entries[0] = t_minus_one;
    return table;
  }
  const int expected = n - s + 1;
  if (static_cast<int>(b.exponents.size()) != expected) {
    throw std::invalid_argument(
        "stratum of dimension " + std::to_string(s) + " in dimension " +
        std::to_string(n) + " needs " + std::to_string(expected) +
        " Brieskorn exponents, got " + std::to_string(b.exponents.size()));
  }
  table.entries[0] = t_minus_one;
  for (int l = 1; l < n - s; ++l) table.entries[l] = LaurentPoly::one();
  table.entries[n - s] = brieskorn_charpoly(b);
  return table;
}

LocalXiTable xi_smooth(int n) {
  if (n < 1) throw std::invalid_argument("hypersurface dimension must be >= 1");
  LocalXiTable table;
  table.s = n;
  table.entries[0] = LaurentPoly::from_terms({{1, 1}, {0, -1}});
  return table;
}

LaurentPoly IGammaTable::at_or_one(int i) const {
  auto it = entries.find(i);
  return it == entries.end() ? LaurentPoly::one() : it->second;
}

IGammaTable igamma_cone_circle(long long d, const IGammaTable& g1, int k) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  if (k < 1) throw std::invalid_argument("top index must be >= 1");
  const LaurentPoly annih = LaurentPoly::t_power_minus_one(d);
  IGammaTable out;
  out.entries[k] = gcd(g1.at_or_one(k - 1), annih);
  for (int i = 0; i < k; ++i) {
    out.entries[i] =
        gcd(g1.at_or_one(i), annih) * gcd(g1.at_or_one(i - 1), annih);
  }
  return out;
}

}  // namespace alexobs
