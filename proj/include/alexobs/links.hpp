#pragma once

#include <map>

#include "alexobs/laurent.hpp"
#include "alexobs/milnor.hpp"

namespace alexobs {

// Local polynomial table of the link pair of an s-dimensional stratum in an
// n-dimensional hypersurface: entries l -> xi^s_l(t) for 0 <= l <= n-s. The
// local Alexander modules vanish above degree n-s, so higher entries are
// never stored.
struct LocalXiTable {
  int s = 0;
  std::map<int, LaurentPoly> entries;

  // Missing entries are orders of trivial modules (1), except degree 0 of a
  // connected link complement, which is t - 1.
  LaurentPoly at(int l) const;
};

// Table for an isolated transversal Brieskorn singularity along an
// s-dimensional stratum: xi^s_0 = t-1, xi^s_l = 1 for 0 < l < n-s, and
// xi^s_{n-s} the Brieskorn characteristic polynomial. At s = n the exponent
// list must be empty and the link is a circle.
LocalXiTable xi_from_brieskorn(int n, int s, const BrieskornData& b);

// Table of the (S^1, empty) link of a top-dimensional stratum.
LocalXiTable xi_smooth(int n);

// Intersection Alexander polynomials of a link at infinity, indexed by
// homological degree.
struct IGammaTable {
  std::map<int, LaurentPoly> entries;

  // Entries outside the table are orders of trivial modules; index -1 is the
  // empty-gcd convention making the recursion total at i = 0.
  LaurentPoly at_or_one(int i) const;
};

// The gcd recursion for the link G = S^1 * G_1 of a stratum cut by the
// hyperplane at infinity, with top index k:
//   entry k     = gcd(Igamma_{k-1}(G_1), t^d - 1)
//   entry i < k = gcd(Igamma_i(G_1), t^d - 1) * gcd(Igamma_{i-1}(G_1), t^d - 1)
IGammaTable igamma_cone_circle(long long d, const IGammaTable& g1, int k);

}  // namespace alexobs
