#pragma once
// Tor and Ext over the (truncated) walled Brauer category by explicit minimal
// projective resolutions. Independent of the Koszul complexes.

#include "wbk/complex.hpp"
#include "wbk/module.hpp"

#include <map>
#include <vector>

namespace wbk {

using Support = std::map<std::pair<int, int>, int>;  // bidegree -> dimension

// Positive-degree part A_+ N and an S-stable complement (the top, lifted).
// Columns of the returned matrix span the complement inside N(s,t).
Matrix top_lift(const WbModule& n, int s, int t);
Support top(const WbModule& n);

// One step of the resolution: the projective cover P -> N and its kernel.
struct CoverStep {
  WbModule projective;
  std::map<std::pair<int, int>, Matrix> cover;  // P(m,n) -> N(m,n)
  WbModule kernel;
  std::map<std::pair<int, int>, Matrix> inclusion;  // K(m,n) -> P(m,n)
};
CoverStep projective_cover(const WbModule& n);
WbModule submodule(const WbModule& n, const std::map<std::pair<int, int>, Matrix>& basis);

// tops[r] = top of the r-th syzygy, i.e. Tor_r(k, N) for the direction of N.
std::vector<Support> resolution_tops(const WbModule& n, int max_r);

// Tables comparable with koszul_down_table / koszul_up_table.
HomologyTable tor_oracle(const WbModule& m);
HomologyTable ext_oracle(const WbModule& m);  // via the resolution of the dual

// Resolves the simple module k[S_s x S_t] at (s,t) for every (s,t) in the
// window and reports whether each syzygy top sits at (s-r, t-r).
Report koszulness(bool twisted, int max_m, int max_n);

}  // namespace wbk
