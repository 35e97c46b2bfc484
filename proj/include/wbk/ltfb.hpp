#pragma once
// The modules Lambda*O (*) S*|delta11 O| (twisted) and S*(O + |delta11 O|) (untwisted).
//
// A basis monomial at (m,n) is: one O-factor per output label, each owning a
// set of input labels and carrying a basis element of O(k) (slots in increasing
// label order); wheels owning nonempty input sets, carrying basis elements of
// W(k); and a multiset of closed wheels (basis elements of W(0)). Labels are
// 0-based here. The factor count n + #wheels + #closed is bounded by max_factors.

#include "wbk/module.hpp"
#include "wbk/operad.hpp"

#include <compare>
#include <map>
#include <vector>

namespace wbk {

struct Factor {
  std::vector<int> inputs;  // sorted
  int elem = 0;
  auto operator<=>(const Factor&) const = default;
};

struct Monomial {
  std::vector<Factor> outs;    // indexed by output label
  std::vector<Factor> wheels;  // sorted by least input
  std::vector<int> closed;     // sorted
  auto operator<=>(const Monomial&) const = default;
  int factors() const { return static_cast<int>(outs.size() + wheels.size() + closed.size()); }
};

// Sign of the permutation taking output order to the sorted-input order of the O-factors.
int lambda_sign(const Monomial& mono);

class FactorModel {
 public:
  FactorModel(const TruncatedOperad& o, int max_m, int max_n, int max_factors = -1);

  const TruncatedOperad& operad() const { return o_; }
  const WheeledComponent& wheels() const { return w_; }
  int max_m() const { return max_m_; }
  int max_n() const { return max_n_; }
  int max_factors() const { return max_f_; }

  const std::vector<Monomial>& basis(int m, int n) const;
  int index(int m, int n, const Monomial& mono) const;  // -1 if absent

  // Module structure; twisted = Lambda signs.
  WbModule build(bool twisted) const;

  // Contraction c_{x,y} (1-based) applied to one monomial of M(m,n).
  SVec contract(int m, int n, int x, int y, int col, bool twisted) const;
  // Generator s_j (0-based) on inputs (side 0) or outputs (side 1).
  SVec permute(int m, int n, int side, int j, int col, bool twisted) const;

 private:
  TruncatedOperad o_;
  WheeledComponent w_;
  int max_m_, max_n_, max_f_;
  std::map<std::pair<int, int>, std::vector<Monomial>> basis_;
  std::map<std::pair<int, int>, std::map<Monomial, int>> index_;
};

WbModule build_ltfb(const TruncatedOperad& o, int max_m, int max_n, int max_factors = -1);
WbModule build_stfb(const TruncatedOperad& o, int max_m, int max_n, int max_factors = -1);
// Lambda*O alone: the quotient of build_ltfb by the monomials with a wheel.
WbModule build_lambda(const TruncatedOperad& o, int max_m, int max_n, int max_factors = -1);

}  // namespace wbk
