#pragma once
// Mixed tensors V^{(x)m} (x) V*^{(x)n} with dim V = d, the generalized Schur
// functor, the DG Lie algebra Der(O(V)) + s^{-1}|dO(V)| and its
// Chevalley-Eilenberg complex.
//
// Weight of T^{m,n} is m - n. A derivation x_a^* (x) (o, w) with o in O(k)
// has weight k - 1; a wheel element of W(k) (x) V^{(x)k} has weight k.

#include "wbk/complex.hpp"
#include "wbk/module.hpp"
#include "wbk/operad.hpp"

#include <map>
#include <vector>

namespace wbk {

// Basis: words w in {0..d-1}^m then u in {0..d-1}^n, index base-d with w first.
class MixedTensors {
 public:
  explicit MixedTensors(int d) : d_(d) {}
  int d() const { return d_; }
  int dim(int m, int n) const;
  std::vector<int> word(int m, int n, int index) const;  // w followed by u
  int index(int m, int n, const std::vector<int>& wu) const;
  GroupAction action(int m, int n) const;  // place permutations
  Matrix contraction(int m, int n, int x, int y) const;  // 1-based, pairs V slot x with V* slot y

 private:
  int d_;
};

// T as an untwisted down-module over the window.
WbModule mixed_tensor_module(int d, int max_m, int max_n);

// (V^{(x)m} (x) V*^{(x)n}) (x)_{S_m x S_n} M(m,n) for every bidegree with a nonzero value.
std::map<Bideg, int> schur_apply(const FbFbModule& m, int d);
std::map<int, int> by_weight(const std::map<Bideg, int>& dims);

// T (x)_{k(FB x FB)} M with the differential from the contractions, split by
// weight m - n. Degree n.
std::map<int, ChainComplex> schur_koszul(const WbModule& m, int d);

// Generic truncated DG Lie algebra L_0 + L_{-1}: derivations (degree 0) and
// wheel elements (degree -1, the desuspended module), graded by weight.
struct TruncatedDgLie {
  int max_weight = 0;
  std::vector<int> der_weight;
  std::vector<int> wheel_weight;
  std::map<std::pair<int, int>, SVec> bracket;  // (i, j), i < j, over derivations
  std::map<std::pair<int, int>, SVec> action;   // (derivation, wheel element) -> wheels
  std::vector<SVec> divergence;                 // derivation -> wheels

  int ders() const { return static_cast<int>(der_weight.size()); }
  int wheel_elems() const { return static_cast<int>(wheel_weight.size()); }
  SVec bracket_of(const SVec& a, const SVec& b) const;
  SVec act(const SVec& a, const SVec& w) const;
  SVec div(const SVec& a) const;
  Report check_jacobi() const;
  Report check_module() const;
  Report check_cocycle() const;
};

TruncatedDgLie build_dglie(const TruncatedOperad& o, int d, int max_weight);

// Lambda*(L_0) (x) S*(L_{-1} suspended) by weight, exterior degree as the
// homological degree, at most max_factors factors. Without wheels: Lambda*(L_0).
std::map<int, ChainComplex> ce_complex(const TruncatedDgLie& l, int max_factors, bool wheels = true);

struct CeCompareRow {
  bool wheeled = true;
  int weight = 0, degree = 0;
  int schur = 0, ce = 0;  // homology dimensions
};
struct CeCompareReport {
  bool ok = true;
  std::vector<CeCompareRow> rows;
  std::vector<std::string> failures;
};
// Homology of schur_koszul(build_ltfb(o)) against ce_complex(build_dglie(o)),
// and of schur_koszul(build_lambda(o)) against the CE complex without wheels,
// for weights 0..max_weight with the factor bound max_factors.
CeCompareReport ce_compare(const TruncatedOperad& o, int d, int max_weight, int max_factors);

}  // namespace wbk
