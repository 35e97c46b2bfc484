#pragma once

#include "wbk/group.hpp"
#include "wbk/module.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace wbk {

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operad without unit, truncated at arity N. O(k) carries an S_k action
// (single-factor GroupAction); compositions are keyed (m, i, n), i 1-based,
// with tensor index a*dim(n)+b. Compositions landing above arity N are zero.
class TruncatedOperad {
 public:
  std::string name = "operad";
  int max_arity = 0;
  std::vector<GroupAction> arity;  // size max_arity+1; arity[0] may have dim 0
  std::map<std::tuple<int, int, int>, Matrix> comp;
  std::optional<SVec> unit;

  int dim(int k) const { return k >= 0 && k <= max_arity ? arity[k].dim() : 0; }
  bool has_arity_zero() const { return dim(0) > 0; }
  // Matrix of o_i : O(m) (x) O(n) -> O(m+n-1); zero if the result is above N.
  Matrix composition(int m, int i, int n) const;
  SVec compose(int m, int i, int n, int a, int b) const;  // basis elements a, b
  SVec compose_vec(int m, int i, int n, const SVec& a, const SVec& b) const;
  const Matrix& perm_matrix(int k, const Perm& p) const;

  // Fill missing o_i from a supplied o_{i0} by S_m-equivariance.
  void complete_by_equivariance();

 private:
  mutable std::map<std::pair<int, Perm>, Matrix> perm_cache_;
};

TruncatedOperad zero_operad(int max_arity);
// Operad concentrated in arity 1 from an associative algebra; mult[a][b] = a*b.
TruncatedOperad algebra_operad(const std::string& name, const std::vector<std::vector<SVec>>& mult);

Report validate_operad(const TruncatedOperad& o);

// Block permutation of m+n-1 slots induced by sigma in S_m for o_i with n inputs.
Perm block_perm(const Perm& sigma, int i, int n);

struct WheeledComponent {
  int max_arity = -1;               // W(k) defined for 0 <= k <= max_arity
  std::vector<GroupAction> arity;   // S_k actions on W(k)
  std::vector<Coinvariants> quotient;  // projection O(k+1) -> W(k), section unit vectors
  int dim(int k) const { return k >= 0 && k <= max_arity ? arity[k].dim() : 0; }
  const Matrix& projection(int k) const { return quotient[k].projection; }
  SVec lift(int k, int w) const { return unit_vec(quotient[k].lift_index[w]); }
};

// Commutator span C(k) in O(k+1): a o_{s+1} b - sigma.(b o_{t+1} a), closed under S_k.
std::vector<SVec> commutator_span(const TruncatedOperad& o, int k);
WheeledComponent wheeled_component(const TruncatedOperad& o);
// Checks C(k) o_x O(l) lands in C(k+l-1): the wheel action is well defined.
Report validate_wheel_action(const TruncatedOperad& o, const WheeledComponent& w);
// Image of the marked unit in |delta11 O|(0).
SVec unit_wheel_image(const TruncatedOperad& o, const WheeledComponent& w, const SVec& u);

}  // namespace wbk
