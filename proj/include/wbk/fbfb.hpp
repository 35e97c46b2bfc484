#pragma once

#include "wbk/group.hpp"

#include <map>
#include <utility>
#include <vector>

namespace wbk {

using Bideg = std::pair<int, int>;

// A finitely supported k(FB x FB)-module. window = bidegrees on which the
// values are known to be complete; spaces outside the support are zero.
class FbFbModule {
 public:
  FbFbModule() = default;
  FbFbModule(int max_m, int max_n) : max_m_(max_m), max_n_(max_n) {}

  int max_m() const { return max_m_; }
  int max_n() const { return max_n_; }
  bool in_window(int m, int n) const { return m >= 0 && n >= 0 && m <= max_m_ && n <= max_n_; }

  int dim(int m, int n) const;
  const GroupAction* at(int m, int n) const;
  // Zero-dimensional spaces are dropped.
  void set(int m, int n, GroupAction g);
  const std::map<Bideg, GroupAction>& spaces() const { return spaces_; }
  bool is_zero() const { return spaces_.empty(); }

 private:
  int max_m_ = 0, max_n_ = 0;
  std::map<Bideg, GroupAction> spaces_;
};

// Regular representation of S_m x S_n, basis pairs of sorted-listed permutations.
GroupAction regular_action(int m, int n);
// k(FB x FB) itself: the regular representation at every bidegree.
FbFbModule regular_module(int max_m, int max_n);
FbFbModule point_module(int m, int n, int max_m, int max_n);  // k[S_m x S_n] trivial rep at (m,n)
FbFbModule direct_sum(const FbFbModule& a, const FbFbModule& b);

// Basis of an ordered Day product F_1 * ... * F_d at (m,n). Element: owner of
// each input/output label (0-based factor), and a basis index per factor.
struct DayElem {
  std::vector<int> in_owner, out_owner, dec;
  auto operator<=>(const DayElem&) const = default;
};

class DayBasis {
 public:
  DayBasis(const std::vector<const FbFbModule*>& factors, int m, int n);
  int size() const { return static_cast<int>(elems_.size()); }
  const DayElem& elem(int i) const { return elems_[i]; }
  int index(const DayElem& e) const;  // -1 if absent
  // Action of s_j (0-based j swaps labels j, j+1) on inputs (side 0) or outputs (side 1).
  Matrix generator(int side, int j) const;
  // Swap of factors i and i+1 (requires equal modules), times sign.
  Matrix factor_swap(int i, int sign) const;
  GroupAction action() const;

 private:
  std::vector<const FbFbModule*> f_;
  int m_, n_;
  std::vector<DayElem> elems_;
  std::map<DayElem, int> index_;
};

FbFbModule day_convolve(const FbFbModule& f, const FbFbModule& g);
// Explicit symmetry isomorphism (F*G)(m,n) -> (G*F)(m,n).
Matrix day_symmetry(const FbFbModule& f, const FbFbModule& g, int m, int n);
FbFbModule day_power(const FbFbModule& f, int d);
FbFbModule sym_power(const FbFbModule& f, int d);
FbFbModule ext_power(const FbFbModule& f, int d);
FbFbModule shift(const FbFbModule& f, int a, int b);
enum class TwistSide { Left, Right };
FbFbModule sign_twist(const FbFbModule& f, TwistSide which);

}  // namespace wbk
