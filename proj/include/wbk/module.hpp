#pragma once

#include "wbk/fbfb.hpp"
#include "wbk/wbcat.hpp"

#include <map>
#include <string>
#include <tuple>

namespace wbk {

enum class Direction { Down, Up };

// Module over k dwb / (k dwb)_- (Down, structure maps are contractions
// c_{x,y}: M(m,n) -> M(m-1,n-1)) or over k uwb / (k uwb)_- (Up, raising maps
// r_{x,y}: M(m-1,n-1) -> M(m,n)). Maps are keyed by the larger bidegree.
struct WbModule {
  FbFbModule underlying;
  bool twisted = true;
  Direction dir = Direction::Down;
  std::map<std::tuple<int, int, int, int>, Matrix> structure;

  int dim(int m, int n) const { return underlying.dim(m, n); }
  int max_m() const { return underlying.max_m(); }
  int max_n() const { return underlying.max_n(); }
  // Zero map of the right shape when absent.
  Matrix map(int m, int n, int x, int y) const;
  void set_map(int m, int n, int x, int y, Matrix a);
};

using DwbTwModule = WbModule;

struct Report {
  bool ok = true;
  std::string message;
  void fail(const std::string& msg) {
    if (ok) message = msg;
    ok = false;
  }
};

Report validate(const WbModule& m);

// Action of a (signed) morphism. Down modules take f.opposite == true and
// v in M(target of f); Up modules take f.opposite == false and v in M(source).
SVec act(const WbModule& mod, const SignedMorphism& f, const SVec& v);
Matrix act_matrix(const WbModule& mod, const SignedMorphism& f);

// Linear dual: a Down module becomes an Up module and vice versa.
WbModule dual(const WbModule& m);

// Twist by triv (x) sgn on outputs, with c_{x,y} scaled by (-1)^{y-1}; exchanges
// the twisted and untwisted categories.
WbModule sign_twist_module(const WbModule& m);

// Down: M(m,n) = k uwb((m,n),(s,t)) by precomposition. Up: M(m,n) = k uwb((s,t),(m,n))
// by postcomposition. Truncated to the window.
WbModule representable(Direction dir, int s, int t, bool twisted, int max_m, int max_n);

// Degree-0 part: M(sigma, tau) for 0-based permutations.
SVec apply_perms(const FbFbModule& f, int m, int n, const Perm& sigma, const Perm& tau, SVec v);

}  // namespace wbk
