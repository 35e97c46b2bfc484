#pragma once

#include "wbk/group.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace wbk {

// A morphism (m,n) -> (p,q) of the upward walled Brauer category, 1-based
// labels, pairing sorted by y.
struct WalledMorphism {
  int m = 0, n = 0, p = 0, q = 0;
  std::vector<int> left, right;
  std::vector<std::pair<int, int>> pairing;

  int degree() const { return p - m; }
  bool valid() const;
  std::string str() const;
  auto operator<=>(const WalledMorphism&) const = default;
};

struct SignedMorphism {
  WalledMorphism f;
  int sign = 1;
  bool opposite = false;  // true: read as the dwb morphism f^op
};

struct CompositionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

WalledMorphism identity_morphism(int m, int n);
WalledMorphism from_perms(const Perm& sigma, const Perm& tau);  // degree 0, 0-based perms
std::pair<Perm, Perm> to_perms(const WalledMorphism& f);       // requires degree 0

// Sort pairs by y; returns the sign of the sorting permutation.
int normalize_pairing(std::vector<std::pair<int, int>>& pairs);

std::vector<WalledMorphism> hom_basis(int m, int n, int p, int q);
const std::vector<WalledMorphism>& hom_basis_cached(int m, int n, int p, int q);
int hom_index(const WalledMorphism& f);  // position in hom_basis_cached

// g o f. Twisted: sign includes the re-sorting of the merged pairing list.
SignedMorphism compose(const SignedMorphism& g, const SignedMorphism& f, bool twisted);
SignedMorphism compose(const WalledMorphism& g, const WalledMorphism& f, bool twisted);

std::vector<std::pair<int, int>> pair1(int m, int n);
WalledMorphism iota(int x, int y, int m, int n);

// f = sign * iota(x,y) o rest, using the last pair of f.
struct IotaSplit {
  int x, y;
  WalledMorphism rest;
  int sign;
};
IotaSplit split_last_pair(const WalledMorphism& f, bool twisted);

// Order-preserving relabeling after deleting label x from 1..k.
inline int drop_label(int v, int x) { return v > x ? v - 1 : v; }

long long factorial(int n);
long long hom_count(int m, int n, int p, int q);

}  // namespace wbk
