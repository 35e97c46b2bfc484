#pragma once

#include "wbk/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace wbk {

// 0-based one-line notation: p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm inverse(const Perm& p);
Perm compose(const Perm& a, const Perm& b);  // a after b
int perm_sign(const Perm& p);
bool is_identity(const Perm& p);
// Adjacent transpositions j (0-based, swapping j and j+1) with p = s_{w0} s_{w1} ... .
std::vector<int> adjacent_word(const Perm& p);
// Permutation sorting a sequence: returns p with p[i] = new position of item i (stable).
template <class T>
Perm sorting_perm(const std::vector<T>& items);
std::vector<Perm> all_perms(int n);

struct MalformedAction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear action of S_{k1} x ... x S_{kr} given by Coxeter generator matrices.
class GroupAction {
 public:
  GroupAction() = default;
  // Throws MalformedAction unless the generators satisfy the Coxeter relations.
  GroupAction(int dim, std::vector<int> factors, std::vector<Matrix> gens, bool check = true);
  static GroupAction trivial(int dim, std::vector<int> factors);

  int dim() const { return dim_; }
  const std::vector<int>& factors() const { return factors_; }
  const std::vector<Matrix>& gens() const { return gens_; }
  long long order() const;

  int gen_index(int factor, int j) const;
  const Matrix& gen(int factor, int j) const { return gens_[gen_index(factor, j)]; }
  Matrix element(int factor, const Perm& p) const;
  SVec apply(int factor, const Perm& p, SVec v) const;
  SVec apply_word(int factor, const std::vector<int>& word, SVec v) const;

  void check() const;

 private:
  int dim_ = 0;
  std::vector<int> factors_;
  std::vector<Matrix> gens_;
};

Matrix reynolds(const GroupAction& g);
// Sum over g of g^T g: a positive definite invariant form.
Matrix invariant_form(const GroupAction& g);

struct Coinvariants {
  Matrix projection;            // dim(quotient) x dim
  Matrix quotient_basis;        // dim x dim(quotient), invariant representatives
  std::vector<int> lift_index;  // basis vector e_j whose class is quotient basis i
  int dim() const { return projection.rows(); }
  Matrix section() const;       // dim x dim(quotient), the unit vectors e_{lift_index[i]}
  Matrix induce(const Matrix& g) const { return projection * g * section(); }
};

Coinvariants coinvariants_from_projector(const Matrix& p);
Coinvariants coinvariants(const GroupAction& g);
// Averaging over an explicit list of all group elements.
Coinvariants coinvariants_of_elements(int dim, const std::vector<Matrix>& elements);
// Induced action of a commuting product of symmetric groups on the quotient.
GroupAction induce(const Coinvariants& c, const GroupAction& h, bool check = true);
// Quotient V / span(vs) with a basis of unit-vector lifts.
Coinvariants quotient_by_span(int dim, const std::vector<SVec>& vs);

template <class T>
Perm sorting_perm(const std::vector<T>& items) {
  int n = static_cast<int>(items.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return items[a] < items[b]; });
  Perm p(n);
  for (int pos = 0; pos < n; ++pos) p[idx[pos]] = pos;
  return p;
}

}  // namespace wbk
