#pragma once

#include "wbk/linalg.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace wbk {

// Homological complex: d[k] maps C_k -> C_{k-1}.
struct ChainComplex {
  int p = 0, q = 0;  // output bidegree, if any
  std::map<int, int> dim;
  std::map<int, Matrix> d;
  std::map<int, bool> complete;  // term known to be untruncated

  int term(int k) const {
    auto it = dim.find(k);
    return it == dim.end() ? 0 : it->second;
  }
  Matrix diff(int k) const;  // zero of the right shape when absent
  int euler() const;
};

struct DSquaredError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_d_squared(const ChainComplex& c, const std::string& where);
// dim H_k for every k with a nonzero term; throws DSquaredError first if d^2 != 0.
std::map<int, int> homology(const ChainComplex& c, const std::string& where = "");

struct HomologyEntry {
  int p = 0, q = 0, degree = 0, weight = 0, dim = 0;
  bool safe = true;
  auto operator<=>(const HomologyEntry&) const = default;
};

// Keyed by (p, q, degree); weight is carried along.
class HomologyTable {
 public:
  void set(const HomologyEntry& e) { rows_[{e.p, e.q, e.degree}] = e; }
  int dim(int p, int q, int degree) const;
  const std::map<std::tuple<int, int, int>, HomologyEntry>& rows() const { return rows_; }
  // Entries with nonzero dimension, sorted by (p, q, degree).
  std::vector<HomologyEntry> nonzero() const;
  std::string tsv() const;
  std::string json() const;

 private:
  std::map<std::tuple<int, int, int>, HomologyEntry> rows_;
};

// Lists (p,q,degree) where the tables differ (all rows, zeros included).
std::vector<std::string> compare_tables(const HomologyTable& a, const HomologyTable& b);

// Runs f(0..count-1) over up to `threads` workers. Exceptions are rethrown.
void parallel_for(int count, int threads, const std::function<void(int)>& f);

}  // namespace wbk
