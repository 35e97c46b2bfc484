#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace wbk {

using Q = mpq_class;

std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

// Sparse vector: entries sorted by index, no explicit zeros.
using SVec = std::vector<std::pair<int, Q>>;

void axpy(SVec& y, const Q& a, const SVec& x);  // y += a*x
SVec add(const SVec& a, const SVec& b);
SVec scaled(const SVec& v, const Q& a);
SVec unit_vec(int i);
Q dot(const SVec& a, const SVec& b);

// Column-major sparse rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix from_dense(const std::vector<std::vector<Q>>& rows, int ncols = -1);
  static Matrix from_columns(int rows, std::vector<SVec> cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const SVec& col(int j) const { return col_[j]; }
  SVec& col(int j) { return col_[j]; }
  const std::vector<SVec>& columns() const { return col_; }

  Q at(int i, int j) const;
  void set(int i, int j, const Q& v);
  void add_to(int i, int j, const Q& v);

  SVec apply(const SVec& v) const;
  Matrix transpose() const;
  bool is_zero() const;
  std::size_t nnz() const;
  std::vector<std::vector<Q>> dense() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Q& s, const Matrix& a);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SVec> col_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks, int rows);
Matrix direct_sum(const Matrix& a, const Matrix& b);

// Incremental echelon basis of a subspace of Q^n. Pivot vectors have leading
// coefficient 1 at a distinct index. With tracking, each pivot remembers its
// expression in terms of the inserted vectors.
class Echelon {
 public:
  explicit Echelon(int n, bool track = false) : n_(n), track_(track), pivot_of_(n, -1) {}

  // Returns true if v was independent of the span so far.
  bool insert(const SVec& v);
  // Reduce v modulo the span; when track, also returns the combination of
  // inserted vectors that was subtracted.
  SVec reduce(SVec v, SVec* combo = nullptr) const;
  bool contains(const SVec& v) const { return reduce(v).empty(); }

  int rank() const { return static_cast<int>(piv_.size()); }
  int inserted() const { return inserted_; }
  // Kernel relations among inserted vectors (only when tracking).
  const std::vector<SVec>& relations() const { return relations_; }
  const std::vector<int>& independent() const { return independent_; }
  // Coordinates of a vector in the span, w.r.t. the independent inserted vectors.
  SVec coordinates(const SVec& v) const;

 private:
  int n_;
  bool track_;
  int inserted_ = 0;
  std::vector<int> pivot_of_;  // index -> position in piv_
  std::vector<SVec> piv_;
  std::vector<SVec> combo_;  // pivot i == sum combo_[i][k] * inserted[k]
  std::vector<SVec> relations_;
  std::vector<int> independent_;
  std::vector<int> indep_pos_;  // inserted index -> position among independent, or -1
};

struct RankKernelImage {
  int rank = 0;
  Matrix kernel;  // columns span ker A
  Matrix image;   // columns span col A (chosen columns of A)
  std::vector<int> pivot_columns;
};

int rank(const Matrix& a);
RankKernelImage rank_kernel_image(const Matrix& a);
Matrix kernel_basis(const Matrix& a);

// Solve B X = Y for X, B of full column rank and im Y in im B. Throws otherwise.
Matrix solve_in_span(const Matrix& b, const Matrix& y);

}  // namespace wbk
