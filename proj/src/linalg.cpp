#include "wbk/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wbk {

std::string to_string(const Q& q0) {
  Q q = q0;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Q q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

void axpy(SVec& y, const Q& a, const SVec& x) {
  if (sgn(a) == 0 || x.empty()) return;
  SVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Q v = y[i].second + a * x[j].second;
      if (sgn(v) != 0) out.emplace_back(y[i].first, std::move(v));
      ++i, ++j;
    }
  }
  y.swap(out);
}

SVec add(const SVec& a, const SVec& b) {
  SVec r = a;
  axpy(r, 1, b);
  return r;
}

SVec scaled(const SVec& v, const Q& a) {
  if (sgn(a) == 0) return {};
  SVec r = v;
  for (auto& e : r) e.second *= a;
  return r;
}

SVec unit_vec(int i) { return SVec{{i, Q(1)}}; }

Q dot(const SVec& a, const SVec& b) {
  Q s = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) ++i;
    else if (b[j].first < a[i].first) ++j;
    else s += a[i++].second * b[j++].second;
  }
  return s;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.col_[i] = unit_vec(i);
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Q>>& rows, int ncols) {
  int r = static_cast<int>(rows.size());
  int c = ncols >= 0 ? ncols : (r ? static_cast<int>(rows[0].size()) : 0);
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged dense matrix");
    for (int j = 0; j < c; ++j)
      if (sgn(rows[i][j]) != 0) {
        m.col_[j].emplace_back(i, rows[i][j]);
        m.col_[j].back().second.canonicalize();
      }
  }
  return m;
}

Matrix Matrix::from_columns(int rows, std::vector<SVec> cols) {
  Matrix m(rows, static_cast<int>(cols.size()));
  m.col_ = std::move(cols);
  return m;
}

Q Matrix::at(int i, int j) const {
  const SVec& c = col_[j];
  auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, int k) { return e.first < k; });
  if (it != c.end() && it->first == i) return it->second;
  return 0;
}

void Matrix::set(int i, int j, const Q& v0) {
  Q v = v0;
  v.canonicalize();
  SVec& c = col_[j];
  auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, int k) { return e.first < k; });
  if (it != c.end() && it->first == i) {
    if (sgn(v) == 0) c.erase(it);
    else it->second = v;
  } else if (sgn(v) != 0) {
    c.insert(it, {i, v});
  }
}

void Matrix::add_to(int i, int j, const Q& v) { set(i, j, at(i, j) + v); }

SVec Matrix::apply(const SVec& v) const {
  SVec r;
  for (const auto& [j, a] : v) axpy(r, a, col_[j]);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, a] : col_[j]) t.col_[i].emplace_back(j, a);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& c : col_)
    if (!c.empty()) return false;
  return true;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : col_) n += c.size();
  return n;
}

std::vector<std::vector<Q>> Matrix::dense() const {
  std::vector<std::vector<Q>> d(rows_, std::vector<Q>(cols_, Q(0)));
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, a] : col_[j]) d[i][j] = a;
  return d;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_ == b.col_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (int j = 0; j < b.cols_; ++j) c.col_[j] = a.apply(b.col_[j]);
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix c = a;
  for (int j = 0; j < a.cols_; ++j) axpy(c.col_[j], 1, b.col_[j]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix c = a;
  for (int j = 0; j < a.cols_; ++j) axpy(c.col_[j], -1, b.col_[j]);
  return c;
}

Matrix operator*(const Q& s, const Matrix& a) {
  Matrix c(a.rows_, a.cols_);
  for (int j = 0; j < a.cols_; ++j) c.col_[j] = scaled(a.col_[j], s);
  return c;
}

// Index convention: (i,k) -> i*rows(b)+k, matching the a-major tensor basis.
Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ja = 0; ja < a.cols(); ++ja)
    for (int jb = 0; jb < b.cols(); ++jb) {
      SVec& out = c.col(ja * b.cols() + jb);
      for (const auto& [ia, x] : a.col(ja))
        for (const auto& [ib, y] : b.col(jb)) out.emplace_back(ia * b.rows() + ib, x * y);
    }
  return c;
}

Matrix hstack(const std::vector<Matrix>& blocks, int rows) {
  std::vector<SVec> cols;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    for (int j = 0; j < b.cols(); ++j) cols.push_back(b.col(j));
  }
  return Matrix::from_columns(rows, std::move(cols));
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (int j = 0; j < a.cols(); ++j) c.col(j) = a.col(j);
  for (int j = 0; j < b.cols(); ++j) {
    SVec& out = c.col(a.cols() + j);
    for (const auto& [i, x] : b.col(j)) out.emplace_back(a.rows() + i, x);
  }
  return c;
}

SVec Echelon::reduce(SVec v, SVec* combo) const {
  int cursor = 0;
  while (true) {
    auto it = std::find_if(v.begin(), v.end(), [&](const auto& e) {
      return e.first >= cursor && pivot_of_[e.first] >= 0;
    });
    if (it == v.end()) break;
    int idx = it->first;
    Q c = it->second;
    int p = pivot_of_[idx];
    axpy(v, -c, piv_[p]);
    if (combo) axpy(*combo, -c, combo_[p]);
    cursor = idx + 1;
  }
  return v;
}

bool Echelon::insert(const SVec& v) {
  int k = inserted_++;
  SVec combo;
  if (track_) combo = unit_vec(k);
  SVec r = reduce(v, track_ ? &combo : nullptr);
  if (r.empty()) {
    if (track_) {
      relations_.push_back(std::move(combo));
      indep_pos_.push_back(-1);
    }
    return false;
  }
  Q lead = r.front().second;
  if (lead != 1) {
    Q inv = 1 / lead;
    for (auto& e : r) e.second *= inv;
    for (auto& e : combo) e.second *= inv;
  }
  pivot_of_[r.front().first] = static_cast<int>(piv_.size());
  piv_.push_back(std::move(r));
  if (track_) {
    combo_.push_back(std::move(combo));
    indep_pos_.push_back(static_cast<int>(independent_.size()));
  }
  independent_.push_back(k);
  return true;
}

SVec Echelon::coordinates(const SVec& v) const {
  if (!track_) throw std::logic_error("Echelon::coordinates requires tracking");
  SVec combo;
  SVec r = reduce(v, &combo);
  if (!r.empty()) throw std::domain_error("vector not in span");
  // v - sum(...) == 0, and combo holds minus that sum in inserted coordinates.
  SVec out;
  for (const auto& [k, a] : combo) out.emplace_back(indep_pos_[k], -a);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

int rank(const Matrix& a) {
  Echelon e(a.rows());
  for (int j = 0; j < a.cols(); ++j) e.insert(a.col(j));
  return e.rank();
}

RankKernelImage rank_kernel_image(const Matrix& a) {
  Echelon e(a.rows(), true);
  for (int j = 0; j < a.cols(); ++j) e.insert(a.col(j));
  RankKernelImage r;
  r.rank = e.rank();
  r.kernel = Matrix::from_columns(a.cols(), e.relations());
  r.pivot_columns = e.independent();
  std::vector<SVec> img;
  for (int j : r.pivot_columns) img.push_back(a.col(j));
  r.image = Matrix::from_columns(a.rows(), std::move(img));
  return r;
}

Matrix kernel_basis(const Matrix& a) { return rank_kernel_image(a).kernel; }

Matrix solve_in_span(const Matrix& b, const Matrix& y) {
  if (b.rows() != y.rows()) throw std::invalid_argument("solve_in_span: row mismatch");
  Echelon e(b.rows(), true);
  for (int j = 0; j < b.cols(); ++j)
    if (!e.insert(b.col(j))) throw std::domain_error("solve_in_span: basis not independent");
  Matrix x(b.cols(), y.cols());
  for (int j = 0; j < y.cols(); ++j) x.col(j) = e.coordinates(y.col(j));
  return x;
}

}  // namespace wbk
