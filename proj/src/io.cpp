#include "wbk/io.hpp"

#include <fstream>
#include <sstream>

namespace wbk {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line(line),
      column(column) {}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

struct Token {
  std::string text;
  int column;
};

// Line-oriented reader; '#' starts a comment, blank lines are skipped.
class Reader {
 public:
  explicit Reader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      std::vector<Token> toks;
      size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
      }
      if (!toks.empty()) lines_.push_back({no, std::move(toks)});
    }
  }
  bool done() const { return pos_ >= lines_.size(); }
  int line_no() const { return done() ? (lines_.empty() ? 1 : lines_.back().first + 1) : lines_[pos_].first; }
  const std::vector<Token>& peek() const {
    if (done()) throw ParseError(line_no(), 1, "unexpected end of input");
    return lines_[pos_].second;
  }
  const std::vector<Token>& next() {
    const auto& t = peek();
    ++pos_;
    return t;
  }
  [[noreturn]] void fail(int column, const std::string& msg) const { throw ParseError(current_, column, msg); }
  void mark() { current_ = line_no(); }

 private:
  std::vector<std::pair<int, std::vector<Token>>> lines_;
  size_t pos_ = 0;
  int current_ = 1;
};

int to_int(Reader& r, const Token& t) {
  try {
    size_t used = 0;
    int v = std::stoi(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    r.fail(t.column, "expected an integer, got '" + t.text + "'");
  }
}

Q to_q(Reader& r, const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const std::exception&) {
    r.fail(t.column, "expected a rational, got '" + t.text + "'");
  }
}

void expect_len(Reader& r, const std::vector<Token>& t, size_t n, const std::string& what) {
  if (t.size() != n) r.fail(t.empty() ? 1 : t.back().column, what + ": expected " + std::to_string(n) + " fields");
}

Matrix read_dense(Reader& r, int rows, int cols) {
  Matrix a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    r.mark();
    const auto& t = r.next();
    if (static_cast<int>(t.size()) != cols)
      r.fail(t.back().column, "matrix row has " + std::to_string(t.size()) + " entries, expected " + std::to_string(cols));
    for (int j = 0; j < cols; ++j) a.set(i, j, to_q(r, t[j]));
  }
  return a;
}

// "matrix r c k" followed by k lines "i j value".
Matrix read_sparse(Reader& r) {
  r.mark();
  const auto& h = r.next();
  expect_len(r, h, 4, "matrix header");
  if (h[0].text != "matrix") r.fail(h[0].column, "expected 'matrix'");
  int rows = to_int(r, h[1]), cols = to_int(r, h[2]), k = to_int(r, h[3]);
  Matrix a(rows, cols);
  for (int e = 0; e < k; ++e) {
    r.mark();
    const auto& t = r.next();
    expect_len(r, t, 3, "matrix entry");
    int i = to_int(r, t[0]), j = to_int(r, t[1]);
    if (i < 0 || i >= rows || j < 0 || j >= cols) r.fail(t[0].column, "matrix entry out of range");
    a.set(i, j, to_q(r, t[2]));
  }
  return a;
}

void write_sparse(std::ostream& os, const Matrix& a) {
  os << "matrix " << a.rows() << " " << a.cols() << " " << a.nnz() << "\n";
  // row-major order for stable, readable output
  std::vector<std::tuple<int, int, Q>> es;
  for (int j = 0; j < a.cols(); ++j)
    for (const auto& [i, v] : a.col(j)) es.emplace_back(i, j, v);
  std::sort(es.begin(), es.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  for (const auto& [i, j, v] : es) os << i << " " << j << " " << to_string(v) << "\n";
}

void write_dense(std::ostream& os, const Matrix& a) {
  auto d = a.dense();
  for (const auto& row : d) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << to_string(row[j]);
    os << "\n";
  }
}

void check_header(Reader& r, const std::string& magic) {
  r.mark();
  const auto& h = r.next();
  if (h.size() != 2 || h[0].text != magic || h[1].text != "1") r.fail(1, "expected header '" + magic + " 1'");
}

}  // namespace

TruncatedOperad parse_operad(const std::string& text) {
  Reader r(text);
  check_header(r, "wbk-operad");
  TruncatedOperad o;
  std::vector<int> dims;
  std::map<std::pair<int, int>, Matrix> gens;
  bool have_arity = false;
  while (!r.done()) {
    r.mark();
    const auto t = r.next();
    const std::string& kw = t[0].text;
    if (kw == "name") {
      expect_len(r, t, 2, "name");
      o.name = t[1].text;
    } else if (kw == "max-arity") {
      expect_len(r, t, 2, "max-arity");
      o.max_arity = to_int(r, t[1]);
      if (o.max_arity < 0) r.fail(t[1].column, "negative max-arity");
      dims.assign(o.max_arity + 1, 0);
      have_arity = true;
    } else if (kw == "arity") {
      expect_len(r, t, 4, "arity");
      if (!have_arity) r.fail(1, "'arity' before 'max-arity'");
      int n = to_int(r, t[1]);
      if (t[2].text != "dim") r.fail(t[2].column, "expected 'dim'");
      if (n < 0 || n > o.max_arity) r.fail(t[1].column, "arity out of range");
      dims[n] = to_int(r, t[3]);
      if (dims[n] < 0) r.fail(t[3].column, "negative dimension");
    } else if (kw == "generator") {
      expect_len(r, t, 3, "generator");
      int n = to_int(r, t[1]), j = to_int(r, t[2]);
      if (!have_arity || n < 2 || n > o.max_arity || j < 1 || j >= n) r.fail(t[1].column, "generator index out of range");
      gens[{n, j}] = read_dense(r, dims[n], dims[n]);
    } else if (kw == "compose") {
      expect_len(r, t, 4, "compose");
      int m = to_int(r, t[1]), i = to_int(r, t[2]), n = to_int(r, t[3]);
      if (!have_arity || m < 1 || i < 1 || i > m || n < 0 || m + n - 1 > o.max_arity)
        r.fail(t[1].column, "composition index out of range");
      o.comp[{m, i, n}] = read_dense(r, dims[m + n - 1], dims[m] * dims[n]);
    } else if (kw == "unit") {
      expect_len(r, t, 1, "unit");
      if (!have_arity || o.max_arity < 1) r.fail(1, "unit needs arity 1");
      o.unit = read_dense(r, 1, dims[1]).transpose().col(0);
    } else {
      r.fail(t[0].column, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_arity) throw ParseError(r.line_no(), 1, "missing max-arity");
  for (int n = 0; n <= o.max_arity; ++n) {
    std::vector<Matrix> g;
    for (int j = 1; j < n; ++j) {
      auto it = gens.find({n, j});
      g.push_back(it == gens.end() ? Matrix::identity(dims[n]) : it->second);
    }
    o.arity.emplace_back(dims[n], std::vector<int>{n}, std::move(g));
  }
  o.complete_by_equivariance();
  return o;
}

TruncatedOperad load_operad(const std::string& path) { return parse_operad(read_file(path)); }

std::string write_operad(const TruncatedOperad& o, bool all_slots) {
  std::ostringstream os;
  os << "wbk-operad 1\nname " << o.name << "\nmax-arity " << o.max_arity << "\n";
  for (int n = 0; n <= o.max_arity; ++n)
    if (o.dim(n)) os << "arity " << n << " dim " << o.dim(n) << "\n";
  for (int n = 2; n <= o.max_arity; ++n)
    for (int j = 1; j < n; ++j) {
      if (!o.dim(n) || o.arity[n].gen(0, j - 1) == Matrix::identity(o.dim(n))) continue;
      os << "generator " << n << " " << j << "\n";
      write_dense(os, o.arity[n].gen(0, j - 1));
    }
  for (const auto& [key, a] : o.comp) {
    auto [m, i, n] = key;
    if (!all_slots && i != 1) continue;
    os << "compose " << m << " " << i << " " << n << "\n";
    write_dense(os, a);
  }
  if (o.unit) {
    os << "unit\n";
    write_dense(os, Matrix::from_columns(o.dim(1), {*o.unit}).transpose());
  }
  return os.str();
}

// wbk-module 1
// twisted 0|1, direction down|up, window M N
// space m n dim d, then one sparse matrix per Coxeter generator (inputs first)
// map m n x y, then a sparse matrix
WbModule parse_module(const std::string& text) {
  Reader r(text);
  check_header(r, "wbk-module");
  WbModule mod;
  bool have_window = false;
  while (!r.done()) {
    r.mark();
    const auto t = r.next();
    const std::string& kw = t[0].text;
    if (kw == "twisted") {
      expect_len(r, t, 2, "twisted");
      mod.twisted = to_int(r, t[1]) != 0;
    } else if (kw == "direction") {
      expect_len(r, t, 2, "direction");
      if (t[1].text == "down") mod.dir = Direction::Down;
      else if (t[1].text == "up") mod.dir = Direction::Up;
      else r.fail(t[1].column, "direction must be 'down' or 'up'");
    } else if (kw == "window") {
      expect_len(r, t, 3, "window");
      mod.underlying = FbFbModule(to_int(r, t[1]), to_int(r, t[2]));
      have_window = true;
    } else if (kw == "space") {
      expect_len(r, t, 5, "space");
      if (!have_window) r.fail(1, "'space' before 'window'");
      int m = to_int(r, t[1]), n = to_int(r, t[2]), d = to_int(r, t[4]);
      std::vector<Matrix> g;
      for (int j = 0; j < std::max(m - 1, 0) + std::max(n - 1, 0); ++j) {
        g.push_back(read_sparse(r));
        if (g.back().rows() != d || g.back().cols() != d) r.fail(1, "generator matrix is not " + std::to_string(d) + "x" + std::to_string(d));
      }
      try {
        mod.underlying.set(m, n, GroupAction(d, {m, n}, std::move(g)));
      } catch (const std::exception& e) {
        r.fail(1, e.what());
      }
    } else if (kw == "map") {
      expect_len(r, t, 5, "map");
      int m = to_int(r, t[1]), n = to_int(r, t[2]), x = to_int(r, t[3]), y = to_int(r, t[4]);
      Matrix a = read_sparse(r);
      try {
        mod.set_map(m, n, x, y, std::move(a));
      } catch (const std::exception& e) {
        r.fail(1, e.what());
      }
    } else {
      r.fail(t[0].column, "unknown keyword '" + kw + "'");
    }
  }
  return mod;
}

std::string write_module(const WbModule& m) {
  std::ostringstream os;
  os << "wbk-module 1\ntwisted " << (m.twisted ? 1 : 0) << "\ndirection "
     << (m.dir == Direction::Down ? "down" : "up") << "\nwindow " << m.max_m() << " " << m.max_n() << "\n";
  for (const auto& [k, g] : m.underlying.spaces()) {
    os << "space " << k.first << " " << k.second << " dim " << g.dim() << "\n";
    for (const auto& s : g.gens()) write_sparse(os, s);
  }
  for (const auto& [k, a] : m.structure) {
    auto [mm, n, x, y] = k;
    os << "map " << mm << " " << n << " " << x << " " << y << "\n";
    write_sparse(os, a);
  }
  return os.str();
}

}  // namespace wbk
