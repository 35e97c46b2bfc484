#include "wbk/complex.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace wbk {

Matrix ChainComplex::diff(int k) const {
  auto it = d.find(k);
  if (it != d.end()) return it->second;
  return Matrix(term(k - 1), term(k));
}

int ChainComplex::euler() const {
  int e = 0;
  for (const auto& [k, n] : dim) e += (k % 2 == 0 ? 1 : -1) * n;
  return e;
}

void check_d_squared(const ChainComplex& c, const std::string& where) {
  for (const auto& [k, a] : c.d) {
    auto it = c.d.find(k - 1);
    if (it == c.d.end()) continue;
    if (!(it->second * a).is_zero()) {
      std::ostringstream os;
      os << "d^2 != 0 at degree " << k << " for output (" << c.p << "," << c.q << ")";
      if (!where.empty()) os << " in " << where;
      throw DSquaredError(os.str());
    }
  }
}

std::map<int, int> homology(const ChainComplex& c, const std::string& where) {
  check_d_squared(c, where);
  std::map<int, int> rk;
  for (const auto& [k, a] : c.d) rk[k] = rank(a);
  std::map<int, int> h;
  for (const auto& [k, n] : c.dim) {
    if (!n) continue;
    int out = rk.count(k) ? rk[k] : 0;
    int in = rk.count(k + 1) ? rk[k + 1] : 0;
    h[k] = n - out - in;
  }
  return h;
}

int HomologyTable::dim(int p, int q, int degree) const {
  auto it = rows_.find({p, q, degree});
  return it == rows_.end() ? 0 : it->second.dim;
}

std::vector<HomologyEntry> HomologyTable::nonzero() const {
  std::vector<HomologyEntry> out;
  for (const auto& [k, e] : rows_)
    if (e.dim) out.push_back(e);
  return out;
}

std::string HomologyTable::tsv() const {
  std::ostringstream os;
  os << "p\tq\tdegree\tweight\tdim\tsafe\n";
  for (const auto& e : nonzero())
    os << e.p << "\t" << e.q << "\t" << e.degree << "\t" << e.weight << "\t" << e.dim << "\t" << (e.safe ? 1 : 0)
       << "\n";
  return os.str();
}

std::string HomologyTable::json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : nonzero())
    rows.push_back({{"p", e.p}, {"q", e.q}, {"degree", e.degree}, {"weight", e.weight}, {"dim", e.dim}, {"safe", e.safe}});
  return rows.dump(1) + "\n";
}

std::vector<std::string> compare_tables(const HomologyTable& a, const HomologyTable& b) {
  std::vector<std::string> diff;
  auto keys = [](const HomologyTable& t) {
    std::vector<std::tuple<int, int, int>> k;
    for (const auto& [key, e] : t.rows()) k.push_back(key);
    return k;
  };
  std::vector<std::tuple<int, int, int>> all = keys(a), kb = keys(b);
  all.insert(all.end(), kb.begin(), kb.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (auto [p, q, k] : all)
    if (a.dim(p, q, k) != b.dim(p, q, k)) {
      std::ostringstream os;
      os << "(" << p << "," << q << ") degree " << k << ": " << a.dim(p, q, k) << " vs " << b.dim(p, q, k);
      diff.push_back(os.str());
    }
  return diff;
}

void parallel_for(int count, int threads, const std::function<void(int)>& f) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(threads, count); ++t)
    pool.emplace_back([&] {
      for (int i; (i = next++) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace wbk
