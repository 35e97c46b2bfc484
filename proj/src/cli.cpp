#include "wbk/cli.hpp"

#include "json.hpp"
#include "wbk/flowgraph.hpp"
#include "wbk/io.hpp"
#include "wbk/koszul.hpp"
#include "wbk/ltfb.hpp"
#include "wbk/oracle.hpp"
#include "wbk/schur.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace wbk {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<Json>> rows;
};

struct Output {
  std::vector<Table> tables;
  std::vector<std::pair<std::string, Json>> fields;  // scalar summary lines
  bool ok = true;
};

std::string cell(const Json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render(const Output& o, Emit emit) {
  if (emit == Emit::Json) {
    Json doc = Json::object();
    for (const auto& t : o.tables) {
      Json rows = Json::array();
      for (const auto& r : t.rows) {
        Json row = Json::object();
        for (size_t i = 0; i < r.size(); ++i) row[t.header[i]] = r[i];
        rows.push_back(std::move(row));
      }
      doc[t.name] = std::move(rows);
    }
    for (const auto& [k, v] : o.fields) doc[k] = v;
    doc["verdict"] = o.ok ? "pass" : "fail";
    return doc.dump(1) + "\n";
  }
  std::ostringstream os;
  for (const auto& t : o.tables) {
    os << "# " << t.name << "\n";
    for (size_t i = 0; i < t.header.size(); ++i) os << (i ? "\t" : "") << t.header[i];
    os << "\n";
    for (const auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << cell(r[i]);
      os << "\n";
    }
  }
  for (const auto& [k, v] : o.fields) os << k << "\t" << cell(v) << "\n";
  os << "verdict\t" << (o.ok ? "pass" : "fail") << "\n";
  return os.str();
}

Table homology_table(const std::string& name, const HomologyTable& h) {
  Table t{name, {"p", "q", "degree", "weight", "dim", "safe"}, {}};
  for (const auto& e : h.nonzero()) t.rows.push_back({e.p, e.q, e.degree, e.weight, e.dim, e.safe});
  return t;
}

// Rows where either side is nonzero.
Table side_by_side(const std::string& name, const HomologyTable& koszul, const HomologyTable& oracle, bool& ok) {
  Table t{name, {"p", "q", "degree", "koszul", "oracle", "match"}, {}};
  std::set<std::tuple<int, int, int>> keys;
  for (const auto& e : koszul.nonzero()) keys.insert({e.p, e.q, e.degree});
  for (const auto& e : oracle.nonzero()) keys.insert({e.p, e.q, e.degree});
  for (auto [p, q, k] : keys) {
    int a = koszul.dim(p, q, k), b = oracle.dim(p, q, k);
    t.rows.push_back({p, q, k, a, b, a == b});
  }
  if (!compare_tables(koszul, oracle).empty()) ok = false;
  return t;
}

WbModule module_of(const JobSpec& job, const TruncatedOperad& o) {
  auto [p, q] = job.window;
  return job.untwisted ? build_stfb(o, p, q) : build_ltfb(o, p, q);
}

Output validate_job(const JobSpec& job, const TruncatedOperad& o) {
  Output out;
  Table t{"checks", {"check", "ok", "message"}, {}};
  auto add = [&](const std::string& name, const Report& r) {
    t.rows.push_back({name, r.ok, r.message});
    out.ok = out.ok && r.ok;
  };
  add("operad", validate_operad(o));
  if (out.ok) {
    add("wheel_action", validate_wheel_action(o, wheeled_component(o)));
    auto [p, q] = job.window;
    WbModule l = build_ltfb(o, p, q);
    WbModule s = build_stfb(o, p, q);
    add("ltfb", validate(l));
    add("stfb", validate(s));
    add("stfb_twisted", validate(sign_twist_module(s)));
    Report dims;
    for (int m = 0; m <= p; ++m)
      for (int n = 0; n <= q; ++n)
        if (l.dim(m, n) != s.dim(m, n))
          dims.fail("(" + std::to_string(m) + "," + std::to_string(n) + "): " + std::to_string(l.dim(m, n)) +
                    " vs " + std::to_string(s.dim(m, n)));
    add("twist_dims", dims);
  }
  out.tables.push_back(std::move(t));
  return out;
}

void require_valid(const TruncatedOperad& o) {
  Report r = validate_operad(o);
  if (!r.ok) throw JobError("operad fails validation: " + r.message);
}

Output homology_job(const JobSpec& job, const TruncatedOperad& o) {
  require_valid(o);
  WbModule m = module_of(job, o);
  Output out;
  out.tables.push_back(homology_table("up", koszul_up_table(m, job.threads)));
  out.tables.push_back(homology_table("down", koszul_down_table(m, job.threads)));
  return out;
}

Output oracle_job(const JobSpec& job, const TruncatedOperad& o) {
  require_valid(o);
  WbModule m = module_of(job, o);
  Output out;
  out.tables.push_back(side_by_side("tor", koszul_down_table(m, job.threads), tor_oracle(m), out.ok));
  out.tables.push_back(side_by_side("ext", koszul_up_table(m, job.threads), ext_oracle(m), out.ok));
  return out;
}

Output graph_compare_job(const JobSpec& job, const TruncatedOperad& o) {
  require_valid(o);
  auto rep = compare(o, job.legs.first, job.legs.second, job.window.first, job.window.second);
  Output out;
  Table t{"rows", {"edges", "graph_dim", "koszul_dim", "graph_homology", "koszul_homology"}, {}};
  for (const auto& r : rep.rows)
    t.rows.push_back({r.edges, r.graph_dim, r.koszul_dim, r.graph_homology, r.koszul_homology});
  out.tables.push_back(std::move(t));
  Table f{"failures", {"message"}, {}};
  for (const auto& s : rep.failures) f.rows.push_back({s});
  out.tables.push_back(std::move(f));
  out.fields.push_back({"intertwiner", rep.intertwiner});
  out.ok = rep.ok;
  return out;
}

Output ce_compare_job(const JobSpec& job, const TruncatedOperad& o) {
  require_valid(o);
  auto rep = ce_compare(o, job.dim_v, job.max_weight, job.max_factors);
  Output out;
  Table t{"rows", {"wheeled", "weight", "degree", "schur", "ce"}, {}};
  for (const auto& r : rep.rows)
    if (r.schur || r.ce) t.rows.push_back({r.wheeled, r.weight, r.degree, r.schur, r.ce});
  out.tables.push_back(std::move(t));
  Table f{"failures", {"message"}, {}};
  for (const auto& s : rep.failures) f.rows.push_back({s});
  out.tables.push_back(std::move(f));
  out.ok = rep.ok;
  return out;
}

Output enumerate_job(const JobSpec& job) {
  Output out;
  Table t{"graphs", {"index", "vertices", "edges", "automorphisms", "graph"}, {}};
  auto cls = enumerate(job.legs.first, job.legs.second, job.window.first, job.window.second, job.allow_sources);
  for (size_t i = 0; i < cls.size(); ++i) {
    std::string s = serialize(cls[i].graph);
    s.pop_back();
    std::replace(s.begin(), s.end(), '\n', ';');
    t.rows.push_back({static_cast<int>(i), cls[i].graph.nv, cls[i].graph.edges(),
                      static_cast<int>(cls[i].automorphisms.size()), s});
  }
  out.tables.push_back(std::move(t));
  out.fields.push_back({"classes", static_cast<int>(cls.size())});
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_key(const JobSpec& job, const std::string& operad_text) {
  std::ostringstream os;
  os << job.command << "\n" << operad_text << "\nwindow " << job.window.first << "," << job.window.second
     << "\nlegs " << job.legs.first << "," << job.legs.second << "\nd " << job.dim_v << "\nw " << job.max_weight
     << "\nf " << job.max_factors << "\nu " << job.untwisted << "\ns " << job.allow_sources << "\ne "
     << static_cast<int>(job.emit) << "\n";
  std::ostringstream hex;
  hex << std::hex << fnv1a(os.str());
  return hex.str();
}

void check_job(const JobSpec& job) {
  static const std::set<std::string> commands = {"validate",  "homology",  "graph-compare",
                                                 "ce-compare", "enumerate", "oracle"};
  if (!commands.count(job.command)) throw JobError("unknown command '" + job.command + "'");
  if (job.window.first < 0 || job.window.second < 0) throw JobError("window bounds must be nonnegative");
  if (job.legs.first < 0 || job.legs.second < 0) throw JobError("legs must be nonnegative");
  if (job.dim_v < 0 || job.max_weight < 0 || job.max_factors < 0) throw JobError("negative bound");
  if (job.threads < 1) throw JobError("--threads must be at least 1");
  if (job.command != "enumerate" && job.operad_file.empty()) throw JobError("an operad file is required");
}

}  // namespace

int run(const JobSpec& job, std::ostream& out) {
  check_job(job);
  if (job.command == "enumerate") {
    Output o = enumerate_job(job);
    out << render(o, job.emit);
    return o.ok ? 0 : 1;
  }
  std::string text = read_file(job.operad_file);
  TruncatedOperad o = parse_operad(text);

  std::filesystem::path cached;
  if (!job.cache_dir.empty()) {
    cached = std::filesystem::path(job.cache_dir) / (cache_key(job, write_operad(o, true)) + ".out");
    std::ifstream in(cached);
    int status = 0;
    if (in >> status) {
      in.ignore(1);
      std::ostringstream body;
      body << in.rdbuf();
      out << body.str();
      return status;
    }
  }

  Output res;
  if (job.command == "validate") res = validate_job(job, o);
  else if (job.command == "homology") res = homology_job(job, o);
  else if (job.command == "oracle") res = oracle_job(job, o);
  else if (job.command == "graph-compare") res = graph_compare_job(job, o);
  else res = ce_compare_job(job, o);
  std::string body = render(res, job.emit);
  int status = res.ok ? 0 : 1;

  if (!cached.empty()) {
    std::filesystem::create_directories(cached.parent_path());
    std::filesystem::path tmp = cached;
    tmp += ".tmp";
    {
      std::ofstream f(tmp);
      f << status << "\n" << body;
    }
    std::filesystem::rename(tmp, cached);
  }
  out << body;
  return status;
}

}  // namespace wbk
