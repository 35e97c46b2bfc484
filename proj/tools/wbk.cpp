// Command line front end: wbk <command> [operad-file] [flags].
#include "CLI11.hpp"
#include "wbk/cli.hpp"
#include "wbk/io.hpp"

#include <cstdlib>
#include <iostream>

namespace {

std::pair<int, int> parse_pair(const std::string& s, const char* flag) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    size_t used = 0;
    int a = std::stoi(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    std::string rest = s.substr(comma + 1);
    int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag, "expected two integers 'A,B', got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walled Brauer Koszul complexes, oracles and comparisons"};
  app.require_subcommand(1);

  wbk::JobSpec job;
  std::string window = "4,4", legs = "0,0", emit = "tsv";

  auto add_common = [&](CLI::App* sub, bool operad) {
    if (operad) sub->add_option("operad", job.operad_file, "operad file (wbk-operad 1)")->required()->check(CLI::ExistingFile);
    sub->add_option("--window", window, "window P,Q (graph commands: max vertices, max edges)")->capture_default_str();
    sub->add_option("--threads", job.threads, "worker threads")->capture_default_str();
    sub->add_option("--emit", emit, "tsv or json")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "validate the operad, ltfb and stfb");
  add_common(validate, true);
  auto* homology = app.add_subcommand("homology", "Koszul homology tables, up (Ext) and down (Tor)");
  add_common(homology, true);
  homology->add_flag("--untwisted", job.untwisted, "use the untwisted module stfb");
  auto* oracle = app.add_subcommand("oracle", "Koszul tables against the resolution oracles");
  add_common(oracle, true);
  oracle->add_flag("--untwisted", job.untwisted, "use the untwisted module stfb");
  auto* graph = app.add_subcommand("graph-compare", "flow-graph complex against the Koszul complex");
  add_common(graph, true);
  graph->add_option("--legs", legs, "legs A,B")->capture_default_str();
  auto* ce = app.add_subcommand("ce-compare", "Schur-Koszul complex against the CE complex");
  add_common(ce, true);
  ce->add_option("--dim-v", job.dim_v, "dimension of V")->capture_default_str();
  ce->add_option("--max-weight", job.max_weight, "largest weight")->capture_default_str();
  ce->add_option("--max-factors", job.max_factors, "factor bound")->capture_default_str();
  auto* en = app.add_subcommand("enumerate", "flow graphs up to isomorphism");
  add_common(en, false);
  en->add_option("--legs", legs, "legs A,B")->capture_default_str();
  en->add_flag("--allow-sources", job.allow_sources, "keep vertices without inputs");

  try {
    app.parse(argc, argv);
    job.command = app.get_subcommands().front()->get_name();
    job.window = parse_pair(window, "--window");
    job.legs = parse_pair(legs, "--legs");
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  job.emit = emit == "json" ? wbk::Emit::Json : wbk::Emit::Tsv;
  if (const char* dir = std::getenv("WBK_CACHE_DIR")) job.cache_dir = dir;

  try {
    return wbk::run(job, std::cout);
  } catch (const wbk::ParseError& e) {
    std::cerr << job.operad_file << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
