#pragma once
// Batch jobs behind the wbk command line tool.

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace wbk {

enum class Emit { Tsv, Json };

struct JobSpec {
  std::string command;  // validate, homology, graph-compare, ce-compare, enumerate, oracle
  std::string operad_file;
  std::pair<int, int> window{4, 4};  // graph-compare and enumerate: (max vertices, max edges)
  std::pair<int, int> legs{0, 0};
  int dim_v = 1;
  int max_weight = 3;
  int max_factors = 3;  // ce-compare only; module factor bound elsewhere is max(window)
  int threads = 1;
  bool untwisted = false;     // homology and oracle on build_stfb instead of build_ltfb
  bool allow_sources = false;  // enumerate
  Emit emit = Emit::Tsv;
  std::string cache_dir;  // empty: no cache
};

struct JobError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes the job's table to out. Returns 0 on success, 1 if a validation or
// comparison failed. Throws JobError for a malformed JobSpec and ParseError
// for unreadable input.
int run(const JobSpec& job, std::ostream& out);

}  // namespace wbk
