#pragma once
// Versioned text formats for operads and modules.

#include "wbk/module.hpp"
#include "wbk/operad.hpp"

#include <stdexcept>
#include <string>

namespace wbk {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line, int column, const std::string& msg);
};

// Header "wbk-operad 1". Compositions may be given for a single slot i per
// (m,n); the rest are filled by equivariance. No validation is done here.
TruncatedOperad parse_operad(const std::string& text);
TruncatedOperad load_operad(const std::string& path);
std::string write_operad(const TruncatedOperad& o, bool all_slots = false);

// Header "wbk-module 1", sparse matrices.
WbModule parse_module(const std::string& text);
std::string write_module(const WbModule& m);

std::string read_file(const std::string& path);

}  // namespace wbk
