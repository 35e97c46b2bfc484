// Regenerates the operad fixtures in data/.
#include "wbk/examples.hpp"
#include "wbk/io.hpp"

#include <fstream>
#include <iostream>

using namespace wbk;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  auto zero = zero_operad(3);
  auto put = [&](const std::string& file, const TruncatedOperad& o) {
    std::ofstream(dir + "/" + file) << write_operad(o);
    std::cout << dir << "/" << file << "\n";
  };
  put("zero.opd", zero);
  put("assoc_Q.opd", rational_operad());
  put("n3.opd", n3_operad());
  put("ass_le3.opd", ass_operad(3));
  put("com_le3.opd", com_operad(3));
}
