#include <fstream>
#include <iostream>
#include <sstream>

#include "qlab/harness/harness.hpp"

// Compares the current canonical serializations with the files in the given directory.
int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: golden_test DIR\n";
    return 2;
  }
  int bad = 0;
  for (const auto& [name, text] : qlab::harness::golden_documents()) {
    std::ifstream in(std::string(argv[1]) + "/" + name, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    if (!in || buf.str() != text) {
      std::cout << "MISMATCH " << name << "\n";
      ++bad;
    } else {
      std::cout << "ok " << name << "\n";
    }
  }
  return bad ? 1 : 0;
}
