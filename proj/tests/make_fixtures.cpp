// Writes the bundled data files.  Usage: make_fixtures <data-dir>

#include <iostream>
#include <string>

#include "coxfold/coxfold.hpp"
#include "fixtures.hpp"
#include "generated.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " data-dir\n";
    return 1;
  }
  std::string dir = std::string(argv[1]) + "/";
  for (auto const& [name, text] : generated::files()) {
    coxfold::write_file(dir + name, text);
    std::cout << "wrote " << dir << name << "\n";
  }
  return 0;
}
