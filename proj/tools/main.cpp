#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return triple_lattice::cli::run(argc, argv, std::cout, std::cerr, std::getenv("TRIPLE_LATTICE_FORMAT"));
}
