// Prints the first rows and columns of the (m, n) lattice with a marker on
// the non-primitive entries.

#include <cstdio>
#include <cstdlib>

#include "triple_lattice/triple_lattice.hpp"

int main(int argc, char** argv) {
  using namespace triple_lattice;
  const u64 size = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 5;

  for (u64 n = size; n >= 1; --n) {
    std::printf("n=%-3llu", static_cast<unsigned long long>(n));
    for (u64 m = 1; m <= size; ++m) {
      const LatticeIndex idx(m, n);
      const Triple t = triple_from_lattice(idx);
      std::printf(" %18s%c", t.to_string().c_str(), is_primitive_lattice(idx) ? ' ' : '*');
    }
    std::printf("\n");
  }
  std::printf("     ");
  for (u64 m = 1; m <= size; ++m) std::printf(" %18s ", ("m=" + std::to_string(m)).c_str());
  std::printf("\n");
}
