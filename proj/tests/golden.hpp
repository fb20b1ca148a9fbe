#pragma once

// Lattice tables transcribed from the published figures: the (m, n) lattice
// of class C and the (mu, n) lattice of Euclidean triples, indices 1..5.

#include <array>
#include <cstdint>

namespace golden {

struct Entry {
  std::uint64_t i;  // m for the lattice, mu for the extended lattice
  std::uint64_t n;
  std::uint64_t a, b, c;
};

inline constexpr std::array<Entry, 25> lattice{{
    {1, 1, 3, 4, 5},       {1, 2, 5, 12, 13},     {1, 3, 7, 24, 25},     {1, 4, 9, 40, 41},
    {1, 5, 11, 60, 61},    {2, 1, 15, 8, 17},     {2, 2, 21, 20, 29},    {2, 3, 27, 36, 45},
    {2, 4, 33, 56, 65},    {2, 5, 39, 80, 89},    {3, 1, 35, 12, 37},    {3, 2, 45, 28, 53},
    {3, 3, 55, 48, 73},    {3, 4, 65, 72, 97},    {3, 5, 75, 100, 125},  {4, 1, 63, 16, 65},
    {4, 2, 77, 36, 85},    {4, 3, 91, 60, 109},   {4, 4, 105, 88, 137},  {4, 5, 119, 120, 169},
    {5, 1, 99, 20, 101},   {5, 2, 117, 44, 125},  {5, 3, 135, 72, 153},  {5, 4, 153, 104, 185},
    {5, 5, 171, 140, 221},
}};

inline constexpr std::array<Entry, 25> extended{{
    {1, 1, 3, 4, 5},     {1, 2, 5, 12, 13},   {1, 3, 7, 24, 25},   {1, 4, 9, 40, 41},
    {1, 5, 11, 60, 61},  {2, 1, 8, 6, 10},    {2, 2, 12, 16, 20},  {2, 3, 16, 30, 34},
    {2, 4, 20, 48, 52},  {2, 5, 24, 70, 74},  {3, 1, 15, 8, 17},   {3, 2, 21, 20, 29},
    {3, 3, 27, 36, 45},  {3, 4, 33, 56, 65},  {3, 5, 39, 80, 89},  {4, 1, 24, 10, 26},
    {4, 2, 32, 24, 40},  {4, 3, 40, 42, 58},  {4, 4, 48, 64, 80},  {4, 5, 56, 90, 106},
    {5, 1, 35, 12, 37},  {5, 2, 45, 28, 53},  {5, 3, 55, 48, 73},  {5, 4, 65, 72, 97},
    {5, 5, 75, 100, 125},
}};

}  // namespace golden
