#pragma once

#include <random>
#include <vector>

#include "nilloops/loop.hpp"

namespace nilloops::testing {

// Table given with elements 1..n, as printed in the literature.
inline Loop from_one_based(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<int>> zero = rows;
  for (auto& row : zero) {
    for (int& v : row) --v;
  }
  return Loop::validate(zero);
}

inline Loop l62() {
  return from_one_based({{1, 2, 3, 4, 5, 6},
                         {2, 1, 4, 3, 6, 5},
                         {3, 4, 5, 6, 1, 2},
                         {4, 3, 6, 5, 2, 1},
                         {5, 6, 2, 1, 3, 4},
                         {6, 5, 1, 2, 4, 3}});
}

inline Loop l63() {
  return from_one_based({{1, 2, 3, 4, 5, 6},
                         {2, 1, 4, 3, 6, 5},
                         {3, 4, 5, 6, 1, 2},
                         {4, 3, 6, 5, 2, 1},
                         {5, 6, 1, 2, 4, 3},
                         {6, 5, 2, 1, 3, 4}});
}

inline Loop klein() { return direct_product(cyclic_group(2), cyclic_group(2)); }

// Smallest non-associative loop (order 5), not nilpotent: its center is trivial.
inline Loop order5_nonassoc() {
  return from_one_based({{1, 2, 3, 4, 5},
                         {2, 1, 4, 5, 3},
                         {3, 5, 1, 2, 4},
                         {4, 3, 5, 1, 2},
                         {5, 4, 2, 3, 1}});
}

inline Permutation random_relabeling(int n, std::mt19937& rng) {
  Permutation perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

inline std::vector<std::uint8_t> random_vector(int size, int p, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, p - 1);
  std::vector<std::uint8_t> v(size);
  for (auto& x : v) x = static_cast<std::uint8_t>(dist(rng));
  return v;
}

}  // namespace nilloops::testing
