#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nilloops/big_count.hpp"
#include "nilloops/loop.hpp"

namespace nilloops {

inline constexpr int kMaxBruteForceOrder = 6;

// Calls visit on every normalized latin square of order n.
// Throws Error(kOrderTooLarge) for n > 6.
void for_each_normalized_latin_square(int n, const std::function<void(const Loop&)>& visit);

// One representative per isomorphism class of nilpotent loops of order n,
// found by exhausting all normalized latin squares.
std::vector<Loop> brute_force_loops(int n);

BigCount brute_force_count(int n);

}  // namespace nilloops
