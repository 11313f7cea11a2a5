#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nilloops/loop.hpp"

namespace nilloops {

// Isomorphism-invariant summary of a loop. Equal fingerprints are necessary
// (not sufficient) for isomorphism.
struct Fingerprint {
  int order = 0;
  int center_size = 0;
  int nilpotency_class = -1;  // -1: not nilpotent
  bool commutative = false;
  bool associative = false;
  // Sorted multiset of refined per-element invariants.
  std::vector<std::uint64_t> element_classes;

  std::uint64_t hash() const noexcept;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const noexcept { return f.hash(); }
};

// A loop together with the per-element invariants used to prune isomorphism
// search. Build once and reuse when the same loop is compared repeatedly.
class LoopProfile {
 public:
  explicit LoopProfile(Loop loop);

  const Loop& loop() const noexcept { return loop_; }
  const Fingerprint& fingerprint() const noexcept { return fingerprint_; }
  // colors()[x] is the refined invariant of element x.
  const std::vector<std::uint64_t>& colors() const noexcept { return colors_; }

 private:
  Loop loop_;
  std::vector<std::uint64_t> colors_;
  Fingerprint fingerprint_;
};

// Refined per-element invariants (deterministic, relabeling-equivariant).
std::vector<std::uint64_t> element_invariants(const Loop& loop);

Fingerprint fingerprint(const Loop& loop);

// A bijection f with f(xy) = f(x)f(y), or nullopt. Deterministic.
std::optional<Permutation> isomorphic(const LoopProfile& a, const LoopProfile& b);
std::optional<Permutation> isomorphic(const Loop& a, const Loop& b);

// All automorphisms, sorted lexicographically (the identity comes first).
std::vector<Permutation> automorphism_group(const Loop& loop);

// A small generating set of a permutation group given by all its elements.
std::vector<Permutation> generating_set(const std::vector<Permutation>& group);

Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& perm);

}  // namespace nilloops
