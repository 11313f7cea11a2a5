#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nilloops/isomorphism.hpp"
#include "nilloops/loop.hpp"

namespace nilloops {

// Largest number of coset representatives tried in one (p, F) branch.
inline constexpr std::size_t kDefaultGenerationCap = std::size_t{1} << 16;

// Collects loops up to isomorphism: fingerprint buckets, then isomorphic().
class IsoClassifier {
 public:
  // Index of the class of `loop`, adding it as a new class when needed.
  // The bool is true for a new class.
  std::pair<std::size_t, bool> add(Loop loop);
  std::optional<std::size_t> find(const LoopProfile& profile) const;

  std::size_t size() const noexcept { return profiles_.size(); }
  const LoopProfile& operator[](std::size_t i) const noexcept { return profiles_[i]; }
  std::vector<Loop> loops() const;

 private:
  std::vector<LoopProfile> profiles_;
  std::unordered_map<Fingerprint, std::vector<std::size_t>, FingerprintHash> buckets_;
};

// All nilpotent loops of one order, pairwise non-isomorphic.
class LoopLibrary {
 public:
  LoopLibrary(int order, std::vector<Loop> loops);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const Loop& operator[](std::size_t i) const noexcept { return classes_[i].loop(); }
  const LoopProfile& profile(std::size_t i) const noexcept { return classes_[i]; }
  std::vector<Loop> loops() const { return classes_.loops(); }

  // Library index of the loop isomorphic to `loop`.
  std::optional<std::size_t> find(const Loop& loop) const;
  std::optional<std::size_t> find(const LoopProfile& profile) const;

 private:
  int order_;
  IsoClassifier classes_;
};

struct LibraryOptions {
  // Directory holding loops-<n>.txt; empty disables the disk cache.
  std::filesystem::path cache_dir;
  std::size_t generation_cap = kDefaultGenerationCap;
};

// Every nilpotent loop of order n, built as central extensions of Z_p by the
// loops of order n/p (p ascending, then library order of F, then cocycle
// representatives). Throws Error(kGenerationTooLarge) when a branch needs more
// representatives than the cap. Missing or corrupt cache files are rebuilt.
LoopLibrary build_library(int n, const LibraryOptions& options = {});

// Same, with the libraries of the quotient orders supplied by the caller.
LoopLibrary build_library(int n, const std::vector<const LoopLibrary*>& quotients,
                          std::size_t generation_cap = kDefaultGenerationCap);

std::filesystem::path library_cache_path(const std::filesystem::path& cache_dir, int n);
// nullopt when the file is missing, unreadable or does not match the format version.
std::optional<LoopLibrary> load_library_cache(const std::filesystem::path& cache_dir, int n);
void save_library_cache(const std::filesystem::path& cache_dir, const LoopLibrary& library);

// Prime divisors of n, ascending.
std::vector<int> prime_divisors(int n);

// "Z6", "Z2xZ2" for abelian groups, otherwise "L<order>.<index + 1>".
std::string loop_label(const Loop& loop, std::size_t library_index);

}  // namespace nilloops
