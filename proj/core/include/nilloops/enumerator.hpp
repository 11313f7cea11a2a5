#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nilloops/big_count.hpp"
#include "nilloops/finite_group.hpp"
#include "nilloops/library.hpp"
#include "nilloops/loop.hpp"

namespace nilloops {

inline constexpr int kMaxEnumerationOrder = 23;

struct EnumConfig {
  // Library caches, reports and checkpoints; empty keeps everything in memory.
  std::filesystem::path cache_dir;
  // 0 picks the hardware concurrency.
  unsigned workers = 0;
  // Required for n in {16, 18, 20}.
  bool deep = false;
  std::size_t group_order_cap = kDefaultGroupOrderCap;
  std::size_t generation_cap = kDefaultGenerationCap;
};

// A branch (Z_p, F) of the pipeline: F is entry f_index of the library of order n/p.
struct Source {
  int p = 0;
  std::size_t f_index = 0;

  friend auto operator<=>(const Source&, const Source&) = default;
};

struct BranchResult {
  Source source;
  std::string f_label;
  // Classes with Z(Q) = Z_p exactly; these belong to this branch only.
  BigCount exact;
  // Classes with a larger center built in this branch.
  BigCount large_classes;
  // Large-center classes whose smallest source (over all primes) is this branch.
  BigCount large_new;
  // Same, with the smallest source taken over branches with the same prime.
  BigCount large_new_same_p;
};

struct CountReport {
  int order = 0;
  // Sorted by p, then library index of F.
  std::vector<BranchResult> branches;
  BigCount total;

  friend bool operator==(const CountReport&, const CountReport&);
};

// Runs the pipeline and keeps the libraries it built for later calls.
class Enumerator {
 public:
  explicit Enumerator(EnumConfig config = {});

  const EnumConfig& config() const noexcept { return config_; }

  // Throws Error(kGenerationTooLarge) or Error(kUnsupportedOrder) via build_library.
  const LoopLibrary& library(int n);

  // Number of nilpotent loops of order n, 1 <= n <= 23.
  // Throws Error(kUnsupportedOrder) outside that range or for 16, 18, 20 without deep mode.
  CountReport count_order(int n);

  // One branch on its own.
  BranchResult run_branch(int n, Source source);

 private:
  EnumConfig config_;
  std::mutex mutex_;
  std::map<int, std::unique_ptr<LoopLibrary>> libraries_;
};

CountReport count_order(int n, const EnumConfig& config = {});

// Library indices of Q / <x> over the distinct central subloops <x> of prime
// order, sorted. Libraries are looked up by order.
std::vector<Source> quotient_signature(const Loop& q,
                                       const std::map<int, const LoopLibrary*>& libraries);

struct LargeCenterCandidate {
  Loop loop;
  Source source;
};

// One loop per isomorphism class: fingerprint buckets, then quotient signature,
// then isomorphic(). Output follows the first occurrence in `candidates`.
std::vector<Loop> dedup_large_center(const std::vector<LargeCenterCandidate>& candidates,
                                     const std::map<int, const LoopLibrary*>& libraries);

}  // namespace nilloops
