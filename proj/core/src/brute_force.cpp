#include "nilloops/brute_force.hpp"

#include "nilloops/error.hpp"
#include "nilloops/library.hpp"

namespace nilloops {
namespace {

class LatinSearch {
 public:
  LatinSearch(int n, const std::function<void(const Loop&)>& visit)
      : n_(n), visit_(visit), table_(static_cast<std::size_t>(n) * n, 0),
        row_used_(n, 0), col_used_(n, 0) {
    for (int i = 0; i < n; ++i) {
      set(0, i, i);
      if (i > 0) set(i, 0, i);
    }
  }

  void run() { place(n_); }

 private:
  void set(int r, int c, int v) {
    table_[static_cast<std::size_t>(r) * n_ + c] = static_cast<std::uint8_t>(v);
    row_used_[r] |= 1u << v;
    col_used_[c] |= 1u << v;
  }
  void unset(int r, int c, int v) {
    row_used_[r] &= ~(1u << v);
    col_used_[c] &= ~(1u << v);
  }

  void place(int cell) {
    if (cell == n_ * n_) {
      visit_(Loop::from_trusted_table(n_, table_));
      return;
    }
    const int r = cell / n_;
    const int c = cell % n_;
    if (c == 0) {
      place(cell + 1);
      return;
    }
    const unsigned used = row_used_[r] | col_used_[c];
    for (int v = 0; v < n_; ++v) {
      if (used & (1u << v)) continue;
      set(r, c, v);
      place(cell + 1);
      unset(r, c, v);
    }
  }

  int n_;
  const std::function<void(const Loop&)>& visit_;
  std::vector<std::uint8_t> table_;
  std::vector<unsigned> row_used_;
  std::vector<unsigned> col_used_;
};

}  // namespace

void for_each_normalized_latin_square(int n, const std::function<void(const Loop&)>& visit) {
  if (n < 1) throw Error(Errc::kBadShape, "order must be positive");
  if (n > kMaxBruteForceOrder) {
    throw Error(Errc::kOrderTooLarge,
                "brute force stops at order " + std::to_string(kMaxBruteForceOrder));
  }
  LatinSearch(n, visit).run();
}

std::vector<Loop> brute_force_loops(int n) {
  IsoClassifier classes;
  for_each_normalized_latin_square(n, [&](const Loop& loop) {
    if (nilpotency_class(loop)) classes.add(loop);
  });
  return classes.loops();
}

BigCount brute_force_count(int n) { return brute_force_loops(n).size(); }

}  // namespace nilloops
