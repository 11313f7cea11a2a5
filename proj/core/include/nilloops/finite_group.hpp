#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace nilloops {

inline constexpr std::size_t kDefaultGroupOrderCap = 2048;

// A finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<int> table);

  int order() const noexcept { return order_; }
  int mul(int a, int b) const noexcept { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const noexcept { return inverse_[a]; }
  int element_order(int a) const noexcept;

 private:
  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

// Complete list of subgroups of a small group with conjugacy data.
// Subgroups are sorted by (order, elements); index 0 is the trivial subgroup
// and the last index is the whole group.
class SubgroupLattice {
 public:
  struct Subgroup {
    std::vector<int> elements;    // sorted
    std::vector<int> generators;  // generates the subgroup
    std::size_t conjugacy_class = 0;
    std::size_t normalizer_index = 1;  // [N_G(H) : H]
  };

  // Throws Error(kGroupTooLarge) when the group order exceeds the cap.
  explicit SubgroupLattice(const FiniteGroup& group,
                           std::size_t order_cap = kDefaultGroupOrderCap);

  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const noexcept { return subgroups_[i]; }

  // inner ⊆ outer
  bool contains(std::size_t outer, std::size_t inner) const noexcept;
  bool contains_element(std::size_t subgroup, int element) const noexcept;

  // One subgroup per conjugacy class (the smallest index of each class).
  const std::vector<std::size_t>& class_representatives() const noexcept { return reps_; }
  std::size_t representative_of(std::size_t subgroup) const noexcept {
    return reps_[subgroups_[subgroup].conjugacy_class];
  }
  std::size_t class_count() const noexcept { return reps_.size(); }

  // Index of the subgroup with exactly these elements, or -1.
  long find(const std::vector<int>& elements) const;

  // Subgroup generated by the given elements.
  std::size_t generated_by(const std::vector<int>& generators) const;

 private:
  using Bits = std::vector<std::uint64_t>;
  Bits to_bits(const std::vector<int>& elements) const;
  std::vector<int> closure(std::vector<int> seed, const std::vector<int>& generators) const;

  const FiniteGroup* group_;
  std::size_t words_;
  std::vector<Subgroup> subgroups_;
  std::vector<Bits> bits_;
  std::map<Bits, std::size_t> index_;
  std::vector<std::size_t> reps_;
};

}  // namespace nilloops
