#include "nilloops/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nilloops/error.hpp"

namespace nilloops {

FiniteGroup::FiniteGroup(int order, std::vector<int> table)
    : order_(order), table_(std::move(table)), inverse_(order, -1) {
  if (order < 1 || table_.size() != static_cast<std::size_t>(order) * order) {
    throw Error(Errc::kBadShape, "group table has the wrong size");
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (mul(a, b) == 0) inverse_[a] = b;
    }
  }
}

int FiniteGroup::element_order(int a) const noexcept {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return a == 0 ? 1 : k;
}

SubgroupLattice::SubgroupLattice(const FiniteGroup& group, std::size_t order_cap)
    : group_(&group), words_((static_cast<std::size_t>(group.order()) + 63) / 64) {
  if (static_cast<std::size_t>(group.order()) > order_cap) {
    throw Error(Errc::kGroupTooLarge, "group of order " + std::to_string(group.order()) +
                                          " exceeds the cap " + std::to_string(order_cap));
  }
  std::vector<Subgroup> found;
  std::map<Bits, std::size_t> seen;
  auto add = [&](std::vector<int> elements, std::vector<int> generators) {
    Bits key = to_bits(elements);
    if (seen.count(key)) return;
    seen.emplace(std::move(key), found.size());
    found.push_back({std::move(elements), std::move(generators), 0, 1});
  };

  // Cyclic subgroups, then joins with cyclic subgroups until nothing new
  // appears; every subgroup is a join of its cyclic subgroups.
  for (int g = 0; g < group.order(); ++g) add(closure({0}, {g}), {g});
  const std::size_t cyclic_count = found.size();
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < cyclic_count; ++j) {
      const int c = found[j].generators.front();
      if (std::binary_search(found[i].elements.begin(), found[i].elements.end(), c)) continue;
      std::vector<int> gens = found[i].generators;
      gens.push_back(c);
      add(closure(found[i].elements, gens), gens);
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  subgroups_ = std::move(found);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    bits_.push_back(to_bits(subgroups_[i].elements));
    index_.emplace(bits_.back(), i);
  }

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls(subgroups_.size(), kUnassigned);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (cls[i] != kUnassigned) continue;
    const std::size_t id = reps_.size();
    reps_.push_back(i);
    std::vector<std::size_t> members;
    for (int g = 0; g < group.order(); ++g) {
      std::vector<int> conj;
      conj.reserve(subgroups_[i].elements.size());
      for (int h : subgroups_[i].elements) conj.push_back(group.mul(group.mul(g, h), group.inverse(g)));
      std::sort(conj.begin(), conj.end());
      const std::size_t j = index_.at(to_bits(conj));
      if (cls[j] == kUnassigned) {
        cls[j] = id;
        members.push_back(j);
      }
    }
    const std::size_t normalizer_index =
        static_cast<std::size_t>(group.order()) / (subgroups_[i].elements.size() * members.size());
    for (std::size_t j : members) {
      subgroups_[j].conjugacy_class = id;
      subgroups_[j].normalizer_index = normalizer_index;
    }
  }
}

bool SubgroupLattice::contains(std::size_t outer, std::size_t inner) const noexcept {
  const Bits& o = bits_[outer];
  const Bits& in = bits_[inner];
  for (std::size_t w = 0; w < words_; ++w) {
    if ((in[w] & ~o[w]) != 0) return false;
  }
  return true;
}

bool SubgroupLattice::contains_element(std::size_t subgroup, int element) const noexcept {
  return (bits_[subgroup][element / 64] >> (element % 64)) & 1;
}

long SubgroupLattice::find(const std::vector<int>& elements) const {
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  auto it = index_.find(to_bits(sorted));
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::size_t SubgroupLattice::generated_by(const std::vector<int>& generators) const {
  return index_.at(to_bits(closure({0}, generators)));
}

SubgroupLattice::Bits SubgroupLattice::to_bits(const std::vector<int>& elements) const {
  Bits bits(words_, 0);
  for (int e : elements) bits[e / 64] |= std::uint64_t{1} << (e % 64);
  return bits;
}

std::vector<int> SubgroupLattice::closure(std::vector<int> seed,
                                          const std::vector<int>& generators) const {
  std::vector<char> in(group_->order(), 0);
  for (int e : seed) in[e] = 1;
  std::vector<int> members = seed;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int g : generators) {
      const int x = group_->mul(members[i], g);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace nilloops
