#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "nilloops/big_count.hpp"
#include "nilloops/cocycle.hpp"
#include "nilloops/finite_group.hpp"
#include "nilloops/gfp.hpp"
#include "nilloops/loop.hpp"

namespace nilloops {

// (alpha, beta) in Aut(F) × Aut(Z_p); beta is a unit mod p.
struct AutPair {
  Permutation alpha;
  int beta = 1;

  friend bool operator==(const AutPair&, const AutPair&) = default;
};

// (alpha, beta) theta (x, y) = beta * theta(alpha^-1 x, alpha^-1 y).
Cocycle act(const CocycleSpace& space, const AutPair& g, std::span<const std::uint8_t> theta);

// Matrix of the action on cocycle coordinates.
FieldMatrix r_matrix(const CocycleSpace& space, const AutPair& g);
// I - R
FieldMatrix s_matrix(const CocycleSpace& space, const AutPair& g);
// I + R + ... + R^(k-1), k the order of alpha.
FieldMatrix t_matrix(const CocycleSpace& space, const AutPair& g);

// Inv(alpha, beta): cocycles whose coboundary coset is fixed by the pair.
FieldSubspace inv_single(const CocycleSpace& space, const AutPair& g);

// Aut(F) × Aut(Z_p). Element a*(p-1) + (beta-1) is (automorphisms[a], beta);
// index 0 is the identity.
class AutGroup {
 public:
  AutGroup(std::vector<Permutation> automorphisms, int p);
  explicit AutGroup(const CocycleSpace& space);

  int order() const noexcept { return static_cast<int>(elements_.size()); }
  int p() const noexcept { return p_; }
  const AutPair& operator[](int i) const noexcept { return elements_[i]; }
  const std::vector<Permutation>& automorphisms() const noexcept { return automorphisms_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  int index_of(const AutPair& g) const;

 private:
  int p_;
  std::vector<Permutation> automorphisms_;
  std::vector<AutPair> elements_;
  std::unique_ptr<FiniteGroup> group_;
};

// Counts isomorphism classes of central extensions of F by Z_p through the
// subgroup lattice of Aut(F) × Aut(Z_p).
class ExtensionCounter {
 public:
  explicit ExtensionCounter(const CocycleSpace& space,
                            std::size_t group_order_cap = kDefaultGroupOrderCap);

  const CocycleSpace& space() const noexcept { return space_; }
  const AutGroup& aut() const noexcept { return aut_; }
  const SubgroupLattice& lattice() const noexcept { return lattice_; }

  // Inv of one group element; cached.
  const FieldSubspace& inv_element(int g);
  // Inv(H) = intersection over the generators of H. Subgroups in one
  // conjugacy class share the dimension, so only representatives are cached.
  const FieldSubspace& inv_subgroup(std::size_t h);

  // |Inv(H)| for every subgroup.
  std::vector<BigCount> inv_sizes();
  // |Inv*(H)|: cocycles whose stabilizer is exactly H.
  std::vector<BigCount> inv_star_sizes();

  // Number of classes, optionally leaving out the cocycles in w.
  // Throws Error(kNonIntegralCount) on a non-exact division.
  BigCount count(const LargeCenterSet* w = nullptr);

 private:
  const CocycleSpace& space_;
  AutGroup aut_;
  SubgroupLattice lattice_;
  std::vector<std::optional<FieldSubspace>> element_cache_;
  std::vector<std::optional<FieldSubspace>> subgroup_cache_;
};

// Möbius-style top-down inversion: star[H] = sizes[H] - sum of star[K] over K ⊋ H.
std::vector<BigCount> inv_star_sizes(const SubgroupLattice& lattice,
                                     std::span<const BigCount> sizes);

// Isomorphism classes of central extensions of F by Z_p, all cocycles or
// only those outside W.
BigCount iso_class_count(const CocycleSpace& space, bool exclude_w,
                         std::size_t group_order_cap = kDefaultGroupOrderCap);

}  // namespace nilloops
