#pragma once

#include <span>
#include <vector>

#include "nilloops/big_count.hpp"
#include "nilloops/gfp.hpp"
#include "nilloops/loop.hpp"

namespace nilloops {

// Normalized cocycle F × F -> Z_p. Coordinates run over pairs of non-identity
// elements (x, y) in row-major order; theta(1, x) = theta(x, 1) = 0 is implied.
using Cocycle = Vec;

// The cocycle space C(F, Z_p) with its coboundary subspace. Immutable.
class CocycleSpace {
 public:
  CocycleSpace(Loop base, int p);

  const Loop& base() const noexcept { return base_; }
  int p() const noexcept { return p_; }
  // (|F| - 1)^2
  int dim() const noexcept { return dim_; }
  int hom_dim() const noexcept { return (base_.order() - 1) - coboundaries_.dim(); }
  const FieldSubspace& coboundaries() const noexcept { return coboundaries_; }
  const ElementSet& base_center() const noexcept { return base_center_; }

  int coordinate(Element x, Element y) const noexcept {
    return (x - 1) * (base_.order() - 1) + (y - 1);
  }
  // theta(x, y), zero whenever x or y is the identity.
  int value(std::span<const std::uint8_t> theta, Element x, Element y) const noexcept {
    return (x == 0 || y == 0) ? 0 : theta[coordinate(x, y)];
  }

  Cocycle zero() const { return Cocycle(dim_, 0); }

  // tau_hat(x, y) = tau(xy) - tau(x) - tau(y). tau has |F| - 1 entries,
  // tau[c - 1] = tau(c); tau(1) = 0 is implied.
  Cocycle coboundary(std::span<const std::uint8_t> tau) const;
  // Coboundary of the indicator function of c.
  Cocycle tau_hat(Element c) const;

  // W_x: cocycles whose extension has the whole fiber over x in its center.
  // Throws Error(kNotCentral) unless x is a non-identity element of Z(F).
  FieldSubspace large_center_subspace(Element x) const;

 private:
  Loop base_;
  int p_;
  int dim_;
  FieldSubspace coboundaries_;
  ElementSet base_center_;
};

// The large-center cocycles W(F, Z_p) = union of W_x over 1 != x in Z(F).
struct LargeCenterSet {
  // Distinct maximal W_x (those contained in another are dropped; the union is unchanged).
  std::vector<FieldSubspace> components;
  // intersections[mask] = intersection of the components selected by mask;
  // intersections[0] is the whole cocycle space.
  std::vector<FieldSubspace> intersections;
  // |W| by inclusion-exclusion.
  BigCount size;
  // One representative per coboundary coset inside W, in normal form.
  std::vector<Cocycle> reps;
};

LargeCenterSet large_center_set(const CocycleSpace& space);

// |X ∩ W| for a subspace X, by inclusion-exclusion over the components.
BigCount count_in_union(const LargeCenterSet& w, const FieldSubspace& x);

}  // namespace nilloops
