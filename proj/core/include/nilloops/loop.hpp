#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace nilloops {

// Elements are 0-based indices; 0 is always the identity.
using Element = int;
// Sorted list of distinct elements (centers, subloops).
using ElementSet = std::vector<Element>;
// perm[x] is the image of x.
using Permutation = std::vector<Element>;

inline constexpr int kMaxLoopOrder = 255;

// A finite loop stored as its normalized multiplication table (a latin square
// whose row and column 0 are the identity). Immutable once constructed.
class Loop {
 public:
  // Checks shape, normalization and the latin property of a row-major n×n table.
  // Throws Error with kBadShape, kNotNormalized or kNotLatin.
  static Loop validate(int order, std::span<const int> table);
  static Loop validate(const std::vector<std::vector<int>>& rows);

  // No checks; the caller guarantees a normalized latin square.
  static Loop from_trusted_table(int order, std::vector<std::uint8_t> table);

  // The trivial loop.
  Loop() : order_(1), table_{0} {}

  int order() const noexcept { return order_; }
  Element mul(Element x, Element y) const noexcept {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }
  std::span<const std::uint8_t> table() const noexcept { return table_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const Loop&, const Loop&) = default;

 private:
  Loop(int order, std::vector<std::uint8_t> table)
      : order_(order), table_(std::move(table)) {}

  int order_;
  std::vector<std::uint8_t> table_;
};

// Elements x with xy = yx, (xy)z = x(yz), (yx)z = y(xz), (yz)x = y(zx) for all y, z.
ElementSet center(const Loop& loop);
bool is_central(const Loop& loop, Element x);

bool is_commutative(const Loop& loop);
bool is_associative(const Loop& loop);

// Length of the upper central series, or nullopt when it stalls below the loop.
// The trivial loop has class 0.
std::optional<int> nilpotency_class(const Loop& loop);

// Smallest subloop containing the generators (closure under multiplication).
ElementSet generated_subloop(const Loop& loop, std::span<const Element> generators);
bool is_subloop(const Loop& loop, const ElementSet& elements);

// Order of a central element inside the abelian group Z(Q).
int central_element_order(const Loop& loop, Element x);

struct Quotient {
  Loop loop;
  // projection[x] is the index of the coset containing x.
  std::vector<Element> projection;
};

// Quotient by a subloop contained in the center. Cosets are numbered by their
// minimal element, so the identity coset is 0. Throws kNotSubloop or
// kNotCentralSubloop.
Quotient quotient(const Loop& loop, const ElementSet& central_subloop);

// The loop on F × Z_p with (x,a)(y,b) = (xy, a + b + theta(x,y)). The pair
// (x,a) is encoded as x*p + a. theta has (|F|-1)^2 coordinates indexed by
// non-identity pairs in row-major order.
Loop central_extension(const Loop& base, int p, std::span<const std::uint8_t> theta);

Loop cyclic_group(int n);
Loop direct_product(const Loop& a, const Loop& b);

// The loop on the same set with x*y = perm(perm^-1(x) perm^-1(y)); perm must fix 0.
Loop relabel(const Loop& loop, const Permutation& perm);

// Whether perm is an isomorphism from a to b.
bool is_isomorphism(const Loop& a, const Loop& b, const Permutation& perm);

}  // namespace nilloops
