#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nilloops/big_count.hpp"

namespace nilloops {

// Vector over GF(p); entries are residues 0..p-1.
using Vec = std::vector<std::uint8_t>;

// Primes up to 251 are supported; orders below 24 only need p <= 11.
inline constexpr int kMaxFieldPrime = 251;

bool is_prime(std::uint64_t n) noexcept;

// Throws Error(kDimensionMismatch) unless p is a prime below 256.
void check_field_prime(int p);

std::uint8_t field_inverse(int p, std::uint8_t a);

// Dense row-major matrix over GF(p).
class FieldMatrix {
 public:
  FieldMatrix(int p, int rows, int cols);

  static FieldMatrix identity(int p, int n);
  // Stacks the given vectors as rows; each must have `cols` entries.
  static FieldMatrix from_rows(int p, int cols, const std::vector<Vec>& rows);

  int p() const noexcept { return p_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  std::uint8_t operator()(int r, int c) const noexcept {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  // Stores value mod p (negative values allowed).
  void set(int r, int c, int value) noexcept;
  std::span<const std::uint8_t> row(int r) const noexcept {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<std::uint8_t> row(int r) noexcept {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }

  FieldMatrix transpose() const;
  Vec apply(std::span<const std::uint8_t> v) const;
  FieldMatrix operator*(const FieldMatrix& rhs) const;
  FieldMatrix operator+(const FieldMatrix& rhs) const;
  FieldMatrix operator-(const FieldMatrix& rhs) const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  int p_;
  int rows_;
  int cols_;
  std::vector<std::uint8_t> data_;
};

struct RowEchelon {
  FieldMatrix reduced;
  int rank = 0;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form. GF(2) goes through a bit-packed XOR elimination.
RowEchelon rref(const FieldMatrix& m);

namespace detail {
RowEchelon rref_dense(const FieldMatrix& m);
RowEchelon rref_gf2(const FieldMatrix& m);
}  // namespace detail

// Subspace of GF(p)^n stored as an RREF basis, so equal subspaces have equal
// representations.
class FieldSubspace {
 public:
  // The zero subspace.
  FieldSubspace(int p, int ambient_dim);

  static FieldSubspace span(int p, int ambient_dim, const std::vector<Vec>& vectors);
  static FieldSubspace whole(int p, int ambient_dim);

  int p() const noexcept { return p_; }
  int ambient_dim() const noexcept { return ambient_dim_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  // p^dim
  BigCount size() const;

  // Normal form of v modulo this subspace: zero on every pivot column.
  // Two vectors lie in the same coset iff their normal forms agree.
  Vec reduce(std::span<const std::uint8_t> v) const;
  bool contains(std::span<const std::uint8_t> v) const;
  bool is_subspace_of(const FieldSubspace& other) const;

  friend bool operator==(const FieldSubspace&, const FieldSubspace&) = default;

 private:
  int p_;
  int ambient_dim_;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

FieldSubspace kernel(const FieldMatrix& m);
// Column space.
FieldSubspace image(const FieldMatrix& m);
// A particular solution with free variables set to 0, or nullopt when b is not in the image.
std::optional<Vec> solve(const FieldMatrix& m, std::span<const std::uint8_t> b);
// Particular solutions for several right-hand sides that all lie in the image.
std::vector<Vec> solve_all(const FieldMatrix& m, const std::vector<Vec>& rhs);

// Throw Error(kDimensionMismatch) on mismatched p or ambient dimension.
FieldSubspace sum(const FieldSubspace& u, const FieldSubspace& v);
FieldSubspace intersect(const FieldSubspace& u, const FieldSubspace& v);

// {v : Mv in B}, assembled as ker M plus particular solutions over a basis of B ∩ im M.
FieldSubspace preimage(const FieldMatrix& m, const FieldSubspace& b);

bool contains(const FieldSubspace& u, std::span<const std::uint8_t> v);

// One representative per coset of `sub` inside `ambient`, in lexicographic
// order of the coefficients over a complement basis (last coefficient varies
// fastest). Each representative is already in normal form modulo `sub`.
class CosetReps {
 public:
  // Throws Error(kNotSubspace) unless sub ⊆ ambient.
  CosetReps(const FieldSubspace& ambient, const FieldSubspace& sub);

  BigCount count() const;
  int complement_dim() const noexcept { return static_cast<int>(complement_.size()); }
  const std::vector<Vec>& complement() const noexcept { return complement_; }

  // Writes the next representative; false once exhausted.
  bool next(Vec& out);
  std::vector<Vec> all() const;

 private:
  int p_;
  int ambient_dim_;
  std::vector<Vec> complement_;
  std::vector<int> coeffs_;
  Vec current_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace nilloops
