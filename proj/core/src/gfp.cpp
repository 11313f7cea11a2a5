#include "nilloops/gfp.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "nilloops/error.hpp"

namespace nilloops {
namespace {

void check_same_space(const FieldSubspace& u, const FieldSubspace& v) {
  if (u.p() != v.p() || u.ambient_dim() != v.ambient_dim()) {
    throw Error(Errc::kDimensionMismatch, "subspaces live in different spaces");
  }
}

FieldSubspace from_rref_rows(const RowEchelon& e, int p, int ambient_dim) {
  std::vector<Vec> rows;
  rows.reserve(e.rank);
  for (int r = 0; r < e.rank; ++r) {
    auto row = e.reduced.row(r);
    rows.emplace_back(row.begin(), row.end());
  }
  return FieldSubspace::span(p, ambient_dim, rows);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void check_field_prime(int p) {
  if (p < 2 || p > kMaxFieldPrime || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(Errc::kDimensionMismatch, "unsupported field size " + std::to_string(p));
  }
}

std::uint8_t field_inverse(int p, std::uint8_t a) {
  // a^(p-2) by square-and-multiply
  int result = 1;
  int base = a % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint8_t>(result);
}

FieldMatrix::FieldMatrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  check_field_prime(p);
  if (rows < 0 || cols < 0) throw Error(Errc::kDimensionMismatch, "negative matrix dimension");
}

FieldMatrix FieldMatrix::identity(int p, int n) {
  FieldMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::from_rows(int p, int cols, const std::vector<Vec>& rows) {
  FieldMatrix m(p, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw Error(Errc::kDimensionMismatch, "row length differs from column count");
    }
    for (int c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void FieldMatrix::set(int r, int c, int value) noexcept {
  int v = value % p_;
  if (v < 0) v += p_;
  data_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint8_t>(v);
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(p_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.data_[static_cast<std::size_t>(c) * rows_ + r] = (*this)(r, c);
  }
  return t;
}

Vec FieldMatrix::apply(std::span<const std::uint8_t> v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw Error(Errc::kDimensionMismatch, "vector length differs from column count");
  }
  Vec out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    int acc = 0;
    for (int c = 0; c < cols_; ++c) acc = (acc + (*this)(r, c) * v[c]) % p_;
    out[r] = static_cast<std::uint8_t>(acc);
  }
  return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
  if (p_ != rhs.p_ || cols_ != rhs.rows_) {
    throw Error(Errc::kDimensionMismatch, "incompatible matrix product");
  }
  FieldMatrix out(p_, rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const int a = (*this)(r, k);
      if (a == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c) {
        out.set(r, c, out(r, c) + a * rhs(k, c));
      }
    }
  }
  return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& rhs) const {
  if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(Errc::kDimensionMismatch, "incompatible matrix sum");
  }
  FieldMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = static_cast<std::uint8_t>((data_[i] + rhs.data_[i]) % p_);
  }
  return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& rhs) const {
  if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(Errc::kDimensionMismatch, "incompatible matrix difference");
  }
  FieldMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = static_cast<std::uint8_t>((data_[i] + p_ - rhs.data_[i]) % p_);
  }
  return out;
}

namespace detail {

RowEchelon rref_dense(const FieldMatrix& m) {
  FieldMatrix a = m;
  const int p = a.p();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int found = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a(i, c) != 0) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    if (found != r) {
      auto x = a.row(found);
      auto y = a.row(r);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    auto pivot_row = a.row(r);
    const int scale = field_inverse(p, pivot_row[c]);
    for (int k = c; k < a.cols(); ++k) pivot_row[k] = static_cast<std::uint8_t>(pivot_row[k] * scale % p);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      auto row = a.row(i);
      const int f = row[c];
      if (f == 0) continue;
      const int neg = p - f;
      for (int k = c; k < a.cols(); ++k) {
        row[k] = static_cast<std::uint8_t>((row[k] + neg * pivot_row[k]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

RowEchelon rref_gf2(const FieldMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  const int words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(rows) * words, 0);
  auto word_row = [&](int r) { return bits.data() + static_cast<std::size_t>(r) * words; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (m(r, c) & 1) word_row(r)[c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    const int w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    int found = -1;
    for (int i = r; i < rows; ++i) {
      if (word_row(i)[w] & mask) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    if (found != r) std::swap_ranges(word_row(found), word_row(found) + words, word_row(r));
    const std::uint64_t* pivot_row = word_row(r);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t* row = word_row(i);
      if (!(row[w] & mask)) continue;
      for (int k = w; k < words; ++k) row[k] ^= pivot_row[k];
    }
    pivots.push_back(c);
    ++r;
  }
  FieldMatrix out(2, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const std::uint64_t* row = word_row(i);
    for (int k = 0; k < words; ++k) {
      for (std::uint64_t word = row[k]; word != 0; word &= word - 1) {
        out.set(i, k * 64 + std::countr_zero(word), 1);
      }
    }
  }
  return {std::move(out), r, std::move(pivots)};
}

}  // namespace detail

RowEchelon rref(const FieldMatrix& m) {
  return m.p() == 2 ? detail::rref_gf2(m) : detail::rref_dense(m);
}

FieldSubspace::FieldSubspace(int p, int ambient_dim) : p_(p), ambient_dim_(ambient_dim) {
  check_field_prime(p);
  if (ambient_dim < 0) throw Error(Errc::kDimensionMismatch, "negative dimension");
}

FieldSubspace FieldSubspace::span(int p, int ambient_dim, const std::vector<Vec>& vectors) {
  FieldSubspace out(p, ambient_dim);
  if (vectors.empty()) return out;
  const RowEchelon e = rref(FieldMatrix::from_rows(p, ambient_dim, vectors));
  out.basis_.reserve(e.rank);
  for (int r = 0; r < e.rank; ++r) {
    auto row = e.reduced.row(r);
    out.basis_.emplace_back(row.begin(), row.end());
  }
  out.pivots_ = e.pivots;
  return out;
}

FieldSubspace FieldSubspace::whole(int p, int ambient_dim) {
  FieldSubspace out(p, ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    Vec e(ambient_dim, 0);
    e[i] = 1;
    out.basis_.push_back(std::move(e));
    out.pivots_.push_back(i);
  }
  return out;
}

BigCount FieldSubspace::size() const { return big_pow(static_cast<unsigned>(p_), dim()); }

Vec FieldSubspace::reduce(std::span<const std::uint8_t> v) const {
  if (static_cast<int>(v.size()) != ambient_dim_) {
    throw Error(Errc::kDimensionMismatch, "vector length differs from ambient dimension");
  }
  Vec w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const int f = w[pivots_[i]];
    if (f == 0) continue;
    const int neg = p_ - f;
    const Vec& row = basis_[i];
    for (int k = pivots_[i]; k < ambient_dim_; ++k) {
      w[k] = static_cast<std::uint8_t>((w[k] + neg * row[k]) % p_);
    }
  }
  return w;
}

bool FieldSubspace::contains(std::span<const std::uint8_t> v) const {
  const Vec w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

bool FieldSubspace::is_subspace_of(const FieldSubspace& other) const {
  check_same_space(*this, other);
  if (dim() > other.dim()) return false;
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const Vec& b) { return other.contains(b); });
}

FieldSubspace kernel(const FieldMatrix& m) {
  const RowEchelon e = rref(m);
  const int p = m.p();
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<Vec> vectors;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), 0);
    v[f] = 1;
    for (int i = 0; i < e.rank; ++i) {
      v[e.pivots[i]] = static_cast<std::uint8_t>((p - e.reduced(i, f)) % p);
    }
    vectors.push_back(std::move(v));
  }
  return FieldSubspace::span(p, m.cols(), vectors);
}

FieldSubspace image(const FieldMatrix& m) {
  return from_rref_rows(rref(m.transpose()), m.p(), m.rows());
}

std::optional<Vec> solve(const FieldMatrix& m, std::span<const std::uint8_t> b) {
  if (static_cast<int>(b.size()) != m.rows()) {
    throw Error(Errc::kDimensionMismatch, "right-hand side length differs from row count");
  }
  FieldMatrix aug(m.p(), m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
    aug.set(r, m.cols(), b[r]);
  }
  const RowEchelon e = rref(aug);
  Vec x(m.cols(), 0);
  for (int i = 0; i < e.rank; ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

std::vector<Vec> solve_all(const FieldMatrix& m, const std::vector<Vec>& rhs) {
  const int k = static_cast<int>(rhs.size());
  if (k == 0) return {};
  FieldMatrix aug(m.p(), m.rows(), m.cols() + k);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
  }
  for (int j = 0; j < k; ++j) {
    if (static_cast<int>(rhs[j].size()) != m.rows()) {
      throw Error(Errc::kDimensionMismatch, "right-hand side length differs from row count");
    }
    for (int r = 0; r < m.rows(); ++r) aug.set(r, m.cols() + j, rhs[j][r]);
  }
  const RowEchelon e = rref(aug);
  std::vector<Vec> out(k, Vec(m.cols(), 0));
  for (int i = 0; i < e.rank; ++i) {
    if (e.pivots[i] >= m.cols()) {
      throw Error(Errc::kNotSubspace, "right-hand side outside the image");
    }
    for (int j = 0; j < k; ++j) out[j][e.pivots[i]] = e.reduced(i, m.cols() + j);
  }
  return out;
}

FieldSubspace sum(const FieldSubspace& u, const FieldSubspace& v) {
  check_same_space(u, v);
  std::vector<Vec> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return FieldSubspace::span(u.p(), u.ambient_dim(), all);
}

FieldSubspace intersect(const FieldSubspace& u, const FieldSubspace& v) {
  check_same_space(u, v);
  const int p = u.p();
  const int n = u.ambient_dim();
  if (u.dim() == 0 || v.dim() == 0) return FieldSubspace(p, n);
  if (u == v) return u;
  const int k = u.dim();
  const int l = v.dim();
  // Columns are the two bases side by side; kernel vectors (a, b) give
  // sum a_i u_i = -sum b_j v_j in the intersection.
  FieldMatrix stacked(p, n, k + l);
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < k; ++i) stacked.set(r, i, u.basis()[i][r]);
    for (int j = 0; j < l; ++j) stacked.set(r, k + j, v.basis()[j][r]);
  }
  const FieldSubspace relations = kernel(stacked);
  std::vector<Vec> vectors;
  vectors.reserve(relations.dim());
  for (const Vec& rel : relations.basis()) {
    Vec w(n, 0);
    for (int i = 0; i < k; ++i) {
      if (rel[i] == 0) continue;
      for (int r = 0; r < n; ++r) w[r] = static_cast<std::uint8_t>((w[r] + rel[i] * u.basis()[i][r]) % p);
    }
    vectors.push_back(std::move(w));
  }
  return FieldSubspace::span(p, n, vectors);
}

FieldSubspace preimage(const FieldMatrix& m, const FieldSubspace& b) {
  if (b.p() != m.p() || b.ambient_dim() != m.rows()) {
    throw Error(Errc::kDimensionMismatch, "subspace does not live in the codomain");
  }
  const FieldSubspace ker = kernel(m);
  const FieldSubspace reachable = intersect(image(m), b);
  std::vector<Vec> vectors = ker.basis();
  for (Vec& x : solve_all(m, reachable.basis())) vectors.push_back(std::move(x));
  return FieldSubspace::span(m.p(), m.cols(), vectors);
}

bool contains(const FieldSubspace& u, std::span<const std::uint8_t> v) { return u.contains(v); }

CosetReps::CosetReps(const FieldSubspace& ambient, const FieldSubspace& sub)
    : p_(ambient.p()), ambient_dim_(ambient.ambient_dim()) {
  if (sub.p() != ambient.p() || sub.ambient_dim() != ambient.ambient_dim() ||
      !sub.is_subspace_of(ambient)) {
    throw Error(Errc::kNotSubspace, "coset enumeration needs sub ⊆ ambient");
  }
  std::vector<Vec> reduced;
  for (const Vec& b : ambient.basis()) reduced.push_back(sub.reduce(b));
  complement_ = FieldSubspace::span(p_, ambient_dim_, reduced).basis();
  coeffs_.assign(complement_.size(), 0);
  current_.assign(ambient_dim_, 0);
}

BigCount CosetReps::count() const {
  return big_pow(static_cast<unsigned>(p_), static_cast<unsigned>(complement_.size()));
}

bool CosetReps::next(Vec& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    out = current_;
    if (complement_.empty()) done_ = true;
    return true;
  }
  int j = static_cast<int>(complement_.size()) - 1;
  for (; j >= 0; --j) {
    // Each step at position j adds one copy of complement_[j]; p copies wrap to 0.
    const Vec& b = complement_[j];
    for (int k = 0; k < ambient_dim_; ++k) {
      current_[k] = static_cast<std::uint8_t>((current_[k] + b[k]) % p_);
    }
    if (++coeffs_[j] < p_) break;
    coeffs_[j] = 0;
  }
  if (j < 0) {
    done_ = true;
    return false;
  }
  out = current_;
  return true;
}

std::vector<Vec> CosetReps::all() const {
  CosetReps copy = *this;
  copy.started_ = false;
  copy.done_ = false;
  std::fill(copy.coeffs_.begin(), copy.coeffs_.end(), 0);
  std::fill(copy.current_.begin(), copy.current_.end(), 0);
  std::vector<Vec> out;
  Vec v;
  while (copy.next(v)) out.push_back(v);
  return out;
}

}  // namespace nilloops
