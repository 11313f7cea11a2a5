#include "nilloops/cocycle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <set>

#include "nilloops/error.hpp"

namespace nilloops {
namespace {

// Coefficient rows for the linear conditions describing W_x.
class EquationBuilder {
 public:
  explicit EquationBuilder(const CocycleSpace& space) : space_(space) {}

  void begin() { current_.assign(space_.dim(), 0); }
  void add(Element x, Element y, int coeff) {
    if (x == 0 || y == 0) return;
    auto& slot = current_[space_.coordinate(x, y)];
    slot = (slot + coeff % space_.p() + space_.p()) % space_.p();
  }
  void end() {
    if (std::any_of(current_.begin(), current_.end(), [](int v) { return v != 0; })) {
      rows_.emplace_back(current_.begin(), current_.end());
    }
  }
  FieldMatrix matrix() const {
    return FieldMatrix::from_rows(space_.p(), space_.dim(), rows_);
  }

 private:
  const CocycleSpace& space_;
  std::vector<int> current_;
  std::vector<Vec> rows_;
};

}  // namespace

CocycleSpace::CocycleSpace(Loop base, int p)
    : base_(std::move(base)),
      p_(p),
      dim_((base_.order() - 1) * (base_.order() - 1)),
      coboundaries_(p, dim_),
      base_center_(center(base_)) {
  std::vector<Vec> generators;
  for (Element c = 1; c < base_.order(); ++c) generators.push_back(tau_hat(c));
  coboundaries_ = FieldSubspace::span(p_, dim_, generators);
}

Cocycle CocycleSpace::coboundary(std::span<const std::uint8_t> tau) const {
  const int m = base_.order();
  auto t = [&](Element x) { return x == 0 ? 0 : static_cast<int>(tau[x - 1]); };
  Cocycle theta(dim_, 0);
  for (Element x = 1; x < m; ++x) {
    for (Element y = 1; y < m; ++y) {
      const int v = (t(base_.mul(x, y)) - t(x) - t(y)) % p_;
      theta[coordinate(x, y)] = static_cast<std::uint8_t>(v < 0 ? v + p_ : v);
    }
  }
  return theta;
}

Cocycle CocycleSpace::tau_hat(Element c) const {
  Vec tau(base_.order() - 1, 0);
  tau[c - 1] = 1;
  return coboundary(tau);
}

FieldSubspace CocycleSpace::large_center_subspace(Element x) const {
  if (x <= 0 || x >= base_.order() ||
      !std::binary_search(base_center_.begin(), base_center_.end(), x)) {
    throw Error(Errc::kNotCentral, "W_x needs a non-identity central element");
  }
  const int m = base_.order();
  EquationBuilder eq(*this);
  for (Element y = 0; y < m; ++y) {
    eq.begin();
    eq.add(x, y, 1);
    eq.add(y, x, -1);
    eq.end();
    for (Element z = 0; z < m; ++z) {
      eq.begin();
      eq.add(x, y, 1);
      eq.add(base_.mul(x, y), z, 1);
      eq.add(y, z, -1);
      eq.add(x, base_.mul(y, z), -1);
      eq.end();

      eq.begin();
      eq.add(y, x, 1);
      eq.add(base_.mul(y, x), z, 1);
      eq.add(x, z, -1);
      eq.add(y, base_.mul(x, z), -1);
      eq.end();
    }
  }
  FieldSubspace w = kernel(eq.matrix());
#ifndef NDEBUG
  // theta(y,z) + theta(yz,x) = theta(z,x) + theta(y,zx) follows from the others.
  for (const Vec& theta : w.basis()) {
    for (Element y = 0; y < m; ++y) {
      for (Element z = 0; z < m; ++z) {
        const int lhs = value(theta, y, z) + value(theta, base_.mul(y, z), x);
        const int rhs = value(theta, z, x) + value(theta, y, base_.mul(z, x));
        assert((lhs - rhs) % p_ == 0);
      }
    }
  }
#endif
  return w;
}

LargeCenterSet large_center_set(const CocycleSpace& space) {
  LargeCenterSet out;
  std::vector<FieldSubspace> all;
  for (Element x : space.base_center()) {
    if (x != 0) all.push_back(space.large_center_subspace(x));
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const FieldSubspace& a, const FieldSubspace& b) { return a.dim() > b.dim(); });
  for (auto& w : all) {
    const bool covered = std::any_of(out.components.begin(), out.components.end(),
                                     [&](const FieldSubspace& c) { return w.is_subspace_of(c); });
    if (!covered) out.components.push_back(std::move(w));
  }

  const std::size_t k = out.components.size();
  out.intersections.reserve(std::size_t{1} << k);
  out.intersections.push_back(FieldSubspace::whole(space.p(), space.dim()));
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    const std::size_t top = std::bit_width(mask) - 1;
    const std::size_t rest = mask & ~(std::size_t{1} << top);
    out.intersections.push_back(rest == 0 ? out.components[top]
                                          : intersect(out.intersections[rest], out.components[top]));
  }
  out.size = count_in_union(out, FieldSubspace::whole(space.p(), space.dim()));

  std::set<Cocycle> seen;
  for (const auto& component : out.components) {
    CosetReps reps(component, space.coboundaries());
    Cocycle theta;
    while (reps.next(theta)) {
      if (seen.insert(theta).second) out.reps.push_back(theta);
    }
  }
  assert(BigCount(out.reps.size()) * space.coboundaries().size() == out.size);
  return out;
}

BigCount count_in_union(const LargeCenterSet& w, const FieldSubspace& x) {
  BigCount total = 0;
  const std::size_t k = w.components.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    const FieldSubspace meet = intersect(x, w.intersections[mask]);
    if (std::popcount(mask) % 2 == 1) {
      total += meet.size();
    } else {
      total -= meet.size();
    }
  }
  return total;
}

}  // namespace nilloops
