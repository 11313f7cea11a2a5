#include "nilloops/aut_action.hpp"

#include <algorithm>
#include <map>

#include "nilloops/error.hpp"
#include "nilloops/isomorphism.hpp"

namespace nilloops {

Cocycle act(const CocycleSpace& space, const AutPair& g, std::span<const std::uint8_t> theta) {
  const int m = space.base().order();
  const Permutation inv = inverse(g.alpha);
  Cocycle out(space.dim(), 0);
  for (Element x = 1; x < m; ++x) {
    for (Element y = 1; y < m; ++y) {
      out[space.coordinate(x, y)] =
          static_cast<std::uint8_t>(g.beta * space.value(theta, inv[x], inv[y]) % space.p());
    }
  }
  return out;
}

FieldMatrix r_matrix(const CocycleSpace& space, const AutPair& g) {
  const int m = space.base().order();
  const Permutation inv = inverse(g.alpha);
  FieldMatrix r(space.p(), space.dim(), space.dim());
  for (Element x = 1; x < m; ++x) {
    for (Element y = 1; y < m; ++y) {
      r.set(space.coordinate(x, y), space.coordinate(inv[x], inv[y]), g.beta);
    }
  }
  return r;
}

FieldMatrix s_matrix(const CocycleSpace& space, const AutPair& g) {
  return FieldMatrix::identity(space.p(), space.dim()) - r_matrix(space, g);
}

FieldMatrix t_matrix(const CocycleSpace& space, const AutPair& g) {
  const FieldMatrix r = r_matrix(space, g);
  Permutation identity(g.alpha.size());
  for (std::size_t x = 0; x < identity.size(); ++x) identity[x] = static_cast<int>(x);
  int k = 1;
  for (Permutation a = g.alpha; a != identity; a = compose(g.alpha, a)) ++k;
  FieldMatrix power = FieldMatrix::identity(space.p(), space.dim());
  FieldMatrix total = power;
  for (int i = 1; i < k; ++i) {
    power = power * r;
    total = total + power;
  }
  return total;
}

FieldSubspace inv_single(const CocycleSpace& space, const AutPair& g) {
  return preimage(s_matrix(space, g), space.coboundaries());
}

AutGroup::AutGroup(std::vector<Permutation> automorphisms, int p)
    : p_(p), automorphisms_(std::move(automorphisms)) {
  std::sort(automorphisms_.begin(), automorphisms_.end());
  for (const auto& a : automorphisms_) {
    for (int beta = 1; beta < p; ++beta) elements_.push_back({a, beta});
  }
  std::map<Permutation, int> index;
  for (std::size_t a = 0; a < automorphisms_.size(); ++a) index.emplace(automorphisms_[a], a);
  const int n = order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& a = elements_[i];
      const auto& b = elements_[j];
      const int alpha = index.at(compose(a.alpha, b.alpha));
      const int beta = a.beta * b.beta % p;
      table[static_cast<std::size_t>(i) * n + j] = alpha * (p - 1) + (beta - 1);
    }
  }
  group_ = std::make_unique<FiniteGroup>(n, std::move(table));
}

AutGroup::AutGroup(const CocycleSpace& space)
    : AutGroup(automorphism_group(space.base()), space.p()) {}

int AutGroup::index_of(const AutPair& g) const {
  auto it = std::lower_bound(automorphisms_.begin(), automorphisms_.end(), g.alpha);
  if (it == automorphisms_.end() || *it != g.alpha || g.beta < 1 || g.beta >= p_) {
    throw Error(Errc::kDimensionMismatch, "not an element of the automorphism group");
  }
  return static_cast<int>(it - automorphisms_.begin()) * (p_ - 1) + (g.beta - 1);
}

ExtensionCounter::ExtensionCounter(const CocycleSpace& space, std::size_t group_order_cap)
    : space_(space),
      aut_(space),
      lattice_((static_cast<std::size_t>(aut_.order()) > group_order_cap
                    ? throw Error(Errc::kGroupTooLarge,
                                  "automorphism group of order " + std::to_string(aut_.order()) +
                                      " exceeds the cap " + std::to_string(group_order_cap))
                    : aut_.group()),
               group_order_cap),
      element_cache_(aut_.order()),
      subgroup_cache_(lattice_.size()) {}

const FieldSubspace& ExtensionCounter::inv_element(int g) {
  auto& slot = element_cache_[g];
  if (!slot) slot = inv_single(space_, aut_[g]);
  return *slot;
}

const FieldSubspace& ExtensionCounter::inv_subgroup(std::size_t h) {
  auto& slot = subgroup_cache_[h];
  if (!slot) {
    FieldSubspace acc = FieldSubspace::whole(space_.p(), space_.dim());
    for (int g : lattice_[h].generators) {
      if (g != 0) acc = intersect(acc, inv_element(g));
    }
    slot = std::move(acc);
  }
  return *slot;
}

std::vector<BigCount> ExtensionCounter::inv_sizes() {
  std::vector<BigCount> sizes(lattice_.size());
  for (std::size_t h = 0; h < lattice_.size(); ++h) {
    sizes[h] = inv_subgroup(lattice_.representative_of(h)).size();
  }
  return sizes;
}

std::vector<BigCount> ExtensionCounter::inv_star_sizes() {
  const auto sizes = inv_sizes();
  return nilloops::inv_star_sizes(lattice_, sizes);
}

BigCount ExtensionCounter::count(const LargeCenterSet* w) {
  std::vector<BigCount> star = inv_star_sizes();
  if (w != nullptr) {
    std::vector<BigCount> in_w(lattice_.size());
    std::vector<BigCount> rep_value(lattice_.size(), -1);
    for (std::size_t h = 0; h < lattice_.size(); ++h) {
      const std::size_t rep = lattice_.representative_of(h);
      if (rep_value[rep] < 0) rep_value[rep] = count_in_union(*w, inv_subgroup(rep));
      in_w[h] = rep_value[rep];
    }
    const auto star_w = nilloops::inv_star_sizes(lattice_, in_w);
    for (std::size_t h = 0; h < star.size(); ++h) star[h] -= star_w[h];
  }
  const BigCount cob = space_.coboundaries().size();
  BigCount total = 0;
  for (std::size_t h : lattice_.class_representatives()) {
    const BigCount denom = cob * lattice_[h].normalizer_index;
    if (star[h] % denom != 0) {
      throw Error(Errc::kNonIntegralCount,
                  "|Inv*(H)| = " + to_decimal(star[h]) + " is not divisible by " + to_decimal(denom));
    }
    total += star[h] / denom;
  }
  return total;
}

std::vector<BigCount> inv_star_sizes(const SubgroupLattice& lattice,
                                     std::span<const BigCount> sizes) {
  const std::size_t n = lattice.size();
  std::vector<BigCount> star(n);
  for (std::size_t i = n; i-- > 0;) {
    BigCount value = sizes[i];
    const std::size_t order = lattice[i].elements.size();
    for (std::size_t k = i + 1; k < n; ++k) {
      if (lattice[k].elements.size() > order && lattice.contains(k, i)) value -= star[k];
    }
    star[i] = value;
  }
  return star;
}

BigCount iso_class_count(const CocycleSpace& space, bool exclude_w, std::size_t group_order_cap) {
  ExtensionCounter counter(space, group_order_cap);
  if (!exclude_w) return counter.count();
  const LargeCenterSet w = large_center_set(space);
  return counter.count(&w);
}

}  // namespace nilloops
