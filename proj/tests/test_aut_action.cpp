#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"
#include "nilloops/aut_action.hpp"
#include "nilloops/error.hpp"
#include "nilloops/isomorphism.hpp"

using namespace nilloops;
using namespace nilloops::testing;

namespace {

Cocycle add(const Cocycle& a, const Cocycle& b, int scale, int p) {
  Cocycle out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>((a[i] + scale * b[i]) % p);
  return out;
}

int perm_order(const Permutation& a) {
  int k = 1;
  Permutation x = a;
  for (;;) {
    bool id = true;
    for (std::size_t i = 0; i < x.size(); ++i) id = id && x[i] == static_cast<int>(i);
    if (id) return k;
    x = compose(a, x);
    ++k;
  }
}

int unit_order(int beta, int p) {
  int k = 1;
  for (int x = beta % p; x != 1; x = x * beta % p) ++k;
  return k;
}

// The group element (alpha, beta) with alpha of the requested order, if any.
std::optional<int> element_with_alpha_order(const AutGroup& g, int order) {
  for (int i = 0; i < g.order(); ++i) {
    if (g[i].beta == 1 && perm_order(g[i].alpha) == order) return i;
  }
  return std::nullopt;
}

}  // namespace

TEST(Action, AxiomsAndLinearity) {
  std::mt19937 rng(31);
  for (const Loop& f : {cyclic_group(4), klein(), cyclic_group(5), l63()}) {
    for (int p : {2, 3, 5}) {
      const CocycleSpace space(f, p);
      const AutGroup g(space);
      ASSERT_EQ(g.index_of(g[0]), 0);
      const Cocycle theta = random_vector(space.dim(), p, rng);
      const Cocycle other = random_vector(space.dim(), p, rng);
      EXPECT_EQ(act(space, g[0], theta), theta);
      for (int i = 0; i < g.order(); ++i) {
        const Cocycle gi = act(space, g[i], theta);
        EXPECT_EQ(r_matrix(space, g[i]).apply(theta), gi);
        EXPECT_EQ(act(space, g[i], add(theta, other, 2, p)),
                  add(gi, act(space, g[i], other), 2, p));
        for (Element c = 1; c < f.order(); ++c) {
          EXPECT_TRUE(space.coboundaries().contains(act(space, g[i], space.tau_hat(c))));
        }
        for (int j = 0; j < g.order(); ++j) {
          const int ij = g.group().mul(i, j);
          EXPECT_EQ(act(space, g[i], act(space, g[j], theta)), act(space, g[ij], theta));
          EXPECT_EQ(g[ij].alpha, compose(g[i].alpha, g[j].alpha));
          EXPECT_EQ(g[ij].beta, g[i].beta * g[j].beta % p);
        }
      }
    }
  }
}

TEST(Action, ActedCocycleGivesIsomorphicLoop) {
  std::mt19937 rng(17);
  for (const Loop& f : {cyclic_group(4), klein(), cyclic_group(5), cyclic_group(6), l63()}) {
    for (int p : {2, 3, 5}) {
      const CocycleSpace space(f, p);
      const AutGroup g(space);
      for (int i = 0; i < g.order(); ++i) {
        const Cocycle theta = random_vector(space.dim(), p, rng);
        const Cocycle moved = act(space, g[i], theta);
        // (x, a) -> (alpha x, beta a)
        Permutation map(f.order() * p);
        for (Element x = 0; x < f.order(); ++x) {
          for (int a = 0; a < p; ++a) map[x * p + a] = g[i].alpha[x] * p + a * g[i].beta % p;
        }
        EXPECT_TRUE(is_isomorphism(central_extension(f, p, theta), central_extension(f, p, moved), map));
      }
    }
  }
}

TEST(Action, OperatorIdentities) {
  for (const Loop& f : {cyclic_group(5), cyclic_group(7), klein()}) {
    for (int p : {2, 3}) {
      const CocycleSpace space(f, p);
      const AutGroup g(space);
      for (int i = 0; i < g.order(); ++i) {
        const FieldMatrix s = s_matrix(space, g[i]);
        const FieldMatrix t = t_matrix(space, g[i]);
        if (unit_order(g[i].beta, p) > 0 && perm_order(g[i].alpha) % unit_order(g[i].beta, p) == 0) {
          const FieldMatrix zero(p, space.dim(), space.dim());
          EXPECT_EQ(t * s, zero);
          EXPECT_EQ(s * t, zero);
        }
      }
    }
  }
}

TEST(Inv, MatchesDefinitionExhaustively) {
  for (auto [f, p] : {std::pair{cyclic_group(4), 2}, {klein(), 2}, {cyclic_group(3), 3}, {cyclic_group(3), 2}}) {
    const CocycleSpace space(f, p);
    const AutGroup g(space);
    for (int i = 0; i < g.order(); ++i) {
      const FieldSubspace inv = inv_single(space, g[i]);
      Cocycle theta = space.zero();
      BigCount members = 0;
      for (;;) {
        const Cocycle diff = add(act(space, g[i], theta), theta, p - 1, p);
        const bool fixed = space.coboundaries().contains(diff);
        EXPECT_EQ(inv.contains(theta), fixed);
        members += fixed;
        int k = 0;
        while (k < space.dim() && ++theta[k] == p) theta[k++] = 0;
        if (k == space.dim()) break;
      }
      EXPECT_EQ(members, inv.size());
    }
  }
}

TEST(Inv, MonotoneOnTheLattice) {
  for (auto [f, p] : {std::pair{klein(), 2}, {cyclic_group(5), 3}, {cyclic_group(6), 2},
                      {direct_product(klein(), cyclic_group(2)), 2}, {cyclic_group(3), 3}}) {
    const CocycleSpace space(f, p);
    ExtensionCounter counter(space);
    const auto& lat = counter.lattice();
    for (std::size_t h = 0; h < lat.size(); ++h) {
      for (std::size_t k = 0; k < lat.size(); ++k) {
        if (lat.contains(k, h)) {
          EXPECT_TRUE(counter.inv_subgroup(k).is_subspace_of(counter.inv_subgroup(h)));
        }
      }
      EXPECT_TRUE(space.coboundaries().is_subspace_of(counter.inv_subgroup(h)));
    }
    const auto star = counter.inv_star_sizes();
    const BigCount all = std::accumulate(star.begin(), star.end(), BigCount(0));
    EXPECT_EQ(all, FieldSubspace::whole(p, space.dim()).size());
    for (const auto& s : star) EXPECT_GE(s, 0);
  }
}

TEST(Inv, CollapseForKleinGroup) {
  const CocycleSpace space(klein(), 2);
  ExtensionCounter counter(space);
  const auto& lat = counter.lattice();
  ASSERT_EQ(counter.aut().order(), 6);
  const auto rho = element_with_alpha_order(counter.aut(), 3);
  ASSERT_TRUE(rho);
  const std::size_t h = lat.generated_by({*rho});
  EXPECT_EQ(counter.inv_subgroup(h), counter.inv_subgroup(lat.size() - 1));
  EXPECT_EQ(counter.inv_subgroup(h).dim(), 3);
  for (int i = 0; i < 6; ++i) {
    if (perm_order(counter.aut()[i].alpha) == 2) EXPECT_EQ(counter.inv_element(i).dim(), 6);
  }
  // Any two of the order-two spaces meet exactly in Inv(rho).
  std::vector<int> sigmas;
  for (int i = 0; i < 6; ++i) {
    if (perm_order(counter.aut()[i].alpha) == 2) sigmas.push_back(i);
  }
  ASSERT_EQ(sigmas.size(), 3u);
  EXPECT_EQ(intersect(counter.inv_element(sigmas[0]), counter.inv_element(sigmas[1])),
            counter.inv_subgroup(h));
}

TEST(Inv, PaperCaseDimensions) {
  {
    const CocycleSpace z4(cyclic_group(4), 2);
    ExtensionCounter c(z4);
    EXPECT_EQ(c.aut().order(), 2);
    EXPECT_EQ(c.inv_element(1).dim(), 7);
  }
  {
    const CocycleSpace z3(cyclic_group(3), 3);
    ExtensionCounter c(z3);
    ASSERT_EQ(c.aut().order(), 4);
    // indices: (id,1) (id,2) (alpha,1) (alpha,2)
    EXPECT_EQ(c.inv_element(1), z3.coboundaries());
    EXPECT_EQ(c.inv_element(2).dim(), 2);
    EXPECT_EQ(c.inv_element(3).dim(), 3);
    EXPECT_EQ(intersect(c.inv_element(2), c.inv_element(3)), c.inv_element(1));
  }
  {
    const CocycleSpace z6(cyclic_group(6), 2);
    ExtensionCounter c(z6);
    ASSERT_EQ(c.aut().order(), 2);
    const LargeCenterSet w = large_center_set(z6);
    EXPECT_EQ(z6.coboundaries().dim(), 4);
    EXPECT_EQ(c.inv_element(1).dim(), 15);
    EXPECT_EQ(intersect(c.inv_element(1), w.components.at(0)).dim(), 6);
  }
  {
    const CocycleSpace s(l62(), 2);
    EXPECT_EQ(AutGroup(s).order(), 1);
  }
  {
    const CocycleSpace s(l63(), 2);
    ExtensionCounter c(s);
    ASSERT_EQ(c.aut().order(), 2);
    EXPECT_EQ(c.inv_element(1).dim(), 16);
    for (const auto& comp : large_center_set(s).components) {
      EXPECT_TRUE(comp.is_subspace_of(c.inv_element(1)));
    }
  }
}

TEST(Inv, PrimeCyclicFormulas) {
  const std::pair<int, int> cases[] = {{2, 3}, {2, 5}, {3, 5}, {2, 7}, {3, 7}, {5, 3}, {7, 3}, {5, 7}};
  for (auto [p, q] : cases) {
    const CocycleSpace space(cyclic_group(q), p);
    const AutGroup g(space);
    EXPECT_EQ(g.order(), (q - 1) * (p - 1));
    for (int i = 0; i < g.order(); ++i) {
      const int a = perm_order(g[i].alpha);
      const int b = unit_order(g[i].beta, p);
      const bool divides = a % b == 0;
      const FieldMatrix s = s_matrix(space, g[i]);
      const int ker = kernel(s).dim();
      const int meet = intersect(image(s), space.coboundaries()).dim();
      const int inv = inv_single(space, g[i]).dim();
      EXPECT_EQ(ker, divides ? (q - 1) * (q - 1) / a : 0) << p << ' ' << q << ' ' << i;
      if (divides) {
        EXPECT_EQ(meet, (q - 1) - (q - 1) / a) << p << ' ' << q << ' ' << i;
        EXPECT_EQ(kernel(t_matrix(space, g[i])), image(s));
        EXPECT_EQ(inv_single(space, g[i]), sum(kernel(s), space.coboundaries()));
      }
      EXPECT_EQ(inv, divides ? (q - 1) + (q - 1) * (q - 2) / a : q - 1) << p << ' ' << q << ' ' << i;
    }
  }
}

TEST(IsoClassCount, SmallBranches) {
  EXPECT_EQ(iso_class_count(CocycleSpace(cyclic_group(4), 2), false), 80);
  EXPECT_EQ(iso_class_count(CocycleSpace(klein(), 2), false), 60);
  EXPECT_EQ(iso_class_count(CocycleSpace(cyclic_group(3), 3), false), 10);
  EXPECT_EQ(iso_class_count(CocycleSpace(cyclic_group(5), 2), false), 1044);
  EXPECT_EQ(iso_class_count(CocycleSpace(cyclic_group(7), 2), false), 178962784);
  EXPECT_EQ(iso_class_count(CocycleSpace(Loop(), 5), false), 1);
}

TEST(IsoClassCount, ExactCenterBranchesOfOrderTwelve) {
  EXPECT_EQ(iso_class_count(CocycleSpace(cyclic_group(6), 2), true), 1049594);
  EXPECT_EQ(iso_class_count(CocycleSpace(l62(), 2), true), 1048572);
  EXPECT_EQ(iso_class_count(CocycleSpace(l63(), 2), true), 525308);
}

TEST(IsoClassCount, GroupTooLarge) {
  const CocycleSpace space(direct_product(klein(), cyclic_group(2)), 2);
  try {
    ExtensionCounter c(space, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kGroupTooLarge);
  }
}
