#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "nilloops/brute_force.hpp"
#include "nilloops/closed_form.hpp"
#include "nilloops/cocycle.hpp"
#include "nilloops/enumerator.hpp"
#include "nilloops/error.hpp"
#include "nilloops/isomorphism.hpp"

using namespace nilloops;
using namespace nilloops::testing;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("nilloops_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

const BranchResult& branch(const CountReport& r, int p, const std::string& label) {
  for (const auto& b : r.branches) {
    if (b.source.p == p && b.f_label == label) return b;
  }
  throw std::runtime_error("no branch " + label);
}

std::vector<LargeCenterCandidate> candidates(Enumerator& e, int n, int p, std::size_t f) {
  const Loop& base = e.library(n / p)[f];
  const CocycleSpace space(base, p);
  std::vector<LargeCenterCandidate> out;
  for (const auto& theta : large_center_set(space).reps) {
    out.push_back({central_extension(base, p, theta), {p, f}});
  }
  return out;
}

std::map<int, const LoopLibrary*> quotient_libraries(Enumerator& e, int n) {
  std::map<int, const LoopLibrary*> libs;
  for (int p : prime_divisors(n)) libs.emplace(n / p, &e.library(n / p));
  return libs;
}

}  // namespace

class Totals : public ::testing::TestWithParam<std::pair<int, const char*>> {};

TEST_P(Totals, MatchTable) {
  const auto [n, expected] = GetParam();
  EXPECT_EQ(to_decimal(count_order(n).total), expected);
}

INSTANTIATE_TEST_SUITE_P(
    Orders, Totals,
    ::testing::Values(std::pair{1, "1"}, std::pair{2, "1"}, std::pair{3, "1"}, std::pair{4, "2"},
                      std::pair{5, "1"}, std::pair{6, "3"}, std::pair{7, "1"}, std::pair{8, "139"},
                      std::pair{9, "10"}, std::pair{10, "1044"}, std::pair{11, "1"},
                      std::pair{12, "2623755"}, std::pair{13, "1"}, std::pair{14, "178962784"},
                      std::pair{15, "66630"}, std::pair{17, "1"}, std::pair{19, "1"},
                      std::pair{21, "17157596742633"},
                      std::pair{22, "123794003928541545927226368"}, std::pair{23, "1"}));

TEST(CountOrder, AgreesWithLibraryAndBruteForce) {
  Enumerator e;
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(e.count_order(n).total, e.library(n).size()) << n;
  for (int n = 4; n <= 6; ++n) EXPECT_EQ(e.count_order(n).total, brute_force_count(n)) << n;
}

TEST(CountOrder, AgreesWithClosedForm) {
  for (int q : {3, 5, 7, 11}) EXPECT_EQ(count_order(2 * q).total, count_2q(q)) << q;
}

TEST(CountOrder, OrderEightBranches) {
  const CountReport r = count_order(8);
  ASSERT_EQ(r.branches.size(), 2u);
  const auto& z4 = branch(r, 2, "Z4");
  const auto& v4 = branch(r, 2, "Z2xZ2");
  EXPECT_EQ(z4.exact + z4.large_classes, 80);
  EXPECT_EQ(v4.exact + v4.large_classes, 60);
  EXPECT_EQ(z4.large_classes, 2);
  EXPECT_EQ(v4.large_classes, 2);
  EXPECT_EQ(z4.large_new + v4.large_new, 3);
}

TEST(CountOrder, OrderTwelveBranches) {
  Enumerator e;
  const CountReport r = e.count_order(12);
  const auto& lib6 = e.library(6);
  const std::size_t i62 = *lib6.find(l62());
  const std::size_t i63 = *lib6.find(l63());
  const BranchResult* b62 = nullptr;
  const BranchResult* b63 = nullptr;
  BigCount large_p2 = 0;
  for (const auto& b : r.branches) {
    if (b.source == Source{2, i62}) b62 = &b;
    if (b.source == Source{2, i63}) b63 = &b;
    if (b.source.p == 2) large_p2 += b.large_new_same_p;
  }
  ASSERT_TRUE(b62 && b63);
  EXPECT_EQ(b62->exact, 1048572);
  EXPECT_EQ(b62->large_classes, 4);
  EXPECT_EQ(b63->exact, 525308);
  EXPECT_EQ(b63->large_classes, 4);
  EXPECT_EQ(branch(r, 2, "Z6").exact, 1049594);
  EXPECT_EQ(branch(r, 2, "Z6").large_classes, 6);
  EXPECT_EQ(large_p2, 11);
  EXPECT_EQ(branch(r, 3, "Z4").exact + branch(r, 3, "Z4").large_classes, 196);
  EXPECT_EQ(branch(r, 3, "Z2xZ2").exact + branch(r, 3, "Z2xZ2").large_classes, 76);
}

TEST(CountOrder, Unsupported) {
  for (int n : {0, 24, 16, 18, 20}) {
    try {
      count_order(n);
      ADD_FAILURE() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kUnsupportedOrder);
    }
  }
}

TEST(CountOrder, WorkerCountDoesNotMatter) {
  EnumConfig one;
  one.workers = 1;
  EnumConfig many;
  many.workers = 4;
  EXPECT_EQ(count_order(12, one), count_order(12, many));
  EXPECT_EQ(count_order(15, one), count_order(15, many));
}

TEST(CountOrder, IdempotentWithWarmCache) {
  const auto dir = scratch("enum_cache");
  EnumConfig config;
  config.cache_dir = dir;
  const CountReport cold = count_order(12, config);
  ASSERT_TRUE(std::filesystem::exists(library_cache_path(dir, 6)));
  const CountReport warm = count_order(12, config);
  EXPECT_EQ(cold, warm);
  EXPECT_EQ(cold, count_order(12));
  std::filesystem::remove_all(dir);
}

TEST(CountOrder, DeepModeCheckpointsBranches) {
  const auto dir = scratch("enum_checkpoint");
  EnumConfig config;
  config.cache_dir = dir;
  config.deep = true;
  const CountReport first = count_order(10, config);
  const auto path = dir / "checkpoint-10" / "branch-5-1.txt";
  ASSERT_TRUE(std::filesystem::exists(path));
  // A finished branch is read back instead of recomputed.
  {
    std::ofstream out(path, std::ios::trunc);
    out << "exact 5\nlarge_classes 1\nlarge_new 0\nlarge_new_same_p 1\n";
  }
  EXPECT_EQ(count_order(10, config).total, first.total + 5);
  // A corrupt checkpoint is recomputed.
  {
    std::ofstream out(path, std::ios::trunc);
    out << "exact banana\n";
  }
  EXPECT_EQ(count_order(10, config), first);
  std::filesystem::remove_all(dir);
}

TEST(DedupLargeCenter, PaperExamples) {
  Enumerator e;
  const auto libs12 = quotient_libraries(e, 12);
  const auto& lib6 = e.library(6);
  const auto z6 = candidates(e, 12, 2, *lib6.find(cyclic_group(6)));
  EXPECT_EQ(z6.size(), 8u);
  EXPECT_EQ(dedup_large_center(z6, libs12).size(), 6u);
  const auto c62 = candidates(e, 12, 2, *lib6.find(l62()));
  EXPECT_EQ(c62.size(), 4u);
  EXPECT_EQ(dedup_large_center(c62, libs12).size(), 4u);
  const auto c63 = candidates(e, 12, 2, *lib6.find(l63()));

  std::vector<LargeCenterCandidate> all;
  for (const auto* part : {&z6, &c62, &c63}) all.insert(all.end(), part->begin(), part->end());
  EXPECT_EQ(dedup_large_center(all, libs12).size(), 11u);
  for (std::size_t f = 0; f < e.library(4).size(); ++f) {
    const auto extra = candidates(e, 12, 3, f);
    all.insert(all.end(), extra.begin(), extra.end());
  }
  EXPECT_EQ(dedup_large_center(all, libs12).size(), 11u);

  const auto libs8 = quotient_libraries(e, 8);
  std::vector<LargeCenterCandidate> eight;
  for (std::size_t f = 0; f < e.library(4).size(); ++f) {
    const auto part = candidates(e, 8, 2, f);
    eight.insert(eight.end(), part.begin(), part.end());
  }
  const auto classes = dedup_large_center(eight, libs8);
  EXPECT_EQ(classes.size(), 3u);
  int hits = 0;
  for (const auto& l : classes) hits += isomorphic(l, direct_product(cyclic_group(2), cyclic_group(4))).has_value();
  EXPECT_EQ(hits, 1);
}

TEST(DedupLargeCenter, AgreesWithBranchAttribution) {
  Enumerator e;
  for (int n : {8, 9, 12, 15, 10}) {
    const CountReport r = e.count_order(n);
    const auto libs = quotient_libraries(e, n);
    std::vector<LargeCenterCandidate> all;
    BigCount attributed = 0;
    for (const auto& b : r.branches) {
      const auto part = candidates(e, n, b.source.p, b.source.f_index);
      all.insert(all.end(), part.begin(), part.end());
      attributed += b.large_new;
    }
    EXPECT_EQ(BigCount(dedup_large_center(all, libs).size()), attributed) << n;
  }
}

TEST(QuotientSignature, ContainsEverySource) {
  Enumerator e;
  const auto libs = quotient_libraries(e, 12);
  const Loop z12 = cyclic_group(12);
  const auto sig = quotient_signature(z12, libs);
  // Z12 / Z2 = Z6, Z12 / Z3 = Z4.
  ASSERT_EQ(sig.size(), 2u);
  EXPECT_EQ(sig[0].p, 2);
  EXPECT_EQ(e.library(6)[sig[0].f_index], e.library(6)[*e.library(6).find(cyclic_group(6))]);
  EXPECT_EQ(sig[1].p, 3);
}

TEST(ExactCenter, BranchesAreDisjoint) {
  std::mt19937 rng(99);
  Enumerator e;
  for (int n : {8, 12, 15}) {
    for (int p : prime_divisors(n)) {
      const auto& lib = e.library(n / p);
      for (std::size_t f = 0; f < lib.size(); ++f) {
        const CocycleSpace space(lib[f], p);
        const LargeCenterSet w = large_center_set(space);
        for (int i = 0; i < 25; ++i) {
          const Cocycle theta = random_vector(space.dim(), p, rng);
          bool in_w = false;
          for (const auto& c : w.components) in_w = in_w || c.contains(theta);
          if (in_w) continue;
          const Loop q = central_extension(lib[f], p, theta);
          const ElementSet z = center(q);
          ASSERT_EQ(z.size(), static_cast<std::size_t>(p));
          EXPECT_TRUE(isomorphic(quotient(q, z).loop, lib[f]));
        }
      }
    }
  }
}

TEST(LargeCenter, NeverIndexTwo) {
  Enumerator e;
  for (int n : {4, 6, 8, 9, 10}) {
    const auto& lib = e.library(n);
    for (std::size_t i = 0; i < lib.size(); ++i) {
      EXPECT_NE(2 * center(lib[i]).size(), static_cast<std::size_t>(n));
    }
  }
  for (int n : {8, 12, 10, 9}) {
    for (int p : prime_divisors(n)) {
      for (std::size_t f = 0; f < e.library(n / p).size(); ++f) {
        for (const auto& c : candidates(e, n, p, f)) {
          EXPECT_NE(2 * center(c.loop).size(), static_cast<std::size_t>(n));
        }
      }
    }
  }
}
