#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "nilloops/brute_force.hpp"
#include "nilloops/error.hpp"
#include "nilloops/isomorphism.hpp"
#include "nilloops/library.hpp"
#include "nilloops/loop_io.hpp"

using namespace nilloops;
using namespace nilloops::testing;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("nilloops_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Library, Sizes) {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 1, 3, 1, 139, 10, 1044, 1};
  for (int n = 1; n <= 11; ++n) EXPECT_EQ(build_library(n).size(), expected[n]) << n;
}

TEST(Library, OrderSix) {
  const LoopLibrary lib = build_library(6);
  ASSERT_EQ(lib.size(), 3u);
  EXPECT_TRUE(lib.find(cyclic_group(6)));
  EXPECT_TRUE(lib.find(l62()));
  EXPECT_TRUE(lib.find(l63()));
  EXPECT_NE(*lib.find(l62()), *lib.find(l63()));
  EXPECT_FALSE(lib.find(cyclic_group(5)));
}

TEST(Library, MembersAreNilpotentAndDistinct) {
  const LoopLibrary lib = build_library(8);
  for (std::size_t i = 0; i < lib.size(); ++i) {
    EXPECT_TRUE(nilpotency_class(lib[i]).has_value());
    EXPECT_NE(2 * center(lib[i]).size(), 8u);
    for (std::size_t j = i + 1; j < lib.size(); ++j) {
      if (lib.profile(i).fingerprint() == lib.profile(j).fingerprint()) {
        EXPECT_FALSE(isomorphic(lib.profile(i), lib.profile(j)));
      }
    }
  }
}

TEST(Library, MatchesBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    const LoopLibrary lib = build_library(n);
    const auto brute = brute_force_loops(n);
    ASSERT_EQ(brute.size(), lib.size()) << n;
    for (const Loop& l : brute) EXPECT_TRUE(lib.find(l)) << n;
  }
}

TEST(Library, Deterministic) {
  EXPECT_EQ(build_library(8).loops(), build_library(8).loops());
}

TEST(Library, GenerationCap) {
  try {
    build_library(12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kGenerationTooLarge);
  }
  LibraryOptions tight;
  tight.generation_cap = 10;
  EXPECT_THROW(build_library(8, tight), Error);
}

TEST(Library, CacheRoundTripAndRepair) {
  const auto dir = scratch("library_cache");
  LibraryOptions options;
  options.cache_dir = dir;
  const LoopLibrary first = build_library(9, options);
  const auto path = library_cache_path(dir, 9);
  ASSERT_TRUE(std::filesystem::exists(path));
  ASSERT_TRUE(load_library_cache(dir, 9));
  EXPECT_EQ(load_library_cache(dir, 9)->loops(), first.loops());
  EXPECT_EQ(build_library(9, options).loops(), first.loops());

  // Truncated file: rejected and rebuilt.
  {
    std::ofstream out(path, std::ios::trunc);
    out << "# nilloops library v1 order 9 count 10\nloop 9\n1 2 3\n";
  }
  EXPECT_FALSE(load_library_cache(dir, 9));
  EXPECT_EQ(build_library(9, options).loops(), first.loops());
  EXPECT_TRUE(load_library_cache(dir, 9));

  // Wrong version header.
  {
    std::ofstream out(path, std::ios::trunc);
    out << "# nilloops library v0 order 9 count 10\n";
    write_loops(out, first.loops());
  }
  EXPECT_FALSE(load_library_cache(dir, 9));
  std::filesystem::remove_all(dir);
}

TEST(Library, Labels) {
  EXPECT_EQ(loop_label(cyclic_group(6), 0), "Z6");
  EXPECT_EQ(loop_label(klein(), 1), "Z2xZ2");
  EXPECT_EQ(loop_label(direct_product(cyclic_group(2), cyclic_group(4)), 3), "Z2xZ4");
  EXPECT_EQ(loop_label(Loop(), 0), "Z1");
  EXPECT_EQ(loop_label(l62(), 1), "L6.2");
}

TEST(BruteForce, Counts) {
  int squares = 0;
  for_each_normalized_latin_square(6, [&](const Loop&) { ++squares; });
  EXPECT_EQ(squares, 9408);
  EXPECT_EQ(brute_force_count(1), 1);
  EXPECT_EQ(brute_force_count(4), 2);
  EXPECT_EQ(brute_force_count(5), 1);
  EXPECT_EQ(brute_force_count(6), 3);
  try {
    brute_force_count(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kOrderTooLarge);
  }
}
