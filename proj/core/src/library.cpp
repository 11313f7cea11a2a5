#include "nilloops/library.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "nilloops/cocycle.hpp"
#include "nilloops/error.hpp"
#include "nilloops/gfp.hpp"
#include "nilloops/loop_io.hpp"

namespace nilloops {
namespace {

constexpr const char* kCacheTag = "nilloops library v1";

std::string cache_comment(int n, std::size_t count) {
  return std::string(kCacheTag) + " order " + std::to_string(n) + " count " + std::to_string(count);
}

void check_index_two(const Loop& q) {
  if (q.order() > 1 && 2 * center(q).size() == static_cast<std::size_t>(q.order())) {
    throw std::logic_error("constructed a nilpotent loop with [Q:Z(Q)] = 2");
  }
}

std::vector<int> abelian_invariants(const Loop& group) {
  if (group.order() == 1) return {};
  Element best = 0;
  int best_order = 1;
  for (Element x = 1; x < group.order(); ++x) {
    const int k = central_element_order(group, x);
    if (k > best_order) {
      best = x;
      best_order = k;
    }
  }
  const Element gens[] = {best};
  const Quotient rest = quotient(group, generated_subloop(group, gens));
  std::vector<int> out = abelian_invariants(rest.loop);
  out.push_back(best_order);
  return out;
}

}  // namespace

std::pair<std::size_t, bool> IsoClassifier::add(Loop loop) {
  LoopProfile profile(std::move(loop));
  if (auto hit = find(profile)) return {*hit, false};
  const std::size_t index = profiles_.size();
  buckets_[profile.fingerprint()].push_back(index);
  profiles_.push_back(std::move(profile));
  return {index, true};
}

std::optional<std::size_t> IsoClassifier::find(const LoopProfile& profile) const {
  auto it = buckets_.find(profile.fingerprint());
  if (it == buckets_.end()) return std::nullopt;
  for (std::size_t i : it->second) {
    if (isomorphic(profiles_[i], profile)) return i;
  }
  return std::nullopt;
}

std::vector<Loop> IsoClassifier::loops() const {
  std::vector<Loop> out;
  out.reserve(profiles_.size());
  for (const auto& p : profiles_) out.push_back(p.loop());
  return out;
}

LoopLibrary::LoopLibrary(int order, std::vector<Loop> loops) : order_(order) {
  for (auto& loop : loops) {
    if (loop.order() != order) throw Error(Errc::kBadShape, "library loop has the wrong order");
    classes_.add(std::move(loop));
  }
}

std::optional<std::size_t> LoopLibrary::find(const Loop& loop) const {
  if (loop.order() != order_) return std::nullopt;
  return classes_.find(LoopProfile(loop));
}

std::optional<std::size_t> LoopLibrary::find(const LoopProfile& profile) const {
  if (profile.loop().order() != order_) return std::nullopt;
  return classes_.find(profile);
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p <= n; ++p) {
    if (n % p == 0 && is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
  }
  return out;
}

LoopLibrary build_library(int n, const std::vector<const LoopLibrary*>& quotients,
                          std::size_t generation_cap) {
  if (n < 1 || n > kMaxLoopOrder) {
    throw Error(Errc::kUnsupportedOrder, "cannot build a library of order " + std::to_string(n));
  }
  if (n == 1) return LoopLibrary(1, {Loop()});
  IsoClassifier classes;
  for (int p : prime_divisors(n)) {
    auto it = std::find_if(quotients.begin(), quotients.end(),
                           [&](const LoopLibrary* lib) { return lib->order() == n / p; });
    if (it == quotients.end()) {
      throw Error(Errc::kUnsupportedOrder,
                  "library of order " + std::to_string(n / p) + " was not supplied");
    }
    const LoopLibrary& lib = **it;
    for (std::size_t i = 0; i < lib.size(); ++i) {
      const CocycleSpace space(lib[i], p);
      CosetReps reps(FieldSubspace::whole(p, space.dim()), space.coboundaries());
      if (reps.count() > generation_cap) {
        throw Error(Errc::kGenerationTooLarge,
                    "branch (Z" + std::to_string(p) + ", #" + std::to_string(i + 1) + ") of order " +
                        std::to_string(n) + " needs " + to_decimal(reps.count()) +
                        " cocycles, cap is " + std::to_string(generation_cap));
      }
      Cocycle theta;
      while (reps.next(theta)) {
        Loop q = central_extension(lib[i], p, theta);
        check_index_two(q);
        classes.add(std::move(q));
      }
    }
  }
  return LoopLibrary(n, classes.loops());
}

LoopLibrary build_library(int n, const LibraryOptions& options) {
  if (!options.cache_dir.empty()) {
    if (auto cached = load_library_cache(options.cache_dir, n)) return std::move(*cached);
  }
  std::vector<LoopLibrary> parts;
  for (int p : prime_divisors(n)) parts.push_back(build_library(n / p, options));
  std::vector<const LoopLibrary*> ptrs;
  for (const auto& lib : parts) ptrs.push_back(&lib);
  LoopLibrary lib = build_library(n, ptrs, options.generation_cap);
  if (!options.cache_dir.empty()) save_library_cache(options.cache_dir, lib);
  return lib;
}

std::filesystem::path library_cache_path(const std::filesystem::path& cache_dir, int n) {
  return cache_dir / ("loops-" + std::to_string(n) + ".txt");
}

std::optional<LoopLibrary> load_library_cache(const std::filesystem::path& cache_dir, int n) {
  const auto path = library_cache_path(cache_dir, n);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  const std::string prefix = "# " + std::string(kCacheTag) + " order " + std::to_string(n) + " count ";
  if (header.rfind(prefix, 0) != 0) return std::nullopt;
  try {
    const std::size_t count = std::stoul(header.substr(prefix.size()));
    std::vector<Loop> loops = parse_loops(in);
    if (loops.size() != count) return std::nullopt;
    for (const auto& loop : loops) {
      if (loop.order() != n || !nilpotency_class(loop)) return std::nullopt;
    }
    LoopLibrary lib(n, std::move(loops));
    if (lib.size() != count) return std::nullopt;
    return lib;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void save_library_cache(const std::filesystem::path& cache_dir, const LoopLibrary& library) {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) throw Error(Errc::kIo, "cannot create " + cache_dir.string() + ": " + ec.message());
  write_loops_file(library_cache_path(cache_dir, library.order()), library.loops(),
                   cache_comment(library.order(), library.size()));
}

std::string loop_label(const Loop& loop, std::size_t library_index) {
  if (is_associative(loop) && is_commutative(loop)) {
    const std::vector<int> factors = abelian_invariants(loop);
    if (factors.empty()) return "Z1";
    std::ostringstream out;
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "x" : "") << 'Z' << factors[i];
    return out.str();
  }
  return "L" + std::to_string(loop.order()) + "." + std::to_string(library_index + 1);
}

}  // namespace nilloops
