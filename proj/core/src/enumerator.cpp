#include "nilloops/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <set>
#include <thread>
#include <unordered_map>

#include "nilloops/aut_action.hpp"
#include "nilloops/cocycle.hpp"
#include "nilloops/error.hpp"
#include "nilloops/gfp.hpp"

namespace nilloops {
namespace {

void check_index_two(const Loop& q) {
  if (2 * center(q).size() == static_cast<std::size_t>(q.order())) {
    throw std::logic_error("constructed a nilpotent loop with [Q:Z(Q)] = 2");
  }
}

bool needs_deep(int n) { return n == 16 || n == 18 || n == 20; }

std::filesystem::path checkpoint_path(const std::filesystem::path& cache_dir, int n, Source s) {
  return cache_dir / ("checkpoint-" + std::to_string(n)) /
         ("branch-" + std::to_string(s.p) + "-" + std::to_string(s.f_index + 1) + ".txt");
}

std::optional<BranchResult> load_checkpoint(const std::filesystem::path& path, Source s,
                                            const std::string& label) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  BranchResult r{s, label, 0, 0, 0, 0};
  std::string key;
  std::string value;
  int seen = 0;
  try {
    while (in >> key >> value) {
      if (key == "exact") r.exact = parse_big_count(value);
      else if (key == "large_classes") r.large_classes = parse_big_count(value);
      else if (key == "large_new") r.large_new = parse_big_count(value);
      else if (key == "large_new_same_p") r.large_new_same_p = parse_big_count(value);
      else return std::nullopt;
      ++seen;
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  if (seen != 4) return std::nullopt;
  return r;
}

void save_checkpoint(const std::filesystem::path& path, const BranchResult& r) {
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << "exact " << to_decimal(r.exact) << '\n'
        << "large_classes " << to_decimal(r.large_classes) << '\n'
        << "large_new " << to_decimal(r.large_new) << '\n'
        << "large_new_same_p " << to_decimal(r.large_new_same_p) << '\n';
    if (!out) throw Error(Errc::kIo, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

bool operator==(const CountReport& a, const CountReport& b) {
  if (a.order != b.order || a.total != b.total || a.branches.size() != b.branches.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.branches.size(); ++i) {
    const auto& x = a.branches[i];
    const auto& y = b.branches[i];
    if (x.source != y.source || x.f_label != y.f_label || x.exact != y.exact ||
        x.large_classes != y.large_classes || x.large_new != y.large_new ||
        x.large_new_same_p != y.large_new_same_p) {
      return false;
    }
  }
  return true;
}

Enumerator::Enumerator(EnumConfig config) : config_(std::move(config)) {}

const LoopLibrary& Enumerator::library(int n) {
  std::lock_guard lock(mutex_);
  if (auto it = libraries_.find(n); it != libraries_.end()) return *it->second;
  LibraryOptions options{config_.cache_dir, config_.generation_cap};
  if (!options.cache_dir.empty()) {
    if (auto cached = load_library_cache(options.cache_dir, n)) {
      return *libraries_.emplace(n, std::make_unique<LoopLibrary>(std::move(*cached))).first->second;
    }
  }
  // Build bottom-up so that every quotient library is already in the map.
  std::vector<int> pending{n};
  for (std::size_t i = 0; i < pending.size(); ++i) {
    for (int p : prime_divisors(pending[i])) {
      const int m = pending[i] / p;
      if (!libraries_.count(m) && std::find(pending.begin(), pending.end(), m) == pending.end()) {
        pending.push_back(m);
      }
    }
  }
  std::sort(pending.begin(), pending.end());
  for (int m : pending) {
    if (libraries_.count(m)) continue;
    std::optional<LoopLibrary> lib;
    if (!options.cache_dir.empty()) lib = load_library_cache(options.cache_dir, m);
    if (!lib) {
      std::vector<const LoopLibrary*> quotients;
      for (int p : prime_divisors(m)) quotients.push_back(libraries_.at(m / p).get());
      lib = build_library(m, quotients, config_.generation_cap);
      if (!options.cache_dir.empty()) save_library_cache(options.cache_dir, *lib);
    }
    libraries_.emplace(m, std::make_unique<LoopLibrary>(std::move(*lib)));
  }
  return *libraries_.at(n);
}

BranchResult Enumerator::run_branch(int n, Source source) {
  const LoopLibrary& lib = library(n / source.p);
  std::map<int, const LoopLibrary*> libraries;
  for (int p : prime_divisors(n)) libraries.emplace(n / p, &library(n / p));

  const Loop& f = lib[source.f_index];
  BranchResult result{source, loop_label(f, source.f_index), 0, 0, 0, 0};
  const CocycleSpace space(f, source.p);
  const LargeCenterSet w = large_center_set(space);
  ExtensionCounter counter(space, config_.group_order_cap);
  result.exact = counter.count(&w);

  IsoClassifier classes;
  for (const Cocycle& theta : w.reps) {
    Loop q = central_extension(f, source.p, theta);
    check_index_two(q);
    classes.add(std::move(q));
  }
  result.large_classes = classes.size();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto sig = quotient_signature(classes[i].loop(), libraries);
    if (!std::binary_search(sig.begin(), sig.end(), source)) {
      throw std::logic_error("large-center loop does not map back to its own branch");
    }
    if (sig.front() == source) ++result.large_new;
    const auto same_p = std::find_if(sig.begin(), sig.end(),
                                     [&](const Source& s) { return s.p == source.p; });
    if (*same_p == source) ++result.large_new_same_p;
  }
  return result;
}

CountReport Enumerator::count_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(Errc::kUnsupportedOrder, "order " + std::to_string(n) + " is outside 1..23");
  }
  if (needs_deep(n) && !config_.deep) {
    throw Error(Errc::kUnsupportedOrder,
                "order " + std::to_string(n) + " is a long batch job; it needs deep mode");
  }
  CountReport report;
  report.order = n;
  if (n == 1) {
    report.total = 1;
    return report;
  }

  std::vector<Source> sources;
  for (int p : prime_divisors(n)) {
    const LoopLibrary& lib = library(n / p);
    for (std::size_t i = 0; i < lib.size(); ++i) sources.push_back({p, i});
  }

  std::vector<std::optional<BranchResult>> results(sources.size());
  const bool checkpoints = config_.deep && !config_.cache_dir.empty();
  if (checkpoints) {
    for (std::size_t i = 0; i < sources.size(); ++i) {
      const Source s = sources[i];
      const LoopLibrary& lib = library(n / s.p);
      results[i] = load_checkpoint(checkpoint_path(config_.cache_dir, n, s), s,
                                   loop_label(lib[s.f_index], s.f_index));
    }
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= sources.size()) return;
      if (results[i]) continue;
      try {
        BranchResult r = run_branch(n, sources[i]);
        if (checkpoints) save_checkpoint(checkpoint_path(config_.cache_dir, n, sources[i]), r);
        results[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = sources.size();
        return;
      }
    }
  };
  unsigned workers = config_.workers ? config_.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(sources.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  report.total = 0;
  for (auto& r : results) {
    report.total += r->exact + r->large_new;
    report.branches.push_back(std::move(*r));
  }
  return report;
}

CountReport count_order(int n, const EnumConfig& config) {
  Enumerator e(config);
  return e.count_order(n);
}

std::vector<Source> quotient_signature(const Loop& q,
                                       const std::map<int, const LoopLibrary*>& libraries) {
  std::vector<Source> out;
  std::set<ElementSet> seen;
  for (Element x : center(q)) {
    if (x == 0) continue;
    const int k = central_element_order(q, x);
    if (!is_prime(static_cast<std::uint64_t>(k))) continue;
    const Element gens[] = {x};
    ElementSet sub = generated_subloop(q, gens);
    if (!seen.insert(sub).second) continue;
    const Quotient quo = quotient(q, sub);
    const auto lib = libraries.find(q.order() / k);
    if (lib == libraries.end()) {
      throw Error(Errc::kUnsupportedOrder,
                  "no library of order " + std::to_string(q.order() / k) + " supplied");
    }
    const auto index = lib->second->find(quo.loop);
    if (!index) throw std::logic_error("quotient missing from its library");
    out.push_back({k, *index});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Loop> dedup_large_center(const std::vector<LargeCenterCandidate>& candidates,
                                     const std::map<int, const LoopLibrary*>& libraries) {
  struct Entry {
    LoopProfile profile;
    std::vector<Source> signature;
  };
  std::vector<Entry> kept;
  std::unordered_map<Fingerprint, std::vector<std::size_t>, FingerprintHash> buckets;
  for (const auto& c : candidates) {
    Entry e{LoopProfile(c.loop), quotient_signature(c.loop, libraries)};
    auto& bucket = buckets[e.profile.fingerprint()];
    const bool duplicate = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
      return kept[i].signature == e.signature && isomorphic(kept[i].profile, e.profile);
    });
    if (duplicate) continue;
    bucket.push_back(kept.size());
    kept.push_back(std::move(e));
  }
  std::vector<Loop> out;
  out.reserve(kept.size());
  for (const auto& e : kept) out.push_back(e.profile.loop());
  return out;
}

}  // namespace nilloops
