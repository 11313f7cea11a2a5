#include "nilloops/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nilloops {
namespace {

constexpr int kRefinementRounds = 2;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over a running combination
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t cycle_type_hash(const Loop& loop, Element x, bool left) {
  const int n = loop.order();
  std::vector<char> seen(n, 0);
  std::vector<int> lengths;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int y = start; !seen[y]; y = left ? loop.mul(x, y) : loop.mul(y, x)) {
      seen[y] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  std::uint64_t h = left ? 0x1234 : 0x5678;
  for (int len : lengths) h = mix(h, static_cast<std::uint64_t>(len));
  return h;
}

struct SearchState {
  std::vector<Element> forward;   // -1 when unmapped
  std::vector<Element> backward;  // -1 when unused
  std::vector<Element> domain;    // mapped elements in insertion order
};

class Matcher {
 public:
  Matcher(const LoopProfile& a, const LoopProfile& b) : a_(a), b_(b), n_(a.loop().order()) {
    choose_generators();
  }

  std::optional<Permutation> first() {
    std::optional<Permutation> found;
    search(0, initial_state(), [&](const Permutation& p) {
      found = p;
      return true;
    });
    return found;
  }

  std::vector<Permutation> all() {
    std::vector<Permutation> out;
    search(0, initial_state(), [&](const Permutation& p) {
      out.push_back(p);
      return false;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  SearchState initial_state() const {
    SearchState s{std::vector<Element>(n_, -1), std::vector<Element>(n_, -1), {}};
    s.forward[0] = 0;
    s.backward[0] = 0;
    s.domain.push_back(0);
    return s;
  }

  // Greedy generating sequence, preferring elements whose invariant class in
  // the target is small.
  void choose_generators() {
    const auto& ca = a_.colors();
    const auto& cb = b_.colors();
    std::vector<int> class_size(n_, 0);
    for (int x = 0; x < n_; ++x) {
      class_size[x] = static_cast<int>(std::count(cb.begin(), cb.end(), ca[x]));
    }
    ElementSet covered{0};
    while (static_cast<int>(covered.size()) < n_) {
      Element best = -1;
      for (int x = 1; x < n_; ++x) {
        if (std::binary_search(covered.begin(), covered.end(), x)) continue;
        if (best < 0 || class_size[x] < class_size[best]) best = x;
      }
      generators_.push_back(best);
      covered = generated_subloop(a_.loop(), generators_);
    }
  }

  bool assign(SearchState& s, Element x, Element y) const {
    if (s.forward[x] >= 0) return s.forward[x] == y;
    if (s.backward[y] >= 0) return false;
    if (a_.colors()[x] != b_.colors()[y]) return false;
    s.forward[x] = y;
    s.backward[y] = x;
    s.domain.push_back(x);
    return true;
  }

  // Extends the partial map over the subloop generated by its domain.
  bool close(SearchState& s, std::size_t first_new) const {
    const Loop& la = a_.loop();
    const Loop& lb = b_.loop();
    for (std::size_t i = first_new; i < s.domain.size(); ++i) {
      const Element e = s.domain[i];
      for (std::size_t j = 0; j < s.domain.size(); ++j) {
        const Element d = s.domain[j];
        if (!assign(s, la.mul(e, d), lb.mul(s.forward[e], s.forward[d]))) return false;
        if (!assign(s, la.mul(d, e), lb.mul(s.forward[d], s.forward[e]))) return false;
      }
    }
    return true;
  }

  template <typename Visit>
  bool search(std::size_t depth, const SearchState& state, Visit&& visit) const {
    if (depth == generators_.size()) return visit(state.forward);
    const Element g = generators_[depth];
    const auto& cb = b_.colors();
    for (int y = 1; y < n_; ++y) {
      if (state.backward[y] >= 0 || cb[y] != a_.colors()[g]) continue;
      SearchState next = state;
      const std::size_t first_new = next.domain.size();
      if (!assign(next, g, y)) continue;
      if (!close(next, first_new)) continue;
      if (search(depth + 1, next, visit)) return true;
    }
    return false;
  }

  const LoopProfile& a_;
  const LoopProfile& b_;
  int n_;
  std::vector<Element> generators_;
};

}  // namespace

std::uint64_t Fingerprint::hash() const noexcept {
  std::uint64_t h = mix(0, static_cast<std::uint64_t>(order));
  h = mix(h, static_cast<std::uint64_t>(center_size));
  h = mix(h, static_cast<std::uint64_t>(nilpotency_class + 1));
  h = mix(h, (commutative ? 1u : 0u) | (associative ? 2u : 0u));
  for (auto c : element_classes) h = mix(h, c);
  return h;
}

std::vector<std::uint64_t> element_invariants(const Loop& loop) {
  const int n = loop.order();
  std::vector<std::uint64_t> assoc_first(n, 0), assoc_middle(n, 0), assoc_last(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = loop.mul(x, y);
      for (int z = 0; z < n; ++z) {
        if (loop.mul(xy, z) == loop.mul(x, loop.mul(y, z))) {
          ++assoc_first[x];
          ++assoc_middle[y];
          ++assoc_last[z];
        }
      }
    }
  }
  std::vector<std::uint64_t> colors(n);
  for (int x = 0; x < n; ++x) {
    std::uint64_t commuting = 0;
    for (int y = 0; y < n; ++y) commuting += loop.mul(x, y) == loop.mul(y, x);
    int power_steps = 0;
    for (Element p = x; power_steps <= n; p = loop.mul(p, x)) {
      ++power_steps;
      if (p == 0) break;
    }
    std::uint64_t h = mix(0, x == 0 ? 1 : 2);
    h = mix(h, is_central(loop, x) ? 1 : 0);
    h = mix(h, commuting);
    h = mix(h, assoc_first[x]);
    h = mix(h, assoc_middle[x]);
    h = mix(h, assoc_last[x]);
    h = mix(h, cycle_type_hash(loop, x, true));
    h = mix(h, cycle_type_hash(loop, x, false));
    h = mix(h, static_cast<std::uint64_t>(power_steps));
    h = mix(h, loop.mul(x, x) == 0 ? 1 : 0);
    colors[x] = h;
  }
  std::vector<std::uint64_t> next(n);
  std::vector<std::uint64_t> neighbourhood(n);
  for (int round = 0; round < kRefinementRounds; ++round) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        neighbourhood[y] = mix(mix(colors[y], colors[loop.mul(x, y)]), colors[loop.mul(y, x)]);
      }
      std::sort(neighbourhood.begin(), neighbourhood.end());
      std::uint64_t h = colors[x];
      for (auto v : neighbourhood) h = mix(h, v);
      next[x] = h;
    }
    colors.swap(next);
  }
  return colors;
}

Fingerprint fingerprint(const Loop& loop) { return LoopProfile(loop).fingerprint(); }

LoopProfile::LoopProfile(Loop loop) : loop_(std::move(loop)) {
  colors_ = element_invariants(loop_);
  fingerprint_.order = loop_.order();
  fingerprint_.center_size = static_cast<int>(center(loop_).size());
  fingerprint_.nilpotency_class = nilpotency_class(loop_).value_or(-1);
  fingerprint_.commutative = is_commutative(loop_);
  fingerprint_.associative = is_associative(loop_);
  fingerprint_.element_classes = colors_;
  std::sort(fingerprint_.element_classes.begin(), fingerprint_.element_classes.end());
}

std::optional<Permutation> isomorphic(const LoopProfile& a, const LoopProfile& b) {
  if (a.loop().order() != b.loop().order()) return std::nullopt;
  if (!(a.fingerprint() == b.fingerprint())) return std::nullopt;
  return Matcher(a, b).first();
}

std::optional<Permutation> isomorphic(const Loop& a, const Loop& b) {
  if (a.order() != b.order()) return std::nullopt;
  return isomorphic(LoopProfile(a), LoopProfile(b));
}

std::vector<Permutation> automorphism_group(const Loop& loop) {
  const LoopProfile profile(loop);
  return Matcher(profile, profile).all();
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Permutation inverse(const Permutation& perm) {
  Permutation out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = static_cast<Element>(i);
  return out;
}

std::vector<Permutation> generating_set(const std::vector<Permutation>& group) {
  std::vector<Permutation> gens;
  if (group.empty()) return gens;
  Permutation identity(group.front().size());
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Permutation> generated{identity};
  for (const auto& g : group) {
    if (generated.count(g)) continue;
    gens.push_back(g);
    std::vector<Permutation> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& h : frontier) {
        for (const auto& s : gens) {
          auto product = compose(s, h);
          if (generated.insert(product).second) next.push_back(std::move(product));
        }
      }
      frontier.swap(next);
    }
  }
  return gens;
}

}  // namespace nilloops
