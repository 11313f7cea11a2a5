#include "nilloops/loop.hpp"

#include <algorithm>
#include <string>

#include "nilloops/error.hpp"

namespace nilloops {

Loop Loop::validate(int order, std::span<const int> table) {
  if (order < 1 || order > kMaxLoopOrder) {
    throw Error(Errc::kBadShape, "order " + std::to_string(order) + " out of range");
  }
  const auto n = static_cast<std::size_t>(order);
  if (table.size() != n * n) {
    throw Error(Errc::kBadShape, "expected " + std::to_string(n * n) + " entries, got " +
                                     std::to_string(table.size()));
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (table[i] < 0 || table[i] >= order) {
      throw Error(Errc::kBadShape, "entry " + std::to_string(table[i]) + " out of range");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x] != static_cast<int>(x) || table[x * n] != static_cast<int>(x)) {
      throw Error(Errc::kNotNormalized, "row/column of the identity is not the identity map");
    }
  }
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[table[r * n + c]]++) {
        throw Error(Errc::kNotLatin, "row " + std::to_string(r) + " repeats an element");
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[table[r * n + c]]++) {
        throw Error(Errc::kNotLatin, "column " + std::to_string(c) + " repeats an element");
      }
    }
  }
  std::vector<std::uint8_t> packed(table.begin(), table.end());
  return Loop(order, std::move(packed));
}

Loop Loop::validate(const std::vector<std::vector<int>>& rows) {
  const auto n = rows.size();
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(Errc::kBadShape, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate(static_cast<int>(n), flat);
}

Loop Loop::from_trusted_table(int order, std::vector<std::uint8_t> table) {
  return Loop(order, std::move(table));
}

std::vector<std::vector<int>> Loop::rows() const {
  std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
  for (int x = 0; x < order_; ++x) {
    for (int y = 0; y < order_; ++y) out[x][y] = mul(x, y);
  }
  return out;
}

bool is_central(const Loop& loop, Element x) {
  const int n = loop.order();
  for (int y = 0; y < n; ++y) {
    const int xy = loop.mul(x, y);
    const int yx = loop.mul(y, x);
    if (xy != yx) return false;
    for (int z = 0; z < n; ++z) {
      if (loop.mul(xy, z) != loop.mul(x, loop.mul(y, z))) return false;
      if (loop.mul(yx, z) != loop.mul(y, loop.mul(x, z))) return false;
      if (loop.mul(loop.mul(y, z), x) != loop.mul(y, loop.mul(z, x))) return false;
    }
  }
  return true;
}

ElementSet center(const Loop& loop) {
  ElementSet out;
  for (int x = 0; x < loop.order(); ++x) {
    if (is_central(loop, x)) out.push_back(x);
  }
  return out;
}

bool is_commutative(const Loop& loop) {
  const int n = loop.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (loop.mul(x, y) != loop.mul(y, x)) return false;
    }
  }
  return true;
}

bool is_associative(const Loop& loop) {
  const int n = loop.order();
  for (int x = 1; x < n; ++x) {
    for (int y = 1; y < n; ++y) {
      const int xy = loop.mul(x, y);
      for (int z = 1; z < n; ++z) {
        if (loop.mul(xy, z) != loop.mul(x, loop.mul(y, z))) return false;
      }
    }
  }
  return true;
}

std::optional<int> nilpotency_class(const Loop& loop) {
  Loop current = loop;
  int steps = 0;
  while (current.order() > 1) {
    ElementSet z = center(current);
    if (z.size() == 1) return std::nullopt;
    ++steps;
    if (static_cast<int>(z.size()) == current.order()) break;
    current = quotient(current, z).loop;
  }
  return steps;
}

ElementSet generated_subloop(const Loop& loop, std::span<const Element> generators) {
  std::vector<char> in(loop.order(), 0);
  ElementSet members{0};
  in[0] = 1;
  for (Element g : generators) {
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  }
  // Every pair is multiplied once both members are known.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (int k = 0; k < 2; ++k) {
        const Element a = members[k == 0 ? i : j];
        const Element b = members[k == 0 ? j : i];
        const Element c = loop.mul(a, b);
        if (!in[c]) {
          in[c] = 1;
          members.push_back(c);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subloop(const Loop& loop, const ElementSet& elements) {
  if (elements.empty() || elements.front() != 0) return false;
  std::vector<char> in(loop.order(), 0);
  for (Element e : elements) {
    if (e < 0 || e >= loop.order() || in[e]) return false;
    in[e] = 1;
  }
  for (Element a : elements) {
    for (Element b : elements) {
      if (!in[loop.mul(a, b)]) return false;
    }
  }
  return true;
}

int central_element_order(const Loop& loop, Element x) {
  int k = 0;
  Element power = 0;
  do {
    power = loop.mul(power, x);
    ++k;
  } while (power != 0);
  return k;
}

Quotient quotient(const Loop& loop, const ElementSet& central_subloop) {
  if (!is_subloop(loop, central_subloop)) {
    throw Error(Errc::kNotSubloop, "quotient needs a subloop");
  }
  for (Element a : central_subloop) {
    if (!is_central(loop, a)) {
      throw Error(Errc::kNotCentralSubloop, "element " + std::to_string(a) + " is not central");
    }
  }
  const int n = loop.order();
  const int k = static_cast<int>(central_subloop.size());
  std::vector<Element> projection(n, -1);
  std::vector<Element> representative;
  // Scanning upward makes each coset's label follow its minimal element.
  for (int x = 0; x < n; ++x) {
    if (projection[x] != -1) continue;
    const int label = static_cast<int>(representative.size());
    representative.push_back(x);
    for (Element a : central_subloop) projection[loop.mul(x, a)] = label;
  }
  const int m = n / k;
  std::vector<std::uint8_t> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      table[i * m + j] =
          static_cast<std::uint8_t>(projection[loop.mul(representative[i], representative[j])]);
    }
  }
  return {Loop::from_trusted_table(m, std::move(table)), std::move(projection)};
}

Loop central_extension(const Loop& base, int p, std::span<const std::uint8_t> theta) {
  const int m = base.order();
  const int n = m * p;
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const int xy = base.mul(x, y);
      const int twist = (x == 0 || y == 0) ? 0 : theta[(x - 1) * (m - 1) + (y - 1)];
      for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
          table[(x * p + a) * n + (y * p + b)] =
              static_cast<std::uint8_t>(xy * p + (a + b + twist) % p);
        }
      }
    }
  }
  return Loop::from_trusted_table(n, std::move(table));
}

Loop cyclic_group(int n) {
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) table[x * n + y] = static_cast<std::uint8_t>((x + y) % n);
  }
  return Loop::from_trusted_table(n, std::move(table));
}

Loop direct_product(const Loop& a, const Loop& b) {
  const int na = a.order();
  const int nb = b.order();
  const int n = na * nb;
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      table[x * n + y] = static_cast<std::uint8_t>(a.mul(x / nb, y / nb) * nb +
                                                   b.mul(x % nb, y % nb));
    }
  }
  return Loop::from_trusted_table(n, std::move(table));
}

Loop relabel(const Loop& loop, const Permutation& perm) {
  const int n = loop.order();
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      table[perm[x] * n + perm[y]] = static_cast<std::uint8_t>(perm[loop.mul(x, y)]);
    }
  }
  return Loop::from_trusted_table(n, std::move(table));
}

bool is_isomorphism(const Loop& a, const Loop& b, const Permutation& perm) {
  const int n = a.order();
  if (b.order() != n || static_cast<int>(perm.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (Element y : perm) {
    if (y < 0 || y >= n || hit[y]++) return false;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (perm[a.mul(x, y)] != b.mul(perm[x], perm[y])) return false;
    }
  }
  return true;
}

}  // namespace nilloops
