#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktg/abelian.hpp"
#include "ktg/error.hpp"

namespace ktg {

// Binary operation on {0..n-1} given by its Cayley table.
struct BinaryTable {
  std::size_t n = 0;
  std::vector<std::size_t> op;  // op[x * n + y]

  std::size_t operator()(std::size_t x, std::size_t y) const { return op[x * n + y]; }
};

// Result of identifying an abelian group table with its normalized type:
// labeling[x] is the element of `group` carrying x, and the map is an
// isomorphism.
struct AbelianIdentification {
  AbelianGroup group;
  std::vector<Element> labeling;
  std::vector<std::size_t> inverse;  // group.index_of(labeling[x]) -> x
};

// Checks that `t` is an abelian group with neutral element `neutral`;
// returns a description of the first failure.
inline std::optional<std::string> abelian_group_defect(const BinaryTable& t, std::size_t neutral) {
  const std::size_t n = t.n;
  if (n == 0) return "empty carrier";
  if (neutral >= n) return "neutral index out of range";
  for (std::size_t x = 0; x < n; ++x) {
    if (t(x, neutral) != x || t(neutral, x) != x) return "not neutral at " + std::to_string(x);
    bool has_inverse = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (t(x, y) != t(y, x)) return "not commutative";
      if (t(x, y) == neutral) has_inverse = true;
    }
    if (!has_inverse) return "no inverse for " + std::to_string(x);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t(t(x, y), z) != t(x, t(y, z))) return "not associative";
  return std::nullopt;
}

namespace detail {

inline std::size_t table_multiple(const BinaryTable& t, std::size_t neutral, std::size_t x, Int k) {
  std::size_t r = neutral;
  for (Int i = 0; i < k; ++i) r = t(r, x);
  return r;
}

inline std::size_t table_order(const BinaryTable& t, std::size_t neutral, std::size_t x) {
  std::size_t r = x, k = 1;
  while (r != neutral) {
    r = t(r, x);
    ++k;
  }
  return k;
}

}  // namespace detail

// Abelian type of an abelian group table from the counts of elements killed
// by p^k, then an explicit isomorphism by backtracking over independent
// generator images. Throws StructureError if `t` is not an abelian group.
inline AbelianIdentification identify_abelian_group(const BinaryTable& t, std::size_t neutral) {
  if (auto defect = abelian_group_defect(t, neutral)) {
    throw StructureError("not an abelian group: " + *defect);
  }
  const std::size_t n = t.n;
  std::vector<std::size_t> ord(n);
  for (std::size_t x = 0; x < n; ++x) ord[x] = detail::table_order(t, neutral, x);

  // #{x : p^k x = 0} = p^(sum_i min(e_i, k)); successive ratios give the
  // number of cyclic factors of exponent >= k.
  std::vector<Int> moduli;
  for (auto [p, e] : factorize(static_cast<Int>(n))) {
    std::vector<int> at_least;  // at_least[k-1] = #factors with exponent >= k
    Int prev = 1;
    for (int k = 1; k <= e; ++k) {
      Int pk = ipow(p, k);
      Int c = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (pk % static_cast<Int>(ord[x]) == 0) ++c;
      int r = 0;
      for (Int ratio = c / prev; ratio > 1; ratio /= p) ++r;
      at_least.push_back(r);
      prev = c;
    }
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      for (int i = 0; i < exact; ++i) moduli.push_back(ipow(p, static_cast<int>(k) + 1));
    }
  }
  AbelianGroup g(moduli);
  const auto& q = g.factors();

  // Backtrack over images of the standard generators.
  std::vector<std::size_t> img(g.rank(), neutral);
  auto extend = [&](const std::vector<char>& mask, std::size_t y) {
    std::vector<char> out(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (!mask[s]) continue;
      std::size_t z = s;
      for (std::size_t k = 0; k < ord[y]; ++k) {
        out[z] = 1;
        z = t(z, y);
      }
    }
    return out;
  };
  auto rec = [&](auto&& self, std::size_t depth, const std::vector<char>& mask, Int size) -> bool {
    if (depth == g.rank()) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (static_cast<Int>(ord[y]) != q[depth] || mask[y]) continue;
      auto next = extend(mask, y);
      if (std::count(next.begin(), next.end(), 1) != size * q[depth]) continue;
      img[depth] = y;
      if (self(self, depth + 1, next, size * q[depth])) return true;
    }
    return false;
  };
  std::vector<char> mask(n, 0);
  mask[neutral] = 1;
  if (!rec(rec, 0, mask, 1)) throw StructureError("failed to find a basis");

  AbelianIdentification out{g, std::vector<Element>(n), std::vector<std::size_t>(n)};
  for (std::size_t k = 0; k < g.size(); ++k) {
    Element e = g.element_at(k);
    std::size_t x = neutral;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      x = t(x, detail::table_multiple(t, neutral, img[i], e.coords[i]));
    }
    out.labeling[x] = e;
    out.inverse[k] = x;
  }
  return out;
}

}  // namespace ktg
