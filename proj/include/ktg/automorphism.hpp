#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ktg/abelian.hpp"

namespace ktg {

// Endomorphism of an AbelianGroup given by the images of the standard
// generators (the unit vector of each cyclic factor).
class GroupMorphism {
 public:
  GroupMorphism() = default;
  explicit GroupMorphism(std::vector<Element> images) : images_(std::move(images)) {}

  static GroupMorphism identity(const AbelianGroup& g) {
    std::vector<Element> imgs;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      Element e = g.zero();
      e.coords[i] = 1;
      imgs.push_back(std::move(e));
    }
    return GroupMorphism(std::move(imgs));
  }

  const std::vector<Element>& images() const noexcept { return images_; }

  Element apply(const AbelianGroup& g, const Element& x) const {
    g.require(x);
    Element r = g.zero();
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (x.coords[i] != 0) r = g.add(r, g.scale(images_[i], x.coords[i]));
    }
    return r;
  }

  // (*this) after `first`.
  GroupMorphism after(const AbelianGroup& g, const GroupMorphism& first) const {
    std::vector<Element> imgs;
    for (const auto& y : first.images_) imgs.push_back(apply(g, y));
    return GroupMorphism(std::move(imgs));
  }

  // Well defined (generator images respect factor orders) and bijective.
  bool is_automorphism(const AbelianGroup& g) const {
    if (images_.size() != g.rank()) return false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (!g.contains(images_[i])) return false;
      if (g.factors()[i] % g.element_order(images_[i]) != 0) return false;
    }
    std::vector<char> seen(g.size(), 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      auto idx = g.index_of(apply(g, g.element_at(k)));
      if (seen[idx]) return false;
      seen[idx] = 1;
    }
    return true;
  }

 private:
  std::vector<Element> images_;
};

namespace detail {

inline Int primitive_root_mod_prime_power(Int p, int e) {
  Int q = ipow(p, e);
  Int phi = q / p * (p - 1);
  auto phi_primes = factorize(phi);
  for (Int g = 2; g < q; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (auto [r, k] : phi_primes) {
      (void)k;
      Int x = 1, b = g, n = phi / r;
      while (n) {
        if (n & 1) x = x * b % q;
        b = b * b % q;
        n >>= 1;
      }
      if (x == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

}  // namespace detail

// A generating set of Aut(G): swaps of equal cyclic factors, unit
// multipliers on each factor, and transvections g_i -> g_i + c*g_j between
// factors of one prime, with c the least multiplier keeping the image order
// inside the order of g_i.
inline std::vector<GroupMorphism> automorphism_generators(const AbelianGroup& g) {
  std::vector<GroupMorphism> gens;
  const auto& pp = g.prime_powers();
  const auto& q = g.factors();
  const auto id = GroupMorphism::identity(g);
  auto with_image = [&](std::size_t i, Element img) {
    auto imgs = id.images();
    imgs[i] = std::move(img);
    return imgs;
  };

  for (std::size_t i = 0; i < g.rank(); ++i) {
    for (std::size_t j = i + 1; j < g.rank(); ++j) {
      if (q[i] != q[j]) continue;
      auto imgs = id.images();
      std::swap(imgs[i], imgs[j]);
      gens.emplace_back(std::move(imgs));
    }
  }
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::vector<Int> units;
    if (pp[i].prime == 2) {
      if (q[i] > 2) units.push_back(q[i] - 1);
      if (q[i] > 4) units.push_back(5);
    } else {
      units.push_back(detail::primitive_root_mod_prime_power(pp[i].prime, pp[i].exponent));
    }
    for (Int u : units) {
      Element img = g.zero();
      img.coords[i] = u;
      gens.emplace_back(with_image(i, std::move(img)));
    }
  }
  for (std::size_t i = 0; i < g.rank(); ++i) {
    for (std::size_t j = 0; j < g.rank(); ++j) {
      if (i == j || pp[i].prime != pp[j].prime) continue;
      Int c = pp[j].exponent > pp[i].exponent ? ipow(pp[j].prime, pp[j].exponent - pp[i].exponent) : 1;
      Element img = id.images()[i];
      img.coords[j] = c % q[j];
      gens.emplace_back(with_image(i, std::move(img)));
    }
  }
  return gens;
}

enum class OrbitMethod {
  automatic,      // elementary-2 fast path, otherwise generator_bfs
  generator_bfs,  // connected components under automorphism_generators
  pinned_search,  // pairwise backtracking search for a mapping automorphism
};

// Search for an automorphism h with h(a) = b by backtracking over the images
// of the 2-part generators (the rest of the group is fixed). Only intended
// for a, b of order <= 2 and modest 2-parts; it is the independent check for
// the generator BFS.
inline std::optional<GroupMorphism> pinned_automorphism_search(const AbelianGroup& g,
                                                               const Element& a,
                                                               const Element& b) {
  g.require(a);
  g.require(b);
  const auto& pp = g.prime_powers();
  std::vector<std::size_t> two;  // factor indices of the 2-part
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (pp[i].prime == 2) two.push_back(i);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (pp[i].prime != 2 && a.coords[i] != b.coords[i]) return std::nullopt;
  }
  if (g.element_order(a) != g.element_order(b)) return std::nullopt;

  // Coordinates of the 2-part as a dense sub-enumeration.
  std::vector<Int> tq;
  for (auto i : two) tq.push_back(g.factors()[i]);
  AbelianGroup part(tq);
  auto lift = [&](const Element& y) {
    Element x = g.zero();
    for (std::size_t k = 0; k < two.size(); ++k) x.coords[two[k]] = y.coords[k];
    return x;
  };
  auto restrict_to = [&](const Element& x) {
    Element y = part.zero();
    for (std::size_t k = 0; k < two.size(); ++k) y.coords[k] = x.coords[two[k]];
    return y;
  };
  const Element a2 = restrict_to(a), b2 = restrict_to(b);

  // Generators that a involves are decided first so h(a) is pinned early.
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < two.size(); ++k)
    if (a2.coords[k] != 0) order.push_back(k);
  const std::size_t pinned = order.size();
  for (std::size_t k = 0; k < two.size(); ++k)
    if (a2.coords[k] == 0) order.push_back(k);

  const auto elems = part.elements();
  std::vector<Element> img(two.size(), part.zero());

  // Subgroup generated so far, as a membership mask over `part`.
  auto extend = [&](const std::vector<char>& mask, const Element& y) {
    std::vector<char> out(mask.size(), 0);
    Int oy = part.element_order(y);
    for (std::size_t s = 0; s < mask.size(); ++s) {
      if (!mask[s]) continue;
      Element z = elems[s];
      for (Int k = 0; k < oy; ++k) {
        out[part.index_of(z)] = 1;
        z = part.add(z, y);
      }
    }
    return out;
  };

  std::optional<GroupMorphism> found;
  auto rec = [&](auto&& self, std::size_t depth, const std::vector<char>& mask,
                 Int expected) -> bool {
    if (depth == pinned) {
      Element ha = part.zero();
      for (std::size_t d = 0; d < pinned; ++d) {
        ha = part.add(ha, part.scale(img[order[d]], a2.coords[order[d]]));
      }
      if (ha != b2) return false;
    }
    if (depth == order.size()) {
      auto imgs = GroupMorphism::identity(g).images();
      for (std::size_t k = 0; k < two.size(); ++k) imgs[two[k]] = lift(img[k]);
      found = GroupMorphism(std::move(imgs));
      return true;
    }
    std::size_t k = order[depth];
    Int qk = tq[k];
    for (const auto& y : elems) {
      if (part.element_order(y) != qk) continue;
      if (mask[part.index_of(y)] && qk > 1) continue;
      auto next = extend(mask, y);
      Int sz = std::count(next.begin(), next.end(), 1);
      if (sz != expected * qk) continue;
      img[k] = y;
      if (self(self, depth + 1, next, expected * qk)) return true;
    }
    return false;
  };
  std::vector<char> mask(part.size(), 0);
  mask[0] = 1;
  rec(rec, 0, mask, 1);
  return found;
}

namespace detail {

// BFS over two_torsion(g) under the generators, recording for every reached
// element the parent and the generator used.
struct TorsionGraph {
  std::vector<Element> nodes;
  std::map<Element, std::size_t> index;
  std::vector<GroupMorphism> gens;

  explicit TorsionGraph(const AbelianGroup& g) : nodes(g.two_torsion()), gens(automorphism_generators(g)) {
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
  }
};

}  // namespace detail

// Automorphism mapping a to b found by BFS over generator images; the path
// of generators is composed into an explicit morphism.
inline std::optional<GroupMorphism> bfs_automorphism_mapping(const AbelianGroup& g, const Element& a,
                                                             const Element& b) {
  g.require(a);
  g.require(b);
  if (g.scale(a, 2) != g.zero() || g.scale(b, 2) != g.zero()) {
    throw std::invalid_argument("bfs_automorphism_mapping: arguments must be 2-torsion");
  }
  detail::TorsionGraph graph(g);
  const std::size_t n = graph.nodes.size();
  std::vector<std::size_t> parent(n, n), via(n, 0);
  std::size_t src = graph.index.at(a), dst = graph.index.at(b);
  std::deque<std::size_t> queue{src};
  parent[src] = src;
  while (!queue.empty() && parent[dst] == n) {
    auto u = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < graph.gens.size(); ++k) {
      auto v = graph.index.at(graph.gens[k].apply(g, graph.nodes[u]));
      if (parent[v] != n) continue;
      parent[v] = u;
      via[v] = k;
      queue.push_back(v);
    }
  }
  if (parent[dst] == n) return std::nullopt;
  auto h = GroupMorphism::identity(g);
  std::vector<std::size_t> path;
  for (auto v = dst; v != src; v = parent[v]) path.push_back(via[v]);
  for (auto it = path.rbegin(); it != path.rend(); ++it) h = graph.gens[*it].after(g, h);
  return h;
}

using Orbit = std::vector<Element>;

// Partition of two_torsion(g) into Aut(g)-orbits. Orbits are sorted
// internally and listed by their lexicographically least element, so the
// orbit of zero comes first.
inline std::vector<Orbit> aut_orbits_on_two_torsion(const AbelianGroup& g,
                                                   OrbitMethod method = OrbitMethod::automatic) {
  const auto tt = g.two_torsion();
  std::vector<Orbit> orbits;

  bool elementary = true;
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (g.prime_powers()[i].prime == 2 && g.factors()[i] != 2) elementary = false;

  if (method == OrbitMethod::automatic && elementary) {
    orbits.push_back({tt.front()});
    if (tt.size() > 1) orbits.emplace_back(tt.begin() + 1, tt.end());
    return orbits;
  }

  if (method == OrbitMethod::pinned_search) {
    std::vector<bool> done(tt.size(), false);
    for (std::size_t i = 0; i < tt.size(); ++i) {
      if (done[i]) continue;
      Orbit o{tt[i]};
      done[i] = true;
      for (std::size_t j = i + 1; j < tt.size(); ++j) {
        if (!done[j] && pinned_automorphism_search(g, tt[i], tt[j])) {
          o.push_back(tt[j]);
          done[j] = true;
        }
      }
      orbits.push_back(std::move(o));
    }
    return orbits;
  }

  detail::TorsionGraph graph(g);
  const std::size_t n = tt.size();
  std::vector<std::size_t> comp(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    comp[s] = s;
    Orbit o;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      o.push_back(tt[u]);
      for (const auto& h : graph.gens) {
        auto v = graph.index.at(h.apply(g, tt[u]));
        if (comp[v] == n) {
          comp[v] = s;
          queue.push_back(v);
        }
      }
    }
    std::sort(o.begin(), o.end());
    orbits.push_back(std::move(o));
  }
  return orbits;
}

}  // namespace ktg
