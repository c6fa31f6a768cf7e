#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ktg/automorphism.hpp"
#include "ktg/binary_group.hpp"
#include "ktg/identity.hpp"
#include "ktg/properties.hpp"
#include "ktg/ternary.hpp"

namespace ktg {

// ---------------------------------------------------------------------------
// Retracts: x * y = [x b y].

struct Retract {
  BinaryTable table;
  std::size_t neutral = 0;
  std::vector<std::size_t> inverse;
};

inline Retract retract(const TernaryTable& t, std::size_t b, const PropertyBudget& budget = {}) {
  const std::size_t n = t.size();
  if (b >= n) throw std::out_of_range("retract: element out of range");
  if (!check_quasigroup(t) ||
      !check_identity(t, catalog_identity("assoc_full"),
                      CheckMode::automatic(budget.tuples, budget.samples, budget.seed))
           .holds) {
    throw StructureError("retract: not a ternary group");
  }
  Retract r;
  r.table.n = n;
  r.table.op.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) r.table.op[x * n + y] = t(x, b, y);
  // [x b b~] = x = [b~ b x], so b~ is neutral.
  r.neutral = t.skew(b);
  r.inverse.assign(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n && r.inverse[x] == n; ++y)
      if (r.table(x, y) == r.neutral && r.table(y, x) == r.neutral) r.inverse[x] = y;
  return r;
}

inline Retract retract(const CanonicalKT& t, const Element& b) {
  return retract(table_from_canonical(t), t.group().index_of(b));
}

// ---------------------------------------------------------------------------

// P(a,b,c) = [a b~ c].
inline TernaryTable derived_malcev(const TernaryTable& t) {
  if (!t.has_total_skew()) throw StructureError("derived_malcev: skew is not defined everywhere");
  const std::size_t n = t.size();
  std::vector<std::size_t> cube(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto sb = t.skew(b);
      for (std::size_t c = 0; c < n; ++c) cube[(a * n + b) * n + c] = t(a, sb, c);
    }
  return TernaryTable(n, std::move(cube));
}

// ---------------------------------------------------------------------------
// Canonical form of a knot-theoretic table.

struct CanonicalForm {
  CanonicalKT structure;
  std::vector<Element> labeling;  // carrier element -> group element
};

// Fixes e = 0; (A,+) is the retract at e~, i.e. x + y = [x e~ y], with
// neutral e; the translation is e~ in that group. The result is certified
// by re-evaluating the whole cube, so any table that is not knot-theoretic
// is rejected with StructureError.
inline CanonicalForm canonicalize(const TernaryTable& t) {
  const std::size_t n = t.size();
  if (!t.has_skew(0)) throw StructureError("canonicalize: element 0 has no unique skew");
  const std::size_t e_bar = t.skew(0);
  BinaryTable plus{n, std::vector<std::size_t>(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) plus.op[x * n + y] = t(x, e_bar, y);

  AbelianIdentification id = [&] {
    try {
      return identify_abelian_group(plus, 0);
    } catch (const StructureError& e) {
      throw StructureError(std::string("canonicalize: not knot-theoretic (") + e.what() + ")");
    }
  }();
  std::optional<CanonicalKT> kt;
  try {
    kt.emplace(id.group, id.labeling[e_bar]);
  } catch (const std::invalid_argument&) {
    throw StructureError("canonicalize: not knot-theoretic (translation of order > 2)");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (kt->eval(id.labeling[x], id.labeling[y], id.labeling[z]) != id.labeling[t(x, y, z)]) {
          throw StructureError("canonicalize: not knot-theoretic (cube differs from x - y + z + a at " +
                               std::to_string(x) + " " + std::to_string(y) + " " + std::to_string(z) + ")");
        }
  return CanonicalForm{std::move(*kt), std::move(id.labeling)};
}

// ---------------------------------------------------------------------------
// Isomorphism.

struct IsoResult {
  bool isomorphic = false;
  // Carrier map (index of T1 element -> index of T2 element), verified to
  // preserve the bracket.
  std::optional<std::vector<std::size_t>> witness;
};

namespace detail {

template <TernaryStructure A, TernaryStructure B>
bool preserves_bracket(const A& s1, const B& s2, const std::vector<std::size_t>& h) {
  const std::size_t n = s1.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (h[s1.bracket(x, y, z)] != s2.bracket(h[x], h[y], h[z])) return false;
  return true;
}

}  // namespace detail

// Isomorphic iff the groups agree and the translations share an Aut-orbit.
// The witness is the automorphism carrying one translation to the other.
inline IsoResult iso_test(const CanonicalKT& t1, const CanonicalKT& t2,
                          OrbitMethod method = OrbitMethod::automatic) {
  IsoResult r;
  const auto& g = t1.group();
  if (g.invariant_factors() != t2.group().invariant_factors()) return r;
  const auto& a = t1.translation();
  const auto& b = t2.translation();

  std::optional<GroupMorphism> h;
  if (method == OrbitMethod::pinned_search) {
    h = pinned_automorphism_search(g, a, b);
  } else {
    bool same_orbit = false;
    for (const auto& orbit : aut_orbits_on_two_torsion(g, method)) {
      bool ha = std::binary_search(orbit.begin(), orbit.end(), a);
      bool hb = std::binary_search(orbit.begin(), orbit.end(), b);
      if (ha || hb) {
        same_orbit = ha && hb;
        break;
      }
    }
    if (same_orbit) h = bfs_automorphism_mapping(g, a, b);
  }
  if (!h) return r;

  std::vector<std::size_t> map(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) map[k] = g.index_of(h->apply(g, g.element_at(k)));
  if (g.size() <= 64 && !detail::preserves_bracket(table_from_canonical(t1), table_from_canonical(t2), map)) {
    throw std::logic_error("iso_test: witness does not preserve the bracket");
  }
  r.isomorphic = true;
  r.witness = std::move(map);
  return r;
}

// Tables are canonicalized first; throws StructureError for tables that
// are not knot-theoretic.
inline IsoResult iso_test(const TernaryTable& t1, const TernaryTable& t2,
                          OrbitMethod method = OrbitMethod::automatic) {
  IsoResult r;
  if (t1.size() != t2.size()) return r;
  auto c1 = canonicalize(t1), c2 = canonicalize(t2);
  auto inner = iso_test(c1.structure, c2.structure, method);
  if (!inner.isomorphic) return r;
  const auto& g = c1.structure.group();
  std::vector<std::size_t> to_carrier2(g.size());
  for (std::size_t x = 0; x < t2.size(); ++x) to_carrier2[g.index_of(c2.labeling[x])] = x;
  std::vector<std::size_t> map(t1.size());
  for (std::size_t x = 0; x < t1.size(); ++x) map[x] = to_carrier2[(*inner.witness)[g.index_of(c1.labeling[x])]];
  if (!detail::preserves_bracket(t1, t2, map)) throw std::logic_error("iso_test: witness does not preserve the bracket");
  r.isomorphic = true;
  r.witness = std::move(map);
  return r;
}

// ---------------------------------------------------------------------------
// Compatibility of a flat operation [ ] and a virtual operation < >.

using Quadruple = std::array<std::size_t, 4>;

struct CompatReport {
  bool compatible = true;  // [ab<bcd>] = <a<abc>[<abc>cd]>
  std::optional<Quadruple> counterexample;
  bool companion = true;   // [<abc>cd] = <[ab<bcd>]<bcd>d>
  std::optional<Quadruple> companion_counterexample;
};

// Exhaustive over all quadruples in lexicographic order.
inline CompatReport compatible(const TernaryTable& flat, const TernaryTable& virt) {
  if (flat.size() != virt.size()) throw std::invalid_argument("compatible: carriers differ in size");
  const std::size_t n = flat.size();
  CompatReport r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const std::size_t v_abc = virt(a, b, c), v_bcd = virt(b, c, d);
          if (r.compatible && flat(a, b, v_bcd) != virt(a, v_abc, flat(v_abc, c, d))) {
            r.compatible = false;
            r.counterexample = Quadruple{a, b, c, d};
          }
          if (r.companion && flat(v_abc, c, d) != virt(flat(a, b, v_bcd), v_bcd, d)) {
            r.companion = false;
            r.companion_counterexample = Quadruple{a, b, c, d};
          }
        }
  return r;
}

inline CompatReport compatible(const CanonicalKT& flat, const CanonicalKT& virt) {
  return compatible(table_from_canonical(flat), table_from_canonical(virt));
}

}  // namespace ktg
