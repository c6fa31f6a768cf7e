#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktg/abelian.hpp"
#include "ktg/diagram.hpp"
#include "ktg/smith.hpp"
#include "ktg/structure.hpp"
#include "ktg/ternary.hpp"

namespace ktg {

// Flat operation plus the virtual one when the diagram needs it.
struct ColoringPair {
  CanonicalKT flat;
  std::optional<CanonicalKT> virt;

  std::string virt_string() const { return virt ? virt->to_string() : "-"; }
};

// One row per crossing: f(c0) - f(c1) + f(c2) - f(c3) = translation,
// which is f(c0) = [f(c1) f(c2) f(c3)] written additively.
struct ColoringSystem {
  AbelianGroup group;
  IntMatrix matrix;          // crossings x regions
  std::vector<Element> rhs;  // per crossing
};

inline void check_pair(const Diagram& d, const ColoringPair& p) {
  if (auto f = validate(d); !f.empty()) throw std::invalid_argument("invalid diagram: " + f.front());
  if (!d.has_virtual()) return;
  if (!p.virt) throw std::invalid_argument("diagram " + d.name + " has virtual crossings but no virtual operation was given");
  if (!(p.virt->group() == p.flat.group())) {
    throw std::invalid_argument("flat and virtual operations must share the associated group (" +
                                p.flat.group().to_string() + " vs " + p.virt->group().to_string() + ")");
  }
  if (!compatible(p.flat, *p.virt).compatible) {
    throw StructureError("operations " + p.flat.to_string() + " and " + p.virt->to_string() + " are not compatible");
  }
}

inline ColoringSystem compile_system(const Diagram& d, const ColoringPair& p) {
  check_pair(d, p);
  ColoringSystem sys{p.flat.group(), IntMatrix(d.crossings.size(), d.regions), {}};
  static constexpr Int kSign[4] = {1, -1, 1, -1};
  for (std::size_t r = 0; r < d.crossings.size(); ++r) {
    const auto& c = d.crossings[r];
    for (std::size_t k = 0; k < 4; ++k) sys.matrix(r, c.corners[k]) += kSign[k];
    sys.rhs.push_back(c.kind == CrossingKind::flat ? p.flat.translation() : p.virt->translation());
  }
  return sys;
}

enum class CountMethod { brute, affine };

inline std::string_view to_string(CountMethod m) { return m == CountMethod::brute ? "brute" : "affine"; }

struct ColoringReport {
  std::uint64_t count = 0;
  CountMethod method = CountMethod::affine;
  std::optional<std::vector<std::vector<std::size_t>>> colorings;  // element indices per region
};

inline constexpr std::uint64_t kBruteForceBudget = 10'000'000;

namespace detail {

// Visits every assignment of the regions (lexicographic, region 0 most
// significant) satisfying every crossing, evaluated on the ternary tables.
template <class Visit>
void for_each_coloring(const Diagram& d, const ColoringPair& p, std::uint64_t budget, Visit&& visit) {
  check_pair(d, p);
  const std::size_t n = p.flat.size(), R = d.regions;
  if (tuple_count(n, R) > budget) {
    throw BudgetExceeded("brute force needs " + std::to_string(n) + "^" + std::to_string(R) +
                         " assignments, over the budget of " + std::to_string(budget));
  }
  const TernaryTable flat = table_from_canonical(p.flat);
  const std::optional<TernaryTable> virt =
      p.virt ? std::optional<TernaryTable>(table_from_canonical(*p.virt)) : std::nullopt;
  std::vector<std::size_t> f(R, 0);
  while (true) {
    bool ok = true;
    for (const auto& c : d.crossings) {
      const TernaryTable& op = c.kind == CrossingKind::flat ? flat : *virt;
      const auto& k = c.corners;
      if (f[k[0]] != op(f[k[1]], f[k[2]], f[k[3]])) {
        ok = false;
        break;
      }
    }
    if (ok) visit(f);
    std::size_t i = R;
    while (i-- > 0) {
      if (++f[i] < n) break;
      f[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
}

}  // namespace detail

// Exhaustive count; every crossing is checked by evaluating the ternary
// operation, independent of the affine encoding.
inline ColoringReport count_bruteforce(const Diagram& d, const ColoringPair& p,
                                       std::uint64_t budget = kBruteForceBudget) {
  ColoringReport r;
  r.method = CountMethod::brute;
  detail::for_each_coloring(d, p, budget, [&](const std::vector<std::size_t>&) { ++r.count; });
  return r;
}

// Counts solutions of M f = t over A = sum Z_d by Smith normal form:
// per cyclic factor Z_d, S g = U t has prod gcd(s_i, d) solutions when
// every transformed entry is divisible, times d per free column.
inline ColoringReport count_affine(const ColoringSystem& sys) {
  ColoringReport r;
  r.method = CountMethod::affine;
  const std::size_t rows = sys.matrix.rows(), cols = sys.matrix.cols();
  const auto snf = smith_normal_form(sys.matrix);
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < sys.group.rank(); ++j) {
    const Int d = sys.group.factors()[j];
    std::vector<Int> ut(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < rows; ++k) ut[i] = mod(ut[i] + mod(snf.U(i, k), d) * sys.rhs[k].coords[j], d);
    std::uint64_t per = 1;
    for (std::size_t i = 0; i < rows; ++i) {
      Int s = i < cols ? snf.S(i, i) : 0;
      Int g = std::gcd(s, d);  // gcd(0, d) = d
      if (ut[i] % g != 0) {
        per = 0;
        break;
      }
      if (i < cols) per *= static_cast<std::uint64_t>(g);
    }
    for (std::size_t c = rows; c < cols; ++c) per *= static_cast<std::uint64_t>(d);
    total *= per;
  }
  r.count = total;
  return r;
}

inline ColoringReport count_affine(const Diagram& d, const ColoringPair& p) { return count_affine(compile_system(d, p)); }

// All colorings in lexicographic order; throws BudgetExceeded when there
// are more than `cap`.
inline std::vector<std::vector<std::size_t>> enumerate_colorings(const Diagram& d, const ColoringPair& p,
                                                                 std::uint64_t cap,
                                                                 std::uint64_t budget = kBruteForceBudget) {
  auto expected = count_affine(d, p).count;
  if (expected > cap) {
    throw BudgetExceeded("diagram has " + std::to_string(expected) + " colorings, over the cap of " + std::to_string(cap));
  }
  std::vector<std::vector<std::size_t>> out;
  detail::for_each_coloring(d, p, budget, [&](const std::vector<std::size_t>& f) { out.push_back(f); });
  return out;
}

// The region-wise bracket on the colorings of a flat-only diagram.
struct ColoringGroup {
  std::vector<std::vector<std::size_t>> colorings;
  TernaryTable table;
  CanonicalForm canonical;
};

inline ColoringGroup coloring_group(const Diagram& d, const CanonicalKT& flat, std::uint64_t cap = kDefaultTableBound) {
  if (d.has_virtual()) throw std::invalid_argument("coloring_group: diagram " + d.name + " has virtual crossings");
  ColoringPair p{flat, std::nullopt};
  auto cols = enumerate_colorings(d, p, cap);
  if (cols.empty()) throw StructureError("coloring_group: diagram " + d.name + " has no colorings");
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  const TernaryTable op = table_from_canonical(flat);
  const std::size_t m = cols.size(), R = d.regions;
  std::vector<std::size_t> cube(m * m * m);
  std::vector<std::size_t> h(R);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t r = 0; r < R; ++r) h[r] = op(cols[a][r], cols[b][r], cols[c][r]);
        auto it = index.find(h);
        if (it == index.end()) throw std::logic_error("coloring_group: region-wise bracket left the coloring set");
        cube[(a * m + b) * m + c] = it->second;
      }
  TernaryTable table(m, std::move(cube));
  auto canonical = canonicalize(table);
  return ColoringGroup{std::move(cols), std::move(table), std::move(canonical)};
}

// The four order-4 structures in the order Z4@0, Z4@2, Z2xZ2@(0,0),
// Z2xZ2@(1,1); and the two of order 2.
inline std::vector<ColoringPair> standard_catalog(std::string_view name) {
  std::vector<ColoringPair> out;
  auto add = [&](const char* spec) { out.push_back({parse_kt_spec(spec), std::nullopt}); };
  if (name == "order4") {
    for (auto s : {"Z4@0", "Z4@2", "Z2xZ2@(0,0)", "Z2xZ2@(1,1)"}) add(s);
  } else if (name == "order2") {
    for (auto s : {"Z2@0", "Z2@1"}) add(s);
  } else {
    throw std::invalid_argument("unknown catalog '" + std::string(name) + "'");
  }
  return out;
}

// Counts in catalog order. A flat-only entry used on a diagram with
// virtual crossings colors them with the same operation.
inline std::vector<std::uint64_t> invariant_vector(const Diagram& d, const std::vector<ColoringPair>& catalog) {
  std::vector<std::uint64_t> out;
  for (auto p : catalog) {
    if (!p.virt && d.has_virtual()) p.virt = p.flat;
    out.push_back(count_affine(d, p).count);
  }
  return out;
}

}  // namespace ktg
