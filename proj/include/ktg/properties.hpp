#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktg/identity.hpp"
#include "ktg/ternary.hpp"

namespace ktg {

// Every line of the cube is a permutation, i.e. [zab]=c, [azb]=c and
// [abz]=c are uniquely solvable.
inline bool check_quasigroup(const TernaryTable& t) {
  const std::size_t n = t.size();
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 0;
  auto line_ok = [&](auto at) {
    ++stamp;
    for (std::size_t z = 0; z < n; ++z) {
      auto v = at(z);
      if (mark[v] == stamp) return false;
      mark[v] = stamp;
    }
    return true;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!line_ok([&](std::size_t z) { return t(z, a, b); })) return false;
      if (!line_ok([&](std::size_t z) { return t(a, z, b); })) return false;
      if (!line_ok([&](std::size_t z) { return t(a, b, z); })) return false;
    }
  return true;
}

struct PropertyEntry {
  std::string name;
  bool value = false;
  bool sampled = false;  // some identity behind the flag was only sampled
};

struct PropertyReport {
  std::vector<PropertyEntry> entries;  // fixed order, see property_names()

  bool operator[](std::string_view name) const {
    for (const auto& e : entries)
      if (e.name == name) return e.value;
    throw std::invalid_argument("unknown property '" + std::string(name) + "'");
  }
  bool sampled(std::string_view name) const {
    for (const auto& e : entries)
      if (e.name == name) return e.sampled;
    throw std::invalid_argument("unknown property '" + std::string(name) + "'");
  }
};

inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{
      "quasigroup",      "associative", "ternary_group", "knot_theoretic",
      "semicommutative", "entropic",    "idempotent",    "commutative",
      "malcev",          "eq23",        "all_elements_neutral", "derived_from_binary_group"};
  return names;
}

struct PropertyBudget {
  std::uint64_t tuples = 10'000'000;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
};

inline PropertyReport property_report(const TernaryTable& t, const PropertyBudget& budget = {}) {
  const CheckMode mode = CheckMode::automatic(budget.tuples, budget.samples, budget.seed);
  const bool skew_ok = t.has_total_skew();
  struct Outcome {
    bool holds;
    bool sampled;
  };
  auto law = [&](const char* name) -> Outcome {
    const auto& id = catalog_identity(name);
    if (id.uses_skew() && !skew_ok) return {false, false};
    auto r = check_identity(t, id, mode);
    return {r.holds, r.sampled};
  };

  const bool quasigroup = check_quasigroup(t);
  const auto assoc = law("assoc_full");
  const bool ternary_group = quasigroup && assoc.holds;
  const auto a3l = law("A3L"), a3r = law("A3R");
  const auto semi = law("semicommutative");
  const auto entropic = law("entropic");
  const auto idem = law("idempotent");
  const auto comm = law("commutative");
  const auto malcev = law("malcev");
  const auto eq23 = law("eq23");
  const auto neutral = law("all_neutral");

  PropertyReport r;
  auto put = [&](const char* name, bool v, bool s) { r.entries.push_back({name, v, s}); };
  put("quasigroup", quasigroup, false);
  put("associative", assoc.holds, assoc.sampled);
  put("ternary_group", ternary_group, assoc.sampled);
  put("knot_theoretic", ternary_group && a3l.holds && a3r.holds, assoc.sampled || a3l.sampled || a3r.sampled);
  put("semicommutative", semi.holds, semi.sampled);
  put("entropic", entropic.holds, entropic.sampled);
  put("idempotent", idem.holds, idem.sampled);
  put("commutative", comm.holds, comm.sampled);
  put("malcev", malcev.holds, malcev.sampled);
  put("eq23", eq23.holds, eq23.sampled);
  put("all_elements_neutral", neutral.holds, neutral.sampled);
  // Commutative Mal'cev ternary groups are exactly the knot-theoretic ones
  // derived from a binary (necessarily elementary 2-) group.
  put("derived_from_binary_group", ternary_group && comm.holds && malcev.holds,
      assoc.sampled || comm.sampled || malcev.sampled);
  return r;
}

inline PropertyReport property_report(const CanonicalKT& t, const PropertyBudget& budget = {}) {
  return property_report(table_from_canonical(t), budget);
}

// Implications between the flags that the theory guarantees. Returns the
// names of violated ones; an empty result means the report is consistent.
// Implications resting on sampled flags are skipped.
inline std::vector<std::string> consistency_violations(const PropertyReport& r) {
  std::vector<std::string> out;
  auto exact = [&](std::initializer_list<const char*> names) {
    for (auto n : names)
      if (r.sampled(n)) return false;
    return true;
  };
  const bool group = r["ternary_group"];
  if (group && exact({"knot_theoretic", "semicommutative", "eq23"}) &&
      r["knot_theoretic"] != (r["semicommutative"] && r["eq23"])) {
    out.push_back("knot_theoretic <=> semicommutative & eq23");
  }
  if (group && exact({"semicommutative", "entropic"}) && r["semicommutative"] != r["entropic"]) {
    out.push_back("semicommutative <=> entropic");
  }
  if (group && exact({"idempotent", "malcev", "knot_theoretic"})) {
    if (r["idempotent"] != r["malcev"]) out.push_back("idempotent <=> malcev");
    if (r["idempotent"] && !r["knot_theoretic"]) out.push_back("idempotent => knot_theoretic");
  }
  if (exact({"derived_from_binary_group", "all_elements_neutral", "knot_theoretic"}) &&
      r["derived_from_binary_group"] != (r["all_elements_neutral"] && r["knot_theoretic"] && r["commutative"])) {
    out.push_back("derived_from_binary_group <=> every element neutral");
  }
  if (r["derived_from_binary_group"] && !r["knot_theoretic"]) {
    out.push_back("derived_from_binary_group => knot_theoretic");
  }
  return out;
}

}  // namespace ktg
