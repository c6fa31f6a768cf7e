#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ktg;

TEST(Quasigroup, Examples) {
  for (const auto& t : gen::all_canonical(12)) EXPECT_TRUE(check_quasigroup(table_from_canonical(t)));
  EXPECT_FALSE(check_quasigroup(gen::table_of(2, [](auto, auto, auto) { return std::size_t{0}; })));
  EXPECT_TRUE(check_quasigroup(gen::affine_table(3, 1, 0)));
  EXPECT_FALSE(check_quasigroup(gen::affine_table(4, 2, 0)));
  EXPECT_TRUE(check_quasigroup(gen::table_of(1, [](auto, auto, auto) { return std::size_t{0}; })));
}

TEST(PropertyReport, FixedOrder) {
  auto r = property_report(parse_kt_spec("Z2@0"));
  ASSERT_EQ(r.entries.size(), property_names().size());
  for (std::size_t i = 0; i < r.entries.size(); ++i) EXPECT_EQ(r.entries[i].name, property_names()[i]);
  EXPECT_THROW(r["nope"], std::invalid_argument);
}

TEST(PropertyReport, Examples) {
  auto z2 = property_report(gen::affine_table(2, 1, 0));
  EXPECT_TRUE(z2["knot_theoretic"]);
  EXPECT_TRUE(z2["derived_from_binary_group"]);
  EXPECT_TRUE(z2["commutative"]);
  EXPECT_TRUE(z2["all_elements_neutral"]);
  for (Int k = 4; k <= 12; k += 2) {
    auto r = property_report(kt_make(AbelianGroup::cyclic(k), embed_written({k}, {k / 2})));
    EXPECT_FALSE(r["derived_from_binary_group"]) << k;
    EXPECT_TRUE(r["knot_theoretic"]) << k;
  }
  auto z3 = property_report(parse_kt_spec("Z3@0"));
  EXPECT_TRUE(z3["idempotent"]);
  EXPECT_TRUE(z3["malcev"]);
  EXPECT_TRUE(z3["knot_theoretic"]);
  EXPECT_FALSE(z3["commutative"]);
  auto sum3 = property_report(gen::affine_table(3, 1, 0));
  EXPECT_TRUE(sum3["ternary_group"]);
  EXPECT_FALSE(sum3["knot_theoretic"]);
  EXPECT_TRUE(sum3["semicommutative"]);
  EXPECT_FALSE(sum3["eq23"]);
}

TEST(PropertyReport, EntropicSampledAboveFive) {
  auto r5 = property_report(parse_kt_spec("Z5@0"));
  EXPECT_FALSE(r5.sampled("entropic"));
  auto r6 = property_report(parse_kt_spec("Z6@3"));
  EXPECT_TRUE(r6.sampled("entropic"));
  EXPECT_TRUE(r6["entropic"]);
  EXPECT_FALSE(r6.sampled("knot_theoretic"));
}

TEST(PropertyReport, CanonicalStructuresAreConsistent) {
  for (const auto& t : gen::all_canonical(12)) {
    auto r = property_report(t);
    SCOPED_TRACE(t.to_string());
    for (auto name : {"quasigroup", "associative", "ternary_group", "knot_theoretic", "semicommutative", "eq23"})
      EXPECT_TRUE(r[name]) << name;
    EXPECT_EQ(r["idempotent"], t.is_idempotent());
    EXPECT_EQ(r["commutative"], t.group().is_elementary_two());
    EXPECT_EQ(r["derived_from_binary_group"], t.group().is_elementary_two() && t.is_idempotent());
    EXPECT_TRUE(consistency_violations(r).empty());
  }
}

TEST(PropertyReport, NonExamplesAreConsistent) {
  for (const auto& [name, table] : gen::mutated_non_examples()) {
    auto r = property_report(table);
    EXPECT_FALSE(r["knot_theoretic"]) << name;
    EXPECT_TRUE(consistency_violations(r).empty()) << name;
  }
}

TEST(Characterization, Eq22IffEq4OnTernaryGroups) {
  auto check = [](const TernaryTable& t, const std::string& name) {
    if (!check_quasigroup(t) || !check_identity(t, catalog_identity("assoc_full")).holds) return;
    ASSERT_TRUE(t.has_total_skew()) << name;
    EXPECT_EQ(check_identity(t, catalog_identity("eq22")).holds, check_identity(t, catalog_identity("eq4")).holds)
        << name;
  };
  for (const auto& t : gen::all_canonical(8)) check(table_from_canonical(t), t.to_string());
  for (const auto& [name, t] : gen::mutated_non_examples()) check(t, name);
}

TEST(Characterization, SkewFormulas) {
  for (const auto& t : gen::all_canonical(12)) {
    const auto& g = t.group();
    for (const auto& x : g.elements()) {
      EXPECT_EQ(t.eval(x, x, x), t.skew(x));
      for (const auto& y : g.elements()) EXPECT_EQ(t.eval(x, y, t.skew(x)), g.sub(g.scale(x, 2), y));
    }
  }
}

TEST(Retract, InvariantFactorsPreserved) {
  for (const auto& t : gen::all_canonical(8)) {
    const auto& g = t.group();
    for (const auto& b : g.elements()) {
      auto r = retract(t, b);
      auto id = identify_abelian_group(r.table, r.neutral);
      EXPECT_EQ(id.group.invariant_factors(), g.invariant_factors()) << t.to_string();
      EXPECT_EQ(r.neutral, g.index_of(t.skew(b)));
      for (std::size_t x = 0; x < g.size(); ++x) {
        EXPECT_EQ(r.inverse[x], t.skew(t.bracket(g.index_of(b), x, g.index_of(b))));
        EXPECT_EQ(r.table(x, r.inverse[x]), r.neutral);
      }
    }
  }
}

TEST(Retract, AtTranslationIsTheGroup) {
  for (const auto& t : gen::all_canonical(12)) {
    const auto& g = t.group();
    auto r = retract(t, t.translation());
    EXPECT_EQ(r.neutral, 0u);
    for (std::size_t x = 0; x < g.size(); ++x)
      for (std::size_t y = 0; y < g.size(); ++y)
        EXPECT_EQ(r.table(x, y), g.index_of(g.add(g.element_at(x), g.element_at(y))));
  }
}

TEST(Retract, RejectsNonGroups) {
  EXPECT_THROW(retract(gen::affine_table(4, 2, 0), 0), StructureError);
  EXPECT_THROW(retract(gen::derived_ternary(gen::symmetric3(), true), 0), StructureError);
  EXPECT_THROW(retract(gen::affine_table(3, 1, 0), 3), std::out_of_range);
}
