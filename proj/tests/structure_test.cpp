#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace ktg;

namespace {

Element w(std::vector<Int> moduli, std::vector<Int> values) { return embed_written(moduli, values); }

bool preserves(const TernaryTable& a, const TernaryTable& b, const std::vector<std::size_t>& h) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      for (std::size_t z = 0; z < a.size(); ++z)
        if (h[a(x, y, z)] != b(h[x], h[y], h[z])) return false;
  return true;
}

bool bijective(std::vector<std::size_t> h) {
  std::sort(h.begin(), h.end());
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != i) return false;
  return true;
}

}  // namespace

TEST(DerivedMalcev, CyclicHalf) {
  for (Int k = 2; k <= 12; k += 2) {
    auto t = kt_make(AbelianGroup::cyclic(k), embed_written({k}, {k / 2}));
    auto p = derived_malcev(table_from_canonical(t));
    const auto& g = t.group();
    for (std::size_t x = 0; x < g.size(); ++x)
      for (std::size_t y = 0; y < g.size(); ++y)
        for (std::size_t z = 0; z < g.size(); ++z)
          ASSERT_EQ(p(x, y, z), g.index_of(g.add(g.sub(g.element_at(x), g.element_at(y)), g.element_at(z)))) << k;
  }
}

TEST(DerivedMalcev, Properties) {
  for (const auto& t : gen::all_canonical(8)) {
    auto tab = table_from_canonical(t);
    auto p = derived_malcev(tab);
    SCOPED_TRACE(t.to_string());
    EXPECT_TRUE(check_identity(p, catalog_identity("malcev_1M")).holds);
    EXPECT_TRUE(check_identity(p, catalog_identity("malcev_2M")).holds);
    EXPECT_TRUE(check_identity(p, catalog_identity("malcev")).holds);
    auto r = property_report(p);
    EXPECT_TRUE(r["idempotent"]);
    EXPECT_TRUE(r["knot_theoretic"]);
    if (t.is_idempotent()) {
      EXPECT_EQ(p, tab);
    }
  }
  // 1M/2M also hold for P built from non-commutative ternary groups
  auto s3 = gen::derived_ternary(gen::symmetric3(), false);
  auto p = derived_malcev(s3);
  EXPECT_TRUE(check_identity(p, catalog_identity("malcev_1M")).holds);
  EXPECT_TRUE(check_identity(p, catalog_identity("malcev_2M")).holds);
}

TEST(Canonicalize, Examples) {
  auto c = canonicalize(table_from_canonical(parse_kt_spec("Z2@1")));
  EXPECT_EQ(c.structure.to_string(), "Z2@1");
  auto t = parse_kt_spec("Z2xZ4@(1,2)");
  auto c2 = canonicalize(table_from_canonical(t));
  EXPECT_TRUE(iso_test(c2.structure, parse_kt_spec("Z2xZ4@(1,0)")).isomorphic);
  EXPECT_FALSE(iso_test(c2.structure, parse_kt_spec("Z2xZ4@(0,2)")).isomorphic);
  for (const auto& s : gen::all_canonical(12)) {
    if (!s.is_idempotent()) continue;
    EXPECT_TRUE(canonicalize(table_from_canonical(s)).structure.is_idempotent()) << s.to_string();
  }
}

TEST(Canonicalize, ReproducesCubeUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (const auto& s : gen::all_canonical(16)) {
    std::vector<std::size_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto tab = gen::relabel(table_from_canonical(s), perm);
    auto c = canonicalize(tab);
    SCOPED_TRACE(s.to_string());
    EXPECT_EQ(c.labeling[0], c.structure.group().zero());
    for (std::size_t x = 0; x < tab.size(); ++x)
      for (std::size_t y = 0; y < tab.size(); ++y)
        for (std::size_t z = 0; z < tab.size(); ++z)
          ASSERT_EQ(c.structure.eval(c.labeling[x], c.labeling[y], c.labeling[z]), c.labeling[tab(x, y, z)]);
    EXPECT_TRUE(iso_test(c.structure, s).isomorphic);
  }
}

TEST(Canonicalize, RejectsNonExamples) {
  for (const auto& [name, t] : gen::mutated_non_examples()) EXPECT_THROW(canonicalize(t), StructureError) << name;
}

TEST(IsoTest, Examples) {
  EXPECT_TRUE(iso_test(parse_kt_spec("Z2xZ4@(1,0)"), parse_kt_spec("Z2xZ4@(1,2)")).isomorphic);
  EXPECT_FALSE(iso_test(parse_kt_spec("Z2xZ4@(0,2)"), parse_kt_spec("Z2xZ4@(1,0)")).isomorphic);
  EXPECT_FALSE(iso_test(parse_kt_spec("Z4@0"), parse_kt_spec("Z2xZ2@(0,0)")).isomorphic);
  auto r = iso_test(parse_kt_spec("Z2xZ4@(1,0)"), parse_kt_spec("Z2xZ4@(1,2)"));
  ASSERT_TRUE(r.witness);
  auto g = parse_group_spec("Z2xZ4");
  EXPECT_EQ((*r.witness)[g.index_of(w({2, 4}, {1, 0}))], g.index_of(w({2, 4}, {1, 2})));
}

TEST(IsoTest, EquivalenceRelationUpTo16) {
  for (Int n = 1; n <= 16; ++n) {
    std::vector<CanonicalKT> all;
    for (const auto& g : abelian_group_types(n))
      for (const auto& a : g.two_torsion()) all.emplace_back(g, a);
    const std::size_t m = all.size();
    std::vector<std::vector<char>> rel(m, std::vector<char>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        auto r = iso_test(all[i], all[j]);
        auto p = iso_test(all[i], all[j], OrbitMethod::pinned_search);
        EXPECT_EQ(r.isomorphic, p.isomorphic);
        rel[i][j] = r.isomorphic;
        if (r.isomorphic) {
          ASSERT_TRUE(r.witness);
          EXPECT_TRUE(bijective(*r.witness));
          EXPECT_TRUE(preserves(table_from_canonical(all[i]), table_from_canonical(all[j]), *r.witness));
        }
      }
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_TRUE(rel[i][i]);
      for (std::size_t j = 0; j < m; ++j) {
        EXPECT_EQ(rel[i][j], rel[j][i]);
        for (std::size_t k = 0; k < m; ++k)
          if (rel[i][j] && rel[j][k]) {
            EXPECT_TRUE(rel[i][k]);
          }
      }
    }
  }
}

TEST(IsoTest, Tables) {
  std::mt19937_64 rng(5);
  for (const auto& s : gen::all_canonical(12)) {
    std::vector<std::size_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto a = table_from_canonical(s), b = gen::relabel(a, perm);
    auto r = iso_test(a, b);
    ASSERT_TRUE(r.isomorphic) << s.to_string();
    EXPECT_TRUE(preserves(a, b, *r.witness));
  }
  EXPECT_FALSE(iso_test(table_from_canonical(parse_kt_spec("Z4@0")), table_from_canonical(parse_kt_spec("Z4@2")))
                   .isomorphic);
  EXPECT_FALSE(iso_test(table_from_canonical(parse_kt_spec("Z4@0")), table_from_canonical(parse_kt_spec("Z3@0")))
                   .isomorphic);
  EXPECT_THROW(iso_test(gen::affine_table(3, 1, 0), table_from_canonical(parse_kt_spec("Z3@0"))), StructureError);
}

TEST(Compatible, SelfAndTranslations) {
  for (const auto& t : gen::all_canonical(8)) {
    auto r = compatible(t, t);
    EXPECT_TRUE(r.compatible && r.companion) << t.to_string();
    for (const auto& x : t.group().two_torsion()) {
      auto r0 = compatible(CanonicalKT(t.group(), t.group().zero()), CanonicalKT(t.group(), x));
      EXPECT_TRUE(r0.compatible && r0.companion) << t.to_string();
    }
  }
}

// Flat: Z4 with translation 2; virtual: Z2xZ2 bit-coded on {0..3} with
// translation index 1, i.e. x^y^z^1. Least failing quadruples by direct scan.
TEST(Compatible, MixedCarrierInstance) {
  auto flat = [](std::size_t x, std::size_t y, std::size_t z) { return (x + 4 - y + z + 2) % 4; };
  auto virt = [](std::size_t x, std::size_t y, std::size_t z) { return x ^ y ^ z ^ 1u; };
  std::optional<Quadruple> law, companion;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t d = 0; d < 4; ++d) {
          if (!law && flat(a, b, virt(b, c, d)) != virt(a, virt(a, b, c), flat(virt(a, b, c), c, d)))
            law = Quadruple{a, b, c, d};
          if (!companion && flat(virt(a, b, c), c, d) != virt(flat(a, b, virt(b, c, d)), virt(b, c, d), d))
            companion = Quadruple{a, b, c, d};
        }
  ASSERT_TRUE(law && companion);
  EXPECT_EQ(*law, (Quadruple{0, 0, 0, 1}));
  EXPECT_EQ(*companion, (Quadruple{0, 0, 0, 1}));

  auto tf = table_from_canonical(parse_kt_spec("Z4@2"));
  auto tv = table_from_canonical(parse_kt_spec("Z2xZ2@(0,1)"));
  auto r = compatible(tf, tv);
  EXPECT_FALSE(r.compatible);
  EXPECT_FALSE(r.companion);
  EXPECT_EQ(r.counterexample, law);
  EXPECT_EQ(r.companion_counterexample, companion);
}

TEST(Compatible, SizeMismatch) {
  EXPECT_THROW(compatible(table_from_canonical(parse_kt_spec("Z4@2")), table_from_canonical(parse_kt_spec("Z2@0"))),
               std::invalid_argument);
}
