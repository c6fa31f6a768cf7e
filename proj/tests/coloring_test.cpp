#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace ktg;

namespace {

ColoringPair flat_only(const char* spec) { return {parse_kt_spec(spec), std::nullopt}; }
ColoringPair both(const char* f, const char* v) { return {parse_kt_spec(f), parse_kt_spec(v)}; }

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  Diagram d{a.name + "+" + b.name, a.regions + b.regions, a.crossings};
  for (auto c : b.crossings) {
    for (auto& r : c.corners) r += a.regions;
    d.crossings.push_back(c);
  }
  return d;
}

}  // namespace

TEST(Compile, Kishino) {
  for (const auto& t : gen::all_canonical(8)) {
    auto sys = compile_system(builtin("kishino"), {t, std::nullopt});
    ASSERT_EQ(sys.matrix.rows(), 4u);
    for (std::size_t r = 0; r < 4; ++r) {
      EXPECT_EQ(sys.matrix(r, 0), 1);
      EXPECT_EQ(sys.matrix(r, 1), -1);
      EXPECT_EQ(sys.rhs[r], t.translation());
    }
  }
  EXPECT_EQ(compile_system(builtin("unlink2"), flat_only("Z2@1")).matrix.rows(), 0u);
}

TEST(Compile, HopfRows) {
  auto sys = compile_system(builtin("hopf_fv"), both("Z2@0", "Z2@1"));
  EXPECT_EQ(sys.matrix, IntMatrix(2, 4, {1, -1, 1, -1, 1, -1, 1, -1}));
  EXPECT_EQ(sys.rhs, (std::vector<Element>{Element{{0}}, Element{{1}}}));
}

TEST(Compile, Preconditions) {
  EXPECT_THROW(compile_system(builtin("hopf_fv"), flat_only("Z2@0")), std::invalid_argument);
  EXPECT_THROW(compile_system(builtin("hopf_fv"), both("Z4@0", "Z2xZ2@(0,0)")), std::invalid_argument);
  EXPECT_THROW(compile_system(Diagram{"bad", 2, {Crossing{CrossingKind::flat, {0, 1, 2, 0}}}}, flat_only("Z2@0")),
               std::invalid_argument);
  // a virt operation on a flat-only diagram is allowed and unused
  EXPECT_NO_THROW(compile_system(builtin("kishino"), both("Z2@0", "Z2@1")));
}

TEST(Counts, KnownValues) {
  auto z2 = both("Z2@0", "Z2@1");
  EXPECT_EQ(count_bruteforce(builtin("hopf_fv"), z2).count, 0u);
  EXPECT_EQ(count_affine(builtin("hopf_fv"), z2).count, 0u);
  EXPECT_EQ(count_bruteforce(builtin("unlink2"), z2).count, 8u);
  EXPECT_EQ(count_affine(builtin("unlink2"), z2).count, 8u);
  EXPECT_EQ(count_bruteforce(builtin("kishino"), flat_only("Z2xZ2@(1,1)")).count, 4u);
  for (const auto& t : gen::all_canonical(8)) {
    const std::uint64_t m = t.size();
    ColoringPair p{t, std::nullopt};
    EXPECT_EQ(count_affine(builtin("loop2"), p).count, m * m);
    EXPECT_EQ(count_bruteforce(builtin("loop2"), p).count, m * m);
    EXPECT_EQ(count_affine(builtin("kishino"), p).count, m);
    EXPECT_EQ(count_bruteforce(builtin("kishino"), p).count, m);
    EXPECT_EQ(count_affine(builtin("unlink2"), p).count, m * m * m);
  }
  // the same operation on both kinds of crossing
  EXPECT_EQ(count_affine(builtin("hopf_fv"), both("Z2@1", "Z2@1")).count, 8u);
  EXPECT_EQ(count_affine(builtin("hopf_fv"), both("Z2@0", "Z2@0")).count, 8u);
}

TEST(Counts, BudgetExceeded) {
  Diagram big{"big", 12, {}};
  EXPECT_THROW(count_bruteforce(big, flat_only("Z4@0")), BudgetExceeded);
  EXPECT_EQ(count_affine(big, flat_only("Z4@0")).count, 16777216u);
  EXPECT_THROW(count_bruteforce(builtin("unlink2"), flat_only("Z4@0"), 63), BudgetExceeded);
}

TEST(Counts, AffineMatchesBruteForce) {
  std::mt19937_64 rng(101);
  const auto pairs = gen::all_same_group_pairs(8);
  for (int i = 0; i < 40; ++i) {
    auto d = gen::random_diagram(rng, 6, 6);
    for (const auto& p : pairs) {
      if (!d.has_virtual() && p.virt != p.flat) continue;
      ASSERT_EQ(count_affine(d, p).count, count_bruteforce(d, p).count)
          << format_diagram(d) << p.flat.to_string() << " " << p.virt_string();
    }
  }
}

TEST(Counts, DisjointUnionMultiplies) {
  std::mt19937_64 rng(23);
  const auto pairs = gen::all_same_group_pairs(4);
  for (int i = 0; i < 40; ++i) {
    auto a = gen::random_diagram(rng, 3, 3), b = gen::random_diagram(rng, 3, 3);
    auto u = disjoint_union(a, b);
    for (const auto& p : pairs) {
      EXPECT_EQ(count_affine(u, p).count, count_affine(a, p).count * count_affine(b, p).count);
      EXPECT_EQ(count_bruteforce(u, p).count, count_affine(u, p).count);
    }
  }
}

TEST(Counts, CrosslessIsPower) {
  for (std::size_t r = 1; r <= 5; ++r)
    for (const auto& t : gen::all_canonical(8)) {
      std::uint64_t expect = 1;
      for (std::size_t i = 0; i < r; ++i) expect *= t.size();
      EXPECT_EQ(count_affine(Diagram{"free", r, {}}, {t, std::nullopt}).count, expect);
    }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_colorings(builtin("unlink2"), flat_only("Z2@1"), 64).size(), 8u);
  EXPECT_TRUE(enumerate_colorings(builtin("hopf_fv"), both("Z2@0", "Z2@1"), 64).empty());
  EXPECT_EQ(enumerate_colorings(builtin("kishino"), flat_only("Z2@0"), 64),
            (std::vector<std::vector<std::size_t>>{{0, 0}, {1, 1}}));
  auto k4 = enumerate_colorings(builtin("kishino"), flat_only("Z4@2"), 64);
  EXPECT_EQ(k4, (std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}, {2, 0}, {3, 1}}));
  EXPECT_THROW(enumerate_colorings(builtin("unlink2"), flat_only("Z2@1"), 7), BudgetExceeded);
  auto all = enumerate_colorings(builtin("loop2"), flat_only("Z3@0"), 64);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(all.size(), 9u);
}

TEST(ColoringGroup, Examples) {
  auto loop = coloring_group(builtin("loop2"), parse_kt_spec("Z2@1"));
  EXPECT_TRUE(iso_test(loop.canonical.structure, parse_kt_spec("Z2xZ2@(1,1)")).isomorphic);
  auto k = coloring_group(builtin("kishino"), parse_kt_spec("Z2@0"));
  EXPECT_EQ(k.canonical.structure.size(), 2u);
  auto u = coloring_group(builtin("unlink2"), parse_kt_spec("Z2@1"));
  EXPECT_EQ(u.canonical.structure.size(), 8u);
  EXPECT_TRUE(iso_test(u.canonical.structure, parse_kt_spec("Z2xZ2xZ2@(1,1,1)")).isomorphic);
  EXPECT_THROW(coloring_group(builtin("hopf_fv"), parse_kt_spec("Z2@0")), std::invalid_argument);
  Diagram none{"none", 1, {Crossing{CrossingKind::flat, {0, 0, 0, 0}}}};
  EXPECT_THROW(coloring_group(none, parse_kt_spec("Z2@1")), StructureError);
}

TEST(ColoringGroup, ClosedAndKnotTheoretic) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    auto d = gen::random_diagram(rng, 4, 4, false);
    for (const auto& t : gen::all_canonical(4)) {
      if (count_affine(d, {t, std::nullopt}).count == 0 || count_affine(d, {t, std::nullopt}).count > 64) continue;
      auto cg = coloring_group(d, t);
      EXPECT_TRUE(property_report(cg.table, {10'000'000, 2'000, 1})["knot_theoretic"]);
    }
  }
}

TEST(InvariantVector, Catalogs) {
  auto order4 = standard_catalog("order4");
  EXPECT_EQ(invariant_vector(builtin("kishino"), order4), (std::vector<std::uint64_t>{4, 4, 4, 4}));
  EXPECT_EQ(invariant_vector(builtin("loop2"), order4), (std::vector<std::uint64_t>{16, 16, 16, 16}));
  EXPECT_EQ(invariant_vector(builtin("unlink2"), standard_catalog("order2")), (std::vector<std::uint64_t>{8, 8}));
  EXPECT_EQ(invariant_vector(builtin("hopf_fv"), standard_catalog("order2")), (std::vector<std::uint64_t>{8, 8}));
  EXPECT_THROW(standard_catalog("order3"), std::invalid_argument);
}
