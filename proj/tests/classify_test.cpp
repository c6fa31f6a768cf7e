#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ktg;

TEST(Enumerate, KnownCounts) {
  EXPECT_EQ(enumerate_kt(8).counts, (KTCounts{7, 3, 2}));
  EXPECT_EQ(enumerate_kt(5).counts, (KTCounts{1, 1, 0}));
  EXPECT_EQ(enumerate_kt(16).counts, (KTCounts{12, 5, 2}));
  EXPECT_EQ(enumerate_kt(1).counts, (KTCounts{1, 1, 1}));
  EXPECT_THROW(enumerate_kt(0), std::out_of_range);
  EXPECT_THROW(enumerate_kt(65), std::out_of_range);
}

TEST(Enumerate, RepresentativesOfEight) {
  std::vector<std::string> reps;
  for (const auto& t : enumerate_kt(8).representatives) reps.push_back(t.to_string());
  EXPECT_EQ(reps, (std::vector<std::string>{"Z8@0", "Z8@4", "Z4xZ2@(0,0)", "Z4xZ2@(0,1)", "Z4xZ2@(2,0)",
                                            "Z2xZ2xZ2@(0,0,0)", "Z2xZ2xZ2@(0,0,1)"}));
}

TEST(Enumerate, OddOrdersAreIdempotent) {
  for (Int n = 1; n <= 64; n += 2) {
    auto c = enumerate_kt(n).counts;
    EXPECT_EQ(c.all, c.idempotent) << n;
    EXPECT_EQ(c.idempotent, static_cast<Int>(abelian_group_types(n).size())) << n;
  }
}

TEST(Enumerate, CountsMatchRepresentatives) {
  for (Int n = 1; n <= 64; ++n) {
    auto r = enumerate_kt(n);
    Int idem = 0, comm = 0;
    for (const auto& t : r.representatives) {
      EXPECT_EQ(t.size(), static_cast<std::size_t>(n));
      auto p = t.size() <= 32 ? std::optional(property_report(t, {10'000'000, 2'000, 1})) : std::nullopt;
      if (t.is_idempotent()) ++idem;
      if (t.group().is_elementary_two()) ++comm;
      if (p) {
        EXPECT_EQ((*p)["idempotent"], t.is_idempotent());
        EXPECT_EQ((*p)["commutative"], t.group().is_elementary_two()) << t.to_string();
      }
    }
    EXPECT_EQ(r.counts.idempotent, idem);
    EXPECT_EQ(r.counts.commutative, comm);
    EXPECT_EQ(r.counts.idempotent, static_cast<Int>(abelian_group_types(n).size()));
  }
}

// Every candidate is isomorphic to exactly one representative.
TEST(Enumerate, RepresentativesCoverUpTo16) {
  for (Int n = 1; n <= 16; ++n) {
    auto reps = enumerate_kt(n).representatives;
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        EXPECT_FALSE(iso_test(reps[i], reps[j], OrbitMethod::pinned_search).isomorphic);
    for (const auto& g : abelian_group_types(n))
      for (const auto& a : g.two_torsion()) {
        int hits = 0;
        for (const auto& r : reps) hits += iso_test(r, CanonicalKT(g, a), OrbitMethod::pinned_search).isomorphic;
        EXPECT_EQ(hits, 1) << g.to_string();
      }
    EXPECT_EQ(classify_pairwise(n).counts, enumerate_kt(n).counts) << n;
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_counts(24), (KTCounts{7, 3, 0}));
  EXPECT_EQ(closed_form_counts(32), (KTCounts{19, 7, 2}));
  EXPECT_EQ(closed_form_counts(36), classify_pairwise(36).counts);
  EXPECT_EQ(closed_form_counts(36), (KTCounts{8, 4, 0}));
  EXPECT_EQ(closed_form_counts(48), (KTCounts{12, 5, 0}));
  EXPECT_EQ(closed_form_counts(1), (KTCounts{1, 1, 1}));
  EXPECT_EQ(closed_form_counts(1'000'000).idempotent, 121);
  EXPECT_THROW(closed_form_counts(0), std::out_of_range);
  EXPECT_THROW(closed_form_counts(1'000'001), std::out_of_range);
}

TEST(ClosedForm, MatchesEnumerationUpTo64) {
  for (Int n = 1; n <= 64; ++n) EXPECT_EQ(closed_form_counts(n), enumerate_kt(n).counts) << n;
}

TEST(Audit, ReferenceRowsStored) {
  const auto& g = reference_counts();
  EXPECT_EQ(g[63], (KTCounts{30, 11, 2}));
  EXPECT_EQ(g[35], (KTCounts{10, 5, 0}));
  EXPECT_EQ(g[47], (KTCounts{10, 4, 0}));
  EXPECT_EQ(g[15], (KTCounts{12, 5, 2}));
}

TEST(Audit, FlagsOnly36And48) {
  auto a = table1_compare(64);
  ASSERT_EQ(a.rows.size(), 64u);
  EXPECT_EQ(a.mismatches, (std::vector<Int>{36, 48}));
  EXPECT_TRUE(a.routes_agree);
  for (const auto& row : a.rows) {
    if (row.n <= 32) {
      EXPECT_TRUE(row.match) << row.n;
    }
    EXPECT_EQ(row.pairwise.has_value(), !row.match);
  }
  EXPECT_EQ(a.rows[35].computed, (KTCounts{8, 4, 0}));
  EXPECT_EQ(a.rows[47].computed, (KTCounts{12, 5, 0}));
  EXPECT_EQ(render_audit_row(a.rows[63]), "n=64 paper=30/11/2 computed=30/11/2 match=true");
  EXPECT_EQ(render_audit_row(a.rows[35]), "n=36 paper=10/5/0 computed=8/4/0 match=false");
}
