#include <doctest.h>

#include "wfb/classify.hpp"

using namespace wfb;

TEST_CASE("candidate set") {
    auto cands = q3_candidates();
    REQUIRE(cands.size() == 5);
    std::vector<std::pair<long long, long long>> pairs;
    for (const auto& c : cands) pairs.push_back({c.c1, c.c2});
    std::vector<std::pair<long long, long long>> expected = {
        {0, 2}, {-1, 1}, {-1, 2}, {-1, 3}, {-1, 4}};
    CHECK(pairs == expected);
    CHECK(cands[0].label == "null-correlation pullback");
    CHECK(cands[1].label == "spinor bundle");
    CHECK(cands[2].label == "Cayley bundle restriction");
    CHECK(cands[0].fano_flag == FanoFlag::Fano);
    CHECK(cands[1].fano_flag == FanoFlag::Fano);
    CHECK(cands[2].fano_flag == FanoFlag::StrictlyWeakFano);
    CHECK(cands[3].fano_flag == FanoFlag::StrictlyWeakFano);
    CHECK(cands[4].fano_flag == FanoFlag::StrictlyWeakFano);
}

TEST_CASE("exclusions") {
    CandidatePair v = q3_verdict(0, 4);
    CHECK(v.verdict == CandidatePair::Verdict::Excluded);
    CHECK(v.cited_rule);

    v = q3_verdict(0, 6);
    CHECK(v.verdict == CandidatePair::Verdict::Excluded);
    CHECK_FALSE(v.cited_rule);

    v = q3_verdict(0, 3);   // parity
    CHECK(v.verdict == CandidatePair::Verdict::Excluded);

    v = q3_verdict(-1, -2);   // c2 <= 0 but no integer splitting
    CHECK(v.verdict == CandidatePair::Verdict::Excluded);
}

TEST_CASE("verdicts normalize c1 first") {
    // (c1,c2) = (3,7): twisting by -2 gives (-1, 7 + 2*(-2)*3 + 2*4) = (-1,3)
    CandidatePair v = q3_verdict(3, 7);
    CHECK(v.c1 == -1);
    CHECK(v.c2 == 3);
    CHECK(v.verdict == CandidatePair::Verdict::StableCandidate);
}

TEST_CASE("split table") {
    auto s = q3_split_pairs(0, -2);
    REQUIRE(s.size() == 1);
    CHECK(s[0].a == -1);
    CHECK(s[0].b == 1);
    CHECK(s[0].flag == FanoFlag::Fano);

    s = q3_split_pairs(-1, -4);
    REQUIRE(s.size() == 1);
    CHECK(s[0].a == -2);
    CHECK(s[0].b == 1);
    CHECK(s[0].flag == FanoFlag::StrictlyWeakFano);

    s = q3_split_pairs(0, 0);
    REQUIRE(s.size() == 1);
    CHECK(s[0].a == 0);
    CHECK(s[0].b == 0);
    CHECK(s[0].flag == FanoFlag::Fano);

    CHECK(q3_split_pairs(-1, -2).empty());
}

TEST_CASE("split weak Fano criterion") {
    CHECK(split_weak_fano(-2, 1) == FanoFlag::StrictlyWeakFano);
    CHECK(split_weak_fano(-1, 1) == FanoFlag::Fano);
    CHECK(split_weak_fano(-3, 1) == FanoFlag::NotWeakFano);
    CHECK(split_weak_fano(-1, 0) == FanoFlag::Fano);
    CHECK(split_weak_fano(0, 0) == FanoFlag::Fano);

    // independent route: -K . (minimal section over a line) = 3 - |a-b|,
    // -K . fiber = 2; ample iff both > 0 and the gap stays below the wall
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b) {
            long long min_section = 3 - (a > b ? a - b : b - a);
            FanoFlag expect = min_section >= 1
                                  ? FanoFlag::Fano
                                  : (min_section == 0 ? FanoFlag::StrictlyWeakFano
                                                      : FanoFlag::NotWeakFano);
            CHECK(split_weak_fano(a, b) == expect);
            // symmetry and shift invariance
            CHECK(split_weak_fano(a, b) == split_weak_fano(b, a));
            CHECK(split_weak_fano(a, b) == split_weak_fano(a + 3, b + 3));
        }
}

TEST_CASE("h0 vanishing thresholds") {
    CHECK(h0_vanishing_threshold(0, 2) == Rat(-9, 46));
    CHECK(h0_vanishing_threshold(-1, 4) == Rat(-7, 5));
    CHECK(h0_vanishing_threshold(-1, 3) == Rat(-10, 11));
    // h0(E(1)) = 0 for (-1,4): a = -1 lies strictly above the threshold
    CHECK(Rat(-1) > h0_vanishing_threshold(-1, 4));
    CHECK_THROWS_AS(h0_vanishing_threshold(0, 14), DomainError);
    CHECK_THROWS_AS(h0_vanishing_threshold(-1, 14), DomainError);
    CHECK_THROWS_AS(h0_vanishing_threshold(1, 0), DomainError);
}

TEST_CASE("vanishing ranges") {
    CHECK(vanishing_ranges(0) == std::pair<long long, Rat>{-1, Rat(3, 2)});
    CHECK(vanishing_ranges(-1) == std::pair<long long, Rat>{0, Rat(2)});
    CHECK(vanishing_ranges(-2) == std::pair<long long, Rat>{1, Rat(5, 2)});
}

TEST_CASE("index-one c2 intervals") {
    Index1Range r = index1_c2_range(6);
    CHECK_FALSE(r.empty);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].d == 4);
    CHECK(r.rows[0].s3 == 2);
    CHECK(r.rows[0].h0 == 5);

    r = index1_c2_range(12);
    CHECK(r.lo == 7);
    CHECK(r.hi == 10);
    REQUIRE(r.rows.size() == 4);

    for (int g : {2, 3, 4, 5}) CHECK(index1_c2_range(g).empty);
    for (int g : {6, 7, 8, 9, 10, 12}) CHECK_FALSE(index1_c2_range(g).empty);

    CHECK_THROWS_AS(index1_c2_range(11), DomainError);
    CHECK_THROWS_AS(index1_c2_range(13), DomainError);
    CHECK_THROWS_AS(index1_c2_range(1), DomainError);

    // s3 > 0 and the Brill-Noether product bound s3 + 4 <= g on every row
    for (int g : {6, 7, 8, 9, 10, 12})
        for (const auto& row : index1_c2_range(g).rows) {
            CHECK(row.s3 > 0);
            CHECK(row.s3 + 4 <= g);
        }
}

TEST_CASE("index-one chi records") {
    Index1ChiRecord rec = index1_chi_table(8, true, 6);
    CHECK(rec.h0 == 5);
    rec = index1_chi_table(10, false, 4);
    CHECK(rec.chi == Rat(0));
    CHECK_FALSE(rec.parity_error);
    rec = index1_chi_table(10, false, 3);
    CHECK(rec.parity_error);
}
