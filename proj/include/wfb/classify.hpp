#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfb/taut.hpp"

namespace wfb {

enum class FanoFlag { Fano, StrictlyWeakFano, NotWeakFano };

std::string to_string(FanoFlag f);

struct SplitPair {
    long long a, b;                      // O(a) + O(b), a <= b
    FanoFlag flag;
};

// Verdict for a normalized pair (c1, c2) on the quadric threefold.
struct CandidatePair {
    long long c1 = 0, c2 = 0;

    enum class Verdict { Excluded, SplitType, StableCandidate };
    Verdict verdict = Verdict::Excluded;

    std::string label;                   // StableCandidate
    std::vector<SplitPair> splits;       // SplitType
    std::string reason;                  // Excluded
    bool cited_rule = false;             // true: geometric exclusion from the
                                         // literature, not an arithmetic deduction
    std::optional<FanoFlag> fano_flag;
};

// Sieve verdict for one pair; c1 is normalized into {0,-1} first.
CandidatePair q3_verdict(long long c1, long long c2);

// The five indecomposable stable candidates, in (c1, c2) lexicographic order.
std::vector<CandidatePair> q3_candidates();

// Verdict interval table for the CLI, c2 in [c2_min, c2_max], c1 in {0,-1}
std::vector<CandidatePair> q3_table(long long c2_min, long long c2_max);

// Splittings O(a)+O(b) with a+b = c1, 2ab = c2 (only c2 <= 0 can split).
std::vector<SplitPair> q3_split_pairs(long long c1, long long c2);

// A split bundle O(a)+O(b) on Q^3 is weak Fano iff |a-b| <= 3 and Fano iff
// |a-b| <= 2 (degree of -K on the minimal section over a line is 3 - |a-b|).
FanoFlag split_weak_fano(long long a, long long b);

// Upper bound on a for h^0(E(-a)) != 0, as an exact rational:
// 9/2 - 108/(27-2c2) for c1 = 0 and 4 - 54/(14-c2) for c1 = -1.
Rat h0_vanishing_threshold(long long c1, long long c2);

// (n_ample, n_nefbig) = (-1-c1, (3-c1)/2): h^i(E(n)) = 0 for i >= 2 once
// n >= n_ample and for i >= 1 once n >= n_nefbig.
std::pair<long long, Rat> vanishing_ranges(long long c1);

struct Index1Row {
    long long d;                         // -K_X . c2(F)
    long long s3;                        // 2g - 2 - 2d
    long long h0;                        // s3/2 + 4
};

struct Index1Range {
    int g = 0;
    long long lo = 0, hi = 0;            // [floor((g+3)/2), g-2]
    bool empty = true;
    std::vector<Index1Row> rows;
};

// Admissible c2 interval for indecomposable bundles with c1(F) = c1(X) on an
// index-one threefold of genus g; g must lie in {2,...,12} \ {11}.
Index1Range index1_c2_range(int g);

struct Index1ChiRecord {
    Rat chi;
    long long h0 = 0;                    // only meaningful when c1_is_canonical
    bool c1_is_canonical = false;
    bool parity_error = false;           // c1 = 0 needs c2 even
};

// chi bookkeeping on an index-one model: chi = (2g-2)/2 + 4 - c2 when
// c1(F) = c1(X), chi = 2 - c2/2 when c1 = 0 (with parity check).
Index1ChiRecord index1_chi_table(int g, bool c1_is_canonical, long long c2);

} // namespace wfb
