#include "wfb/classify.hpp"

#include <cmath>

namespace wfb {

std::string to_string(FanoFlag f) {
    switch (f) {
        case FanoFlag::Fano: return "Fano";
        case FanoFlag::StrictlyWeakFano: return "weak Fano, not Fano";
        case FanoFlag::NotWeakFano: return "not weak Fano";
    }
    return "?";
}

namespace {

struct StableInfo {
    const char* label;
    FanoFlag flag;
};

// the five indecomposable families and their Fano/strictly-weak split
std::optional<StableInfo> stable_info(long long c1, long long c2) {
    if (c1 == 0 && c2 == 2)
        return StableInfo{"null-correlation pullback", FanoFlag::Fano};
    if (c1 == -1 && c2 == 1) return StableInfo{"spinor bundle", FanoFlag::Fano};
    if (c1 == -1 && c2 == 2)
        return StableInfo{"Cayley bundle restriction", FanoFlag::StrictlyWeakFano};
    if (c1 == -1 && c2 == 3)
        return StableInfo{"stable family with resolution 0 -> O(-2)^2 -> O(-1)^10 -> S^5 -> E(1) -> 0",
                          FanoFlag::StrictlyWeakFano};
    if (c1 == -1 && c2 == 4)
        return StableInfo{"stable family with resolution 0 -> O(-2)^2 -> O(-1)^7 -> O^7 -> E(2) -> 0",
                          FanoFlag::StrictlyWeakFano};
    return std::nullopt;
}

} // namespace

CandidatePair q3_verdict(long long c1, long long c2) {
    // normalize: twisting by n sends (c1, c2) to (c1+2n, c2 + 2n*c1 + 2n^2)
    while (c1 > 0) { c2 += -2 * c1 + 2; c1 -= 2; }
    while (c1 < -1) { c2 += 2 * c1 + 2; c1 += 2; }

    CandidatePair out;
    out.c1 = c1;
    out.c2 = c2;

    // (-K)^4 = 48(c1^2 - 2c2 + 9) > 0 forces c2 <= 4
    if (antican_quartic(BundleOnX::q3(c1, c2)) <= 0) {
        out.verdict = CandidatePair::Verdict::Excluded;
        out.reason = "(-K)^4 = " + std::to_string(48 * (c1 * c1 - 2 * c2 + 9)) +
                     " <= 0 violates weak Fano positivity";
        return out;
    }
    // chi = 2 - (3/2)c2 for c1 = 0 forces c2 even
    if (c1 == 0 && c2 % 2 != 0) {
        out.verdict = CandidatePair::Verdict::Excluded;
        out.reason = "chi(E) = 2 - (3/2)c2 is not an integer: c2 must be even when c1 = 0";
        return out;
    }
    // c2 <= 0 is equivalent to a line-bundle splitting
    if (c2 <= 0) {
        out.splits = q3_split_pairs(c1, c2);
        if (out.splits.empty()) {
            out.verdict = CandidatePair::Verdict::Excluded;
            out.reason = "c2 <= 0 forces a line-bundle splitting, and no integer pair "
                         "(a,b) has a+b = c1, 2ab = c2";
            return out;
        }
        out.verdict = CandidatePair::Verdict::SplitType;
        out.fano_flag = out.splits.front().flag;
        return out;
    }
    // the one exclusion that is not an arithmetic consequence of the sieves
    if (c1 == 0 && c2 == 4) {
        out.verdict = CandidatePair::Verdict::Excluded;
        out.reason = "Sols-Szurek-Wisniewski: a stable bundle with (c1,c2) = (0,4) splits "
                     "as O(-d)+O(d), d >= 3, on some smooth conic, so E(1) fails nefness there";
        out.cited_rule = true;
        return out;
    }
    auto info = stable_info(c1, c2);
    if (!info) throw Error("sieve reached an unexpected pair");
    out.verdict = CandidatePair::Verdict::StableCandidate;
    out.label = info->label;
    out.fano_flag = info->flag;
    return out;
}

std::vector<CandidatePair> q3_candidates() {
    std::vector<CandidatePair> out;
    for (long long c1 = 0; c1 >= -1; --c1)
        for (long long c2 = 1; c2 <= 4; ++c2) {
            CandidatePair v = q3_verdict(c1, c2);
            if (v.verdict == CandidatePair::Verdict::StableCandidate) out.push_back(v);
        }
    return out;
}

std::vector<CandidatePair> q3_table(long long c2_min, long long c2_max) {
    std::vector<CandidatePair> out;
    for (long long c1 = 0; c1 >= -1; --c1)
        for (long long c2 = c2_min; c2 <= c2_max; ++c2) out.push_back(q3_verdict(c1, c2));
    return out;
}

std::vector<SplitPair> q3_split_pairs(long long c1, long long c2) {
    std::vector<SplitPair> out;
    if (c2 % 2 != 0) return out;         // 2ab = c2 needs c2 even
    // a+b = c1, ab = c2/2: roots of t^2 - c1 t + c2/2
    long long disc = c1 * c1 - 2 * c2;
    if (disc < 0) return out;
    long long s = (long long)std::sqrt((double)disc);
    while (s * s > disc) --s;
    while ((s + 1) * (s + 1) <= disc) ++s;
    if (s * s != disc || (c1 - s) % 2 != 0) return out;
    long long a = (c1 - s) / 2, b = (c1 + s) / 2;
    out.push_back({a, b, split_weak_fano(a, b)});
    return out;
}

FanoFlag split_weak_fano(long long a, long long b) {
    long long gap = a > b ? a - b : b - a;
    if (gap <= 2) return FanoFlag::Fano;
    if (gap <= 3) return FanoFlag::StrictlyWeakFano;
    return FanoFlag::NotWeakFano;
}

Rat h0_vanishing_threshold(long long c1, long long c2) {
    if (c1 == 0) {
        if (27 - 2 * c2 <= 0)
            throw DomainError("threshold undefined: 27 - 2c2 <= 0 is outside the weak Fano range");
        return Rat(9, 2) - Rat(108) / Rat(27 - 2 * c2);
    }
    if (c1 == -1) {
        if (14 - c2 <= 0)
            throw DomainError("threshold undefined: 14 - c2 <= 0 is outside the weak Fano range");
        return Rat(4) - Rat(54) / Rat(14 - c2);
    }
    throw DomainError("threshold table covers normalized c1 in {0,-1}");
}

std::pair<long long, Rat> vanishing_ranges(long long c1) {
    return {-1 - c1, Rat(3 - c1, 2)};
}

Index1Range index1_c2_range(int g) {
    if (g < 2 || g > 12 || g == 11)
        throw DomainError("index-one genus must lie in {2,...,12} \\ {11}");
    Index1Range r;
    r.g = g;
    r.lo = (g + 3) / 2;
    r.hi = g - 2;
    r.empty = r.lo > r.hi;
    for (long long d = r.lo; d <= r.hi; ++d) {
        long long s3 = 2 * g - 2 - 2 * d;
        r.rows.push_back({d, s3, s3 / 2 + 4});
    }
    return r;
}

Index1ChiRecord index1_chi_table(int g, bool c1_is_canonical, long long c2) {
    if (g < 2) throw DomainError("index-one genus must be >= 2");
    Index1ChiRecord rec;
    rec.c1_is_canonical = c1_is_canonical;
    if (c1_is_canonical) {
        rec.chi = Rat(2LL * g - 2, 2) + Rat(4) - Rat(c2);
        rec.h0 = rec.chi.as_integer();
    } else {
        rec.chi = Rat(2) - Rat(c2, 2);
        rec.parity_error = c2 % 2 != 0;
    }
    return rec;
}

} // namespace wfb
