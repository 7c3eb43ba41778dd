#include "wfb/k3.hpp"

#include <algorithm>
#include <cmath>

#include "wfb/classify.hpp"

namespace wfb {

LatticeModel::LatticeModel(std::vector<std::vector<long long>> g,
                           std::vector<LatticeClass> curve_list)
    : gram(std::move(g)), curves(std::move(curve_list)) {
    validate();
}

void LatticeModel::validate() const {
    size_t n = gram.size();
    if (n == 0 || n > 4) throw DomainError("lattice rank must lie in [1,4]");
    for (size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw DomainError("Gram matrix must be square");
        if (gram[i][i] % 2 != 0) throw DomainError("K3 Picard lattices are even");
        for (size_t j = 0; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw DomainError("Gram matrix must be symmetric");
    }
    for (const auto& c : curves) {
        if (c.size() != n) throw DomainError("curve class has wrong rank");
        if (square(*this, c) != -2)
            throw DomainError("listed curves must have self-intersection -2");
    }
}

LatticeModel LatticeModel::q3_elliptic7() {
    return LatticeModel({{6, 7}, {7, 0}});
}

LatticeModel LatticeModel::genus_with_conic(int g) {
    return LatticeModel({{2LL * g - 2, 2}, {2, -2}});
}

LatticeModel LatticeModel::genus_with_elliptic(int g, long long d) {
    return LatticeModel({{2LL * g - 2, d}, {d, 0}});
}

long long pairing(const LatticeModel& m, const LatticeClass& x, const LatticeClass& y) {
    size_t n = m.gram.size();
    if (x.size() != n || y.size() != n)
        throw DomainError("lattice class dimension mismatch");
    long long s = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) s += x[i] * m.gram[i][j] * y[j];
    return s;
}

long long square(const LatticeModel& m, const LatticeClass& x) { return pairing(m, x, x); }

long long rr_h0_lower(const LatticeModel& m, const LatticeClass& d) {
    long long sq = square(m, d);
    if (sq < -2) throw DomainError("Riemann-Roch bound needs D^2 >= -2");
    if (sq % 2 != 0) throw Error("odd square on an even lattice");
    return sq / 2 + 2;
}

namespace {

void box_search(const LatticeModel& m, long long bound, long long target,
                std::vector<LatticeClass>& out) {
    int n = m.rank();
    LatticeClass x((size_t)n, -bound);
    for (;;) {
        if (square(m, x) == target) out.push_back(x);
        int i = 0;
        while (i < n && x[(size_t)i] == bound) { x[(size_t)i] = -bound; ++i; }
        if (i == n) break;
        ++x[(size_t)i];
    }
}

} // namespace

MinusTwoResult minus_two_solutions(const LatticeModel& m, long long bound) {
    MinusTwoResult res;
    box_search(m, bound, -2, res.classes);
    std::sort(res.classes.begin(), res.classes.end());

    // rank-2 forms with an isotropic basis vector factor over Z:
    // Q(a,b) = p a^2 + 2q ab = a(pa + 2qb), so a | 2 and each case is a
    // linear congruence; the enumeration is complete independently of the box.
    int iso = m.rank() == 2 && m.gram[1][1] == 0 ? 1 : (m.rank() == 2 && m.gram[0][0] == 0 ? 0 : -1);
    if (iso >= 0) {
        long long p = m.gram[(size_t)(1 - iso)][(size_t)(1 - iso)], q = m.gram[0][1];
        std::vector<LatticeClass> complete;
        for (long long a : {-2LL, -1LL, 1LL, 2LL}) {
            if (-2 % a != 0) continue;
            long long rhs = -2 / a - p * a;      // 2q b = rhs
            if (q != 0 && rhs % (2 * q) == 0) {
                long long b = rhs / (2 * q);
                complete.push_back(iso == 1 ? LatticeClass{a, b} : LatticeClass{b, a});
            }
            if (q == 0 && rhs == 0)
                throw DomainError("degenerate lattice: whole line of solutions");
        }
        std::sort(complete.begin(), complete.end());
        // the box result must be the restriction of the complete list
        for (const auto& c : res.classes)
            if (std::find(complete.begin(), complete.end(), c) == complete.end())
                throw Error("divisor enumeration missed a box solution");
        res.classes = std::move(complete);
        res.certified_complete = true;
        res.certificate = "form factors as a(" + std::to_string(p) + "a + " +
                          std::to_string(2 * q) + "b); a divides 2, each case a linear congruence";
    } else {
        res.certificate = "box search with coordinates in [-" + std::to_string(bound) + "," +
                          std::to_string(bound) + "]";
    }
    return res;
}

IsotropicReport isotropic_degree_solutions(int g, long long dmax) {
    if (g < 9 || g > 12) throw DomainError("isotropic analysis covers genus 9..12");
    IsotropicReport rep;
    rep.g = g;
    rep.dmax = dmax;
    long long r = (long long)std::sqrt((double)g);
    while (r * r > g) --r;
    while ((r + 1) * (r + 1) <= g) ++r;
    rep.g_is_square = r * r == g;

    // E = aH + b*gamma on (H^2 = 2g-2, H.gamma = 2, gamma^2 = -2):
    // E^2 = 0 forces b = a(1 +- sqrt(g)), so integer solutions need g square.
    if (!rep.g_is_square) {
        rep.note = "sqrt(" + std::to_string(g) + ") is irrational: E^2 = 0 has no nonzero "
                   "integer solutions, for any degree";
        return rep;
    }
    for (long long d = 1; d <= dmax; ++d) {
        for (long long sign : {1LL, -1LL}) {
            // b = a(1 + sign*r), d = a(2g-2) + 2b = a(2g + 2*sign*r) => a = d / (2g + 2 sign r)
            long long den = 2LL * g + 2 * sign * r;
            if (den == 0 || d % den != 0) continue;
            long long a = d / den;
            long long b = a * (1 + sign * r);
            if (a == 0 && b == 0) continue;
            rep.solutions.push_back({d, a, b});
        }
    }
    rep.note = "g = " + std::to_string(g) + " is a perfect square; solutions exist exactly "
               "when " + std::to_string(2 * g - 2 * r) + " or " + std::to_string(2 * g + 2 * r) +
               " divides d";
    return rep;
}

bool bn_product_violation(long long g, long long h0_L, long long h0_HminusL) {
    if (g < 0 || h0_L < 0 || h0_HminusL < 0)
        throw DomainError("Brill-Noether inputs must be non-negative");
    return h0_L * h0_HminusL >= g + 1;
}

NefDecomposition nef_decompose(const LatticeModel& m, const LatticeClass& d, int step_budget) {
    m.validate();
    if ((int)d.size() != m.rank()) throw DomainError("divisor class has wrong rank");
    NefDecomposition out;
    LatticeClass cur = d;
    for (int step = 0; step < step_budget; ++step) {
        std::vector<LatticeClass> negative;
        for (const auto& curve : m.curves) {
            long long p = pairing(m, cur, curve);
            if (p >= 0) continue;
            if (p <= -2)
                throw HypothesisViolation(
                    "hypothesis violated: running divisor pairs to " + std::to_string(p) +
                    " with a listed curve; H^{>0}(O(D)) = 0 fails for this configuration");
            negative.push_back(curve);
        }
        if (negative.empty()) {
            out.nef_part = cur;
            return out;
        }
        for (size_t i = 0; i < negative.size(); ++i)
            for (size_t j = i + 1; j < negative.size(); ++j)
                if (pairing(m, negative[i], negative[j]) != 0)
                    throw HypothesisViolation(
                        "hypothesis violated: negative curve set is not pairwise orthogonal; "
                        "H^{>0}(O(D)) = 0 fails for this configuration");
        for (const auto& curve : negative)
            for (size_t i = 0; i < cur.size(); ++i) cur[i] -= curve[i];
        out.chain.push_back(negative);
    }
    throw BudgetExceeded("nef decomposition did not terminate within " +
                         std::to_string(step_budget) + " steps");
}

Step4Report step4_case_analysis(int g, long long d, long long m1) {
    Index1Range range = index1_c2_range(g);   // validates g
    if (range.empty || d < range.lo || d > range.hi)
        throw DomainError("(g,d) outside the admissible index-one table");
    if (m1 < 0) throw DomainError("m1 must be >= 0");
    Step4Report rep;
    rep.g = g;
    rep.d = d;
    rep.m1 = m1;
    rep.product_lower = (2 * m1 + 2) * (1 + g - d);
    rep.bn_upper = g + 1;
    if (m1 == 0) {
        rep.vacuous = true;
        rep.feasible = true;
        return rep;
    }
    rep.feasible = rep.product_lower < rep.bn_upper;
    return rep;
}

} // namespace wfb
