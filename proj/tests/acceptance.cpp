// Acceptance runner: one pass/fail line per criterion, exit nonzero on any
// failure. Each criterion is backed by a named suite; a few add direct
// checks on top so the gate does not depend on suite wiring alone.

#include <chrono>
#include <iostream>

#include "wfb/classify.hpp"
#include "wfb/cohom.hpp"
#include "wfb/dsl.hpp"
#include "wfb/k3.hpp"
#include "wfb/quiver.hpp"
#include "wfb/resolutions.hpp"
#include "wfb/suites.hpp"
#include "wfb/taut.hpp"

using namespace wfb;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

bool suite_passes(const std::string& name, std::string& detail) {
    SuiteResult r = run_suite(name);
    int bad = 0;
    for (const auto& c : r.checks)
        if (!c.pass) ++bad;
    detail = std::to_string(r.checks.size() - bad) + "/" + std::to_string(r.checks.size()) +
             " checks";
    return r.pass();
}

} // namespace

int main() {
    std::string detail;

    // 1. candidate table
    {
        bool ok = suite_passes("q3-candidates", detail);
        auto cands = q3_candidates();
        std::vector<std::pair<long long, long long>> pairs;
        for (const auto& c : cands) pairs.push_back({c.c1, c.c2});
        ok = ok && pairs == std::vector<std::pair<long long, long long>>{
                                {0, 2}, {-1, 1}, {-1, 2}, {-1, 3}, {-1, 4}};
        for (const auto& c : cands) ok = ok && !c.label.empty();
        report(1, "classify q3 emits exactly the five labeled candidates", ok, detail);
    }

    // 2. intersection identities, exact, on the full grid
    {
        bool ok = suite_passes("intersections", detail);
        int cases = 0;
        for (long long c1 = -1; c1 <= 0; ++c1)
            for (long long c2 = -12; c2 <= 12; ++c2) {
                BundleOnX b = BundleOnX::q3(c1, c2);
                ok = ok && antican_quartic(b) == 48 * (c1 * c1 - 2 * c2 + 9);
                ++cases;
                std::vector<Rat> as;
                for (long long a = -3; a <= 3; ++a) as.push_back(Rat(a));
                as.push_back(Rat(1, 2));
                for (const Rat& a : as) {
                    Rat C1(c1), C2(c2);
                    Rat closed =
                        Rat(2) * (Rat(-2) * a * (C1 * C1 - Rat(2) * C2 + Rat(27)) + C1 * C1 * C1 -
                                  Rat(2) * C1 * C2 +
                                  Rat(9) * (C1 * C1 + Rat(3) * C1 - Rat(2) * C2 + Rat(3)));
                    ok = ok && h0van_pairing(b, a) == closed;
                    ++cases;
                }
            }
        report(2, "(-K)^4 and (-K)^3(xi - aH) match their closed forms exactly", ok,
               std::to_string(cases) + " cases");
    }

    // 3. Riemann-Roch
    {
        bool ok = suite_passes("riemann-roch", detail);
        FanoModel q3 = FanoModel::q3();
        ok = ok && chi(q3, line_bundle(q3, 0)) == Rat(1);
        ok = ok && chi(q3, rank2(q3, -1, 1)) == Rat(0);
        KClass e = rank2(q3, -1, 4);
        ok = ok && chi(q3, tensor(dual(e), e, q3)) == Rat(-17);
        report(3, "chi equals the closed form; chi(O)=1, chi(S)=0, chi(End E)=-17", ok, detail);
    }

    // 4. resolutions
    {
        bool ok = suite_passes("resolutions", detail);
        for (const auto& seq : catalog_sequences()) ok = ok && check_exact(seq).exact;
        report(4, "all six resolutions exact in K-theory; multiplicity systems give (5,2)", ok,
               detail);
    }

    // 5. index-one table
    {
        bool ok = suite_passes("index1-table", detail);
        for (int g : {6, 7, 8, 9, 10, 12}) {
            Index1Range r = index1_c2_range(g);
            ok = ok && !r.empty && r.lo == (g + 3) / 2 && r.hi == g - 2;
            for (const auto& row : r.rows)
                ok = ok && row.s3 == 2LL * g - 2 - 2 * row.d && row.s3 > 0 &&
                     row.h0 == row.s3 / 2 + 4;
        }
        for (int g : {2, 3, 4, 5}) ok = ok && index1_c2_range(g).empty;
        Index1Range g6 = index1_c2_range(6);
        ok = ok && g6.rows.size() == 1 && g6.rows[0].d == 4 && g6.rows[0].h0 == 5;
        report(5, "index-one interval [floor((g+3)/2), g-2] with s3 > 0 and h0 = s3/2 + 4", ok,
               detail);
    }

    // 6. K3 Diophantine suite
    {
        bool ok = suite_passes("k3-diophantine", detail);
        MinusTwoResult m = minus_two_solutions(LatticeModel::q3_elliptic7(), 100);
        ok = ok && m.classes.empty() && m.certified_complete;
        ok = ok && isotropic_degree_solutions(9, 7).solutions.empty();
        ok = ok && !isotropic_degree_solutions(9, 12).solutions.empty();
        ok = ok && step4_case_analysis(12, 10, 1).feasible;
        ok = ok && !step4_case_analysis(10, 8, 1).feasible;
        report(6, "certified -2-class emptiness; isotropic degrees need 12 | d; step-4 feasible "
                  "only at (12,10,1)",
               ok, detail);
    }

    // 7. nef decomposition, with the < 5 s budget
    {
        auto start = std::chrono::steady_clock::now();
        bool ok = suite_passes("nef-decomposition", detail);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok = ok && secs < 5.0;
        report(7, "three pinned decompositions plus 1000 randomized models", ok,
               detail + ", " + std::to_string(secs) + " s");
    }

    // 8. quiver suite
    {
        bool ok = suite_passes("quiver", detail);
        KroneckerModel q(5);
        ok = ok && moduli_dim(q, {7, 2}) == 18 && theta({7, 2}) == 0;
        ok = ok && destabilizer_candidates({7, 2}).size() == 11;
        ok = ok && euler_form(q, {7, 2}, {7, 2}) == -17;
        report(8, "moduli dimension 18, Theta(7,2) = 0, 11 destabilizer candidates, Euler form "
                  "-17 cross-module",
               ok, detail);
    }

    // 9. flag cohomology chain
    {
        bool ok = suite_passes("flag-cohomology", detail);
        ok = ok && flag_rgamma(4) == GradedDim::concentrated(3, 1);
        GradedDim im = complete_triangle(TrianglePos::Last, flag_rgamma(5),
                                         flag_rgamma(3) + flag_rgamma(4).scaled(2));
        GradedDim ideal =
            complete_triangle(TrianglePos::Last, im, flag_rgamma(2).scaled(2) + flag_rgamma(3));
        GradedDim oyd = complete_triangle(TrianglePos::Last, ideal, flag_rgamma(1));
        ok = ok && oyd.at(0) == 0 && oyd.at(1) == 2 && oyd == GradedDim::concentrated(1, 2);
        report(9, "flag table nonzero only at a = 4 degree 3; chain yields h0 = 0, h1 = 2", ok,
               detail);
    }

    // 10. discrepancy ledger
    {
        bool ok = suite_passes("paper-discrepancies", detail);
        SuiteResult r = run_suite("paper-discrepancies");
        ok = ok && r.checks.size() == 3;
        report(10, "exactly three documented discrepancies, each with the engine's correction",
               ok, detail);
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 10 acceptance criteria pass\n";
    return 0;
}
