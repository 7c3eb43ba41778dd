#include "wfb/suites.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wfb/classify.hpp"
#include "wfb/cohom.hpp"
#include "wfb/k3.hpp"
#include "wfb/quiver.hpp"
#include "wfb/resolutions.hpp"
#include "wfb/taut.hpp"

namespace wfb {

namespace {

void add(SuiteResult& r, const std::string& id, const std::string& desc, const std::string& ref,
         const std::string& computed, const std::string& expected) {
    r.checks.push_back({id, desc, ref, computed, expected, computed == expected});
}

void add_bool(SuiteResult& r, const std::string& id, const std::string& desc,
              const std::string& ref, bool ok, const std::string& detail) {
    r.checks.push_back({id, desc, ref, detail, ok ? detail : "(see description)", ok});
}

std::string pair_str(long long a, long long b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

SuiteResult suite_q3_candidates() {
    SuiteResult r{"q3-candidates", {}};
    auto cands = q3_candidates();

    std::string set;
    for (const auto& c : cands) {
        if (!set.empty()) set += ",";
        set += pair_str(c.c1, c.c2);
    }
    add(r, "candidate-set", "indecomposable stable candidates on the quadric threefold",
        "positivity (-K)^4 > 0, chi parity, splitting bound c2 >= 1, conic exclusion of (0,4)",
        "{" + set + "}", "{(0,2),(-1,1),(-1,2),(-1,3),(-1,4)}");

    const std::vector<std::pair<std::pair<long long, long long>, std::string>> expected_labels = {
        {{0, 2}, "null-correlation pullback"},
        {{-1, 1}, "spinor bundle"},
        {{-1, 2}, "Cayley bundle restriction"},
        {{-1, 3}, "stable family with resolution 0 -> O(-2)^2 -> O(-1)^10 -> S^5 -> E(1) -> 0"},
        {{-1, 4}, "stable family with resolution 0 -> O(-2)^2 -> O(-1)^7 -> O^7 -> E(2) -> 0"}};
    for (const auto& [pc, label] : expected_labels) {
        std::string got = "(absent)";
        for (const auto& c : cands)
            if (c.c1 == pc.first && c.c2 == pc.second) got = c.label;
        add(r, "label" + pair_str(pc.first, pc.second), "family label for " + pair_str(pc.first, pc.second),
            "classification of stable rank-2 weak Fano bundles on the quadric threefold", got, label);
    }

    CandidatePair v04 = q3_verdict(0, 4);
    add_bool(r, "exclusion(0,4)", "(0,4) is excluded by a cited geometric rule, not arithmetic",
             "Sols-Szurek-Wisniewski conic argument",
             v04.verdict == CandidatePair::Verdict::Excluded && v04.cited_rule, v04.reason);

    bool consistent = true;
    for (const auto& c : cands) {
        if (antican_quartic(BundleOnX::q3(c.c1, c.c2)) <= 0) consistent = false;
        if (chi(FanoModel::q3(), rank2(FanoModel::q3(), c.c1, c.c2)) !=
            chi_rr_q3_closed_form(c.c1, c.c2))
            consistent = false;
    }
    add_bool(r, "candidate-consistency",
             "every candidate has (-K)^4 > 0 and chi matching the rank-2 closed form",
             "anticanonical positivity and Riemann-Roch", consistent,
             "5/5 candidates consistent");
    return r;
}

SuiteResult suite_intersections() {
    SuiteResult r{"intersections", {}};
    FanoModel q3 = FanoModel::q3();

    // base intersection table on P(E) over the quadric, generic samples
    {
        bool ok = true;
        int cases = 0;
        for (long long e1 = -3; e1 <= 3; ++e1)
            for (long long e2 = -5; e2 <= 5; ++e2) {
                BundleOnX b(q3, e1, e2);
                auto num = [&](int a, int h) {
                    return intersection_number(TautExpr::xi().pow(a) * TautExpr::h().pow(h), b);
                };
                ok = ok && num(4, 0) == Rat(2 * e1 * e1 * e1 - 2 * e1 * e2);
                ok = ok && num(3, 1) == Rat(2 * e1 * e1 - e2);
                ok = ok && num(2, 2) == Rat(2 * e1);
                ok = ok && num(1, 3) == Rat(2);
                ok = ok && num(0, 4) == Rat(0);
                cases += 5;
            }
        add_bool(r, "base-table", "xi^4, xi^3H, xi^2H^2, xiH^3, H^4 on the quadric threefold",
                 "Grothendieck relation xi^2 = c1 xi H - c2 (pullback bookkeeping)", ok,
                 std::to_string(cases) + " values exact");
    }
    {
        bool ok = true;
        int cases = 0;
        for (long long c1 = -1; c1 <= 0; ++c1)
            for (long long c2 = -12; c2 <= 12; ++c2) {
                BundleOnX b(q3, c1, c2);
                ok = ok && antican_quartic(b) == 48 * (c1 * c1 - 2 * c2 + 9);
                ++cases;
            }
        add_bool(r, "antican-quartic", "(-K)^4 = 48(c1^2 - 2 c2 + 9) on the normalized grid",
                 "anticanonical self-intersection identity", ok,
                 std::to_string(cases) + " values exact");
    }
    {
        bool ok = true;
        int cases = 0;
        std::vector<Rat> as;
        for (long long a = -3; a <= 3; ++a) as.push_back(Rat(a));
        as.push_back(Rat(1, 2));
        for (long long c1 = -1; c1 <= 0; ++c1)
            for (long long c2 = -12; c2 <= 12; ++c2) {
                BundleOnX b(q3, c1, c2);
                Rat C1(c1), C2(c2);
                for (const Rat& a : as) {
                    Rat closed = Rat(2) *
                                 (Rat(-2) * a * (C1 * C1 - Rat(2) * C2 + Rat(27)) +
                                  C1 * C1 * C1 - Rat(2) * C1 * C2 +
                                  Rat(9) * (C1 * C1 + Rat(3) * C1 - Rat(2) * C2 + Rat(3)));
                    ok = ok && h0van_pairing(b, a) == closed;
                    ++cases;
                }
            }
        add_bool(r, "h0van-pairing", "(-K)^3 (xi - aH) closed form, a in {-3..3, 1/2}",
                 "section-vanishing pairing identity", ok, std::to_string(cases) + " values exact");
    }
    {
        // index-one specializations
        bool ok = true;
        for (int g = 2; g <= 12; ++g) {
            FanoModel m = FanoModel::index1(g);
            for (long long c2 = 0; c2 <= 10; ++c2) {
                BundleOnX b(m, 0, c2);
                ok = ok && antican_quartic(b) == 8 * ((2LL * g - 2) - 4 * c2);
                ok = ok && intersection_number(anticanonical(b).pow(3) * TautExpr::xi(), b) ==
                               Rat((2LL * g - 2) - 12 * c2);
                BundleOnX bc(m, 1, c2);
                ok = ok && intersection_number(TautExpr::xi().pow(4), bc) ==
                               Rat(2LL * g - 2 - 2 * c2);
            }
        }
        add_bool(r, "index1-forms",
                 "(-K)^4 = 8((2g-2)-4c2), (-K)^3 xi = (2g-2)-12c2 for c1 = 0; xi^4 = 2g-2-2d "
                 "for c1(F) = c1(X)",
                 "index-one intersection identities", ok, "genus 2..12 exact");
    }
    return r;
}

SuiteResult suite_riemann_roch() {
    SuiteResult r{"riemann-roch", {}};
    FanoModel q3 = FanoModel::q3();
    {
        bool ok = true;
        int cases = 0;
        for (long long e1 = -20; e1 <= 20; ++e1)
            for (long long e2 = -20; e2 <= 20; ++e2) {
                if (chi(q3, rank2(q3, e1, e2)) != chi_rr_q3_closed_form(e1, e2)) ok = false;
                ++cases;
            }
        add_bool(r, "closed-form-grid", "chi(HRR) equals the rank-2 closed form, |e1|,|e2| <= 20",
                 "Hirzebruch-Riemann-Roch on the quadric threefold", ok,
                 std::to_string(cases) + " values exact");
    }
    add(r, "chi-structure-sheaf", "chi(O) = 1", "chi(O_X) = 1 normalization",
        chi(q3, line_bundle(q3, 0)).str(), "1");
    add(r, "chi-spinor", "chi(S) = 0 for the spinor bundle (c1,c2) = (-1,1)",
        "Riemann-Roch evaluation", chi(q3, rank2(q3, -1, 1)).str(), "0");
    {
        KClass e = rank2(q3, -1, 4);
        Rat v = chi(q3, tensor(dual(e), e, q3));
        add(r, "chi-end", "chi(E (x) E^vee) = -17 for (c1,c2) = (-1,4)",
            "deformation-theory Euler characteristic of the moduli space", v.str(), "-17");
    }
    {
        // chi-level Serre duality chi(E(n)) = -chi(E^vee(-n-3)) on the candidates
        bool ok = true;
        for (const auto& c : q3_candidates()) {
            KClass e = rank2(q3, c.c1, c.c2);
            for (long long n = -5; n <= 5; ++n)
                if (chi(q3, twist(e, n, q3)) != -chi(q3, twist(dual(e), -n - 3, q3))) ok = false;
        }
        add_bool(r, "serre-duality", "chi(E(n)) = -chi(E^vee(-n-3)), |n| <= 5, all candidates",
                 "Serre duality with omega = O(-3)", ok, "exact");
    }
    return r;
}

SuiteResult suite_resolutions() {
    SuiteResult r{"resolutions", {}};
    for (const auto& seq : catalog_sequences()) {
        ExactnessReport rep = check_exact(seq);
        add(r, "residue: " + seq.name, "alternating K-class sum vanishes",
            "K-theory exactness check", rep.residue.str(), "(0, 0, 0, 0)");
    }
    {
        // 0 -> O(-2) -> O(-1)^x -> S^y -> L_H -> 0 with L_H torsion, c1 = 1
        std::vector<TemplateTerm> t = {
            TemplateTerm::fixed(1, SheafSymbol::O(-2)),
            TemplateTerm::var(0, SheafSymbol::O(-1)),
            TemplateTerm::var(1, SheafSymbol::S()),
            TemplateTerm::fixed_raw(1, Rat(0), Rat(1), "L_H (torsion, c1 = 1)")};
        MultiplicityResult m = solve_multiplicities(t, 2);
        std::string got = m.status == MultiplicityResult::Status::Unique
                              ? pair_str(m.values[0], m.values[1])
                              : m.detail;
        add(r, "multiplicities-cayley", "0 -> O(-2) -> O(-1)^x -> S^y -> L_H -> 0 forces (x,y)",
            "rank and c1 additivity", got, "(5,2)");
    }
    {
        // 0 -> E -> S(1)^a -> Omega(2)|^b -> 0 for (c1,c2) = (-1,3)
        std::vector<TemplateTerm> t = {
            TemplateTerm::fixed(1, SheafSymbol::named(-1, 3)),
            TemplateTerm::var(0, SheafSymbol::S(1)),
            TemplateTerm::var(1, SheafSymbol::omega_p4(2))};
        MultiplicityResult m = solve_multiplicities(t, 2);
        std::string got = m.status == MultiplicityResult::Status::Unique
                              ? pair_str(m.values[0], m.values[1])
                              : m.detail;
        add(r, "multiplicities-c2-3",
            "0 -> E -> S(1)^a -> Omega(2)|^b -> 0 forces (a,b) under the corrected rank equation "
            "2a = 4b + 2",
            "rank and c1 additivity", got, "(5,2)");
    }
    return r;
}

SuiteResult suite_index1_table() {
    SuiteResult r{"index1-table", {}};
    for (int g : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
        Index1Range range = index1_c2_range(g);
        std::string rows;
        for (const auto& row : range.rows) {
            if (!rows.empty()) rows += " ";
            rows += "d=" + std::to_string(row.d) + ":s3=" + std::to_string(row.s3) +
                    ",h0=" + std::to_string(row.h0);
        }
        bool ok = range.empty == (g <= 5);
        ok = ok && range.lo == (g + 3) / 2 && range.hi == g - 2;
        for (const auto& row : range.rows) {
            ok = ok && row.s3 == 2LL * g - 2 - 2 * row.d && row.s3 > 0;
            ok = ok && row.h0 == row.s3 / 2 + 4;
            ok = ok && index1_chi_table(g, true, row.d).h0 == row.h0;
            ok = ok && !bn_product_violation(g, 2, row.s3 / 2 + 2);
        }
        add_bool(r, "genus-" + std::to_string(g),
                 "interval [floor((g+3)/2), g-2]" + std::string(range.empty ? " (empty)" : "") +
                     (rows.empty() ? "" : ": " + rows),
                 "degree interval, Segre positivity, h0 = s3/2 + 4, Brill-Noether bound", ok,
                 range.empty ? "empty" : rows);
    }
    {
        Index1Range r6 = index1_c2_range(6);
        bool ok = r6.rows.size() == 1 && r6.rows[0].d == 4 && r6.rows[0].s3 == 2 &&
                  r6.rows[0].h0 == 5;
        add_bool(r, "genus-6-hyperelliptic-row", "(g,d) = (6,4): s3 = 2, h0 = 5",
                 "double-cover threshold s3 = 2 <-> h0 = 5", ok, "s3=2,h0=5");
    }
    {
        Index1ChiRecord rec = index1_chi_table(10, false, 4);
        add(r, "even-c1-chi", "chi = 2 - c2/2 at (g,c2) = (10,4), c1 = 0",
            "Riemann-Roch for c1 = 0 on an index-one threefold", rec.chi.str(), "0");
        Index1ChiRecord bad = index1_chi_table(10, false, 3);
        add_bool(r, "even-c1-parity", "c1 = 0, c2 = 3 flags the parity violation",
                 "chi = 2 - c2/2 must be an integer", bad.parity_error, "parity error raised");
    }
    return r;
}

SuiteResult suite_k3_diophantine() {
    SuiteResult r{"k3-diophantine", {}};
    {
        MinusTwoResult m = minus_two_solutions(LatticeModel::q3_elliptic7(), 100);
        add_bool(r, "no-minus-two-class",
                 "6a^2 + 14ab = -2 has no integer solutions (certified, not just searched)",
                 "factorization 2a(3a+7b) = -2 with divisor enumeration",
                 m.classes.empty() && m.certified_complete,
                 "empty; " + m.certificate);
    }
    {
        bool ok = true;
        std::string note;
        for (int g = 9; g <= 12; ++g) {
            IsotropicReport rep = isotropic_degree_solutions(g, g - 2);
            if (!rep.solutions.empty()) ok = false;
            if (g == 9) note = rep.note;
        }
        add_bool(r, "isotropic-degree-bound",
                 "E^2 = 0, H.E = d <= g-2 has no solutions for g in 9..12",
                 "integrality forces g a perfect square and then 12 | d", ok, note);
    }
    {
        IsotropicReport rep = isotropic_degree_solutions(9, 12);
        bool ok = rep.solutions.size() == 1 && rep.solutions[0].d == 12 &&
                  rep.solutions[0].a == 1 && rep.solutions[0].b == -2;
        // brute-force cross-check in the box [-24,24]^2
        LatticeModel m = LatticeModel::genus_with_conic(9);
        std::vector<IsotropicSolution> brute;
        for (long long a = -24; a <= 24; ++a)
            for (long long b = -24; b <= 24; ++b) {
                if (a == 0 && b == 0) continue;
                LatticeClass e{a, b};
                long long hd = pairing(m, {1, 0}, e);
                if (square(m, e) == 0 && hd >= 1 && hd <= 12) brute.push_back({hd, a, b});
            }
        ok = ok && brute.size() == 1 && brute[0].d == 12 && brute[0].a == 1 && brute[0].b == -2;
        add_bool(r, "isotropic-g9-d12", "g = 9 first solution appears at d = 12: (a,b) = (1,-2)",
                 "closed form cross-checked by exhaustive search in [-24,24]^2", ok,
                 "(1,-2) at d = 12");
    }
    {
        std::vector<std::string> feasible;
        for (int g : {6, 7, 8, 9, 10, 12}) {
            Index1Range range = index1_c2_range(g);
            for (const auto& row : range.rows)
                for (long long m1 = 1; m1 <= 4; ++m1) {
                    Step4Report rep = step4_case_analysis(g, row.d, m1);
                    if (rep.feasible)
                        feasible.push_back("(" + std::to_string(g) + "," + std::to_string(row.d) +
                                           "," + std::to_string(m1) + ")");
                }
        }
        std::string got;
        for (const auto& f : feasible) got += got.empty() ? f : "," + f;
        add(r, "step4-unique-case",
            "(2m1+2)(1+g-d) < g+1 with m1 >= 1 holds only at (g,d,m1) = (12,10,1)",
            "Riemann-Roch lower bounds against the Brill-Noether product bound", got, "(12,10,1)");
    }
    return r;
}

SuiteResult suite_nef_decomposition() {
    SuiteResult r{"nef-decomposition", {}};
    {
        LatticeModel m = LatticeModel::genus_with_conic(9);
        m.curves = {{0, 1}};
        NefDecomposition d = nef_decompose(m, {1, 0});
        bool ok = d.chain.empty() && d.nef_part == LatticeClass{1, 0};
        add_bool(r, "already-nef", "a nef divisor decomposes as itself with empty chain",
                 "nef decomposition, trivial case", ok, "P = D, chain empty");
    }
    {
        LatticeModel m({{2, 1}, {1, -2}}, {{0, 1}});
        NefDecomposition d = nef_decompose(m, {1, 1});
        bool ok = d.nef_part == LatticeClass{1, 0} && d.chain.size() == 1 &&
                  d.chain[0] == std::vector<LatticeClass>{{0, 1}};
        add_bool(r, "single-step", "D = P + Gamma with D.Gamma = -1 peels one curve",
                 "nef decomposition, one step", ok, "P = (1,0), chain [{Gamma}]");
    }
    {
        LatticeModel m({{2, 0, 1}, {0, -2, 1}, {1, 1, -2}}, {{0, 1, 0}, {0, 0, 1}});
        NefDecomposition d = nef_decompose(m, {1, 1, 1});
        bool ok = d.nef_part == LatticeClass{1, 0, 0} && d.chain.size() == 2 &&
                  d.chain[0] == std::vector<LatticeClass>{{0, 1, 0}} &&
                  d.chain[1] == std::vector<LatticeClass>{{0, 0, 1}};
        add_bool(r, "two-step", "rank-3 configuration peels Gamma_1 then Gamma_2",
                 "nef decomposition, two steps", ok, "P = (1,0,0), chain [{Gamma1},{Gamma2}]");
    }
    {
        std::mt19937 rng(20240621);
        auto ri = [&](int lo, int hi) {
            return (int)(lo + (long long)(rng() % (unsigned)(hi - lo + 1)));
        };
        int runs = 0, decomposed = 0, rejected = 0, failures = 0;
        for (int it = 0; it < 1000; ++it) {
            int rank = ri(1, 3);
            std::vector<std::vector<long long>> gram((size_t)rank,
                                                     std::vector<long long>((size_t)rank, 0));
            gram[0][0] = 2 * ri(1, 4);
            for (int i = 1; i < rank; ++i) gram[(size_t)i][(size_t)i] = -2;
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j)
                    gram[(size_t)i][(size_t)j] = gram[(size_t)j][(size_t)i] =
                        (i == 0 ? ri(0, 3) : ri(0, 1));
            std::vector<LatticeClass> curves;
            for (int i = 1; i < rank; ++i) {
                LatticeClass c((size_t)rank, 0);
                c[(size_t)i] = 1;
                curves.push_back(c);
            }
            LatticeModel m(gram, curves);
            LatticeClass d((size_t)rank, 0);
            d[0] = 1;
            for (int i = 1; i < rank; ++i) d[(size_t)i] = ri(0, 2);
            ++runs;
            try {
                NefDecomposition dec = nef_decompose(m, d);
                LatticeClass total = dec.nef_part;
                for (const auto& step : dec.chain)
                    for (const auto& c : step)
                        for (size_t i = 0; i < total.size(); ++i) total[i] += c[i];
                bool ok = total == d;
                for (const auto& c : m.curves)
                    if (pairing(m, dec.nef_part, c) < 0) ok = false;
                if (ok) ++decomposed;
                else ++failures;
            } catch (const HypothesisViolation&) {
                ++rejected;
            } catch (const Error&) {
                ++failures;
            }
        }
        add_bool(r, "randomized-models",
                 "1000 random rank <= 3 models: every run decomposes exactly or raises the "
                 "documented hypothesis violation",
                 "postcondition D = P + sum(chain), P nef against the curve list", failures == 0,
                 std::to_string(decomposed) + " decomposed, " + std::to_string(rejected) +
                     " hypothesis violations, " + std::to_string(failures) + " failures of " +
                     std::to_string(runs));
    }
    return r;
}

SuiteResult suite_quiver() {
    SuiteResult r{"quiver", {}};
    KroneckerModel q(5);
    DimVector v{7, 2};
    add(r, "moduli-dim", "moduli dimension 1 - <v,v> at v = (7,2)", "Ringel form of the 5-Kronecker quiver",
        std::to_string(moduli_dim(q, v)), "18");
    add(r, "theta", "Theta(7,2) = 7b - 2a", "stability weight", std::to_string(theta(v)), "0");
    {
        auto cands = destabilizer_candidates(v);
        int b1 = 0, b2 = 0;
        for (const auto& w : cands) {
            if (w.b == 1) ++b1;
            if (w.b == 2) ++b2;
        }
        bool ok = cands.size() == 11 && b1 == 4 && b2 == 7;
        // oracle: brute-force double loop
        std::vector<DimVector> brute;
        for (long long a = 0; a <= 7; ++a)
            for (long long b = 0; b <= 2; ++b) {
                DimVector w{a, b};
                if ((a == 0 && b == 0) || w == v) continue;
                if (7 * b - 2 * a >= 0) brute.push_back(w);
            }
        std::sort(brute.begin(), brute.end());
        std::vector<DimVector> got = cands;
        std::sort(got.begin(), got.end());
        ok = ok && got == brute;
        add_bool(r, "destabilizers", "11 candidate subvectors, splitting as b=1: a<=3 and b=2: a<=6",
                 "componentwise subvector bound with Theta >= 0", ok,
                 std::to_string(cands.size()) + " vectors (b=1: " + std::to_string(b1) +
                     ", b=2: " + std::to_string(b2) + ")");
    }
    {
        FanoModel q3 = FanoModel::q3();
        KClass e = rank2(q3, -1, 4);
        Rat chi_end = chi(q3, tensor(dual(e), e, q3));
        long long euler = euler_form(q, v, v);
        bool ok = Rat(euler) == chi_end && euler == -17;
        add_bool(r, "cross-module-euler", "<(7,2),(7,2)> equals chi(E (x) E^vee) = -17",
                 "tilting-side Euler form against Riemann-Roch", ok, "-17 = -17");
    }
    {
        // kernel of O^7 ->> E(2) against 7 O(-1) - 2 O(-2) in K-theory
        KClass lhs = kclass_of(SheafSymbol::section_kernel(7, -1, 4, 2));
        KClass rhs = kclass_of(SheafSymbol::O(-1)).scaled(Rat(7)) -
                     kclass_of(SheafSymbol::O(-2)).scaled(Rat(2));
        add(r, "kernel-kclass", "ker(O^7 -> E(2)) = 7[O(-1)] - 2[O(-2)] in K-theory "
            "(dimension vector (7,2))",
            "numerical shadow of the tilting description", lhs.str(), rhs.str());
    }
    return r;
}

SuiteResult suite_flag_cohomology() {
    SuiteResult r{"flag-cohomology", {}};
    {
        bool ok = true;
        for (int a = 1; a <= 5; ++a) {
            GradedDim g = flag_rgamma(a);
            if (a == 4) ok = ok && g == GradedDim::concentrated(3, 1);
            else ok = ok && g.is_zero();
        }
        add_bool(r, "flag-table", "RGamma(3L1 - aL2) vanishes except a = 4: C in degree 3",
                 "Serre duality and pushforward to P^4 (Bott values)", ok,
                 "a=4 -> h^3 = 1, else 0");
    }
    {
        // Koszul chain: three short exact sequences ending in O_Y(D)
        GradedDim im_alpha = complete_triangle(
            TrianglePos::Last, flag_rgamma(5), flag_rgamma(3) + flag_rgamma(4).scaled(2));
        GradedDim ideal = complete_triangle(
            TrianglePos::Last, im_alpha, flag_rgamma(2).scaled(2) + flag_rgamma(3));
        GradedDim oyd = complete_triangle(TrianglePos::Last, ideal, flag_rgamma(1));
        bool ok = oyd == GradedDim::concentrated(1, 2);
        add(r, "koszul-chain", "RGamma(O_Y(D)) via the ideal-sheaf Koszul chain",
            "support-separated exact triangles", oyd.str(), "(0,2)");
        add_bool(r, "h0-vanishes", "h^0(O_Y(D)) = 0 and h^1(O_Y(D)) = 2",
                 "degree-shifted propagation", ok && oyd.at(0) == 0 && oyd.at(1) == 2,
                 "h^0 = 0, h^1 = 2");
    }
    return r;
}

SuiteResult suite_paper_discrepancies() {
    SuiteResult r{"paper-discrepancies", {}};
    FanoModel q3 = FanoModel::q3();
    {
        // listed value xi^2 H^2 = 2c1^2 - c2; engine: 2c1. The engine value is
        // the one consistent with the (-K)^4 identity.
        bool ok = true;
        bool differs = false;
        for (long long c1 = -3; c1 <= 3; ++c1)
            for (long long c2 = -6; c2 <= 6; ++c2) {
                BundleOnX b(q3, c1, c2);
                Rat engine = intersection_number(TautExpr::xi().pow(2) * TautExpr::h().pow(2), b);
                ok = ok && engine == Rat(2 * c1);
                if (engine != Rat(2 * c1 * c1 - c2)) differs = true;
                // (-K)^4 expanded through the degree-4 table, with the engine value
                long long k = 3 - c1;
                Rat acself = Rat(16) * Rat(2 * c1 * c1 * c1 - 2 * c1 * c2) +
                             Rat(32 * k) * Rat(2 * c1 * c1 - c2) + Rat(24 * k * k) * engine +
                             Rat(8 * k * k * k) * Rat(2);
                ok = ok && acself == Rat(48) * Rat(c1 * c1 - 2 * c2 + 9);
            }
        add_bool(r, "xi2H2-listing",
                 "the intersection-number list prints xi^2 H^2 = 2c1^2 - c2; the value is 2c1 "
                 "(pushforward s1 . H^2 = c1 . H^2), and only 2c1 satisfies the (-K)^4 identity",
                 "Segre pushforward against the anticanonical quartic identity", ok && differs,
                 "corrected value: 2c1");
    }
    {
        // the printed rank equation for 0 -> E -> S(1)^a -> Omega(2)|^b -> 0 is
        // 2a = 4b + 1 (odd = even); the corrected equation 2a = 4b + 2 together
        // with a = 3b - 1 gives the concluded (a,b) = (5,2).
        bool quoted_inconsistent = true;
        for (long long b = -50; b <= 50; ++b)
            if ((4 * b + 1) % 2 == 0) quoted_inconsistent = false;
        std::vector<TemplateTerm> t = {TemplateTerm::fixed(1, SheafSymbol::named(-1, 3)),
                                       TemplateTerm::var(0, SheafSymbol::S(1)),
                                       TemplateTerm::var(1, SheafSymbol::omega_p4(2))};
        MultiplicityResult m = solve_multiplicities(t, 2);
        bool ok = quoted_inconsistent && m.status == MultiplicityResult::Status::Unique &&
                  m.values == std::vector<long long>{5, 2};
        add_bool(r, "rank-equation",
                 "the multiplicity system for the c2 = 3 resolution prints the rank equation "
                 "2a = 4b + 1, which has no integer solution; rank additivity gives 2a = 4b + 2, "
                 "and with c1 additivity a = 3b - 1 the concluded (a,b) = (5,2) is recovered",
                 "rank and c1 additivity", ok, "corrected system: 2a = 4b + 2, a = 3b - 1 -> (5,2)");
    }
    {
        // claimed RGamma(E(-2)) = C^21 in degree 2 and RGamma(E(-3)) = C^4 in
        // degree 2 for (c1,c2) = (-1,4); chi gives 3 and 2.
        KClass e = rank2(q3, -1, 4);
        ChiClaimReport c2m = verify_claimed_rgamma(q3, twist(e, -2, q3), "E(-2)",
                                                   GradedDim::concentrated(2, 21));
        ChiClaimReport c3m = verify_claimed_rgamma(q3, twist(e, -3, q3), "E(-3)",
                                                   GradedDim::concentrated(2, 4));
        ChiClaimReport ext = verify_claimed_rgamma(q3, tensor(dual(e), e, q3), "E (x) E^vee",
                                                   GradedDim({1, 18, 0, 0}));
        bool ok = !c2m.match && c2m.chi_computed == Rat(3) && !c3m.match &&
                  c3m.chi_computed == Rat(2) && ext.match;
        add_bool(r, "rgamma-dimension-claims",
                 "the moduli smoothness argument states RGamma(E(-2)) = C^21[-2] and "
                 "RGamma(E(-3)) = C^4[-2]; chi(E(-2)) = 3 and chi(E(-3)) = 2, so the printed "
                 "dimensions cannot be the full cohomology; the Ext ledger (1,18,0,0) itself is "
                 "chi-consistent with chi(E (x) E^vee) = -17",
                 "Riemann-Roch against the claimed cohomology tables", ok,
                 "chi(E(-2)) = 3 vs claimed 21; chi(E(-3)) = 2 vs claimed 4; Ext ledger consistent");
    }
    return r;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "q3-candidates",   "intersections",     "riemann-roch",   "resolutions",
        "index1-table",    "k3-diophantine",    "nef-decomposition", "quiver",
        "flag-cohomology", "paper-discrepancies"};
    return names;
}

SuiteResult run_suite(const std::string& name) {
    if (name == "q3-candidates") return suite_q3_candidates();
    if (name == "intersections") return suite_intersections();
    if (name == "riemann-roch") return suite_riemann_roch();
    if (name == "resolutions") return suite_resolutions();
    if (name == "index1-table") return suite_index1_table();
    if (name == "k3-diophantine") return suite_k3_diophantine();
    if (name == "nef-decomposition") return suite_nef_decomposition();
    if (name == "quiver") return suite_quiver();
    if (name == "flag-cohomology") return suite_flag_cohomology();
    if (name == "paper-discrepancies") return suite_paper_discrepancies();
    std::string names;
    for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
    throw DomainError("unknown suite: " + name + " (available: " + names + ", all)");
}

std::string suite_to_json(const SuiteResult& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.name;
    j["pass"] = r.pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["description"] = c.description;
        jc["paper_ref"] = c.ref;
        jc["computed"] = c.computed;
        jc["expected"] = c.expected;
        jc["status"] = c.pass ? "pass" : "fail";
        j["checks"].push_back(jc);
    }
    return j.dump(2);
}

std::string suite_to_text(const SuiteResult& r) {
    std::ostringstream os;
    os << "suite " << r.name << "\n";
    for (const auto& c : r.checks) {
        os << "  [" << (c.pass ? " ok " : "FAIL") << "] " << c.id << ": " << c.description;
        if (!c.pass) os << "\n         computed: " << c.computed << "\n         expected: " << c.expected;
        os << "\n";
    }
    os << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks)\n";
    return os.str();
}

} // namespace wfb
