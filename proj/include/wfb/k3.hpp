#pragma once

#include <string>
#include <vector>

#include "wfb/rational.hpp"

namespace wfb {

using LatticeClass = std::vector<long long>;

// Small-rank even lattice with explicit Gram matrix, modeling the Picard
// group of a K3 surface. The optional curve list marks classes asserted to
// be irreducible (-2)-curves; together with a nef mobile part it is the
// model of the effective cone that nef_decompose consumes.
struct LatticeModel {
    std::vector<std::vector<long long>> gram;
    std::vector<std::string> labels;                 // optional, size = rank
    std::vector<LatticeClass> curves;

    LatticeModel() = default;
    LatticeModel(std::vector<std::vector<long long>> g,
                 std::vector<LatticeClass> curve_list = {});

    int rank() const { return (int)gram.size(); }
    void validate() const;

    // Picard lattice of a hyperplane K3 on the quadric threefold through an
    // elliptic curve of degree 7: H^2 = 6, H.C = 7, C^2 = 0.
    static LatticeModel q3_elliptic7();
    // genus-g K3 with a conic: H^2 = 2g-2, H.gamma = 2, gamma^2 = -2
    static LatticeModel genus_with_conic(int g);
    // genus-g K3 with an elliptic curve of degree d: H^2 = 2g-2, H.C = d, C^2 = 0
    static LatticeModel genus_with_elliptic(int g, long long d);
};

long long pairing(const LatticeModel& m, const LatticeClass& x, const LatticeClass& y);
long long square(const LatticeModel& m, const LatticeClass& x);

// Riemann-Roch lower bound h^0(D) >= D^2/2 + 2 on a K3, for D^2 >= -2.
long long rr_h0_lower(const LatticeModel& m, const LatticeClass& d);

struct MinusTwoResult {
    std::vector<LatticeClass> classes;   // sorted lexicographically
    bool certified_complete = false;     // emptiness/completeness proved, not searched
    std::string certificate;             // which guarantee applies
};

// All classes of square -2 with coordinates in [-bound, bound]. For rank-2
// models whose form factors as a*(linear), divisor enumeration upgrades the
// box search to an unconditional answer.
MinusTwoResult minus_two_solutions(const LatticeModel& m, long long bound);

struct IsotropicSolution {
    long long d;
    long long a, b;
};

struct IsotropicReport {
    int g = 0;
    long long dmax = 0;
    bool g_is_square = false;
    std::vector<IsotropicSolution> solutions;        // E = aH + b*gamma, E^2 = 0, H.E = d
    std::string note;
};

// Solve E^2 = 0, H.E = d on genus_with_conic(g) for 1 <= d <= dmax,
// 9 <= g <= 12. Integer solutions need sqrt(g) rational (g = 9), and then
// 12 | d; the report carries the reasoning and the full solution list.
IsotropicReport isotropic_degree_solutions(int g, long long dmax);

// Brill-Noether generality violation: h0_L * h0_HminusL >= g + 1.
bool bn_product_violation(long long g, long long h0_L, long long h0_HminusL);

struct NefDecomposition {
    LatticeClass nef_part;                           // P
    std::vector<std::vector<LatticeClass>> chain;    // Gamma_1, ..., Gamma_n as curve sets
};

// Iterated (-2)-curve subtraction: at each step collect the listed curves
// pairing negatively with the running divisor, check each pairing is exactly
// -1 and the set is pairwise orthogonal, subtract. Terminates with P nef
// against the curve list or throws HypothesisViolation / BudgetExceeded.
NefDecomposition nef_decompose(const LatticeModel& m, const LatticeClass& d,
                               int step_budget = 64);

struct Step4Report {
    int g = 0;
    long long d = 0;
    long long m1 = 0;
    long long product_lower;             // (2 m1 + 2)(1 + g - d)
    long long bn_upper;                  // g + 1 (strict)
    bool feasible = false;
    bool vacuous = false;                // m1 = 0: no contradiction sought
};

// Inequality chain (2m1+2)(1+g-d) <= h0(L) h0(M + sum N_i) < g+1 over the
// admissible index-one (g, d) table; feasible only at (12, 10, 1).
Step4Report step4_case_analysis(int g, long long d, long long m1);

} // namespace wfb
