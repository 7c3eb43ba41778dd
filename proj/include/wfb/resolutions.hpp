#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfb/cohom.hpp"
#include "wfb/fano.hpp"

namespace wfb {

// Catalog of named sheaf symbols on the quadric threefold. The catalog is
// closed: every kind resolves to a KClass below, and new kinds are a code
// change, not configuration.
struct SheafSymbol {
    enum class Kind {
        LineBundle,          // O(twist)
        Spinor,              // S(twist)
        OmegaP4Restricted,   // Omega_P4(twist)|_Q3, rank 4
        TP4Restricted,       // T_P4(twist)|_Q3, rank 4
        Named,               // rank-2 E(twist) with Chern coefficients (e1, e2)
        SectionKernel        // ker(O(twist)^sections ->> E(inner_twist + twist))
    };

    Kind kind = Kind::LineBundle;
    long long twist = 0;
    long long e1 = 0, e2 = 0;        // Named, SectionKernel
    long long sections = 0;          // SectionKernel
    long long inner_twist = 0;       // SectionKernel

    static SheafSymbol O(long long n = 0);
    static SheafSymbol S(long long n = 0);
    static SheafSymbol omega_p4(long long k);
    static SheafSymbol t_p4(long long k);
    static SheafSymbol named(long long e1, long long e2, long long twist = 0);
    static SheafSymbol section_kernel(long long sections, long long e1, long long e2,
                                      long long target_twist);

    SheafSymbol twisted(long long n) const;
    std::string str() const;

    bool operator==(const SheafSymbol& o) const;
};

// "E(1;-1,3)", "O(-2)", "S(1)", "Omega(2)", "T(-2)", "ker(O^7->E(2;-1,4))"
SheafSymbol parse_symbol(const std::string& text);

// Exact Chern character of a catalog symbol (on the Q^3 model).
KClass kclass_of(const SheafSymbol& symbol);

struct SeqTerm {
    long long mult;
    SheafSymbol symbol;
};

// Asserted-exact sequence 0 -> P_0 -> P_1 -> ... -> P_{n-1} -> 0; each
// position is a direct sum of terms.
struct Sequence {
    std::string name;
    std::vector<std::vector<SeqTerm>> positions;

    void validate() const;               // mults >= 1, length >= 2
    Sequence twisted(long long n) const;
    std::string str() const;
};

struct ExactnessReport {
    std::string name;
    KClass residue;                      // alternating sum of K-classes
    bool exact = false;
    std::vector<std::string> nonzero_components;
};

ExactnessReport check_exact(const Sequence& seq);

// The resolutions checked by the `resolutions` suite: the four line-bundle /
// spinor resolutions of the indecomposable candidates, the restricted Euler
// sequence, and the rank-7 intermediate extension from the (-1,4) case.
std::vector<Sequence> catalog_sequences();

// JSON: {"terms":[{"mult":5,"symbol":"O(-1)"}, ...]}; an entry may also be an
// array of {mult,symbol} objects that share one position (direct sum).
Sequence parse_sequence_json(const std::string& json_text);

// ---- multiplicity systems ----------------------------------------------

// One position of a sequence template: a fixed multiplicity or an unknown,
// attached to (rank, c1) data.
struct TemplateTerm {
    int unknown = -1;                    // -1: fixed, otherwise unknown index
    long long mult = 1;                  // used when unknown < 0
    Rat rank;
    Rat c1;
    std::string label;

    static TemplateTerm fixed(long long mult, const SheafSymbol& s);
    static TemplateTerm var(int unknown, const SheafSymbol& s);
    static TemplateTerm fixed_raw(long long mult, Rat rank, Rat c1, std::string label);
};

struct MultiplicityResult {
    enum class Status { Unique, NoSolution, NonUnique };
    Status status = Status::NoSolution;
    std::vector<long long> values;       // per unknown, when Unique
    std::string detail;
};

// Solve rank and c1 additivity (alternating signs down the sequence) for the
// unknown multiplicities, over integers >= 1. Inconsistency and
// non-uniqueness are reported, never guessed.
MultiplicityResult solve_multiplicities(const std::vector<TemplateTerm>& terms,
                                        int num_unknowns);

// ---- RGamma propagation --------------------------------------------------

enum class TrianglePos { First, Middle, Last };

// Complete a short exact sequence 0 -> A -> B -> C -> 0 of RGamma vectors.
// The two known entries are given in sequence order. Solvable only when the
// degree supports force every connecting map to vanish; otherwise throws
// AmbiguousTriangle.
GradedDim complete_triangle(TrianglePos unknown, const GradedDim& first_known,
                            const GradedDim& second_known);

// One link of a propagation chain. The head step carries both knowns; in
// every later step exactly one known slot is empty and receives the previous
// step's output.
struct TriangleStep {
    TrianglePos unknown = TrianglePos::Last;
    std::optional<GradedDim> first;
    std::optional<GradedDim> second;
};

// Run complete_triangle down the chain, feeding each step's result into the
// empty slot of the next.
GradedDim rgamma_propagate(const std::vector<TriangleStep>& chain);

struct ChiClaimReport {
    std::string expr_label;
    Rat chi_computed;
    long long chi_claimed = 0;
    bool match = false;
};

// chi-level check of a claimed RGamma vector against the K-class of the
// expression it is claimed for.
ChiClaimReport verify_claimed_rgamma(const FanoModel& m, const KClass& k,
                                     const std::string& label, const GradedDim& claimed);

} // namespace wfb
