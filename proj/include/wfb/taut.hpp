#pragma once

#include <map>
#include <string>
#include <utility>

#include "wfb/fano.hpp"

namespace wfb {

// Rank-2 bundle on a FanoModel, given by integer Chern coefficients
// (e1 in H-units, e2 in line-class units).
struct BundleOnX {
    FanoModel model;
    long long e1;
    long long e2;

    BundleOnX(FanoModel m, long long c1, long long c2) : model(m), e1(c1), e2(c2) {}

    static BundleOnX q3(long long c1, long long c2) { return BundleOnX(FanoModel::q3(), c1, c2); }

    BundleOnX twisted(long long n) const {
        return BundleOnX(model, e1 + 2 * n,
                         e2 + n * e1 * model.degree + n * n * model.degree);
    }

    // s3 = c1^3 - 2 c1 c2 in point units
    long long segre3() const { return e1 * e1 * e1 * model.degree - 2 * e1 * e2; }
};

// Polynomial in the tautological class xi and the pulled-back hyperplane
// class H, with exact rational coefficients. Keys are (xi-exponent,
// H-exponent); zero coefficients are never stored.
class TautExpr {
public:
    using Monomial = std::pair<int, int>;

    TautExpr() = default;

    static TautExpr xi() { return monomial(1, 0, Rat(1)); }
    static TautExpr h() { return monomial(0, 1, Rat(1)); }
    static TautExpr constant(const Rat& c) { return monomial(0, 0, c); }
    static TautExpr monomial(int xi_exp, int h_exp, const Rat& coeff);

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coeff(int xi_exp, int h_exp) const;
    void add_term(int xi_exp, int h_exp, const Rat& coeff);

    TautExpr operator+(const TautExpr& o) const;
    TautExpr operator-(const TautExpr& o) const;
    TautExpr operator-() const;
    TautExpr operator*(const TautExpr& o) const;
    TautExpr scaled(const Rat& s) const;
    TautExpr pow(int n) const;

    bool operator==(const TautExpr& o) const { return terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;            // -1 for the zero polynomial
    bool homogeneous_of_degree(int d) const;

    std::string str() const;

private:
    std::map<Monomial, Rat> terms_;
};

// Order in which reducible monomials are rewritten. The normal form is
// independent of it (the rewrite rule is a substitution); the randomized
// variant exists so tests can assert confluence.
enum class ReduceOrder { HighestFirst, LowestFirst };

// Normal form under the Grothendieck relation
//   xi^2 = e1*xi*H - (e2/degree)*H^2,
// applied while some monomial has xi-exponent >= 2. Degree must be <= 4.
TautExpr reduce(const TautExpr& expr, const BundleOnX& bundle,
                ReduceOrder order = ReduceOrder::HighestFirst);

// Exact degree-4 intersection number in point units. Requires expr
// homogeneous of degree 4.
Rat intersection_number(const TautExpr& expr, const BundleOnX& bundle);

// -K_{P(E)} = 2*xi + (index - e1)*H
TautExpr anticanonical(const BundleOnX& bundle);

// (-K)^4; an integer for integral bundles
long long antican_quartic(const BundleOnX& bundle);

// (-K)^3 (xi - a*H) for rational a
Rat h0van_pairing(const BundleOnX& bundle, const Rat& a);

// Segre classes in the integer identifications: s0 = 1, s1 = c1,
// s2 = c1^2 - c2, s3 = c1^3 - 2 c1 c2. i must lie in {0,..,3}.
long long segre(const BundleOnX& bundle, int i);

} // namespace wfb
