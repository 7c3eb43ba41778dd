#pragma once

#include <array>
#include <string>
#include <utility>

#include "wfb/rational.hpp"

namespace wfb {

// Numerical model of a Fano threefold X of Picard rank one: the Fano index
// i_X and the fundamental degree H^3. Cycle groups are identified with Z via
// the basis (1, H, l, pt) where H^2 = degree*l, H*l = pt, H^3 = degree*pt.
// The second Chern class of X is never stored: H*c2(X) = 24/index is forced
// by chi(O_X) = 1.
struct FanoModel {
    int index;
    long long degree;

    FanoModel(int idx, long long deg);

    static FanoModel q3() { return FanoModel(3, 2); }
    // Prime/hyperelliptic index-one model with H = -K_X, H^3 = 2g-2.
    static FanoModel index1(int genus);

    // genus of an index-one model, degree/2 + 1
    long long genus() const;
    long long h_dot_c2() const { return 24 / index; }

    bool operator==(const FanoModel& o) const {
        return index == o.index && degree == o.degree;
    }
};

// A cycle class with rational coefficients in the basis (1, H, l, pt).
// Multiplication is graded and truncated above degree 3.
struct NumClass {
    std::array<Rat, 4> c{};

    NumClass() = default;
    NumClass(Rat a0, Rat a1, Rat a2, Rat a3) : c{a0, a1, a2, a3} {}

    Rat& operator[](int i) { return c[(size_t)i]; }
    const Rat& operator[](int i) const { return c[(size_t)i]; }

    NumClass operator+(const NumClass& o) const;
    NumClass operator-(const NumClass& o) const;
    NumClass operator-() const;
    NumClass scaled(const Rat& s) const;
    // truncated product; needs the model for H^2 = degree*l
    NumClass mul(const NumClass& o, const FanoModel& m) const;

    bool is_zero() const;
    bool operator==(const NumClass& o) const { return c == o.c; }
    std::string str() const;
};

// Chern character vector (ch0, ch1, ch2, ch3) in basis units.
struct KClass {
    NumClass ch;

    KClass() = default;
    explicit KClass(NumClass v) : ch(std::move(v)) {}
    KClass(Rat c0, Rat c1, Rat c2, Rat c3) : ch(c0, c1, c2, c3) {}

    Rat rank() const { return ch[0]; }
    Rat c1() const { return ch[1]; }

    KClass operator+(const KClass& o) const { return KClass(ch + o.ch); }
    KClass operator-(const KClass& o) const { return KClass(ch - o.ch); }
    KClass scaled(const Rat& s) const { return KClass(ch.scaled(s)); }
    bool operator==(const KClass& o) const { return ch == o.ch; }
    bool is_zero() const { return ch.is_zero(); }
    std::string str() const { return ch.str(); }
};

// td(X) = (1, index/2, (index^2*degree + 24/index)/12, 1); the degree-3
// component equal to 1 is the chi(O_X) = 1 normalization.
NumClass todd(const FanoModel& m);

// Euler characteristic by Hirzebruch-Riemann-Roch, truncated at degree 3:
// ch3 + ch2*td1 + ch1*td2 + ch0*td3.
Rat chi(const FanoModel& m, const KClass& k);

// Closed form of chi for a rank-2 class on the quadric threefold:
// (1/6)(2e1^3 - 3e1e2) + (3/2)(e1^2 - e2) + (13/6)e1 + 2.
Rat chi_rr_q3_closed_form(long long e1, long long e2);

// exp(n*H), truncated.
KClass line_bundle(const FanoModel& m, long long n);

// Rank-2 class from integer Chern coefficients (e1 in H-units, e2 in l-units),
// with c3 = 0.
KClass rank2(const FanoModel& m, long long e1, long long e2);

// Recover (e1, e2) from a rank-2 class; throws if the class is not an
// integral rank-2 class.
std::pair<long long, long long> chern_of_rank2(const FanoModel& m, const KClass& k);

// multiplication by exp(n*H)
KClass twist(const KClass& k, long long n, const FanoModel& m);

// sign-alternation of ch
KClass dual(const KClass& k);

// truncated graded product
KClass tensor(const KClass& a, const KClass& b, const FanoModel& m);

} // namespace wfb
