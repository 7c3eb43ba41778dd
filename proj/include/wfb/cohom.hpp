#pragma once

#include <string>
#include <vector>

#include "wfb/fano.hpp"

namespace wfb {

// Finite vector of cohomology dimensions by degree (an "RGamma vector").
// Entries are non-negative; the Euler characteristic is the alternating sum.
class GradedDim {
public:
    GradedDim() = default;
    explicit GradedDim(std::vector<long long> dims);

    static GradedDim zero() { return GradedDim(); }
    static GradedDim concentrated(int degree, long long dim);

    long long at(int degree) const;
    int max_degree() const;              // -1 for the zero vector
    long long euler() const;
    bool is_zero() const { return dims_.empty(); }

    // complex shift: result.at(i) = at(i + s), so shifted(-1) moves a class
    // from degree 0 to degree 1
    GradedDim shifted(int s) const;
    GradedDim operator+(const GradedDim& o) const;
    GradedDim scaled(long long m) const;

    bool operator==(const GradedDim& o) const { return dims_ == o.dims_; }
    std::string str() const;

private:
    void trim();
    std::vector<long long> dims_;        // degree i -> dims_[i]
};

long long binom(long long n, long long k);

// O(k) on P^n: h^0 = C(n+k,n) for k >= 0, h^n = C(-k-1,n) for k <= -n-1,
// zero otherwise.
GradedDim h_pn_line(int n, long long k);

// Omega^p(k) on P^n by Bott's formula.
GradedDim h_pn_omega(int n, int p, long long k);

// Line bundles on the quadric threefold: no intermediate cohomology,
// h^0 = C(k+4,4) - C(k+2,4) for k >= 0, Serre dual against omega = O(-3).
GradedDim h_q3_line(long long k);

// RGamma of S(n) for the spinor bundle on Q^3, pinned on the window
// n in [-4,4] by the ACM property, slope stability, and Serre duality;
// outside the window the table is not asserted and the call throws.
GradedDim rgamma_spinor_twist(int n);

// RGamma(Fl(5;2,1), 3L1 - aL2) for a in [1,5], computed by Serre duality to
// -5L1 + (a-4)L2 followed by the pushforward along the P^3-bundle over P^4:
// relative twist a-4 in [-3,-1] kills everything, a-4 = 0 leaves O(-5),
// a-4 = 1 leaves Omega(-3). Nonzero only for a = 4: C in degree 3.
GradedDim flag_rgamma(int a);

} // namespace wfb
