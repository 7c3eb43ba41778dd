#include "wfb/cohom.hpp"

namespace wfb {

GradedDim::GradedDim(std::vector<long long> dims) : dims_(std::move(dims)) {
    for (long long v : dims_)
        if (v < 0) throw DomainError("negative cohomology dimension");
    trim();
}

GradedDim GradedDim::concentrated(int degree, long long dim) {
    if (degree < 0) throw DomainError("negative cohomological degree");
    if (dim < 0) throw DomainError("negative cohomology dimension");
    GradedDim g;
    if (dim == 0) return g;
    g.dims_.assign((size_t)degree + 1, 0);
    g.dims_[(size_t)degree] = dim;
    return g;
}

long long GradedDim::at(int degree) const {
    if (degree < 0 || (size_t)degree >= dims_.size()) return 0;
    return dims_[(size_t)degree];
}

int GradedDim::max_degree() const { return (int)dims_.size() - 1; }

long long GradedDim::euler() const {
    long long e = 0;
    for (size_t i = 0; i < dims_.size(); ++i) e += (i % 2 == 0 ? dims_[i] : -dims_[i]);
    return e;
}

GradedDim GradedDim::shifted(int s) const {
    GradedDim g;
    if (dims_.empty()) return g;
    for (int i = 0; i < (int)dims_.size(); ++i) {
        if (dims_[(size_t)i] == 0) continue;
        int j = i - s;
        if (j < 0)
            throw DomainError("shift pushes a class into negative degree");
        if ((size_t)j >= g.dims_.size()) g.dims_.resize((size_t)j + 1, 0);
        g.dims_[(size_t)j] = dims_[(size_t)i];
    }
    g.trim();
    return g;
}

GradedDim GradedDim::operator+(const GradedDim& o) const {
    GradedDim g;
    g.dims_.assign(std::max(dims_.size(), o.dims_.size()), 0);
    for (size_t i = 0; i < g.dims_.size(); ++i)
        g.dims_[i] = at((int)i) + o.at((int)i);
    g.trim();
    return g;
}

GradedDim GradedDim::scaled(long long m) const {
    if (m < 0) throw DomainError("negative multiplicity");
    GradedDim g;
    if (m == 0) return g;
    g.dims_ = dims_;
    for (long long& v : g.dims_) v *= m;
    return g;
}

std::string GradedDim::str() const {
    if (dims_.empty()) return "0";
    std::string s = "(";
    for (size_t i = 0; i < dims_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims_[i]);
    }
    return s + ")";
}

void GradedDim::trim() {
    while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
}

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;   // exact at each step
    }
    return r;
}

GradedDim h_pn_line(int n, long long k) {
    if (n < 1) throw DomainError("projective space dimension must be >= 1");
    if (k >= 0) return GradedDim::concentrated(0, binom(n + k, n));
    if (k <= -n - 1) return GradedDim::concentrated(n, binom(-k - 1, n));
    return GradedDim::zero();
}

GradedDim h_pn_omega(int n, int p, long long k) {
    if (n < 1) throw DomainError("projective space dimension must be >= 1");
    if (p < 0 || p > n) throw DomainError("Omega^p needs p in [0,n]");
    if (k == 0) return GradedDim::concentrated(p, 1);
    if (k > p) return GradedDim::concentrated(0, binom(k + n - p, k) * binom(k - 1, p));
    if (k < p - n)
        return GradedDim::concentrated(n, binom(-k + p, -k) * binom(-k - 1, n - p));
    return GradedDim::zero();
}

GradedDim h_q3_line(long long k) {
    if (k >= 0) return GradedDim::concentrated(0, binom(k + 4, 4) - binom(k + 2, 4));
    if (k <= -3) {
        long long dual = -3 - k;
        return GradedDim::concentrated(3, binom(dual + 4, 4) - binom(dual + 2, 4));
    }
    return GradedDim::zero();
}

GradedDim rgamma_spinor_twist(int n) {
    if (n < -4 || n > 4)
        throw DomainError("spinor cohomology table is pinned only for twists in [-4,4]");
    FanoModel q3 = FanoModel::q3();
    KClass spinor = rank2(q3, -1, 1);
    // ACM: h^1 = h^2 = 0 everywhere. Stability: h^0(S(n)) = 0 for n <= 0.
    // Serre duality: h^3(S(n)) = h^0(S(-n-2)) since S^vee = S(1), omega = O(-3).
    long long h0 = n >= 1 ? chi(q3, twist(spinor, n, q3)).as_integer() : 0;
    long long h3 = -n - 2 >= 1 ? chi(q3, twist(spinor, -n - 2, q3)).as_integer() : 0;
    GradedDim g = GradedDim::concentrated(0, h0) + GradedDim::concentrated(3, h3);
    if (g.euler() != chi(q3, twist(spinor, n, q3)).as_integer())
        throw Error("spinor table inconsistent with Riemann-Roch");
    return g;
}

GradedDim flag_rgamma(int a) {
    if (a < 1 || a > 5)
        throw DomainError("unsupported family: flag cohomology table covers a in [1,5]");
    // Serre duality on the 7-fold Fl(5;2,1) with -K = 2L1 + 4L2 turns
    // 3L1 - aL2 into -5L1 + (a-4)L2; the fiberwise twist a-4 then decides
    // the pushforward to P^4.
    GradedDim dual_side;
    switch (a - 4) {
        case 0: dual_side = h_pn_line(4, -5); break;
        case 1: dual_side = h_pn_omega(4, 1, -3); break;
        default: dual_side = GradedDim::zero(); break;   // relative twist in [-3,-1]
    }
    GradedDim g;
    for (int i = 0; i <= 7; ++i) {
        long long v = dual_side.at(7 - i);
        if (v != 0) g = g + GradedDim::concentrated(i, v);
    }
    return g;
}

} // namespace wfb
