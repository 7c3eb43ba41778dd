#pragma once

#include <string>
#include <vector>

#include "wfb/errors.hpp"

namespace wfb {

// m-Kronecker quiver: two vertices v0, v1 and m arrows v0 -> v1. The
// orientation is fixed so that sub-representation constraints match the
// destabilizer case analysis at dimension vector (7,2).
struct KroneckerModel {
    int arrows = 5;

    explicit KroneckerModel(int m = 5) : arrows(m) {
        if (m < 1) throw DomainError("Kronecker quiver needs at least one arrow");
    }
};

struct DimVector {
    long long a = 0;                     // dimension at v0
    long long b = 0;                     // dimension at v1

    bool operator==(const DimVector& o) const { return a == o.a && b == o.b; }
    bool operator<(const DimVector& o) const { return a != o.a ? a < o.a : b < o.b; }
    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

// Ringel form <v,w> = v0 w0 + v1 w1 - arrows * v0 w1.
inline long long euler_form(const KroneckerModel& m, const DimVector& v, const DimVector& w) {
    return v.a * w.a + v.b * w.b - (long long)m.arrows * v.a * w.b;
}

// 1 - <v,v>; the stable-moduli dimension for a primitive dimension vector.
inline long long moduli_dim(const KroneckerModel& m, const DimVector& v) {
    if (v.a == 0 && v.b == 0) throw DomainError("dimension vector must be nonzero");
    return 1 - euler_form(m, v, v);
}

// stability weight Theta(a,b) = 7b - 2a
inline long long theta(const DimVector& v) { return 7 * v.b - 2 * v.a; }

// Proper nonzero sub-dimension vectors w <= v (componentwise) with
// Theta(w) >= 0; the stability function must vanish on v itself.
inline std::vector<DimVector> destabilizer_candidates(const DimVector& v) {
    if (theta(v) != 0)
        throw DomainError("destabilizer enumeration needs Theta(v) = 0, got Theta" + v.str() +
                          " = " + std::to_string(theta(v)));
    if (v.a == 0 && v.b == 0) throw DomainError("dimension vector must be nonzero");
    std::vector<DimVector> out;
    for (long long a = 0; a <= v.a; ++a)
        for (long long b = 0; b <= v.b; ++b) {
            DimVector w{a, b};
            if ((a == 0 && b == 0) || w == v) continue;
            if (theta(w) >= 0) out.push_back(w);
        }
    return out;
}

} // namespace wfb
