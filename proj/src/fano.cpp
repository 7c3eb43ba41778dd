#include "wfb/fano.hpp"

namespace wfb {

FanoModel::FanoModel(int idx, long long deg) : index(idx), degree(deg) {
    if (index < 1 || index > 4)
        throw DomainError("Fano index must lie in {1,2,3,4}, got " + std::to_string(index));
    if (degree < 1)
        throw DomainError("fundamental degree must be >= 1, got " + std::to_string(degree));
    if (24 % index != 0)
        throw DomainError("H.c2(X) = 24/index must be an integer");
    if (index == 1 && degree % 2 != 0)
        throw DomainError("index-one model needs even degree (genus = degree/2 + 1)");
}

FanoModel FanoModel::index1(int genus) {
    if (genus < 2) throw DomainError("index-one genus must be >= 2");
    return FanoModel(1, 2LL * genus - 2);
}

long long FanoModel::genus() const {
    if (index != 1) throw DomainError("genus is defined for index-one models");
    return degree / 2 + 1;
}

NumClass NumClass::operator+(const NumClass& o) const {
    return NumClass(c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]);
}

NumClass NumClass::operator-(const NumClass& o) const {
    return NumClass(c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]);
}

NumClass NumClass::operator-() const {
    return NumClass(-c[0], -c[1], -c[2], -c[3]);
}

NumClass NumClass::scaled(const Rat& s) const {
    return NumClass(c[0] * s, c[1] * s, c[2] * s, c[3] * s);
}

NumClass NumClass::mul(const NumClass& o, const FanoModel& m) const {
    // H*H = degree*l, H*l = pt, everything above degree 3 truncated
    Rat d(m.degree);
    NumClass r;
    r[0] = c[0] * o.c[0];
    r[1] = c[0] * o.c[1] + c[1] * o.c[0];
    r[2] = c[0] * o.c[2] + c[1] * o.c[1] * d + c[2] * o.c[0];
    r[3] = c[0] * o.c[3] + c[1] * o.c[2] + c[2] * o.c[1] + c[3] * o.c[0];
    return r;
}

bool NumClass::is_zero() const {
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
}

std::string NumClass::str() const {
    return "(" + c[0].str() + ", " + c[1].str() + ", " + c[2].str() + ", " + c[3].str() + ")";
}

NumClass todd(const FanoModel& m) {
    Rat td2 = Rat((long long)m.index * m.index * m.degree + m.h_dot_c2(), 12);
    return NumClass(Rat(1), Rat(m.index, 2), td2, Rat(1));
}

Rat chi(const FanoModel& m, const KClass& k) {
    NumClass td = todd(m);
    return k.ch[3] + k.ch[2] * td[1] + k.ch[1] * td[2] + k.ch[0] * td[3];
}

Rat chi_rr_q3_closed_form(long long e1, long long e2) {
    Rat E1(e1), E2(e2);
    return Rat(1, 6) * (Rat(2) * E1 * E1 * E1 - Rat(3) * E1 * E2)
         + Rat(3, 2) * (E1 * E1 - E2)
         + Rat(13, 6) * E1 + Rat(2);
}

KClass line_bundle(const FanoModel& m, long long n) {
    Rat N(n), d(m.degree);
    return KClass(Rat(1), N, N * N * d / Rat(2), N * N * N * d / Rat(6));
}

KClass rank2(const FanoModel& m, long long e1, long long e2) {
    Rat E1(e1), E2(e2), d(m.degree);
    return KClass(Rat(2), E1,
                  (E1 * E1 * d - Rat(2) * E2) / Rat(2),
                  (E1 * E1 * E1 * d - Rat(3) * E1 * E2) / Rat(6));
}

std::pair<long long, long long> chern_of_rank2(const FanoModel& m, const KClass& k) {
    if (k.ch[0] != Rat(2)) throw DomainError("not a rank-2 class: rank = " + k.ch[0].str());
    long long e1 = k.ch[1].as_integer();
    Rat e2r = (Rat(e1) * Rat(e1) * Rat(m.degree) - Rat(2) * k.ch[2]) / Rat(2);
    long long e2 = e2r.as_integer();
    if (!(rank2(m, e1, e2) == k))
        throw DomainError("class is not an integral rank-2 class: " + k.str());
    return {e1, e2};
}

KClass twist(const KClass& k, long long n, const FanoModel& m) {
    return KClass(k.ch.mul(line_bundle(m, n).ch, m));
}

KClass dual(const KClass& k) {
    return KClass(k.ch[0], -k.ch[1], k.ch[2], -k.ch[3]);
}

KClass tensor(const KClass& a, const KClass& b, const FanoModel& m) {
    return KClass(a.ch.mul(b.ch, m));
}

} // namespace wfb
