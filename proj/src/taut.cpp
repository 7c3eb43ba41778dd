#include "wfb/taut.hpp"

namespace wfb {

TautExpr TautExpr::monomial(int xi_exp, int h_exp, const Rat& coeff) {
    TautExpr e;
    e.add_term(xi_exp, h_exp, coeff);
    return e;
}

Rat TautExpr::coeff(int xi_exp, int h_exp) const {
    auto it = terms_.find({xi_exp, h_exp});
    return it == terms_.end() ? Rat(0) : it->second;
}

void TautExpr::add_term(int xi_exp, int h_exp, const Rat& coeff) {
    if (xi_exp < 0 || h_exp < 0) throw DomainError("negative exponent");
    Monomial key{xi_exp, h_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

TautExpr TautExpr::operator+(const TautExpr& o) const {
    TautExpr r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m.first, m.second, c);
    return r;
}

TautExpr TautExpr::operator-(const TautExpr& o) const { return *this + (-o); }

TautExpr TautExpr::operator-() const {
    TautExpr r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TautExpr TautExpr::operator*(const TautExpr& o) const {
    TautExpr r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(m1.first + m2.first, m1.second + m2.second, c1 * c2);
    return r;
}

TautExpr TautExpr::scaled(const Rat& s) const {
    TautExpr r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

TautExpr TautExpr::pow(int n) const {
    if (n < 0) throw DomainError("negative power of a cycle class");
    TautExpr r = constant(Rat(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

int TautExpr::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
    return d;
}

bool TautExpr::homogeneous_of_degree(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.first + m.second != d) return false;
    return true;
}

std::string TautExpr::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        if (m.first > 0) s += "*xi^" + std::to_string(m.first);
        if (m.second > 0) s += "*H^" + std::to_string(m.second);
    }
    return s;
}

TautExpr reduce(const TautExpr& expr, const BundleOnX& bundle, ReduceOrder order) {
    if (expr.total_degree() > 4)
        throw DomainError("dimension overflow: degree " + std::to_string(expr.total_degree()) +
                          " on a 4-fold");
    Rat e1(bundle.e1);
    Rat e2_over_d(bundle.e2, bundle.model.degree);
    TautExpr cur = expr;
    for (;;) {
        // pick one reducible monomial according to the requested order
        const std::map<TautExpr::Monomial, Rat>& ts = cur.terms();
        const TautExpr::Monomial* pick = nullptr;
        if (order == ReduceOrder::HighestFirst) {
            for (auto it = ts.rbegin(); it != ts.rend(); ++it)
                if (it->first.first >= 2) { pick = &it->first; break; }
        } else {
            for (auto it = ts.begin(); it != ts.end(); ++it)
                if (it->first.first >= 2) { pick = &it->first; break; }
        }
        if (!pick) return cur;
        auto [a, b] = *pick;
        Rat c = cur.coeff(a, b);
        cur.add_term(a, b, -c);
        cur.add_term(a - 1, b + 1, c * e1);
        cur.add_term(a - 2, b + 2, -c * e2_over_d);
    }
}

Rat intersection_number(const TautExpr& expr, const BundleOnX& bundle) {
    if (!expr.homogeneous_of_degree(4))
        throw DomainError("intersection number needs a homogeneous degree-4 expression, got " +
                          expr.str());
    TautExpr n = reduce(expr, bundle);
    // normal form in degree 4: xi*H^3 and H^4; pi_* xi = s0 = 1 so
    // xi*H^3 = H^3 = degree points, H^4 = 0
    return n.coeff(1, 3) * Rat(bundle.model.degree);
}

TautExpr anticanonical(const BundleOnX& bundle) {
    TautExpr k = TautExpr::xi().scaled(Rat(2));
    k.add_term(0, 1, Rat(bundle.model.index - bundle.e1));
    return k;
}

long long antican_quartic(const BundleOnX& bundle) {
    return intersection_number(anticanonical(bundle).pow(4), bundle).as_integer();
}

Rat h0van_pairing(const BundleOnX& bundle, const Rat& a) {
    TautExpr factor = TautExpr::xi() - TautExpr::h().scaled(a);
    return intersection_number(anticanonical(bundle).pow(3) * factor, bundle);
}

long long segre(const BundleOnX& bundle, int i) {
    long long d = bundle.model.degree, e1 = bundle.e1, e2 = bundle.e2;
    switch (i) {
        case 0: return 1;
        case 1: return e1;
        case 2: return e1 * e1 * d - e2;
        case 3: return bundle.segre3();
        default: throw DomainError("Segre index must lie in {0,..,3}");
    }
}

} // namespace wfb
