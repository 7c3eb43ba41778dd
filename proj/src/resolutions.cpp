#include "wfb/resolutions.hpp"

#include <json.hpp>

namespace wfb {

SheafSymbol SheafSymbol::O(long long n) {
    SheafSymbol s;
    s.kind = Kind::LineBundle;
    s.twist = n;
    return s;
}

SheafSymbol SheafSymbol::S(long long n) {
    SheafSymbol s;
    s.kind = Kind::Spinor;
    s.twist = n;
    return s;
}

SheafSymbol SheafSymbol::omega_p4(long long k) {
    SheafSymbol s;
    s.kind = Kind::OmegaP4Restricted;
    s.twist = k;
    return s;
}

SheafSymbol SheafSymbol::t_p4(long long k) {
    SheafSymbol s;
    s.kind = Kind::TP4Restricted;
    s.twist = k;
    return s;
}

SheafSymbol SheafSymbol::named(long long e1, long long e2, long long twist) {
    SheafSymbol s;
    s.kind = Kind::Named;
    s.e1 = e1;
    s.e2 = e2;
    s.twist = twist;
    return s;
}

SheafSymbol SheafSymbol::section_kernel(long long sections, long long e1, long long e2,
                                        long long target_twist) {
    SheafSymbol s;
    s.kind = Kind::SectionKernel;
    s.sections = sections;
    s.e1 = e1;
    s.e2 = e2;
    s.inner_twist = target_twist;
    s.twist = 0;
    return s;
}

SheafSymbol SheafSymbol::twisted(long long n) const {
    SheafSymbol s = *this;
    s.twist += n;
    return s;
}

std::string SheafSymbol::str() const {
    auto tw = [](long long n) { return n == 0 ? std::string() : "(" + std::to_string(n) + ")"; };
    switch (kind) {
        case Kind::LineBundle: return twist == 0 ? "O" : "O(" + std::to_string(twist) + ")";
        case Kind::Spinor: return "S" + tw(twist);
        case Kind::OmegaP4Restricted: return "Omega(" + std::to_string(twist) + ")";
        case Kind::TP4Restricted: return "T(" + std::to_string(twist) + ")";
        case Kind::Named:
            return "E(" + std::to_string(twist) + ";" + std::to_string(e1) + "," +
                   std::to_string(e2) + ")";
        case Kind::SectionKernel:
            return "ker(O" + tw(twist) + "^" + std::to_string(sections) + "->E(" +
                   std::to_string(inner_twist + twist) + ";" + std::to_string(e1) + "," +
                   std::to_string(e2) + "))";
    }
    return "?";
}

bool SheafSymbol::operator==(const SheafSymbol& o) const {
    return kind == o.kind && twist == o.twist && e1 == o.e1 && e2 == o.e2 &&
           sections == o.sections && inner_twist == o.inner_twist;
}

namespace {

long long parse_int(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start || (pos == start + 1 && !isdigit((unsigned char)s[start])))
        throw DomainError("bad integer in symbol: " + s);
    try {
        return std::stoll(s.substr(start, pos - start));
    } catch (const std::exception&) {
        throw DomainError("integer out of range in symbol: " + s);
    }
}

void expect(const std::string& s, size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c)
        throw DomainError("bad symbol syntax: " + s);
    ++pos;
}

long long optional_twist(const std::string& s, size_t& pos) {
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        long long n = parse_int(s, pos);
        expect(s, pos, ')');
        return n;
    }
    return 0;
}

} // namespace

SheafSymbol parse_symbol(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    size_t pos = 0;
    SheafSymbol out;
    if (s.compare(0, 4, "ker(") == 0) {
        pos = 4;
        expect(s, pos, 'O');
        long long tw = optional_twist(s, pos);
        expect(s, pos, '^');
        long long m = parse_int(s, pos);
        expect(s, pos, '-');
        expect(s, pos, '>');
        expect(s, pos, 'E');
        expect(s, pos, '(');
        long long t = parse_int(s, pos);
        expect(s, pos, ';');
        long long e1 = parse_int(s, pos);
        expect(s, pos, ',');
        long long e2 = parse_int(s, pos);
        expect(s, pos, ')');
        expect(s, pos, ')');
        if (pos != s.size()) throw DomainError("trailing characters in symbol: " + text);
        out = SheafSymbol::section_kernel(m, e1, e2, t - tw);
        out.twist = tw;
        return out;
    }
    if (s.compare(0, 5, "Omega") == 0) {
        pos = 5;
        out = SheafSymbol::omega_p4(optional_twist(s, pos));
    } else if (!s.empty() && s[0] == 'T') {
        pos = 1;
        out = SheafSymbol::t_p4(optional_twist(s, pos));
    } else if (!s.empty() && s[0] == 'O') {
        pos = 1;
        out = SheafSymbol::O(optional_twist(s, pos));
    } else if (!s.empty() && s[0] == 'S') {
        pos = 1;
        out = SheafSymbol::S(optional_twist(s, pos));
    } else if (!s.empty() && s[0] == 'E') {
        pos = 1;
        expect(s, pos, '(');
        long long t = parse_int(s, pos);
        expect(s, pos, ';');
        long long e1 = parse_int(s, pos);
        expect(s, pos, ',');
        long long e2 = parse_int(s, pos);
        expect(s, pos, ')');
        out = SheafSymbol::named(e1, e2, t);
    } else {
        throw DomainError("unknown symbol: " + text);
    }
    if (pos != s.size()) throw DomainError("trailing characters in symbol: " + text);
    return out;
}

KClass kclass_of(const SheafSymbol& symbol) {
    FanoModel q3 = FanoModel::q3();
    switch (symbol.kind) {
        case SheafSymbol::Kind::LineBundle:
            return line_bundle(q3, symbol.twist);
        case SheafSymbol::Kind::Spinor:
            return twist(rank2(q3, -1, 1), symbol.twist, q3);
        case SheafSymbol::Kind::OmegaP4Restricted:
            // restricted Euler sequence: Omega(k)| = 5 O(k-1) - O(k) in K-theory
            return line_bundle(q3, symbol.twist - 1).scaled(Rat(5)) -
                   line_bundle(q3, symbol.twist);
        case SheafSymbol::Kind::TP4Restricted:
            return line_bundle(q3, symbol.twist + 1).scaled(Rat(5)) -
                   line_bundle(q3, symbol.twist);
        case SheafSymbol::Kind::Named:
            return twist(rank2(q3, symbol.e1, symbol.e2), symbol.twist, q3);
        case SheafSymbol::Kind::SectionKernel:
            return line_bundle(q3, symbol.twist).scaled(Rat(symbol.sections)) -
                   twist(rank2(q3, symbol.e1, symbol.e2), symbol.inner_twist + symbol.twist, q3);
    }
    throw DomainError("unknown symbol kind");
}

void Sequence::validate() const {
    if (positions.size() < 2) throw DomainError("sequence needs at least two positions");
    for (const auto& pos : positions) {
        if (pos.empty()) throw DomainError("empty position in sequence");
        for (const auto& t : pos)
            if (t.mult < 1) throw DomainError("multiplicities must be >= 1");
    }
}

Sequence Sequence::twisted(long long n) const {
    Sequence s;
    s.name = name.empty() ? "" : name + "(" + std::to_string(n) + ")";
    for (const auto& pos : positions) {
        std::vector<SeqTerm> p;
        for (const auto& t : pos) p.push_back({t.mult, t.symbol.twisted(n)});
        s.positions.push_back(std::move(p));
    }
    return s;
}

std::string Sequence::str() const {
    std::string s = "0";
    for (const auto& pos : positions) {
        s += " -> ";
        for (size_t i = 0; i < pos.size(); ++i) {
            if (i) s += " + ";
            s += pos[i].symbol.str();
            if (pos[i].mult != 1) s += "^" + std::to_string(pos[i].mult);
        }
    }
    return s + " -> 0";
}

ExactnessReport check_exact(const Sequence& seq) {
    seq.validate();
    ExactnessReport rep;
    rep.name = seq.name;
    KClass sum;
    int sign = 1;
    for (const auto& pos : seq.positions) {
        for (const auto& t : pos) {
            KClass k = kclass_of(t.symbol).scaled(Rat(t.mult));
            sum = sign > 0 ? sum + k : sum - k;
        }
        sign = -sign;
    }
    rep.residue = sum;
    rep.exact = sum.is_zero();
    static const char* comps[4] = {"rank", "c1 (H units)", "ch2 (line units)", "ch3 (point units)"};
    for (int i = 0; i < 4; ++i)
        if (!sum.ch[i].is_zero())
            rep.nonzero_components.push_back(std::string(comps[i]) + " = " + sum.ch[i].str());
    return rep;
}

std::vector<Sequence> catalog_sequences() {
    using Sym = SheafSymbol;
    std::vector<Sequence> out;

    Sequence null_corr;
    null_corr.name = "null-correlation pullback: 0 -> O(-2) -> O(-1)^4 -> O^5 -> E(1) -> 0";
    null_corr.positions = {{{1, Sym::O(-2)}}, {{4, Sym::O(-1)}}, {{5, Sym::O()}},
                           {{1, Sym::named(0, 2, 1)}}};
    out.push_back(null_corr);

    Sequence cayley;
    cayley.name = "Cayley restriction: 0 -> O(-2) -> O(-1)^5 -> O^2 + S^2 -> E(1) -> 0";
    cayley.positions = {{{1, Sym::O(-2)}},
                        {{5, Sym::O(-1)}},
                        {{2, Sym::O()}, {2, Sym::S()}},
                        {{1, Sym::named(-1, 2, 1)}}};
    out.push_back(cayley);

    Sequence c2_3;
    c2_3.name = "c2=3 family: 0 -> O(-2)^2 -> O(-1)^10 -> S^5 -> E(1) -> 0";
    c2_3.positions = {{{2, Sym::O(-2)}}, {{10, Sym::O(-1)}}, {{5, Sym::S()}},
                      {{1, Sym::named(-1, 3, 1)}}};
    out.push_back(c2_3);

    Sequence c2_4;
    c2_4.name = "c2=4 family: 0 -> O(-2)^2 -> O(-1)^7 -> O^7 -> E(2) -> 0";
    c2_4.positions = {{{2, Sym::O(-2)}}, {{7, Sym::O(-1)}}, {{7, Sym::O()}},
                      {{1, Sym::named(-1, 4, 2)}}};
    out.push_back(c2_4);

    Sequence euler;
    euler.name = "restricted Euler sequence: 0 -> Omega(2)| -> O(1)^5 -> O(2) -> 0";
    euler.positions = {{{1, Sym::omega_p4(2)}}, {{5, Sym::O(1)}}, {{1, Sym::O(2)}}};
    out.push_back(euler);

    Sequence interm;
    interm.name = "c2=4 intermediate extension: 0 -> O(-2)^2 -> O(-1)^7 -> ker(O^7->E(2)) -> 0";
    interm.positions = {{{2, Sym::O(-2)}},
                        {{7, Sym::O(-1)}},
                        {{1, Sym::section_kernel(7, -1, 4, 2)}}};
    out.push_back(interm);

    return out;
}

Sequence parse_sequence_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw DomainError("sequence JSON needs a \"terms\" array");
    Sequence seq;
    if (j.contains("name")) seq.name = j["name"].get<std::string>();
    auto read_term = [](const nlohmann::json& t) -> SeqTerm {
        if (!t.is_object() || !t.contains("mult") || !t.contains("symbol"))
            throw DomainError("sequence term needs {mult, symbol}");
        return {t["mult"].get<long long>(), parse_symbol(t["symbol"].get<std::string>())};
    };
    for (const auto& entry : j["terms"]) {
        std::vector<SeqTerm> pos;
        if (entry.is_array()) {
            for (const auto& t : entry) pos.push_back(read_term(t));
        } else {
            pos.push_back(read_term(entry));
        }
        seq.positions.push_back(std::move(pos));
    }
    seq.validate();
    return seq;
}

TemplateTerm TemplateTerm::fixed(long long mult, const SheafSymbol& s) {
    KClass k = kclass_of(s);
    return {-1, mult, k.rank(), k.c1(), s.str()};
}

TemplateTerm TemplateTerm::var(int unknown, const SheafSymbol& s) {
    KClass k = kclass_of(s);
    return {unknown, 1, k.rank(), k.c1(), s.str()};
}

TemplateTerm TemplateTerm::fixed_raw(long long mult, Rat rank, Rat c1, std::string label) {
    return {-1, mult, rank, c1, std::move(label)};
}

MultiplicityResult solve_multiplicities(const std::vector<TemplateTerm>& terms,
                                        int num_unknowns) {
    if (num_unknowns < 1) throw DomainError("template needs at least one unknown");
    // rows: rank additivity, c1 additivity; columns: unknowns, then RHS
    std::vector<std::vector<Rat>> m(2, std::vector<Rat>((size_t)num_unknowns + 1, Rat(0)));
    int sign = 1;
    for (const auto& t : terms) {
        Rat s((long long)sign);
        if (t.unknown >= 0) {
            if (t.unknown >= num_unknowns) throw DomainError("unknown index out of range");
            m[0][(size_t)t.unknown] += s * t.rank;
            m[1][(size_t)t.unknown] += s * t.c1;
        } else {
            m[0].back() -= s * Rat(t.mult) * t.rank;
            m[1].back() -= s * Rat(t.mult) * t.c1;
        }
        sign = -sign;
    }

    // Gaussian elimination on the 2 x (k+1) system
    size_t rows = 2, cols = (size_t)num_unknowns;
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Rat inv = Rat(1) / m[rank][c];
        for (auto& v : m[rank]) v *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Rat f = m[r][c];
            for (size_t c2 = 0; c2 < cols + 1; ++c2) m[r][c2] -= f * m[rank][c2];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    MultiplicityResult res;
    for (size_t r = rank; r < rows; ++r) {
        if (!m[r].back().is_zero()) {
            res.status = MultiplicityResult::Status::NoSolution;
            res.detail = "rank/c1 constraints are inconsistent";
            return res;
        }
    }
    if (rank < (size_t)num_unknowns) {
        res.status = MultiplicityResult::Status::NonUnique;
        res.detail = "constraints leave a " + std::to_string((size_t)num_unknowns - rank) +
                     "-parameter family of solutions";
        return res;
    }
    std::vector<long long> vals((size_t)num_unknowns, 0);
    for (size_t r = 0; r < rank; ++r) {
        Rat v = m[r].back();
        if (!v.is_integer() || v.as_integer() < 1) {
            res.status = MultiplicityResult::Status::NoSolution;
            res.detail = "unique rational solution has a non-positive or non-integer multiplicity (" +
                         v.str() + ")";
            return res;
        }
        vals[pivot_col[r]] = v.as_integer();
    }
    res.status = MultiplicityResult::Status::Unique;
    res.values = std::move(vals);
    return res;
}

GradedDim complete_triangle(TrianglePos unknown, const GradedDim& x, const GradedDim& y) {
    int top = std::max(x.max_degree(), y.max_degree()) + 1;
    GradedDim out;
    switch (unknown) {
        case TrianglePos::Last: {
            // knowns A, B; need every H^i(A) -> H^i(B) forced to vanish
            for (int i = 0; i <= top; ++i)
                if (x.at(i) != 0 && y.at(i) != 0)
                    throw AmbiguousTriangle("supports of the two known terms overlap in degree " +
                                            std::to_string(i));
            for (int i = 0; i <= top; ++i) {
                long long v = y.at(i) + x.at(i + 1);
                if (v) out = out + GradedDim::concentrated(i, v);
            }
            return out;
        }
        case TrianglePos::First: {
            // knowns B, C; need every H^i(B) -> H^i(C) forced to vanish
            for (int i = 0; i <= top; ++i)
                if (x.at(i) != 0 && y.at(i) != 0)
                    throw AmbiguousTriangle("supports of the two known terms overlap in degree " +
                                            std::to_string(i));
            for (int i = 0; i <= top + 1; ++i) {
                long long v = y.at(i - 1) + x.at(i);
                if (v) out = out + GradedDim::concentrated(i, v);
            }
            return out;
        }
        case TrianglePos::Middle: {
            // knowns A, C; need every connecting map H^i(C) -> H^{i+1}(A) forced to vanish
            for (int i = 0; i <= top; ++i)
                if (y.at(i) != 0 && x.at(i + 1) != 0)
                    throw AmbiguousTriangle("connecting maps from degree " + std::to_string(i) +
                                            " are not forced to vanish");
            for (int i = 0; i <= top; ++i) {
                long long v = x.at(i) + y.at(i);
                if (v) out = out + GradedDim::concentrated(i, v);
            }
            return out;
        }
    }
    throw DomainError("bad triangle position");
}

GradedDim rgamma_propagate(const std::vector<TriangleStep>& chain) {
    if (chain.empty()) throw DomainError("empty propagation chain");
    std::optional<GradedDim> carried;
    for (const auto& step : chain) {
        GradedDim a, b;
        if (step.first && step.second) {
            if (carried) throw DomainError("chain step leaves no slot for the carried value");
            a = *step.first;
            b = *step.second;
        } else if (!carried) {
            throw DomainError("head of the chain must supply both knowns");
        } else if (step.first) {
            a = *step.first;
            b = *carried;
        } else if (step.second) {
            a = *carried;
            b = *step.second;
        } else {
            throw DomainError("chain step needs at least one known");
        }
        carried = complete_triangle(step.unknown, a, b);
    }
    return *carried;
}

ChiClaimReport verify_claimed_rgamma(const FanoModel& m, const KClass& k,
                                     const std::string& label, const GradedDim& claimed) {
    ChiClaimReport rep;
    rep.expr_label = label;
    rep.chi_computed = chi(m, k);
    rep.chi_claimed = claimed.euler();
    rep.match = rep.chi_computed == Rat(rep.chi_claimed);
    return rep;
}

} // namespace wfb
