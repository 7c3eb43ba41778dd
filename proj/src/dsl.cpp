#include "wfb/dsl.hpp"

#include <cctype>

namespace wfb {
namespace dsl {

ExprPtr Expr::num(const Rat& v) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Num;
    e->value = v;
    return e;
}

ExprPtr Expr::symbol(Symbol s) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Sym;
    e->sym = s;
    return e;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Add;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Sub;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Mul;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::pow(ExprPtr a, int n) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Pow;
    e->lhs = std::move(a);
    e->exponent = n;
    return e;
}

ExprPtr Expr::neg(ExprPtr a) {
    // canonical form: negation of a literal is a negative literal
    if (a->op == Op::Num) return num(-a->value);
    auto e = std::make_shared<Expr>();
    e->op = Op::Neg;
    e->lhs = std::move(a);
    return e;
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->op != b->op) return false;
    switch (a->op) {
        case Expr::Op::Num: return a->value == b->value;
        case Expr::Op::Sym: return a->sym == b->sym;
        case Expr::Op::Pow: return a->exponent == b->exponent && equal(a->lhs, b->lhs);
        case Expr::Op::Neg: return equal(a->lhs, b->lhs);
        default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    [[noreturn]] void fail(const std::string& expected) { throw ParseError(pos, expected); }

    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("integer");
        try {
            return std::stoll(s.substr(start, pos - start));
        } catch (const std::exception&) {
            pos = start;
            fail("integer within range");
        }
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (accept('+')) e = Expr::add(e, term());
            else if (accept('-')) e = Expr::sub(e, term());
            else return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        while (accept('*')) e = Expr::mul(e, unary());
        return e;
    }

    ExprPtr unary() {
        if (accept('-')) return Expr::neg(unary());
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (accept('^')) {
            long long n = integer();
            if (n > 8) fail("exponent <= 8");
            return Expr::pow(base, (int)n);
        }
        return base;
    }

    ExprPtr atom() {
        skip_ws();
        if (pos >= s.size()) fail("number, symbol, or '('");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            ExprPtr e = expr();
            if (!accept(')')) fail("')'");
            return e;
        }
        if (isdigit((unsigned char)c)) {
            long long n = integer();
            if (accept('/')) {
                long long d = integer();
                if (d == 0) fail("nonzero denominator");
                return Expr::num(Rat(n, d));
            }
            return Expr::num(Rat(n));
        }
        if (s.compare(pos, 2, "xi") == 0) {
            pos += 2;
            return Expr::symbol(Expr::Symbol::Xi);
        }
        if (c == 'H') {
            ++pos;
            return Expr::symbol(Expr::Symbol::H);
        }
        if (c == 'K') {
            ++pos;
            return Expr::symbol(Expr::Symbol::K);
        }
        fail("number, symbol (xi, H, K), or '('");
    }
};

int precedence(const Expr& e) {
    switch (e.op) {
        case Expr::Op::Add:
        case Expr::Op::Sub: return 1;
        case Expr::Op::Mul: return 2;
        case Expr::Op::Neg: return 3;
        case Expr::Op::Pow: return 4;
        case Expr::Op::Num:
            // a negative literal prints with a leading '-', so it binds
            // like a negation
            return e.value.sign() < 0 ? 3 : 5;
        default: return 5;
    }
}

void print_rec(const ExprPtr& e, int parent_prec, std::string& out) {
    int prec = precedence(*e);
    bool parens = prec < parent_prec;
    if (parens) out += "(";
    switch (e->op) {
        case Expr::Op::Num: out += e->value.str(); break;
        case Expr::Op::Sym:
            out += e->sym == Expr::Symbol::Xi ? "xi" : (e->sym == Expr::Symbol::H ? "H" : "K");
            break;
        case Expr::Op::Add:
            print_rec(e->lhs, prec, out);
            out += " + ";
            print_rec(e->rhs, prec + 1, out);
            break;
        case Expr::Op::Sub:
            print_rec(e->lhs, prec, out);
            out += " - ";
            print_rec(e->rhs, prec + 1, out);
            break;
        case Expr::Op::Mul:
            print_rec(e->lhs, prec, out);
            out += "*";
            print_rec(e->rhs, prec + 1, out);
            break;
        case Expr::Op::Neg:
            out += "-";
            print_rec(e->lhs, prec + 1, out);
            break;
        case Expr::Op::Pow:
            print_rec(e->lhs, prec + 1, out);
            out += "^" + std::to_string(e->exponent);
            break;
    }
    if (parens) out += ")";
}

} // namespace

ExprPtr parse(const std::string& input) {
    Parser p(input);
    ExprPtr e = p.expr();
    p.skip_ws();
    if (p.pos != input.size()) p.fail("operator or end of input");
    return e;
}

std::string print(const ExprPtr& e) {
    std::string out;
    print_rec(e, 0, out);
    return out;
}

BundleOnX EvalContext::bundle() const {
    if (!e1 || !e2)
        throw DomainError("missing bundle flags: the expression needs --c1/--c2");
    return BundleOnX(model, *e1, *e2);
}

namespace {

TautExpr expand(const ExprPtr& e, const EvalContext& ctx) {
    switch (e->op) {
        case Expr::Op::Num: return TautExpr::constant(e->value);
        case Expr::Op::Sym:
            if (e->sym == Expr::Symbol::Xi) return TautExpr::xi();
            if (e->sym == Expr::Symbol::H) return TautExpr::h();
            return anticanonical(ctx.bundle());
        case Expr::Op::Add: return expand(e->lhs, ctx) + expand(e->rhs, ctx);
        case Expr::Op::Sub: return expand(e->lhs, ctx) - expand(e->rhs, ctx);
        case Expr::Op::Mul: return expand(e->lhs, ctx) * expand(e->rhs, ctx);
        case Expr::Op::Neg: return -expand(e->lhs, ctx);
        case Expr::Op::Pow: return expand(e->lhs, ctx).pow(e->exponent);
    }
    throw Error("bad expression node");
}

} // namespace

TautExpr to_polynomial(const ExprPtr& e, const EvalContext& ctx) { return expand(e, ctx); }

Rat eval_intersection(const ExprPtr& e, const EvalContext& ctx) {
    TautExpr p = to_polynomial(e, ctx);
    if (!p.homogeneous_of_degree(4))
        throw DomainError("intersection expressions must be homogeneous of degree 4, got degree " +
                          std::to_string(p.total_degree()));
    // xi-degree <= 1 needs no Grothendieck reduction, so pure H/xi*H^3
    // expressions evaluate without bundle flags
    bool needs_reduction = false;
    for (const auto& [m, c] : p.terms())
        if (m.first >= 2) needs_reduction = true;
    BundleOnX b = needs_reduction ? ctx.bundle() : BundleOnX(ctx.model, 0, 0);
    return intersection_number(p, b);
}

} // namespace dsl
} // namespace wfb
