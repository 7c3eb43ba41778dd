#pragma once

#include <memory>
#include <optional>
#include <string>

#include "wfb/taut.hpp"

namespace wfb {
namespace dsl {

// Expressions in the intersection calculator: rational literals, the symbols
// xi, H, and K (anticanonical shorthand), +, -, *, ^, parentheses.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Op { Num, Sym, Add, Sub, Mul, Pow, Neg };
    enum class Symbol { Xi, H, K };

    Op op;
    Rat value;                           // Num
    Symbol sym = Symbol::Xi;             // Sym
    ExprPtr lhs, rhs;                    // binary ops, Neg uses lhs
    int exponent = 0;                    // Pow

    static ExprPtr num(const Rat& v);
    static ExprPtr symbol(Symbol s);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr pow(ExprPtr a, int n);
    static ExprPtr neg(ExprPtr a);
};

bool equal(const ExprPtr& a, const ExprPtr& b);

// throws ParseError with byte offset and expected-token set
ExprPtr parse(const std::string& input);

std::string print(const ExprPtr& e);

struct EvalContext {
    FanoModel model;
    std::optional<long long> e1, e2;     // bundle flags; needed once the

                                         // Grothendieck relation or K is used
    BundleOnX bundle() const;
};

// expand to a polynomial in (xi, H); K becomes 2 xi + (index - e1) H
TautExpr to_polynomial(const ExprPtr& e, const EvalContext& ctx);

// requires the expansion to be homogeneous of degree 4
Rat eval_intersection(const ExprPtr& e, const EvalContext& ctx);

} // namespace dsl
} // namespace wfb
