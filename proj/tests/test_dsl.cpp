#include <doctest.h>

#include <random>

#include "wfb/dsl.hpp"

using namespace wfb;
using namespace wfb::dsl;

namespace {

EvalContext q3_ctx(long long c1, long long c2) {
    return EvalContext{FanoModel::q3(), c1, c2};
}

ExprPtr random_ast(std::mt19937& rng, int depth) {
    int pick = depth <= 0 ? (int)(rng() % 2) : (int)(rng() % 7);
    switch (pick) {
        case 0: return Expr::num(Rat((long long)(rng() % 9) - 4, 1 + (long long)(rng() % 3)));
        case 1: {
            int s = (int)(rng() % 3);
            return Expr::symbol(s == 0 ? Expr::Symbol::Xi
                                       : (s == 1 ? Expr::Symbol::H : Expr::Symbol::K));
        }
        case 2: return Expr::add(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 3: return Expr::sub(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 4: return Expr::mul(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 5: return Expr::neg(random_ast(rng, depth - 1));
        default: return Expr::pow(random_ast(rng, depth - 1), (int)(rng() % 4));
    }
}

} // namespace

TEST_CASE("parse basics") {
    CHECK_NOTHROW(parse("(2*xi + 3*H)^4"));
    CHECK_NOTHROW(parse("xi^2*H^2"));
    CHECK_NOTHROW(parse("1/2 * K^4 - xi*H^3"));
    CHECK_NOTHROW(parse("-xi^4"));

    try {
        parse("2*(xi");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 5);
    }
    CHECK_THROWS_AS(parse("2*"), ParseError);
    CHECK_THROWS_AS(parse("foo"), ParseError);
    CHECK_THROWS_AS(parse("xi^"), ParseError);
    CHECK_THROWS_AS(parse("xi xi"), ParseError);
    CHECK_THROWS_AS(parse("1/0"), ParseError);
}

TEST_CASE("print/parse round trip") {
    std::mt19937 rng(41);
    for (int i = 0; i < 300; ++i) {
        ExprPtr e = random_ast(rng, 3);
        std::string printed = print(e);
        ExprPtr reparsed = parse(printed);
        CHECK(equal(e, reparsed));                 // parse . print = identity on ASTs
        CHECK(print(reparsed) == printed);         // print . parse idempotent
    }
}

TEST_CASE("evaluation") {
    CHECK(eval_intersection(parse("K^4"), q3_ctx(0, 2)) == Rat(240));
    CHECK(eval_intersection(parse("H^4"), q3_ctx(0, 2)) == Rat(0));
    CHECK(eval_intersection(parse("xi*H^3"), q3_ctx(0, 2)) == Rat(2));
    CHECK(eval_intersection(parse("xi^2*H^2"), q3_ctx(-1, 4)) == Rat(-2));
    CHECK(eval_intersection(parse("K^3*(xi - 0*H)"), q3_ctx(0, 2)) == Rat(-18));

    EvalContext g10{FanoModel::index1(10), 1, 6};
    CHECK(eval_intersection(parse("xi^4"), g10) == Rat(6));
    CHECK(eval_intersection(parse("K^4"), g10) == Rat(16 * 6));   // (2 xi)^4 = 16 s3
}

TEST_CASE("H-only expressions need no bundle flags") {
    EvalContext bare{FanoModel::q3(), std::nullopt, std::nullopt};
    CHECK(eval_intersection(parse("H^4"), bare) == Rat(0));
    CHECK(eval_intersection(parse("xi*H^3"), bare) == Rat(2));
    CHECK_THROWS_AS(eval_intersection(parse("xi^4"), bare), DomainError);
    CHECK_THROWS_AS(eval_intersection(parse("K^4"), bare), DomainError);
}

TEST_CASE("degree errors") {
    CHECK_THROWS_AS(eval_intersection(parse("xi^2"), q3_ctx(0, 2)), DomainError);
    CHECK_THROWS_AS(eval_intersection(parse("(xi + 1)^4"), q3_ctx(0, 2)), DomainError);
    CHECK_THROWS_AS(eval_intersection(parse("xi^3*H^2"), q3_ctx(0, 2)), DomainError);
}

TEST_CASE("algebraic identities are evaluation-invariant") {
    // distributing a product before evaluation gives the same rational
    for (auto [c1, c2] : {std::pair<long long, long long>{0, 2}, {-1, 3}, {-1, 4}}) {
        EvalContext ctx = q3_ctx(c1, c2);
        Rat lhs = eval_intersection(parse("(xi + H)*(xi - H)*xi^2"), ctx);
        Rat rhs = eval_intersection(parse("xi^4 - xi^2*H^2"), ctx);
        CHECK(lhs == rhs);
        Rat l2 = eval_intersection(parse("(2*xi + 3*H)^4"), ctx);
        Rat r2 = eval_intersection(
            parse("16*xi^4 + 96*xi^3*H + 216*xi^2*H^2 + 216*xi*H^3 + 81*H^4"), ctx);
        CHECK(l2 == r2);
    }
}

TEST_CASE("expanded polynomial matches the anticanonical class") {
    EvalContext ctx = q3_ctx(-1, 2);
    TautExpr k = to_polynomial(parse("K"), ctx);
    CHECK(k == anticanonical(BundleOnX::q3(-1, 2)));
}
