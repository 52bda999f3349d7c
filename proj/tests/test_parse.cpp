#include <doctest.h>

#include "error.hpp"
#include "gen.hpp"
#include "parse.hpp"

using namespace diffdep;

namespace {

const Signature s11(1, 1);
const Signature s21(2, 1);
const Signature s22(2, 2);

int parse_col(const char* src, const Signature& sig) {
    try {
        parse_diffpoly(src, sig);
    } catch (const ParseError& e) {
        return e.col;
    }
    return -1;
}

}  // namespace

TEST_CASE("fixed parses") {
    DiffPoly x = DiffPoly::variable(s11, 1);
    CHECK(parse_diffpoly("x1*x1' + 2", s11) ==
          x.mul(x.derive(1)).add(DiffPoly::constant(s11, 2)));
    // plain x aliases x1 when there is a single variable
    CHECK(parse_diffpoly("x", s11) == x);
    CHECK(parse_orepoly("x^2*D1 + x'", s11) ==
          OrePoly::term(s11, DerivOp::delta(1, 1), RatFunc(x.pow(2)))
              .add(OrePoly::scalar_poly(x.derive(1))));
    CHECK(parse_diffpoly("-3/2*x1 + 1/2", s11) ==
          x.scale(Rational(-3, 2)).add(DiffPoly::constant(s11, Rational(1, 2))));
    CHECK(parse_diffpoly("x1^[0,2]", s22) ==
          DiffPoly::from_var(s22, DiffVar{1, DerivOp(std::vector<uint32_t>{0, 2})}));
    CHECK(parse_diffpoly("x1^[1,0]^2", s22) ==
          DiffPoly::from_var(s22, DiffVar{1, DerivOp(std::vector<uint32_t>{1, 0})})
              .pow(2));

    NovikovExpr tree = parse_novikov("(x1@x1)@x2", s21);
    CHECK(tree.kind() == NovikovExpr::Kind::Circ);
    CHECK(tree.lhs().kind() == NovikovExpr::Kind::Circ);
    CHECK(tree.rhs().kind() == NovikovExpr::Kind::Var);
}

TEST_CASE("operator input is normalized by the commutation rule") {
    CHECK(parse_orepoly("D1*x1", s11) == parse_orepoly("x1*D1 + x1'", s11));
    CHECK(parse_orepoly("D1*D2", s22) == parse_orepoly("D2*D1", s22));
    CHECK(parse_orepoly("(x1*D1)^2", s11) ==
          parse_orepoly("x1^2*D1^2 + x1*x1'*D1", s11));
}

TEST_CASE("parse errors carry positions") {
    CHECK(parse_col("", s11) == 1);
    CHECK(parse_col("x1 + ", s11) == 6);
    CHECK(parse_col("x3", s21) == 1);
    CHECK(parse_col("x", s21) == 1);       // no alias with several variables
    CHECK(parse_col("y1", s11) == 1);
    CHECK(parse_col("x1''", s22) == 3);    // primes need m = 1
    CHECK(parse_col("x1^x1", s11) == 4);   // exponent must be an integer
    CHECK(parse_col("x1^(2)", s11) == 4);
    CHECK(parse_col("(x1", s11) == 4);
    CHECK(parse_col("x1 x1", s11) == 4);   // no implicit products
    CHECK(parse_col("D1*x1", s11) == 1);   // operators are not polynomials
    CHECK(parse_col("x1/2", s11) == 3);    // '/' only inside rational literals
    CHECK(parse_col("x1 @ x1", s11) == 4); // '@' needs the Novikov reader
    CHECK(parse_col("2*(x1+1)'", s11) == 9);

    try {
        parse_orepoly("D3", s22);
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.col == 1);
    }
    try {
        parse_novikov("x1@x1@x1", s11);
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.col == 6);
    }
    // multiline input reports the line
    try {
        parse_diffpoly("x1 +\n y9", s11);
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 2);
    }
}

TEST_CASE("printing round trips") {
    gen::Gen g(271828);
    for (int it = 0; it < 60; ++it) {
        const Signature sig(static_cast<uint32_t>(g.uniform(1, 2)),
                            static_cast<uint32_t>(g.uniform(1, 2)));
        DiffPoly p = g.poly(sig, 4, 3, 2);
        CHECK(parse_diffpoly(p.str(), sig) == p);

        OrePoly o = g.ore(sig, 2, 2, 2, 1);
        if (!o.is_zero()) CHECK(parse_orepoly(o.str(), sig) == o);
    }
    for (int it = 0; it < 40; ++it) {
        const Signature sig(static_cast<uint32_t>(g.uniform(1, 2)), 1);
        NovikovExpr e = g.nov_expr(sig, 2);
        CHECK(parse_novikov(e.str(), sig) == e);
    }
}

TEST_CASE("printing is deterministic") {
    gen::Gen g1(5150), g2(5150);
    for (int it = 0; it < 10; ++it) {
        DiffPoly a = g1.poly(s21, 4, 3, 2);
        DiffPoly b = g2.poly(s21, 4, 3, 2);
        CHECK(a.str() == b.str());
    }
}
