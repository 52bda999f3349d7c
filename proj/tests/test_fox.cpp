#include <doctest.h>

#include "fox.hpp"
#include "gen.hpp"
#include "parse.hpp"

using namespace diffdep;

namespace {

const Signature s11(1, 1);
const Signature s21(2, 1);

}  // namespace

TEST_CASE("gradient of a variable is the Kronecker row") {
    for (uint32_t n = 1; n <= 3; ++n) {
        for (uint32_t m = 1; m <= 2; ++m) {
            const Signature sig(n, m);
            for (uint32_t j = 1; j <= n; ++j) {
                FoxGradient g = fox_gradient(DiffPoly::variable(sig, j));
                for (uint32_t i = 1; i <= n; ++i) {
                    if (i == j)
                        CHECK(g[i - 1] == OrePoly::one(sig));
                    else
                        CHECK(g[i - 1].is_zero());
                }
            }
        }
    }
}

TEST_CASE("gradients on fixed inputs") {
    FoxGradient g1 = fox_gradient(parse_diffpoly("x1'", s11));
    CHECK(g1[0] == OrePoly::delta(s11, 1));

    FoxGradient g2 = fox_gradient(parse_diffpoly("x1*x2'", s21));
    CHECK(g2[0] == parse_orepoly("x2'", s21));
    CHECK(g2[1] == parse_orepoly("x1*D1", s21));

    FoxGradient g3 = fox_gradient(parse_diffpoly("x1^2", s11));
    CHECK(g3[0] == parse_orepoly("2*x1", s11));

    // quotient rule on a rational input: d(1/x) = -(1/x^2)
    FoxGradient g4 = fox_gradient(
        RatFunc(parse_diffpoly("1", s11), parse_diffpoly("x1", s11)));
    CHECK(g4[0] == OrePoly::scalar(
        RatFunc(parse_diffpoly("-1", s11), parse_diffpoly("x1^2", s11))));
}

TEST_CASE("jacobian shapes and rows") {
    OreMatrix id2 = jacobian({DiffPoly::variable(s21, 1), DiffPoly::variable(s21, 2)});
    CHECK(id2.rows() == 2);
    CHECK(id2.cols() == 2);
    CHECK(id2.at(0, 0) == OrePoly::one(s21));
    CHECK(id2.at(0, 1).is_zero());
    CHECK(id2.at(1, 1) == OrePoly::one(s21));

    DiffPoly x = DiffPoly::variable(s11, 1);
    OreMatrix col = jacobian({x, x.derive(1)});
    CHECK(col.at(0, 0) == OrePoly::one(s11));
    CHECK(col.at(1, 0) == OrePoly::delta(s11, 1));
}

TEST_CASE("gradient satisfies the derivation law") {
    gen::Gen g(606);
    for (int it = 0; it < 25; ++it) {
        DiffPoly f = g.poly(s21, 3, 2, 1);
        DiffPoly h = g.poly(s21, 3, 2, 1);
        FoxGradient gf = fox_gradient(f), gh = fox_gradient(h);
        FoxGradient gfh = fox_gradient(f.mul(h));
        for (uint32_t j = 0; j < 2; ++j)
            CHECK(gfh[j] ==
                  gh[j].scale(RatFunc(f)).add(gf[j].scale(RatFunc(h))));
    }
}

TEST_CASE("gradient commutes with the derivations") {
    gen::Gen g(607);
    const Signature s22(2, 2);
    for (int it = 0; it < 25; ++it) {
        DiffPoly f = g.poly(s22, 3, 2, 1);
        for (uint32_t i = 1; i <= 2; ++i) {
            FoxGradient lhs = fox_gradient(f.derive(i));
            FoxGradient rhs = fox_gradient(f);
            OrePoly delta = OrePoly::delta(s22, i);
            for (uint32_t j = 0; j < 2; ++j)
                CHECK(lhs[j] == delta.mul(rhs[j]));
        }
    }
}

TEST_CASE("chain rule") {
    gen::Gen g(608);
    for (int it = 0; it < 25; ++it) {
        uint32_t p = static_cast<uint32_t>(g.uniform(1, 2));
        uint32_t n = static_cast<uint32_t>(g.uniform(1, 2));
        const Signature sp(p, 1), sn(n, 1);
        DiffPoly f = g.poly(sp, 3, 2, 1);
        std::vector<DiffPoly> gs;
        for (uint32_t i = 0; i < p; ++i) gs.push_back(g.poly(sn, 2, 2, 1));
        FoxGradient lhs = fox_gradient(f.substitute(gs));
        std::vector<OrePoly> outer;
        for (const auto& e : fox_gradient(f)) {
            // move the outer gradient into the target algebra
            OrePoly moved(sn);
            for (const auto& [theta, r] : e.coeffs()) {
                DiffPoly num = r.num().substitute(gs);
                DiffPoly den = r.den().substitute(gs);
                moved = moved.add(OrePoly::term(sn, theta, RatFunc(num, den)));
            }
            outer.push_back(std::move(moved));
        }
        std::vector<OrePoly> rhs = row_times_matrix(outer, jacobian(gs));
        for (uint32_t j = 0; j < n; ++j) CHECK(lhs[j] == rhs[j]);
    }
}
