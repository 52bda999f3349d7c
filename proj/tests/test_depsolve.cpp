#include <doctest.h>

#include <algorithm>

#include "depsolve.hpp"
#include "error.hpp"
#include "gen.hpp"
#include "parse.hpp"

using namespace diffdep;

namespace {

const Signature s11(1, 1);
const Signature s21(2, 1);

OrePoly O(const char* src, const Signature& sig) { return parse_orepoly(src, sig); }

DependenceVerdict checked(const std::vector<DiffPoly>& fs) {
    DependenceVerdict v = diff_alg_dependent(fs);
    if (v.dependent) REQUIRE(verify_certificate(fs, v.certificate));
    return v;
}

}  // namespace

TEST_CASE("triangulation on fixed matrices") {
    OreMatrix unit({{O("1", s21), O("0", s21)}, {O("0", s21), O("1", s21)}});
    CHECK(!left_dependent(unit).dependent);

    OreMatrix dep({{O("1", s11), O("D1", s11)}, {O("x1", s11), O("x1*D1", s11)}});
    DependenceVerdict v = left_dependent(dep);
    REQUIRE(v.dependent);
    REQUIRE(v.certificate.size() == 2);
    CHECK(v.certificate[0] == O("x1", s11));
    CHECK(v.certificate[1] == O("-1", s11));

    OreMatrix scalar({{O("1", s11)}, {O("2*x1", s11)}});
    DependenceVerdict v2 = left_dependent(scalar);
    REQUIRE(v2.dependent);
    CHECK(v2.certificate[0] == O("2*x1", s11));
    CHECK(v2.certificate[1] == O("-1", s11));
}

TEST_CASE("dependence decisions on fixed families") {
    DiffPoly x = DiffPoly::variable(s11, 1);
    DiffPoly x1 = DiffPoly::variable(s21, 1), x2 = DiffPoly::variable(s21, 2);

    DependenceVerdict v = checked({x, x.derive(1)});
    REQUIRE(v.dependent);
    CHECK(v.certificate[0] == O("D1", s11));
    CHECK(v.certificate[1] == O("-1", s11));

    CHECK(!checked({x1, x2}).dependent);
    CHECK(checked({x, x.pow(2)}).dependent);
    CHECK(!checked({x1, x2.add(x1.derive(1))}).dependent);

    DependenceVerdict v3 = checked({x1, x2, x1.mul(x2.derive(1))});
    REQUIRE(v3.dependent);
    CHECK(v3.certificate[0] == O("x2'", s21));
    CHECK(v3.certificate[1] == O("x1*D1", s21));
    CHECK(v3.certificate[2] == O("-1", s21));
}

TEST_CASE("certificate verification") {
    DiffPoly x = DiffPoly::variable(s11, 1);
    std::vector<DiffPoly> fs{x, x.derive(1)};
    CHECK(verify_certificate(fs, {O("D1", s11), O("-1", s11)}));
    CHECK(!verify_certificate(fs, {O("1", s11), O("-1", s11)}));
    std::vector<DiffPoly> two{DiffPoly::variable(s21, 1), DiffPoly::variable(s21, 2)};
    CHECK(!verify_certificate(two, {OrePoly::zero(s21), OrePoly::zero(s21)}));
    CHECK_THROWS_AS(verify_certificate(fs, {O("1", s11)}), Error);
}

TEST_CASE("prolongation oracle on fixed families") {
    DiffPoly x = DiffPoly::variable(s11, 1);
    auto r = prolongation_rank({x, x.derive(1)}, 1);
    CHECK(r.rank == 3);
    CHECK(r.count == 4);
    CHECK(r.conclusive());

    auto r2 = prolongation_rank({DiffPoly::variable(s21, 1),
                                 DiffPoly::variable(s21, 2)}, 0);
    CHECK(r2.rank == 2);
    CHECK(r2.count == 2);
    CHECK(!r2.conclusive());

    auto r3 = prolongation_rank({x, x.pow(2)}, 0);
    CHECK(r3.rank == 1);
    CHECK(r3.count == 2);
}

TEST_CASE("any n+1 elements are dependent") {
    gen::Gen g(515);
    for (int it = 0; it < 10; ++it) {
        uint32_t n = static_cast<uint32_t>(g.uniform(1, 2));
        const Signature sig(n, 1);
        std::vector<DiffPoly> fs;
        for (uint32_t i = 0; i <= n; ++i) fs.push_back(g.poly(sig, 2, 2, 1));
        CHECK(checked(fs).dependent);
    }
}

TEST_CASE("status is invariant under permutation and scaling") {
    gen::Gen g(616);
    for (int it = 0; it < 8; ++it) {
        const Signature sig(2, 1);
        std::vector<DiffPoly> fs{g.poly_nonzero(sig, 2, 2, 1),
                                 g.poly_nonzero(sig, 2, 2, 1)};
        bool dep = checked(fs).dependent;
        std::vector<DiffPoly> swapped{fs[1], fs[0]};
        CHECK(checked(swapped).dependent == dep);
        std::vector<DiffPoly> scaled{fs[0].scale(g.rational_nonzero()),
                                     fs[1].scale(g.rational_nonzero())};
        CHECK(checked(scaled).dependent == dep);
    }
}

TEST_CASE("degenerate families") {
    DiffPoly x = DiffPoly::variable(s11, 1);
    // a single nonconstant element is independent
    CHECK(!checked({parse_diffpoly("x1^2*x1' - x1", s11)}).dependent);
    // the zero polynomial alone is dependent with a unit certificate
    DependenceVerdict v = checked({DiffPoly::zero(s11)});
    REQUIRE(v.dependent);
    CHECK(v.certificate[0] == O("1", s11));
    // a nonzero constant is dependent (its gradient row vanishes)
    CHECK(checked({DiffPoly::constant(s11, 3)}).dependent);
    // zero next to a nonzero element
    DependenceVerdict v2 = checked({x, DiffPoly::zero(s11)});
    REQUIRE(v2.dependent);
    CHECK(v2.certificate[0].is_zero());
    CHECK(v2.certificate[1] == O("1", s11));
}

TEST_CASE("curated dependent families agree with the oracle") {
    DiffPoly x = DiffPoly::variable(s11, 1);
    DiffPoly x1 = DiffPoly::variable(s21, 1), x2 = DiffPoly::variable(s21, 2);
    std::vector<std::vector<DiffPoly>> families = {
        {x, x.derive(1)},
        {x, x.pow(2)},
        {x1, x2, x1.mul(x2.derive(1))},
        {x, x.mul(x.derive(1))},
        {x.pow(2), x.pow(2).derive(1)},
        {x.add(x.pow(2)), x.add(x.pow(2)).derive(1)},
        {x1.mul(x2), x1.mul(x2).derive(1)},
        {x, x.add(x.derive(1).derive(1))},
        {x.pow(2), x.pow(3)},
        {x1, x2, x1.add(x2.derive(1))},
    };
    for (const auto& fs : families) {
        CHECK(checked(fs).dependent);
        bool conclusive = false;
        for (uint32_t s = 0; s <= 3 && !conclusive; ++s)
            conclusive = prolongation_rank(fs, s).conclusive();
        CHECK(conclusive);
    }
}
