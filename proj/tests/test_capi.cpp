// Exercises the shared-library surface exactly as an FFI client would.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "diffdep.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    dd_string_free(s);
    return out;
}

struct Fixture {
    dd_session* s11 = nullptr;
    Fixture() { REQUIRE(dd_session_new(1, 1, &s11) == DD_OK); }
    ~Fixture() { dd_session_free(s11); }

    dd_poly* poly(const char* src) const {
        dd_poly* p = nullptr;
        REQUIRE(dd_poly_parse(s11, src, &p) == DD_OK);
        return p;
    }
    dd_ore* ore(const char* src) const {
        dd_ore* o = nullptr;
        REQUIRE(dd_ore_parse(s11, src, &o) == DD_OK);
        return o;
    }
};

}  // namespace

TEST_CASE("session construction validates the signature") {
    dd_session* s = nullptr;
    CHECK(dd_session_new(0, 1, &s) == DD_ERR_INVALID_ARGUMENT);
    CHECK(dd_session_new(1, 0, &s) == DD_ERR_INVALID_ARGUMENT);
    CHECK(std::string(dd_last_error()).size() > 0);
    REQUIRE(dd_session_new(2, 2, &s) == DD_OK);
    dd_session_free(s);
}

TEST_CASE("polynomial arithmetic through the C surface") {
    Fixture f;
    dd_poly* a = f.poly("x1 + 1");
    dd_poly* b = f.poly("x1 - 1");
    dd_poly* ab = nullptr;
    REQUIRE(dd_poly_mul(a, b, &ab) == DD_OK);
    char* s = nullptr;
    REQUIRE(dd_poly_format(ab, &s) == DD_OK);
    CHECK(take(s) == "x1^2 - 1");

    dd_poly* expected = f.poly("x1^2 - 1");
    CHECK(dd_poly_equal(ab, expected) == 1);
    CHECK(dd_poly_is_zero(ab) == 0);

    uint32_t theta[1] = {1};
    dd_poly* d = nullptr;
    REQUIRE(dd_poly_derive(ab, theta, 1, &d) == DD_OK);
    char* ds = nullptr;
    REQUIRE(dd_poly_format(d, &ds) == DD_OK);
    CHECK(take(ds) == "2*x1'*x1");

    int64_t values[3];
    int32_t homog[3];
    dd_poly* mono = f.poly("x1*x1'");
    REQUIRE(dd_poly_degrees(mono, values, homog) == DD_OK);
    CHECK(homog[0] == 1);
    CHECK(values[0] == 2);
    CHECK(values[1] == 1);
    CHECK(values[2] == 1);

    dd_poly* zero = f.poly("0");
    CHECK(dd_poly_degrees(zero, values, homog) == DD_ERR_DOMAIN);

    dd_poly_free(a);
    dd_poly_free(b);
    dd_poly_free(ab);
    dd_poly_free(expected);
    dd_poly_free(d);
    dd_poly_free(mono);
    dd_poly_free(zero);
}

TEST_CASE("parse failures set the error message") {
    Fixture f;
    dd_poly* p = nullptr;
    CHECK(dd_poly_parse(f.s11, "x1 +", &p) == DD_ERR_PARSE);
    CHECK(std::string(dd_last_error()).find("1:5") != std::string::npos);
    CHECK(dd_poly_parse(f.s11, "x9", &p) == DD_ERR_PARSE);
}

TEST_CASE("common left multiple matches the known answer") {
    Fixture f;
    dd_ore* a = f.ore("D1");
    dd_ore* b = f.ore("x1");
    dd_ore* c = nullptr;
    dd_ore* d = nullptr;
    int32_t s = -1;
    REQUIRE(dd_ore_lclm(a, b, 10, &c, &d, &s) == DD_OK);
    CHECK(s == 1);
    char* cs = nullptr;
    REQUIRE(dd_ore_format(c, &cs) == DD_OK);
    CHECK(take(cs) == "x1^2");
    char* dstr = nullptr;
    REQUIRE(dd_ore_format(d, &dstr) == DD_OK);
    CHECK(take(dstr) == "x1*D1 - x1'");

    // the cap is reported as a resource error
    dd_ore* c2 = nullptr;
    dd_ore* d2 = nullptr;
    CHECK(dd_ore_lclm(a, b, 0, &c2, &d2, &s) == DD_ERR_RESOURCE);

    dd_ore_free(a);
    dd_ore_free(b);
    dd_ore_free(c);
    dd_ore_free(d);
}

TEST_CASE("operator action and order") {
    Fixture f;
    dd_ore* op = f.ore("x1*D1 + 1");
    int64_t ord = -1;
    REQUIRE(dd_ore_order(op, &ord) == DD_OK);
    CHECK(ord == 1);
    dd_poly* xp = f.poly("x1'");
    dd_poly* r = nullptr;
    REQUIRE(dd_ore_apply(op, xp, &r) == DD_OK);
    char* s = nullptr;
    REQUIRE(dd_poly_format(r, &s) == DD_OK);
    CHECK(take(s) == "x1''*x1 + x1'");
    dd_ore_free(op);
    dd_poly_free(xp);
    dd_poly_free(r);
}

TEST_CASE("dependence decision with certificate") {
    Fixture f;
    dd_poly* x = f.poly("x1");
    dd_poly* xp = f.poly("x1'");
    const dd_poly* fs[2] = {x, xp};
    dd_verdict* v = nullptr;
    REQUIRE(dd_depcheck(fs, 2, 10, &v) == DD_OK);
    CHECK(dd_verdict_dependent(v) == 1);
    REQUIRE(dd_verdict_certificate_size(v) == 2);
    dd_ore* b0 = nullptr;
    REQUIRE(dd_verdict_certificate_get(v, 0, &b0) == DD_OK);
    char* s = nullptr;
    REQUIRE(dd_ore_format(b0, &s) == DD_OK);
    CHECK(take(s) == "D1");
    int32_t ok = 0;
    REQUIRE(dd_verdict_verify(v, &ok) == DD_OK);
    CHECK(ok == 1);

    const dd_ore* cert[2] = {b0, nullptr};
    dd_ore* minus_one = f.ore("-1");
    cert[1] = minus_one;
    int32_t ok2 = 0;
    REQUIRE(dd_verify_certificate(fs, 2, cert, 2, &ok2) == DD_OK);
    CHECK(ok2 == 1);

    int64_t rank = 0, total = 0;
    REQUIRE(dd_prolongation_rank(fs, 2, 1, &rank, &total) == DD_OK);
    CHECK(rank == 3);
    CHECK(total == 4);

    dd_ore_free(b0);
    dd_ore_free(minus_one);
    dd_verdict_free(v);
    dd_poly_free(x);
    dd_poly_free(xp);
}

TEST_CASE("substitution and rho parts") {
    Fixture f;
    dd_session* s21 = nullptr;
    REQUIRE(dd_session_new(2, 1, &s21) == DD_OK);
    dd_poly* g = nullptr;
    REQUIRE(dd_poly_parse(s21, "x2 - x1*x1'", &g) == DD_OK);
    dd_poly* x = f.poly("x1");
    dd_poly* xxp = f.poly("x1*x1'");
    const dd_poly* fs[2] = {x, xxp};
    dd_poly* image = nullptr;
    REQUIRE(dd_poly_substitute(g, fs, 2, &image) == DD_OK);
    CHECK(dd_poly_is_zero(image) == 1);
    CHECK(dd_poly_substitute(g, fs, 1, &image) == DD_ERR_ARITY);

    dd_poly* mixed = f.poly("x1 + x1' + x1*x1'");
    dd_rho_parts* parts = nullptr;
    REQUIRE(dd_poly_rho_components(mixed, &parts) == DD_OK);
    REQUIRE(dd_rho_parts_count(parts) == 2);
    int64_t rho = -99;
    dd_poly* part = nullptr;
    REQUIRE(dd_rho_parts_get(parts, 0, &rho, &part) == DD_OK);
    CHECK(rho == 0);
    dd_poly_free(part);
    dd_rho_parts_free(parts);

    dd_poly_free(g);
    dd_poly_free(x);
    dd_poly_free(xxp);
    dd_poly_free(image);
    dd_poly_free(mixed);
    dd_session_free(s21);
}

TEST_CASE("Novikov surface") {
    Fixture f;
    dd_nov* a = nullptr;
    REQUIRE(dd_nov_parse(f.s11, "x1@x1", &a) == DD_OK);
    char* body = nullptr;
    dd_poly* bp = nullptr;
    REQUIRE(dd_nov_body(a, &bp) == DD_OK);
    REQUIRE(dd_poly_format(bp, &body) == DD_OK);
    CHECK(take(body) == "x1'*x1");
    char* sc = nullptr;
    REQUIRE(dd_nov_scalar(a, &sc) == DD_OK);
    CHECK(take(sc) == "0");

    dd_nov* x = nullptr;
    REQUIRE(dd_nov_parse(f.s11, "x1", &x) == DD_OK);
    const dd_nov* es[2] = {x, a};
    dd_verdict* v = nullptr;
    REQUIRE(dd_novcheck(es, 2, 10, &v) == DD_OK);
    CHECK(dd_verdict_dependent(v) == 1);
    int32_t ok = 0;
    REQUIRE(dd_verdict_verify(v, &ok) == DD_OK);
    CHECK(ok == 1);

    dd_nov* bad = nullptr;
    CHECK(dd_nov_parse(f.s11, "x1@x1@x1", &bad) == DD_ERR_PARSE);

    dd_basis* basis = nullptr;
    REQUIRE(dd_nov_basis(f.s11, 3, &basis) == DD_OK);
    REQUIRE(dd_basis_count(basis) == 2);
    char* m0 = nullptr;
    REQUIRE(dd_basis_get(basis, 0, &m0) == DD_OK);
    CHECK(take(m0) == "x1'^2*x1");
    dd_basis_free(basis);

    dd_verdict_free(v);
    dd_nov_free(a);
    dd_nov_free(x);
    dd_poly_free(bp);
}

TEST_CASE("null arguments are rejected") {
    CHECK(dd_poly_parse(nullptr, "x1", nullptr) == DD_ERR_INVALID_ARGUMENT);
    CHECK(dd_depcheck(nullptr, 0, 10, nullptr) == DD_ERR_INVALID_ARGUMENT);
    CHECK(dd_verdict_dependent(nullptr) == 0);
    CHECK(dd_basis_count(nullptr) == 0);
}
