#include "diffdep.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "depsolve.hpp"
#include "novikov.hpp"
#include "parse.hpp"

using namespace diffdep;

namespace {

thread_local std::string g_last_error;

dd_status set_error(ErrKind kind, const std::string& msg) {
    g_last_error = msg;
    switch (kind) {
        case ErrKind::InvalidArgument: return DD_ERR_INVALID_ARGUMENT;
        case ErrKind::Parse: return DD_ERR_PARSE;
        case ErrKind::SignatureMismatch: return DD_ERR_SIGNATURE;
        case ErrKind::Arity: return DD_ERR_ARITY;
        case ErrKind::Domain: return DD_ERR_DOMAIN;
        case ErrKind::Resource: return DD_ERR_RESOURCE;
        case ErrKind::Internal: return DD_ERR_INTERNAL;
    }
    return DD_ERR_INTERNAL;
}

template <class F>
dd_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return DD_OK;
    } catch (const Error& e) {
        return set_error(e.kind, e.what());
    } catch (const std::exception& e) {
        return set_error(ErrKind::Internal, e.what());
    }
}

dd_status bad_argument(const char* msg) {
    g_last_error = msg;
    return DD_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

struct dd_session { Signature sig; };
struct dd_poly { DiffPoly value; };
struct dd_ore { OrePoly value; };
struct dd_matrix { std::vector<std::vector<OrePoly>> rows; };
struct dd_verdict {
    DependenceVerdict verdict;
    std::vector<DiffPoly> inputs;
};
struct dd_nov {
    NovikovExpr expr;
    NovikovElement element;
};
struct dd_rho_parts { std::vector<std::pair<int64_t, DiffPoly>> parts; };
struct dd_basis {
    uint32_t num_derivations;
    std::vector<DiffMonomial> monomials;
};

extern "C" {

const char* dd_version(void) { return "0.1.0"; }

const char* dd_last_error(void) { return g_last_error.c_str(); }

void dd_string_free(char* s) { std::free(s); }

dd_status dd_session_new(int32_t num_vars, int32_t num_derivations,
                         dd_session** out) {
    if (!out) return bad_argument("null output");
    return guarded([&] {
        if (num_vars < 1 || num_derivations < 1)
            throw Error(ErrKind::InvalidArgument,
                        "session needs at least one variable and one derivation");
        *out = new dd_session{Signature(static_cast<uint32_t>(num_vars),
                                        static_cast<uint32_t>(num_derivations))};
    });
}

void dd_session_free(dd_session* s) { delete s; }

dd_status dd_poly_parse(const dd_session* s, const char* src, dd_poly** out) {
    if (!s || !src || !out) return bad_argument("null argument");
    return guarded([&] { *out = new dd_poly{parse_diffpoly(src, s->sig)}; });
}

dd_status dd_poly_format(const dd_poly* p, char** out) {
    if (!p || !out) return bad_argument("null argument");
    return guarded([&] { *out = dup_string(p->value.str()); });
}

void dd_poly_free(dd_poly* p) { delete p; }

dd_status dd_poly_add(const dd_poly* a, const dd_poly* b, dd_poly** out) {
    if (!a || !b || !out) return bad_argument("null argument");
    return guarded([&] { *out = new dd_poly{a->value.add(b->value)}; });
}

dd_status dd_poly_sub(const dd_poly* a, const dd_poly* b, dd_poly** out) {
    if (!a || !b || !out) return bad_argument("null argument");
    return guarded([&] { *out = new dd_poly{a->value.sub(b->value)}; });
}

dd_status dd_poly_mul(const dd_poly* a, const dd_poly* b, dd_poly** out) {
    if (!a || !b || !out) return bad_argument("null argument");
    return guarded([&] { *out = new dd_poly{a->value.mul(b->value)}; });
}

dd_status dd_poly_pow(const dd_poly* a, int64_t e, dd_poly** out) {
    if (!a || !out) return bad_argument("null argument");
    if (e < 0) return bad_argument("negative exponent");
    return guarded([&] {
        *out = new dd_poly{a->value.pow(static_cast<uint64_t>(e))};
    });
}

dd_status dd_poly_derive(const dd_poly* a, const uint32_t* theta, size_t m,
                         dd_poly** out) {
    if (!a || !theta || !out) return bad_argument("null argument");
    return guarded([&] {
        *out = new dd_poly{a->value.apply_theta(
            DerivOp(std::vector<uint32_t>(theta, theta + m)))};
    });
}

int32_t dd_poly_is_zero(const dd_poly* p) { return p && p->value.is_zero(); }

int32_t dd_poly_equal(const dd_poly* a, const dd_poly* b) {
    return a && b && a->value == b->value;
}

dd_status dd_poly_substitute(const dd_poly* g, const dd_poly* const* fs,
                             size_t count, dd_poly** out) {
    if (!g || !fs || !out) return bad_argument("null argument");
    return guarded([&] {
        std::vector<DiffPoly> args;
        args.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!fs[i]) throw Error(ErrKind::InvalidArgument, "null argument");
            args.push_back(fs[i]->value);
        }
        *out = new dd_poly{g->value.substitute(args)};
    });
}

dd_status dd_poly_degrees(const dd_poly* p, int64_t values[3],
                          int32_t homogeneous[3]) {
    if (!p || !values || !homogeneous) return bad_argument("null argument");
    return guarded([&] {
        Degrees d = p->value.degrees();
        const std::optional<int64_t>* fields[3] = {&d.var_degree, &d.deriv_weight,
                                                   &d.rho};
        for (int i = 0; i < 3; ++i) {
            homogeneous[i] = fields[i]->has_value();
            values[i] = fields[i]->value_or(0);
        }
    });
}

dd_status dd_poly_degree_in_var(const dd_poly* p, int32_t var, int64_t* out) {
    if (!p || !out) return bad_argument("null argument");
    return guarded([&] {
        if (var < 1) throw Error(ErrKind::InvalidArgument, "variable index out of range");
        *out = p->value.degree_in_var(static_cast<uint32_t>(var));
    });
}

dd_status dd_poly_rho_components(const dd_poly* p, dd_rho_parts** out) {
    if (!p || !out) return bad_argument("null argument");
    return guarded([&] { *out = new dd_rho_parts{p->value.rho_components()}; });
}

size_t dd_rho_parts_count(const dd_rho_parts* r) { return r ? r->parts.size() : 0; }

dd_status dd_rho_parts_get(const dd_rho_parts* r, size_t i, int64_t* rho,
                           dd_poly** part) {
    if (!r || !rho || !part) return bad_argument("null argument");
    if (i >= r->parts.size()) return bad_argument("index out of range");
    *rho = r->parts[i].first;
    *part = new dd_poly{r->parts[i].second};
    return DD_OK;
}

void dd_rho_parts_free(dd_rho_parts* r) { delete r; }

dd_status dd_ore_parse(const dd_session* s, const char* src, dd_ore** out) {
    if (!s || !src || !out) return bad_argument("null argument");
    return guarded([&] { *out = new dd_ore{parse_orepoly(src, s->sig)}; });
}

dd_status dd_ore_format(const dd_ore* a, char** out) {
    if (!a || !out) return bad_argument("null argument");
    return guarded([&] { *out = dup_string(a->value.str()); });
}

void dd_ore_free(dd_ore* a) { delete a; }

dd_status dd_ore_mul(const dd_ore* a, const dd_ore* b, dd_ore** out) {
    if (!a || !b || !out) return bad_argument("null argument");
    return guarded([&] { *out = new dd_ore{a->value.mul(b->value)}; });
}

int32_t dd_ore_is_zero(const dd_ore* a) { return a && a->value.is_zero(); }

dd_status dd_ore_order(const dd_ore* a, int64_t* out) {
    if (!a || !out) return bad_argument("null argument");
    return guarded([&] {
        auto o = a->value.order();
        if (!o) throw Error(ErrKind::Domain, "the zero operator has no order");
        *out = *o;
    });
}

dd_status dd_ore_apply(const dd_ore* a, const dd_poly* f, dd_poly** out) {
    if (!a || !f || !out) return bad_argument("null argument");
    return guarded([&] {
        RatFunc r = a->value.apply(RatFunc(f->value));
        if (!r.is_polynomial()) {
            auto q = r.num().divide_exact(r.den());
            if (!q) throw Error(ErrKind::Domain, "operator action is not polynomial");
            *out = new dd_poly{std::move(*q)};
            return;
        }
        *out = new dd_poly{r.num()};
    });
}

dd_status dd_ore_lclm(const dd_ore* a, const dd_ore* b, int32_t max_order,
                      dd_ore** c, dd_ore** d, int32_t* s) {
    if (!a || !b || !c || !d || !s) return bad_argument("null argument");
    if (max_order < 0) return bad_argument("negative order cap");
    return guarded([&] {
        OreCommonMultiple r = ore_common_multiple(
            a->value, b->value, static_cast<uint32_t>(max_order));
        *c = new dd_ore{std::move(r.c)};
        *d = new dd_ore{std::move(r.d)};
        *s = static_cast<int32_t>(r.s);
    });
}

dd_status dd_fox_gradient(const dd_poly* f, dd_matrix** out) {
    if (!f || !out) return bad_argument("null argument");
    return guarded([&] {
        *out = new dd_matrix{{fox_gradient(f->value)}};
    });
}

dd_status dd_jacobian(const dd_poly* const* fs, size_t count, dd_matrix** out) {
    if (!fs || !out || count == 0) return bad_argument("null or empty argument");
    return guarded([&] {
        std::vector<DiffPoly> args;
        args.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!fs[i]) throw Error(ErrKind::InvalidArgument, "null argument");
            args.push_back(fs[i]->value);
        }
        OreMatrix m = jacobian(args);
        std::vector<std::vector<OrePoly>> rows;
        rows.reserve(m.rows());
        for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
        *out = new dd_matrix{std::move(rows)};
    });
}

size_t dd_matrix_rows(const dd_matrix* m) { return m ? m->rows.size() : 0; }

size_t dd_matrix_cols(const dd_matrix* m) {
    return m && !m->rows.empty() ? m->rows.front().size() : 0;
}

dd_status dd_matrix_get(const dd_matrix* m, size_t row, size_t col, dd_ore** out) {
    if (!m || !out) return bad_argument("null argument");
    if (row >= m->rows.size() || col >= m->rows.front().size())
        return bad_argument("index out of range");
    *out = new dd_ore{m->rows[row][col]};
    return DD_OK;
}

void dd_matrix_free(dd_matrix* m) { delete m; }

dd_status dd_depcheck(const dd_poly* const* fs, size_t count,
                      int32_t max_ore_order, dd_verdict** out) {
    if (!fs || !out || count == 0) return bad_argument("null or empty argument");
    if (max_ore_order < 0) return bad_argument("negative order cap");
    return guarded([&] {
        std::vector<DiffPoly> args;
        args.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!fs[i]) throw Error(ErrKind::InvalidArgument, "null argument");
            args.push_back(fs[i]->value);
        }
        DependenceVerdict v =
            diff_alg_dependent(args, static_cast<uint32_t>(max_ore_order));
        *out = new dd_verdict{std::move(v), std::move(args)};
    });
}

int32_t dd_verdict_dependent(const dd_verdict* v) {
    return v && v->verdict.dependent;
}

size_t dd_verdict_certificate_size(const dd_verdict* v) {
    return v ? v->verdict.certificate.size() : 0;
}

dd_status dd_verdict_certificate_get(const dd_verdict* v, size_t i, dd_ore** out) {
    if (!v || !out) return bad_argument("null argument");
    if (i >= v->verdict.certificate.size()) return bad_argument("index out of range");
    *out = new dd_ore{v->verdict.certificate[i]};
    return DD_OK;
}

size_t dd_verdict_pivot_count(const dd_verdict* v) {
    return v ? v->verdict.pivots.size() : 0;
}

dd_status dd_verdict_pivot_get(const dd_verdict* v, size_t i, int32_t* row,
                               int32_t* col) {
    if (!v || !row || !col) return bad_argument("null argument");
    if (i >= v->verdict.pivots.size()) return bad_argument("index out of range");
    *row = v->verdict.pivots[i].first;
    *col = v->verdict.pivots[i].second;
    return DD_OK;
}

dd_status dd_verdict_verify(const dd_verdict* v, int32_t* ok) {
    if (!v || !ok) return bad_argument("null argument");
    return guarded([&] {
        *ok = v->verdict.dependent &&
              verify_certificate(v->inputs, v->verdict.certificate);
    });
}

void dd_verdict_free(dd_verdict* v) { delete v; }

dd_status dd_verify_certificate(const dd_poly* const* fs, size_t nfs,
                                const dd_ore* const* cert, size_t ncert,
                                int32_t* ok) {
    if (!fs || !cert || !ok) return bad_argument("null argument");
    return guarded([&] {
        std::vector<DiffPoly> args;
        for (size_t i = 0; i < nfs; ++i) args.push_back(fs[i]->value);
        std::vector<OrePoly> bs;
        for (size_t i = 0; i < ncert; ++i) bs.push_back(cert[i]->value);
        *ok = verify_certificate(args, bs);
    });
}

dd_status dd_prolongation_rank(const dd_poly* const* fs, size_t count,
                               int32_t s, int64_t* rank, int64_t* total) {
    if (!fs || !rank || !total || count == 0)
        return bad_argument("null or empty argument");
    if (s < 0) return bad_argument("negative prolongation order");
    return guarded([&] {
        std::vector<DiffPoly> args;
        args.reserve(count);
        for (size_t i = 0; i < count; ++i) args.push_back(fs[i]->value);
        ProlongationRank r = prolongation_rank(args, static_cast<uint32_t>(s));
        *rank = r.rank;
        *total = r.count;
    });
}

dd_status dd_nov_parse(const dd_session* s, const char* src, dd_nov** out) {
    if (!s || !src || !out) return bad_argument("null argument");
    return guarded([&] {
        NovikovExpr e = parse_novikov(src, s->sig);
        NovikovElement el = embed(e, s->sig);
        *out = new dd_nov{std::move(e), std::move(el)};
    });
}

dd_status dd_nov_format(const dd_nov* e, char** out) {
    if (!e || !out) return bad_argument("null argument");
    return guarded([&] { *out = dup_string(e->expr.str()); });
}

dd_status dd_nov_body(const dd_nov* e, dd_poly** out) {
    if (!e || !out) return bad_argument("null argument");
    *out = new dd_poly{e->element.body()};
    return DD_OK;
}

dd_status dd_nov_scalar(const dd_nov* e, char** out) {
    if (!e || !out) return bad_argument("null argument");
    return guarded([&] { *out = dup_string(e->element.scalar().str()); });
}

void dd_nov_free(dd_nov* e) { delete e; }

dd_status dd_novcheck(const dd_nov* const* es, size_t count,
                      int32_t max_ore_order, dd_verdict** out) {
    if (!es || !out || count == 0) return bad_argument("null or empty argument");
    if (max_ore_order < 0) return bad_argument("negative order cap");
    return guarded([&] {
        std::vector<NovikovElement> elements;
        std::vector<DiffPoly> bodies;
        for (size_t i = 0; i < count; ++i) {
            if (!es[i]) throw Error(ErrKind::InvalidArgument, "null argument");
            elements.push_back(es[i]->element);
            bodies.push_back(es[i]->element.body());
        }
        DependenceVerdict v =
            novikov_dependent(elements, static_cast<uint32_t>(max_ore_order));
        *out = new dd_verdict{std::move(v), std::move(bodies)};
    });
}

dd_status dd_nov_basis(const dd_session* s, int64_t weight, dd_basis** out) {
    if (!s || !out) return bad_argument("null argument");
    return guarded([&] {
        if (s->sig.num_derivations != 1)
            throw Error(ErrKind::SignatureMismatch,
                        "the basis is defined for one derivation");
        if (weight < 1) throw Error(ErrKind::InvalidArgument, "weight must be >= 1");
        *out = new dd_basis{s->sig.num_derivations,
                            nov_basis(s->sig.num_vars,
                                      static_cast<uint32_t>(weight))};
    });
}

size_t dd_basis_count(const dd_basis* b) { return b ? b->monomials.size() : 0; }

dd_status dd_basis_get(const dd_basis* b, size_t i, char** out) {
    if (!b || !out) return bad_argument("null argument");
    if (i >= b->monomials.size()) return bad_argument("index out of range");
    *out = dup_string(b->monomials[i].str(b->num_derivations));
    return DD_OK;
}

void dd_basis_free(dd_basis* b) { delete b; }

}  // extern "C"
