// Command line front end; everything mathematical goes through the C API.
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffdep.h"

namespace {

using nlohmann::json;

struct CliFailure {
    dd_status status;
    std::string message;
};

void check(dd_status st) {
    if (st != DD_OK) throw CliFailure{st, dd_last_error()};
}

const char* status_kind(dd_status st) {
    switch (st) {
        case DD_OK: return "ok";
        case DD_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case DD_ERR_PARSE: return "parse";
        case DD_ERR_SIGNATURE: return "signature";
        case DD_ERR_ARITY: return "arity";
        case DD_ERR_DOMAIN: return "domain";
        case DD_ERR_RESOURCE: return "resource";
        case DD_ERR_INTERNAL: return "internal";
    }
    return "internal";
}

// Owned handle wrappers.
struct SessionDel { void operator()(dd_session* p) const { dd_session_free(p); } };
struct PolyDel { void operator()(dd_poly* p) const { dd_poly_free(p); } };
struct OreDel { void operator()(dd_ore* p) const { dd_ore_free(p); } };
struct MatrixDel { void operator()(dd_matrix* p) const { dd_matrix_free(p); } };
struct VerdictDel { void operator()(dd_verdict* p) const { dd_verdict_free(p); } };
struct NovDel { void operator()(dd_nov* p) const { dd_nov_free(p); } };
struct RhoDel { void operator()(dd_rho_parts* p) const { dd_rho_parts_free(p); } };
struct BasisDel { void operator()(dd_basis* p) const { dd_basis_free(p); } };
using Session = std::unique_ptr<dd_session, SessionDel>;
using Poly = std::unique_ptr<dd_poly, PolyDel>;
using Ore = std::unique_ptr<dd_ore, OreDel>;
using Matrix = std::unique_ptr<dd_matrix, MatrixDel>;
using Verdict = std::unique_ptr<dd_verdict, VerdictDel>;
using Nov = std::unique_ptr<dd_nov, NovDel>;
using RhoParts = std::unique_ptr<dd_rho_parts, RhoDel>;
using Basis = std::unique_ptr<dd_basis, BasisDel>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    dd_string_free(s);
    return out;
}

std::string format_ore(const dd_ore* o) {
    char* s = nullptr;
    check(dd_ore_format(o, &s));
    return take_string(s);
}

std::string format_poly(const dd_poly* p) {
    char* s = nullptr;
    check(dd_poly_format(p, &s));
    return take_string(s);
}

struct Options {
    int32_t n = 1;
    int32_t m = 1;
    std::string format = "text";
    std::string input_path;
    int32_t max_ore_order = 10;
    int32_t oracle_order = 3;
    bool with_oracle = false;
    int64_t weight = 0;  // basis only
    std::vector<std::string> exprs;
};

void load_inputs(Options& opt) {
    if (opt.input_path.empty()) return;
    if (!opt.exprs.empty())
        throw CliFailure{DD_ERR_INVALID_ARGUMENT,
                         "give expressions either as arguments or via --input"};
    std::ifstream in(opt.input_path);
    if (!in)
        throw CliFailure{DD_ERR_INVALID_ARGUMENT,
                         "cannot open input file '" + opt.input_path + "'"};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            opt.exprs.push_back(line);
    }
}

void require_exprs(const Options& opt, size_t min, size_t max, const char* what) {
    if (opt.exprs.size() < min || (max > 0 && opt.exprs.size() > max))
        throw CliFailure{DD_ERR_ARITY, std::string(what)};
}

Session make_session(const Options& opt) {
    dd_session* s = nullptr;
    check(dd_session_new(opt.n, opt.m, &s));
    return Session(s);
}

std::vector<Poly> parse_polys(const dd_session* s, const Options& opt) {
    std::vector<Poly> out;
    for (const auto& src : opt.exprs) {
        dd_poly* p = nullptr;
        if (dd_poly_parse(s, src.c_str(), &p) != DD_OK)
            throw CliFailure{DD_ERR_PARSE, "in '" + src + "': " + dd_last_error()};
        out.emplace_back(p);
    }
    return out;
}

std::vector<const dd_poly*> raw(const std::vector<Poly>& ps) {
    std::vector<const dd_poly*> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(p.get());
    return out;
}

void emit(const Options& opt, const json& report) {
    if (opt.format == "json") {
        std::cout << report.dump() << "\n";
        return;
    }
    // Text mirror: one "key: value" line per field, arrays indexed.
    std::function<void(const std::string&, const json&)> walk =
        [&](const std::string& key, const json& v) {
            if (v.is_object()) {
                for (auto it = v.begin(); it != v.end(); ++it)
                    walk(key.empty() ? it.key() : key + "." + it.key(), it.value());
            } else if (v.is_array() && !v.empty() && !v.front().is_primitive()) {
                for (size_t i = 0; i < v.size(); ++i)
                    walk(key + "[" + std::to_string(i) + "]", v[i]);
            } else if (v.is_array()) {
                std::string line;
                for (const auto& e : v) {
                    if (!line.empty()) line += ", ";
                    line += e.is_string() ? e.get<std::string>() : e.dump();
                }
                std::cout << key << ": " << line << "\n";
            } else if (v.is_string()) {
                std::cout << key << ": " << v.get<std::string>() << "\n";
            } else {
                std::cout << key << ": " << v.dump() << "\n";
            }
        };
    walk("", report);
}

json verdict_report(const Options& opt, const dd_verdict* v,
                    const std::vector<const dd_poly*>* oracle_inputs) {
    json report;
    report["status"] = dd_verdict_dependent(v) ? "dependent" : "independent";
    if (dd_verdict_dependent(v)) {
        json cert = json::array();
        for (size_t i = 0; i < dd_verdict_certificate_size(v); ++i) {
            dd_ore* b = nullptr;
            check(dd_verdict_certificate_get(v, i, &b));
            Ore owned(b);
            cert.push_back(format_ore(b));
        }
        report["certificate"] = cert;
        int32_t ok = 0;
        check(dd_verdict_verify(v, &ok));
        report["verified"] = ok != 0;
    }
    json pivots = json::array();
    for (size_t i = 0; i < dd_verdict_pivot_count(v); ++i) {
        int32_t r = 0, c = 0;
        check(dd_verdict_pivot_get(v, i, &r, &c));
        pivots.push_back(json::array({r, c}));
    }
    report["pivots"] = pivots;
    if (opt.with_oracle && oracle_inputs) {
        int64_t rank = 0, total = 0;
        int32_t used = 0;
        for (int32_t s = 0; s <= opt.oracle_order; ++s) {
            check(dd_prolongation_rank(oracle_inputs->data(),
                                       oracle_inputs->size(), s, &rank, &total));
            used = s;
            if (rank < total) break;
        }
        report["oracle"] = {{"rank", rank}, {"count", total}, {"order", used}};
    }
    return report;
}

int run_depcheck(const Options& opt) {
    require_exprs(opt, 1, 0, "depcheck needs at least one polynomial");
    Session s = make_session(opt);
    std::vector<Poly> polys = parse_polys(s.get(), opt);
    std::vector<const dd_poly*> ptrs = raw(polys);
    dd_verdict* v = nullptr;
    check(dd_depcheck(ptrs.data(), ptrs.size(), opt.max_ore_order, &v));
    Verdict owned(v);
    emit(opt, verdict_report(opt, v, &ptrs));
    return 0;
}

int run_novcheck(const Options& opt) {
    require_exprs(opt, 1, 0, "novcheck needs at least one expression");
    Session s = make_session(opt);
    std::vector<Nov> novs;
    std::vector<Poly> bodies;
    for (const auto& src : opt.exprs) {
        dd_nov* e = nullptr;
        if (dd_nov_parse(s.get(), src.c_str(), &e) != DD_OK)
            throw CliFailure{DD_ERR_PARSE, "in '" + src + "': " + dd_last_error()};
        novs.emplace_back(e);
        dd_poly* b = nullptr;
        check(dd_nov_body(e, &b));
        bodies.emplace_back(b);
    }
    std::vector<const dd_nov*> ptrs;
    for (const auto& e : novs) ptrs.push_back(e.get());
    dd_verdict* v = nullptr;
    check(dd_novcheck(ptrs.data(), ptrs.size(), opt.max_ore_order, &v));
    Verdict owned(v);
    std::vector<const dd_poly*> body_ptrs = raw(bodies);
    emit(opt, verdict_report(opt, v, &body_ptrs));
    return 0;
}

int run_fox(const Options& opt) {
    require_exprs(opt, 1, 1, "fox needs exactly one polynomial");
    Session s = make_session(opt);
    std::vector<Poly> polys = parse_polys(s.get(), opt);
    dd_matrix* m = nullptr;
    check(dd_fox_gradient(polys.front().get(), &m));
    Matrix owned(m);
    json grad = json::array();
    for (size_t j = 0; j < dd_matrix_cols(m); ++j) {
        dd_ore* e = nullptr;
        check(dd_matrix_get(m, 0, j, &e));
        Ore o(e);
        grad.push_back(format_ore(e));
    }
    emit(opt, json{{"gradient", grad}});
    return 0;
}

int run_jacobian(const Options& opt) {
    require_exprs(opt, 1, 0, "jacobian needs at least one polynomial");
    Session s = make_session(opt);
    std::vector<Poly> polys = parse_polys(s.get(), opt);
    std::vector<const dd_poly*> ptrs = raw(polys);
    dd_matrix* m = nullptr;
    check(dd_jacobian(ptrs.data(), ptrs.size(), &m));
    Matrix owned(m);
    json rows = json::array();
    for (size_t i = 0; i < dd_matrix_rows(m); ++i) {
        json row = json::array();
        for (size_t j = 0; j < dd_matrix_cols(m); ++j) {
            dd_ore* e = nullptr;
            check(dd_matrix_get(m, i, j, &e));
            Ore o(e);
            row.push_back(format_ore(e));
        }
        rows.push_back(row);
    }
    emit(opt, json{{"rows", dd_matrix_rows(m)},
                   {"cols", dd_matrix_cols(m)},
                   {"matrix", rows}});
    return 0;
}

int run_orelcm(const Options& opt) {
    require_exprs(opt, 2, 2, "orelcm needs exactly two operators");
    Session s = make_session(opt);
    std::vector<Ore> ops;
    for (const auto& src : opt.exprs) {
        dd_ore* o = nullptr;
        if (dd_ore_parse(s.get(), src.c_str(), &o) != DD_OK)
            throw CliFailure{DD_ERR_PARSE, "in '" + src + "': " + dd_last_error()};
        ops.emplace_back(o);
    }
    dd_ore* c = nullptr;
    dd_ore* d = nullptr;
    int32_t level = 0;
    check(dd_ore_lclm(ops[0].get(), ops[1].get(), opt.max_ore_order, &c, &d, &level));
    Ore oc(c), od(d);
    dd_ore* prod = nullptr;
    check(dd_ore_mul(c, ops[0].get(), &prod));
    Ore op(prod);
    emit(opt, json{{"c", format_ore(c)},
                   {"d", format_ore(d)},
                   {"s", level},
                   {"product", format_ore(prod)}});
    return 0;
}

int run_subst(const Options& opt) {
    require_exprs(opt, 2, 0, "subst needs a function and its substitution targets");
    // The first expression is over x1..xp, p = number of remaining inputs.
    Options gopt = opt;
    gopt.n = static_cast<int32_t>(opt.exprs.size()) - 1;
    Session gs = make_session(gopt);
    dd_poly* g = nullptr;
    if (dd_poly_parse(gs.get(), opt.exprs.front().c_str(), &g) != DD_OK)
        throw CliFailure{DD_ERR_PARSE,
                         "in '" + opt.exprs.front() + "': " + dd_last_error()};
    Poly gp(g);
    Session s = make_session(opt);
    Options rest = opt;
    rest.exprs.assign(opt.exprs.begin() + 1, opt.exprs.end());
    std::vector<Poly> polys = parse_polys(s.get(), rest);
    std::vector<const dd_poly*> ptrs = raw(polys);
    dd_poly* r = nullptr;
    check(dd_poly_substitute(g, ptrs.data(), ptrs.size(), &r));
    Poly owned(r);
    emit(opt, json{{"result", format_poly(r)}});
    return 0;
}

int run_rho(const Options& opt) {
    require_exprs(opt, 1, 1, "rho needs exactly one polynomial");
    Session s = make_session(opt);
    std::vector<Poly> polys = parse_polys(s.get(), opt);
    dd_rho_parts* parts = nullptr;
    check(dd_poly_rho_components(polys.front().get(), &parts));
    RhoParts owned(parts);
    json comps = json::array();
    for (size_t i = 0; i < dd_rho_parts_count(parts); ++i) {
        int64_t rho = 0;
        dd_poly* p = nullptr;
        check(dd_rho_parts_get(parts, i, &rho, &p));
        Poly op(p);
        comps.push_back(json::array({rho, format_poly(p)}));
    }
    emit(opt, json{{"components", comps}});
    return 0;
}

int run_basis(const Options& opt) {
    require_exprs(opt, 0, 0, "basis takes no expressions");
    Session s = make_session(opt);
    dd_basis* b = nullptr;
    check(dd_nov_basis(s.get(), opt.weight, &b));
    Basis owned(b);
    json monos = json::array();
    for (size_t i = 0; i < dd_basis_count(b); ++i) {
        char* str = nullptr;
        check(dd_basis_get(b, i, &str));
        monos.push_back(take_string(str));
    }
    emit(opt, json{{"weight", opt.weight},
                   {"count", dd_basis_count(b)},
                   {"monomials", monos}});
    return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_exprs = true) {
    cmd->add_option("-n,--vars", opt.n, "number of variables")->required();
    cmd->add_option("-m,--derivations", opt.m, "number of derivations")
        ->default_val(1);
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    cmd->add_option("--max-ore-order", opt.max_ore_order,
                    "order cap for the common-multiple search")
        ->default_val(10);
    if (with_exprs) {
        cmd->add_option("exprs", opt.exprs, "expressions");
        cmd->add_option("--input", opt.input_path,
                        "read expressions from a file, one per line");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dependence decisions for differential polynomials "
                 "and free Novikov algebras"};
    app.require_subcommand(1);

    Options opt;
    int verb = -1;
    auto make = [&](const char* name, const char* desc, int id,
                    bool with_exprs = true) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        add_common(cmd, opt, with_exprs);
        cmd->callback([&verb, id] { verb = id; });
        return cmd;
    };

    CLI::App* dep = make("depcheck", "decide differential-algebraic dependence", 0);
    dep->add_option("--oracle", opt.oracle_order,
                    "prolongation cross-check order cap")->default_val(3);
    dep->add_flag("--with-oracle", opt.with_oracle,
                  "also run the commutative prolongation cross-check");
    CLI::App* nov = make("novcheck", "decide Novikov dependence", 1);
    nov->add_option("--oracle", opt.oracle_order,
                    "prolongation cross-check order cap")->default_val(3);
    nov->add_flag("--with-oracle", opt.with_oracle,
                  "also run the commutative prolongation cross-check");
    make("fox", "Fox gradient of a polynomial", 2);
    make("jacobian", "Jacobian matrix of a polynomial family", 3);
    make("orelcm", "common left multiple of two operators", 4);
    make("subst", "substitute polynomials into a polynomial", 5);
    make("rho", "decompose into rho-homogeneous components", 6);
    CLI::App* basis = make("basis", "Novikov basis monomials of one degree", 7,
                           false);
    basis->add_option("weight", opt.weight, "variable degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        load_inputs(opt);
        switch (verb) {
            case 0: return run_depcheck(opt);
            case 1: return run_novcheck(opt);
            case 2: return run_fox(opt);
            case 3: return run_jacobian(opt);
            case 4: return run_orelcm(opt);
            case 5: return run_subst(opt);
            case 6: return run_rho(opt);
            case 7: return run_basis(opt);
        }
        return 1;
    } catch (const CliFailure& f) {
        json err{{"error", {{"kind", status_kind(f.status)}, {"message", f.message}}}};
        if (opt.format == "json") {
            std::cout << err.dump() << "\n";
        } else {
            std::cerr << "error (" << status_kind(f.status) << "): "
                      << f.message << "\n";
        }
        if (f.status == DD_ERR_RESOURCE) return 3;
        if (f.status == DD_ERR_INTERNAL) return 1;
        return 2;
    }
}
