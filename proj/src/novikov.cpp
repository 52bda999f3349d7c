#include "novikov.hpp"

#include <algorithm>

#include "error.hpp"

namespace diffdep {

namespace {

void require_ordinary(const Signature& sig) {
    if (sig.num_derivations != 1)
        throw Error(ErrKind::SignatureMismatch,
                    "Novikov algebra requires exactly one derivation");
}

void require_body(const DiffPoly& body) {
    for (const auto& [u, c] : body.terms()) {
        if (u.rho() != 1)
            throw Error(ErrKind::Internal,
                        "Novikov body left the rho = 1 span: " + u.str(1));
    }
}

}  // namespace

NovikovElement::NovikovElement(Rational scalar, DiffPoly body)
    : scalar_(std::move(scalar)), body_(std::move(body)) {
    require_ordinary(body_.sig());
    require_body(body_);
}

NovikovElement NovikovElement::variable(Signature sig, uint32_t var) {
    return NovikovElement(Rational(0), DiffPoly::variable(sig, var));
}

NovikovElement NovikovElement::constant(Signature sig, Rational c) {
    require_ordinary(sig);
    return NovikovElement(std::move(c), DiffPoly::zero(sig));
}

NovikovElement NovikovElement::add(const NovikovElement& o) const {
    return NovikovElement(scalar_ + o.scalar_, body_.add(o.body_));
}

NovikovElement NovikovElement::sub(const NovikovElement& o) const {
    return NovikovElement(scalar_ - o.scalar_, body_.sub(o.body_));
}

NovikovElement NovikovElement::neg() const {
    return NovikovElement(-scalar_, body_.neg());
}

NovikovElement NovikovElement::scale(const Rational& c) const {
    return NovikovElement(scalar_ * c, body_.scale(c));
}

NovikovElement nov_product(const NovikovElement& f, const NovikovElement& g) {
    require_same(f.sig(), g.sig());
    // (a + f0) o (b + g0) = ab + a g0 + b f0 + f0 * g0'
    DiffPoly body = f.body().mul(g.body().derive(1));
    body = body.add(g.body().scale(f.scalar()));
    body = body.add(f.body().scale(g.scalar()));
    return NovikovElement(f.scalar() * g.scalar(), std::move(body));
}

NovikovExpr NovikovExpr::scalar(Rational c) {
    NovikovExpr e;
    e.kind_ = Kind::Scalar;
    e.value_ = std::move(c);
    return e;
}

NovikovExpr NovikovExpr::var(uint32_t index) {
    NovikovExpr e;
    e.kind_ = Kind::Var;
    e.var_ = index;
    return e;
}

NovikovExpr NovikovExpr::node(Kind k, NovikovExpr lhs, NovikovExpr rhs) {
    NovikovExpr e;
    e.kind_ = k;
    e.lhs_ = std::make_unique<NovikovExpr>(std::move(lhs));
    e.rhs_ = std::make_unique<NovikovExpr>(std::move(rhs));
    return e;
}

NovikovExpr NovikovExpr::neg(NovikovExpr operand) {
    NovikovExpr e;
    e.kind_ = Kind::Neg;
    e.lhs_ = std::make_unique<NovikovExpr>(std::move(operand));
    return e;
}

NovikovExpr& NovikovExpr::operator=(const NovikovExpr& o) {
    if (this == &o) return *this;
    kind_ = o.kind_;
    value_ = o.value_;
    var_ = o.var_;
    lhs_ = o.lhs_ ? std::make_unique<NovikovExpr>(*o.lhs_) : nullptr;
    rhs_ = o.rhs_ ? std::make_unique<NovikovExpr>(*o.rhs_) : nullptr;
    return *this;
}

bool operator==(const NovikovExpr& a, const NovikovExpr& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case NovikovExpr::Kind::Scalar: return a.value_ == b.value_;
        case NovikovExpr::Kind::Var: return a.var_ == b.var_;
        case NovikovExpr::Kind::Neg: return *a.lhs_ == *b.lhs_;
        default: return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
    }
}

std::string NovikovExpr::str() const {
    auto wrap = [](const NovikovExpr& e) {
        std::string s = e.str();
        if (e.kind() == Kind::Scalar || e.kind() == Kind::Var) return s;
        return "(" + s + ")";
    };
    switch (kind_) {
        case Kind::Scalar: return value_.str();
        case Kind::Var: return "x" + std::to_string(var_);
        case Kind::Neg: return "-" + wrap(*lhs_);
        case Kind::Add: return lhs_->str() + " + " + rhs_->str();
        case Kind::Sub: return lhs_->str() + " - " + wrap(*rhs_);
        case Kind::Mul: return wrap(*lhs_) + "*" + wrap(*rhs_);
        case Kind::Circ: return wrap(*lhs_) + "@" + wrap(*rhs_);
    }
    return "";
}

NovikovElement embed(const NovikovExpr& e, Signature sig) {
    require_ordinary(sig);
    switch (e.kind()) {
        case NovikovExpr::Kind::Scalar:
            return NovikovElement::constant(sig, e.value());
        case NovikovExpr::Kind::Var:
            return NovikovElement::variable(sig, e.var_index());
        case NovikovExpr::Kind::Neg:
            return embed(e.lhs(), sig).neg();
        case NovikovExpr::Kind::Add:
            return embed(e.lhs(), sig).add(embed(e.rhs(), sig));
        case NovikovExpr::Kind::Sub:
            return embed(e.lhs(), sig).sub(embed(e.rhs(), sig));
        case NovikovExpr::Kind::Mul: {
            NovikovElement l = embed(e.lhs(), sig), r = embed(e.rhs(), sig);
            if (l.body().is_zero()) return r.scale(l.scalar());
            if (r.body().is_zero()) return l.scale(r.scalar());
            throw Error(ErrKind::Domain,
                        "'*' in a Novikov expression needs a scalar operand; "
                        "use '@' for the algebra product");
        }
        case NovikovExpr::Kind::Circ:
            return nov_product(embed(e.lhs(), sig), embed(e.rhs(), sig));
    }
    throw Error(ErrKind::Internal, "unreachable expression kind");
}

std::vector<DiffMonomial> nov_basis(uint32_t n, uint32_t w) {
    if (n < 1 || w < 1)
        throw Error(ErrKind::InvalidArgument, "basis needs n >= 1 and weight >= 1");
    // Multisets of w factors x_i^(r) with total derivative order w - 1.
    std::vector<DiffMonomial> out;
    std::vector<DiffVar> stack;
    // Factors are chosen in descending DiffVar order to keep monomials canonical.
    auto rec = [&](auto&& self, uint32_t remaining_deg, uint32_t remaining_wt,
                   std::optional<DiffVar> bound) -> void {
        if (remaining_deg == 0) {
            if (remaining_wt != 0) return;
            DiffMonomial u;
            for (const auto& v : stack) u = u.times(DiffMonomial::var(v));
            out.push_back(std::move(u));
            return;
        }
        for (uint32_t var = n; var >= 1; --var) {
            for (uint32_t r = remaining_wt + 1; r-- > 0;) {
                DiffVar v{var, DerivOp(std::vector<uint32_t>{r})};
                if (bound && DiffVar::cmp(v, *bound) > 0) continue;
                stack.push_back(v);
                self(self, remaining_deg - 1, remaining_wt - r, v);
                stack.pop_back();
            }
        }
    };
    rec(rec, w, w - 1, std::nullopt);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_in_N0(const DiffPoly& f) {
    require_ordinary(f.sig());
    for (const auto& [u, c] : f.terms())
        if (u.rho() != 1) return false;
    return true;
}

DependenceVerdict novikov_dependent(const std::vector<NovikovElement>& es,
                                    uint32_t max_ore_order) {
    if (es.empty())
        throw Error(ErrKind::InvalidArgument, "dependence of an empty family");
    std::vector<DiffPoly> bodies;
    bodies.reserve(es.size());
    for (const auto& e : es) bodies.push_back(e.body());
    return diff_alg_dependent(bodies, max_ore_order);
}

DiffPoly witness_transform(const DiffPoly& u, WitnessMode mode) {
    require_ordinary(u.sig());
    if (u.is_zero())
        throw Error(ErrKind::Domain, "witness transform of the zero polynomial");
    Degrees d = u.degrees();
    if (!d.rho)
        throw Error(ErrKind::Domain, "witness transform needs a rho-homogeneous input");
    int64_t s = *d.rho;
    if (s == 1)
        throw Error(ErrKind::Domain, "witness already lies in the rho = 1 span");
    if (mode == WitnessMode::Differentiate) {
        if (s < 1)
            throw Error(ErrKind::Domain, "differentiate mode requires rho > 1");
        DiffPoly w = u;
        for (int64_t k = 0; k < s - 1; ++k) w = w.derive(1);
        return w;
    }
    if (s > 1)
        throw Error(ErrKind::Domain, "multiply mode requires rho < 1");
    uint64_t e = static_cast<uint64_t>(-s) + 1;
    return u.mul(DiffPoly::variable(u.sig(), 1).pow(e));
}

}  // namespace diffdep
