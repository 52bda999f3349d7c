#include "parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "error.hpp"

namespace diffdep {

namespace {

enum class Tok {
    Number, Var, DSym, Prime, Plus, Minus, Star, Caret, At,
    LParen, RParen, LBracket, RBracket, Comma, End,
};

struct Token {
    Tok kind;
    std::string text;   // number literal
    uint32_t index = 0; // variable / derivation index, 0 = bare
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col_);
    }

    void advance() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r' ||
                src_[pos_] == '\n')) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        cur_.line = line_;
        cur_.col = col_;
        cur_.text.clear();
        cur_.index = 0;
        if (pos_ >= src_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = src_[pos_];
        switch (c) {
            case '+': cur_.kind = Tok::Plus; eat(); return;
            case '-': cur_.kind = Tok::Minus; eat(); return;
            case '*': cur_.kind = Tok::Star; eat(); return;
            case '^': cur_.kind = Tok::Caret; eat(); return;
            case '@': cur_.kind = Tok::At; eat(); return;
            case '(': cur_.kind = Tok::LParen; eat(); return;
            case ')': cur_.kind = Tok::RParen; eat(); return;
            case '[': cur_.kind = Tok::LBracket; eat(); return;
            case ']': cur_.kind = Tok::RBracket; eat(); return;
            case ',': cur_.kind = Tok::Comma; eat(); return;
            case '\'': cur_.kind = Tok::Prime; eat(); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur_.kind = Tok::Number;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                cur_.text += src_[pos_];
                eat();
            }
            // A '/' directly between digits is part of a rational literal.
            if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                cur_.text += '/';
                eat();
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    cur_.text += src_[pos_];
                    eat();
                }
            }
            return;
        }
        if (c == 'x' || c == 'D') {
            cur_.kind = c == 'x' ? Tok::Var : Tok::DSym;
            eat();
            uint32_t idx = 0;
            bool any = false;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                any = true;
                idx = idx * 10 + static_cast<uint32_t>(src_[pos_] - '0');
                eat();
            }
            cur_.index = any ? idx : 0;
            if (any && idx == 0) fail(std::string("index 0 after '") + c + "'");
            return;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    void eat() {
        ++pos_;
        ++col_;
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

// Grammar driver shared by the three value kinds; Policy supplies the
// semantic actions.
template <class Policy>
class Parser {
  public:
    using V = typename Policy::Value;

    Parser(std::string_view src, const Signature& sig, Policy pol)
        : lex_(src), sig_(sig), pol_(std::move(pol)) {}

    V run() {
        if (lex_.peek().kind == Tok::End)
            throw ParseError("empty expression", 1, 1);
        V v = parse_sum();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw ParseError("unexpected trailing input", t.line, t.col);
        return v;
    }

  private:
    V parse_sum() {
        V v = parse_product();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                v = pol_.add(std::move(v), parse_product());
            } else if (k == Tok::Minus) {
                lex_.take();
                v = pol_.sub(std::move(v), parse_product());
            } else {
                return v;
            }
        }
    }

    V parse_product() {
        V v = parse_circ();
        while (lex_.peek().kind == Tok::Star) {
            Token t = lex_.take();
            v = pol_.mul(std::move(v), parse_circ(), t);
        }
        return v;
    }

    V parse_circ() {
        V v = parse_unary();
        if (lex_.peek().kind != Tok::At) return v;
        Token t = lex_.take();
        if (!Policy::kAllowCirc)
            throw ParseError("the Novikov product '@' is not allowed here",
                             t.line, t.col);
        V r = parse_unary();
        const Token& nxt = lex_.peek();
        if (nxt.kind == Tok::At)
            throw ParseError(
                "'@' is non-associative; parenthesize the product explicitly",
                nxt.line, nxt.col);
        return pol_.circ(std::move(v), std::move(r), t);
    }

    V parse_unary() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            return pol_.neg(parse_unary());
        }
        return parse_postfix();
    }

    V parse_postfix() {
        V v = parse_primary();
        while (lex_.peek().kind == Tok::Caret) {
            Token t = lex_.take();
            Token e = lex_.peek();
            if (e.kind != Tok::Number || e.text.find('/') != std::string::npos)
                throw ParseError("'^' expects a nonnegative integer exponent",
                                 e.line, e.col);
            lex_.take();
            v = pol_.pow(std::move(v), std::stoull(e.text), t);
        }
        if (lex_.peek().kind == Tok::Prime) {
            const Token& t = lex_.peek();
            throw ParseError("primes may only follow a variable", t.line, t.col);
        }
        return v;
    }

    V parse_primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number:
                return pol_.number(Rational::from_string(t.text), t);
            case Tok::Var:
                return parse_var(t);
            case Tok::DSym: {
                if (t.index == 0)
                    throw ParseError("unknown symbol 'D'; use D1..Dm", t.line, t.col);
                if (t.index > sig_.num_derivations)
                    throw ParseError("derivation index out of range", t.line, t.col);
                return pol_.dsym(t.index, t);
            }
            case Tok::LParen: {
                V v = parse_sum();
                Token c = lex_.take();
                if (c.kind != Tok::RParen)
                    throw ParseError("expected ')'", c.line, c.col);
                return v;
            }
            default:
                throw ParseError("expected a value", t.line, t.col);
        }
    }

    V parse_var(const Token& t) {
        uint32_t index = t.index;
        if (index == 0) {
            if (sig_.num_vars != 1)
                throw ParseError("unknown variable 'x'; use x1..xN", t.line, t.col);
            index = 1;
        }
        if (index > sig_.num_vars)
            throw ParseError("variable index out of range", t.line, t.col);
        DerivOp theta(sig_.num_derivations);
        if (lex_.peek().kind == Tok::Prime) {
            if (sig_.num_derivations != 1) {
                const Token& p = lex_.peek();
                throw ParseError(
                    "primes need a single derivation; use x^[i1,...,im]",
                    p.line, p.col);
            }
            uint32_t count = 0;
            while (lex_.peek().kind == Tok::Prime) {
                lex_.take();
                ++count;
            }
            theta = DerivOp(std::vector<uint32_t>{count});
        } else if (lex_.peek().kind == Tok::Caret) {
            // Lookahead: '^[' is a derivative multi-index, '^int' a power.
            Lexer save = lex_;
            Token caret = lex_.take();
            if (lex_.peek().kind == Tok::LBracket) {
                lex_.take();
                std::vector<uint32_t> exps;
                while (true) {
                    Token e = lex_.take();
                    if (e.kind != Tok::Number || e.text.find('/') != std::string::npos)
                        throw ParseError("expected a nonnegative integer index",
                                         e.line, e.col);
                    exps.push_back(static_cast<uint32_t>(std::stoul(e.text)));
                    Token sep = lex_.take();
                    if (sep.kind == Tok::Comma) continue;
                    if (sep.kind == Tok::RBracket) break;
                    throw ParseError("expected ',' or ']'", sep.line, sep.col);
                }
                if (exps.size() != sig_.num_derivations)
                    throw ParseError("multi-index must list all derivations",
                                     caret.line, caret.col);
                theta = DerivOp(std::move(exps));
            } else {
                lex_ = save;  // plain power, handled by parse_postfix
            }
        }
        return pol_.var(DiffVar{index, std::move(theta)}, t);
    }

    Lexer lex_;
    Signature sig_;
    Policy pol_;
};

struct PolyPolicy {
    using Value = DiffPoly;
    static constexpr bool kAllowCirc = false;
    Signature sig;

    Value number(Rational c, const Token&) {
        return DiffPoly::constant(sig, std::move(c));
    }
    Value var(DiffVar v, const Token&) { return DiffPoly::from_var(sig, std::move(v)); }
    Value dsym(uint32_t, const Token& t) {
        throw ParseError("operator symbols are not allowed in a polynomial",
                         t.line, t.col);
    }
    Value add(Value a, Value b) { return a.add(b); }
    Value sub(Value a, Value b) { return a.sub(b); }
    Value neg(Value a) { return a.neg(); }
    Value mul(Value a, Value b, const Token&) { return a.mul(b); }
    Value pow(Value a, uint64_t e, const Token&) { return a.pow(e); }
    Value circ(Value, Value, const Token& t) {
        throw ParseError("internal: '@' unreachable", t.line, t.col);
    }
};

struct OrePolicy {
    using Value = OrePoly;
    static constexpr bool kAllowCirc = false;
    Signature sig;

    Value number(Rational c, const Token&) {
        return OrePoly::scalar(RatFunc::constant(sig, std::move(c)));
    }
    Value var(DiffVar v, const Token&) {
        return OrePoly::scalar_poly(DiffPoly::from_var(sig, std::move(v)));
    }
    Value dsym(uint32_t i, const Token&) { return OrePoly::delta(sig, i); }
    Value add(Value a, Value b) { return a.add(b); }
    Value sub(Value a, Value b) { return a.sub(b); }
    Value neg(Value a) { return a.neg(); }
    Value mul(Value a, Value b, const Token&) { return a.mul(b); }
    Value pow(Value a, uint64_t e, const Token&) { return a.pow(e); }
    Value circ(Value, Value, const Token& t) {
        throw ParseError("internal: '@' unreachable", t.line, t.col);
    }
};

struct NovPolicy {
    using Value = NovikovExpr;
    static constexpr bool kAllowCirc = true;
    Signature sig;

    Value number(Rational c, const Token&) { return NovikovExpr::scalar(std::move(c)); }
    Value var(DiffVar v, const Token& t) {
        if (!v.theta.is_identity())
            throw ParseError("derivatives are not Novikov expressions", t.line, t.col);
        return NovikovExpr::var(v.var);
    }
    Value dsym(uint32_t, const Token& t) {
        throw ParseError("operator symbols are not Novikov expressions",
                         t.line, t.col);
    }
    Value add(Value a, Value b) {
        return NovikovExpr::node(NovikovExpr::Kind::Add, std::move(a), std::move(b));
    }
    Value sub(Value a, Value b) {
        return NovikovExpr::node(NovikovExpr::Kind::Sub, std::move(a), std::move(b));
    }
    Value neg(Value a) { return NovikovExpr::neg(std::move(a)); }
    Value mul(Value a, Value b, const Token&) {
        return NovikovExpr::node(NovikovExpr::Kind::Mul, std::move(a), std::move(b));
    }
    Value pow(Value, uint64_t, const Token& t) {
        throw ParseError("'^' is not defined for Novikov expressions", t.line, t.col);
    }
    Value circ(Value a, Value b, const Token&) {
        return NovikovExpr::node(NovikovExpr::Kind::Circ, std::move(a), std::move(b));
    }
};

}  // namespace

DiffPoly parse_diffpoly(std::string_view src, const Signature& sig) {
    return Parser<PolyPolicy>(src, sig, PolyPolicy{sig}).run();
}

OrePoly parse_orepoly(std::string_view src, const Signature& sig) {
    return Parser<OrePolicy>(src, sig, OrePolicy{sig}).run();
}

NovikovExpr parse_novikov(std::string_view src, const Signature& sig) {
    if (sig.num_derivations != 1)
        throw Error(ErrKind::SignatureMismatch,
                    "Novikov expressions require exactly one derivation");
    return Parser<NovPolicy>(src, sig, NovPolicy{sig}).run();
}

}  // namespace diffdep
