#include "rational.hpp"

namespace diffdep {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrKind::Domain, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw Error(ErrKind::Parse, "malformed rational '" + s + "'");
    if (v.get_den() == 0)
        throw Error(ErrKind::Domain, "rational with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::inv() const {
    if (is_zero()) throw Error(ErrKind::Domain, "division by zero");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrKind::Domain, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::content_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), a.v_.get_num_mpz_t(), b.v_.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.v_.get_den_mpz_t(), b.v_.get_den_mpz_t());
    mpq_class g(num, den);
    g.canonicalize();
    return Rational(std::move(g));
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

}  // namespace diffdep
