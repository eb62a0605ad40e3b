#include "heightlab/rational.hpp"

#include <cctype>
#include <ostream>

namespace heightlab {

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Int Rational::ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::parse(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    const std::string t(s.substr(b, e - b));
    if (t.empty()) throw std::invalid_argument("Rational: empty string");
    const auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(t));
        const std::string ns = t.substr(0, slash);
        const std::string ds = t.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw std::invalid_argument("bad fraction");
        return Rational(Int(ns), Int(ds));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse \"" + t + "\"");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace heightlab
