#include "heightlab/orbit.hpp"

#include <cctype>
#include <sstream>

namespace heightlab {

OrbitGenerator::OrbitGenerator(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {
    if (b <= 0) throw std::domain_error("OrbitGenerator: b must be positive");
    if (a < 0 || 2 * a > b) throw std::domain_error("OrbitGenerator: need 0 <= a/b <= 1/2");
    if (a == 0 && b != 1) throw std::domain_error("OrbitGenerator: a = 0 requires b = 1");
    if (gcd(a, b) != 1) throw std::domain_error("OrbitGenerator: a/b not reduced");
}

std::string OrbitGenerator::str() const {
    if (is_trivial()) return "[0]";
    return "[" + a.get_str() + "/" + b.get_str() + "]";
}

OrbitGenerator canonicalize(const Rational& q) {
    const Int b = q.den();
    Int a = q.num() % b;
    if (a < 0) a += b;            // fold into [0,1)
    if (2 * a > b) a = b - a;     // reflect into [0,1/2]
    if (a == 0) return OrbitGenerator(Int(0), Int(1));
    return OrbitGenerator(a, b);
}

Rational bernoulli2(const Rational& z) {
    if (z.sign() < 0 || z > Rational(1))
        throw std::domain_error("bernoulli2: argument outside [0,1]");
    return z * z - z + Rational(1, 6);
}

namespace {

// b * B((m*a mod b)/b), the single-generator lambda value.
Rational generator_lambda(const OrbitGenerator& g, long m) {
    Int r = (m * g.a) % g.b;
    if (r < 0) r += g.b;
    const Rational x(r, g.b);
    return Rational(g.b) * bernoulli2(x);
}

}  // namespace

void Gamma::add(const OrbitGenerator& g, long mult) {
    if (mult < 1) throw std::domain_error("Gamma: multiplicity must be >= 1");
    terms_[g] += mult;
}

Rational Gamma::lambda(long m) const {
    if (m < 1) throw std::domain_error("Gamma::lambda: m must be >= 1");
    Rational sum;
    for (const auto& [g, mult] : terms_) sum += Rational(mult) * generator_lambda(g, m);
    return sum;
}

Int Gamma::degree() const {
    Int d = 0;
    for (const auto& [g, mult] : terms_) d += mult * g.b;
    return d;
}

long Gamma::conductor_parts() const {
    long n = 0;
    for (const auto& [g, mult] : terms_) n += mult;
    return n;
}

Int Gamma::lambda_period() const {
    Int l = 1;
    for (const auto& [g, mult] : terms_) l = lcm(l, g.b);
    return l;
}

Gamma& Gamma::operator+=(const Gamma& o) {
    for (const auto& [g, mult] : o.terms_) terms_[g] += mult;
    return *this;
}

std::string Gamma::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, mult] : terms_) {
        if (!first) out << "+";
        first = false;
        if (mult != 1) out << mult;
        out << g.str();
    }
    return out.str();
}

namespace {

struct GammaLexer {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    void expect(char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c)
            throw std::invalid_argument(std::string("Gamma: expected '") + c + "'");
        ++i;
    }
    Int integer() {
        skip_ws();
        const size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("Gamma: expected integer");
        return Int(std::string(s.substr(start, i - start)));
    }
};

}  // namespace

Gamma Gamma::parse(std::string_view s) {
    Gamma g;
    GammaLexer lx{s};
    if (lx.eof()) throw std::invalid_argument("Gamma: empty string");
    while (true) {
        long mult = 1;
        if (lx.peek() != '[') {
            const Int m = lx.integer();
            if (m < 1 || !m.fits_slong_p())
                throw std::invalid_argument("Gamma: bad multiplicity");
            mult = m.get_si();
        }
        lx.expect('[');
        const Int a = lx.integer();
        if (lx.peek() == '/') {
            lx.expect('/');
            const Int b = lx.integer();
            g.add(OrbitGenerator(a, b), mult);
        } else {
            if (a != 0) throw std::invalid_argument("Gamma: integer orbit must be [0]");
            g.add(OrbitGenerator(Int(0), Int(1)), mult);
        }
        lx.expect(']');
        if (lx.eof()) break;
        lx.expect('+');
    }
    return g;
}

std::pair<Int, long> degree_and_conductor(const Gamma& g) {
    return {g.degree(), g.conductor_parts()};
}

}  // namespace heightlab
