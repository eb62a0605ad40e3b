#include "heightlab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heightlab {

namespace {

// ----- univariate integer polynomials (ascending coefficients, no
// trailing zeros, empty = zero); the workhorse behind gcd and
// squarefree decomposition -----

using ZPoly = std::vector<Int>;

void z_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int z_content(const ZPoly& p) {
    Int g = 0;
    for (const Int& c : p) g = gcd(g, c);
    return g;
}

ZPoly z_primitive(ZPoly p) {
    z_trim(p);
    if (p.empty()) return p;
    Int g = z_content(p);
    if (sgn(p.back()) < 0) g = -g;
    for (Int& c : p) c /= g;
    return p;
}

ZPoly z_derivative(const ZPoly& p) {
    ZPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Int(static_cast<long>(i)) * p[i]);
    z_trim(d);
    return d;
}

// Pseudo-remainder of a by b (b nonzero): lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly z_prem(ZPoly a, const ZPoly& b) {
    const size_t db = b.size() - 1;
    const Int& lb = b.back();
    while (a.size() >= b.size()) {
        const size_t da = a.size() - 1;
        const Int head = a.back();
        for (size_t i = 0; i < a.size(); ++i) a[i] *= lb;
        for (size_t i = 0; i <= db; ++i) a[da - db + i] -= head * b[i];
        z_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Primitive polynomial gcd via the primitive pseudo-remainder sequence.
ZPoly z_gcd(ZPoly a, ZPoly b) {
    a = z_primitive(std::move(a));
    b = z_primitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = z_prem(a, b);
        a = std::move(b);
        b = z_primitive(std::move(r));
    }
    return a;
}

// Exact division of primitive-context integer polynomials; throws when
// the division leaves a remainder or fractional coefficients.
ZPoly z_div_exact(ZPoly a, const ZPoly& b) {
    if (b.empty()) throw std::domain_error("poly: division by zero");
    ZPoly q;
    if (a.empty()) return q;
    if (a.size() < b.size()) throw std::domain_error("poly: inexact division");
    q.assign(a.size() - b.size() + 1, Int(0));
    const Int& lb = b.back();
    for (size_t k = q.size(); k-- > 0;) {
        const Int& head = a[k + b.size() - 1];
        if (head % lb != 0) throw std::domain_error("poly: inexact division");
        const Int c = head / lb;
        q[k] = c;
        if (sgn(c) != 0)
            for (size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
    }
    z_trim(a);
    if (!a.empty()) throw std::domain_error("poly: inexact division");
    return q;
}

bool z_divides(const ZPoly& b, const ZPoly& a) {
    if (a.empty()) return true;
    if (b.empty()) return false;
    try {
        z_div_exact(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// Yun's characteristic-zero squarefree decomposition of a primitive,
// nonconstant polynomial: returns multiplicity -> primitive factor.
std::map<int, ZPoly> z_squarefree(const ZPoly& f) {
    std::map<int, ZPoly> out;
    const ZPoly fp = z_derivative(f);
    ZPoly g = z_gcd(f, fp);
    if (g.size() == 1) {
        out[1] = f;
        return out;
    }
    ZPoly c = z_div_exact(f, g);
    // d = f'/g - c'; all divisions below are exact over the rationals and
    // stay integral because every operand is primitive-scaled afterwards.
    ZPoly d = z_div_exact(fp, g);
    {
        const ZPoly cp = z_derivative(c);
        if (d.size() < cp.size()) d.resize(cp.size(), Int(0));
        for (size_t i = 0; i < cp.size(); ++i) d[i] -= cp[i];
        z_trim(d);
    }
    for (int i = 1; c.size() > 1; ++i) {
        ZPoly h = z_gcd(c, d);
        if (h.size() > 1) out[i] = h;
        c = z_div_exact(c, h);
        ZPoly t = z_div_exact(d, h);
        const ZPoly cp = z_derivative(c);
        if (t.size() < cp.size()) t.resize(cp.size(), Int(0));
        for (size_t i2 = 0; i2 < cp.size(); ++i2) t[i2] -= cp[i2];
        z_trim(t);
        d = std::move(t);
    }
    return out;
}

}  // namespace

// ----- HomogeneousPoly -----

HomogeneousPoly::HomogeneousPoly(int degree, std::vector<Rational> coeffs) {
    if (degree < 0) throw std::domain_error("HomogeneousPoly: negative degree");
    if (coeffs.size() != static_cast<size_t>(degree) + 1)
        throw std::domain_error("HomogeneousPoly: need degree+1 coefficients");
    bool all_zero = true;
    for (const auto& c : coeffs)
        if (!c.is_zero()) all_zero = false;
    if (!all_zero) coeffs_ = std::move(coeffs);
}

HomogeneousPoly HomogeneousPoly::constant(const Rational& c) {
    return HomogeneousPoly(0, {c});
}

HomogeneousPoly HomogeneousPoly::monomial(int degree, int i, const Rational& c) {
    if (i < 0 || i > degree) throw std::domain_error("HomogeneousPoly: monomial index");
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1);
    coeffs[static_cast<size_t>(i)] = c;
    return HomogeneousPoly(degree, std::move(coeffs));
}

int HomogeneousPoly::degree() const {
    if (is_zero()) throw std::domain_error("HomogeneousPoly: zero polynomial has no degree");
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& HomogeneousPoly::coeff(int i) const {
    static const Rational kZero(0);
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

int HomogeneousPoly::valuation_at_s() const {
    if (is_zero()) throw std::domain_error("valuation of zero polynomial");
    int i = 0;
    while (coeffs_[static_cast<size_t>(i)].is_zero()) ++i;
    return i;
}

int HomogeneousPoly::valuation_at_s_infinity() const {
    if (is_zero()) throw std::domain_error("valuation of zero polynomial");
    int i = degree();
    while (coeffs_[static_cast<size_t>(i)].is_zero()) --i;
    return degree() - i;
}

HomogeneousPoly HomogeneousPoly::operator-() const {
    HomogeneousPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

HomogeneousPoly operator+(const HomogeneousPoly& p, const HomogeneousPoly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    if (p.degree() != q.degree())
        throw std::domain_error("HomogeneousPoly: degree mismatch in addition");
    std::vector<Rational> c(p.coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += q.coeffs_[i];
    return HomogeneousPoly(p.degree(), std::move(c));
}

HomogeneousPoly operator-(const HomogeneousPoly& p, const HomogeneousPoly& q) {
    return p + (-q);
}

HomogeneousPoly operator*(const HomogeneousPoly& p, const HomogeneousPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> c(static_cast<size_t>(p.degree() + q.degree()) + 1);
    for (size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return HomogeneousPoly(p.degree() + q.degree(), std::move(c));
}

HomogeneousPoly operator*(const Rational& c, const HomogeneousPoly& p) {
    if (c.is_zero() || p.is_zero()) return {};
    std::vector<Rational> r(p.coeffs_);
    for (auto& x : r) x *= c;
    return HomogeneousPoly(p.degree(), std::move(r));
}

Rational HomogeneousPoly::content() const {
    if (is_zero()) return Rational(0);
    // content = gcd(numerators) / lcm(denominators), signed by the
    // leading (highest s-power) coefficient.
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        num_gcd = gcd(num_gcd, c.num());
        den_lcm = lcm(den_lcm, c.den());
    }
    Rational content(num_gcd, den_lcm);
    int lead = static_cast<int>(coeffs_.size()) - 1;
    while (coeffs_[static_cast<size_t>(lead)].is_zero()) --lead;
    if (coeffs_[static_cast<size_t>(lead)].sign() < 0) content = -content;
    return content;
}

HomogeneousPoly HomogeneousPoly::normalized() const {
    if (is_zero()) return {};
    const Rational c = content();
    HomogeneousPoly r = *this;
    for (auto& x : r.coeffs_) x /= c;
    return r;
}

bool HomogeneousPoly::is_normalized() const {
    return !is_zero() && content() == Rational(1);
}

std::string HomogeneousPoly::str(std::string_view var1, std::string_view var2) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const int d = degree();
    for (int i = d; i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational abs = neg ? -c : c;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? '-' : '+');
        }
        const int j = d - i;  // power of var2
        const bool unit = abs == Rational(1);
        const bool has_vars = i > 0 || j > 0;
        if (!unit || !has_vars) {
            out << abs.str();
            if (has_vars) out << '*';
        }
        if (i > 0) {
            out << var1;
            if (i > 1) out << '^' << i;
            if (j > 0) out << '*';
        }
        if (j > 0) {
            out << var2;
            if (j > 1) out << '^' << j;
        }
    }
    return out.str();
}

// ----- gcd / division / squarefree via the univariate view -----

namespace {

// Writes p = content * s'^k * hom(u) with u primitive integer univariate
// in T = s/s' (ascending), deg u = p.degree() - k - valuation spillover
// handled by u's own trailing structure.
struct UnivariateView {
    Rational content;
    int sp_power = 0;  // exponent of s'
    ZPoly u;           // primitive, nonzero unless p = 0
};

UnivariateView to_univariate(const HomogeneousPoly& p) {
    UnivariateView v;
    if (p.is_zero()) return v;
    v.content = p.content();
    const HomogeneousPoly n = p.normalized();
    v.sp_power = n.valuation_at_s_infinity();
    const int top = n.degree() - v.sp_power;
    ZPoly u;
    for (int i = 0; i <= top; ++i) {
        const Rational& c = n.coeff(i);
        u.push_back(c.num());  // normalized => integer coefficients
    }
    v.u = std::move(u);
    return v;
}

HomogeneousPoly from_univariate(const ZPoly& u, int sp_power) {
    const int d = static_cast<int>(u.size()) - 1 + sp_power;
    std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
    for (size_t i = 0; i < u.size(); ++i) coeffs[i] = Rational(u[i]);
    return HomogeneousPoly(d, std::move(coeffs));
}

}  // namespace

HomogeneousPoly poly_gcd(const HomogeneousPoly& p, const HomogeneousPoly& q) {
    if (p.is_zero()) return q.is_zero() ? HomogeneousPoly() : q.normalized();
    if (q.is_zero()) return p.normalized();
    const UnivariateView vp = to_univariate(p);
    const UnivariateView vq = to_univariate(q);
    const ZPoly g = z_gcd(vp.u, vq.u);
    return from_univariate(g, std::min(vp.sp_power, vq.sp_power));
}

std::optional<HomogeneousPoly> try_divide(const HomogeneousPoly& p, const HomogeneousPoly& q) {
    if (q.is_zero()) throw std::domain_error("poly: division by zero");
    if (p.is_zero()) return HomogeneousPoly();
    if (p.degree() < q.degree()) return std::nullopt;
    const UnivariateView vp = to_univariate(p);
    const UnivariateView vq = to_univariate(q);
    if (vp.sp_power < vq.sp_power) return std::nullopt;
    if (!z_divides(vq.u, vp.u)) return std::nullopt;
    // Both views are primitive, so the integer quotient is exact and the
    // contents recombine as a scalar.
    const ZPoly qt = z_div_exact(vp.u, vq.u);
    return (vp.content / vq.content) * from_univariate(qt, vp.sp_power - vq.sp_power);
}

HomogeneousPoly divide_exact(const HomogeneousPoly& p, const HomogeneousPoly& q) {
    auto r = try_divide(p, q);
    if (!r) throw std::domain_error("poly: inexact division");
    return *r;
}

std::map<int, HomogeneousPoly> squarefree_decomposition(const HomogeneousPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::map<int, HomogeneousPoly> out;
    const UnivariateView v = to_univariate(p);
    if (v.u.size() > 1) {
        for (auto& [mult, factor] : z_squarefree(v.u))
            out[mult] = from_univariate(factor, 0);
    }
    if (v.sp_power > 0) {
        const HomogeneousPoly sp = HomogeneousPoly::monomial(1, 0);
        auto it = out.find(v.sp_power);
        if (it == out.end())
            out[v.sp_power] = sp;
        else
            it->second = it->second * sp;
    }
    return out;
}

}  // namespace heightlab
