#include "heightlab/curve.hpp"

#include <json.hpp>

namespace heightlab {

namespace {

using Json = nlohmann::ordered_json;

void require_degree(const HomogeneousPoly& p, long degree, const char* name) {
    if (p.is_zero()) return;
    if (p.degree() != degree)
        throw CurveError(CurveError::Kind::BadInput,
                         std::string("curve: ") + name + " must be homogeneous of degree " +
                             std::to_string(degree));
}

// Places where v(c4) >= 4 and v(c6) >= 6 simultaneously would admit a
// smaller model; a minimal model has none.
bool minimality_violated(const HomogeneousPoly& c4, const HomogeneousPoly& c6) {
    const HomogeneousPoly one = HomogeneousPoly::constant(Rational(1));
    auto deep_part = [&](const HomogeneousPoly& p, int threshold) {
        HomogeneousPoly prod = one;
        for (const auto& [mult, factor] : squarefree_decomposition(p))
            if (mult >= threshold) prod = prod * factor;
        return prod;
    };
    if (c4.is_zero()) return deep_part(c6, 6).degree() > 0;
    if (c6.is_zero()) return deep_part(c4, 4).degree() > 0;
    return poly_gcd(deep_part(c4, 4), deep_part(c6, 6)).degree() > 0;
}

GradedFraction lift(const HomogeneousPoly& p) { return GradedFraction::from_poly(p); }
GradedFraction lift(const Rational& c) {
    return GradedFraction::from_poly(HomogeneousPoly::constant(c));
}

}  // namespace

FFCurve FFCurve::from_coeffs(long n, HomogeneousPoly a1, HomogeneousPoly a2, HomogeneousPoly a3,
                             HomogeneousPoly a4, HomogeneousPoly a6) {
    if (n < 1) throw CurveError(CurveError::Kind::BadInput, "curve: n must be >= 1");
    require_degree(a1, n, "a1");
    require_degree(a2, 2 * n, "a2");
    require_degree(a3, 3 * n, "a3");
    require_degree(a4, 4 * n, "a4");
    require_degree(a6, 6 * n, "a6");

    FFCurve e;
    e.n_ = n;
    e.a1_ = std::move(a1);
    e.a2_ = std::move(a2);
    e.a3_ = std::move(a3);
    e.a4_ = std::move(a4);
    e.a6_ = std::move(a6);

    const Rational two(2), four(4), quarter(1, 4);
    e.b2_ = e.a1_ * e.a1_ + four * e.a2_;
    e.b4_ = two * e.a4_ + e.a1_ * e.a3_;
    e.b6_ = e.a3_ * e.a3_ + four * e.a6_;
    e.b8_ = quarter * (e.b2_ * e.b6_ - e.b4_ * e.b4_);
    e.c4_ = e.b2_ * e.b2_ - Rational(24) * e.b4_;
    e.c6_ = -(e.b2_ * e.b2_ * e.b2_) + Rational(36) * (e.b2_ * e.b4_) - Rational(216) * e.b6_;
    e.disc_ = -(e.b2_ * e.b2_ * e.b8_) - Rational(8) * (e.b4_ * e.b4_ * e.b4_) -
              Rational(27) * (e.b6_ * e.b6_) + Rational(9) * (e.b2_ * e.b4_ * e.b6_);

    if (e.disc_.is_zero())
        throw CurveError(CurveError::Kind::Degenerate, "curve: discriminant vanishes");
    if (e.disc_.degree() != 12 * n)
        throw CurveError(CurveError::Kind::BadInput, "curve: discriminant degree is not 12n");
    // 1728 * disc = c4^3 - c6^2 is forced by the construction; keep it as
    // an internal consistency guard.
    if (!(Rational(1728) * e.disc_ == e.c4_ * e.c4_ * e.c4_ - e.c6_ * e.c6_))
        throw std::logic_error("curve: b/c invariant identity failed");
    if (minimality_violated(e.c4_, e.c6_))
        throw CurveError(CurveError::Kind::NonMinimal,
                         "curve: model is not minimal (c4, c6 vanish to orders >= 4, 6)");
    return e;
}

FFPoint FFPoint::affine(GradedFraction x, GradedFraction y) {
    FFPoint p;
    p.zero_ = false;
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    return p;
}

const GradedFraction& FFPoint::x() const {
    if (zero_) throw std::domain_error("FFPoint: zero point has no coordinates");
    return x_;
}

const GradedFraction& FFPoint::y() const {
    if (zero_) throw std::domain_error("FFPoint: zero point has no coordinates");
    return y_;
}

bool on_curve(const FFCurve& e, const FFPoint& p) {
    if (p.is_zero()) return true;
    const GradedFraction& x = p.x();
    const GradedFraction& y = p.y();
    if (!x.is_zero() && x.degree() != 2 * e.n()) return false;
    if (!y.is_zero() && y.degree() != 3 * e.n()) return false;
    const GradedFraction lhs = y * y + lift(e.a1()) * x * y + lift(e.a3()) * y;
    const GradedFraction rhs =
        x * x * x + lift(e.a2()) * x * x + lift(e.a4()) * x + lift(e.a6());
    return lhs == rhs;
}

FFPoint point_negate(const FFCurve& e, const FFPoint& p) {
    if (p.is_zero()) return p;
    return FFPoint::affine(p.x(), -p.y() - lift(e.a1()) * p.x() - lift(e.a3()));
}

FFPoint point_add(const FFCurve& e, const FFPoint& p, const FFPoint& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    const GradedFraction &xp = p.x(), &yp = p.y(), &xq = q.x(), &yq = q.y();

    GradedFraction slope;
    if (xp == xq) {
        const GradedFraction neg_yq = -yq - lift(e.a1()) * xq - lift(e.a3());
        if (yp == neg_yq) return FFPoint::zero();
        // q == p: tangent line.
        const GradedFraction den = lift(Rational(2)) * yp + lift(e.a1()) * xp + lift(e.a3());
        const GradedFraction num = lift(Rational(3)) * xp * xp +
                                   lift(Rational(2)) * (lift(e.a2()) * xp) + lift(e.a4()) -
                                   lift(e.a1()) * yp;
        slope = num / den;
    } else {
        slope = (yq - yp) / (xq - xp);
    }
    const GradedFraction nu = yp - slope * xp;
    const GradedFraction x3 = slope * slope + lift(e.a1()) * slope - lift(e.a2()) - xp - xq;
    const GradedFraction y3 = -(slope + lift(e.a1())) * x3 - nu - lift(e.a3());
    return FFPoint::affine(x3, y3);
}

FFPoint scalar_mul(const FFCurve& e, const FFPoint& p, long m) {
    if (m == 0 || p.is_zero()) return FFPoint::zero();
    if (m < 0) return point_negate(e, scalar_mul(e, p, -m));
    FFPoint acc = FFPoint::zero();
    FFPoint base = p;
    for (unsigned long bits = static_cast<unsigned long>(m); bits; bits >>= 1) {
        if (bits & 1) acc = point_add(e, acc, base);
        if (bits >> 1) base = point_add(e, base, base);
    }
    return acc;
}

long naive_height(const FFCurve& e, const FFPoint& p) {
    if (p.is_zero()) throw std::domain_error("naive_height: zero point");
    const HomogeneousPoly& xden = p.x().den();
    const HomogeneousPoly& yden = p.y().den();
    HomogeneousPoly zeta = HomogeneousPoly::constant(Rational(1));
    if (xden.degree() > 0) {
        for (const auto& [mult, factor] : squarefree_decomposition(xden)) {
            if (mult % 2 != 0)
                throw CurveError(CurveError::Kind::NonMinimal,
                                 "naive_height: x denominator is not a square");
            for (int i = 0; i < mult / 2; ++i) zeta = zeta * factor;
        }
    }
    if (!(yden == zeta * zeta * zeta))
        throw CurveError(CurveError::Kind::NonMinimal,
                         "naive_height: y denominator is not zeta^3");
    return xden.degree();
}

bool is_integral(const FFCurve& e, const FFPoint& p) { return naive_height(e, p) == 0; }

FFPoint CurveTransform::map(const FFPoint& p) const {
    if (p.is_zero()) return p;
    const GradedFraction x = p.x(), y = p.y();
    const GradedFraction d2 = lift(delta * delta), d3 = lift(delta * delta * delta);
    return FFPoint::affine(d2 * (x + lift(alpha2)),
                           d3 * (y + lift(alpha1) * x + lift(alpha3)));
}

std::pair<FFCurve, CurveTransform> transform_curve(const FFCurve& e, const Rational& delta,
                                                   const HomogeneousPoly& alpha1,
                                                   const HomogeneousPoly& alpha2,
                                                   const HomogeneousPoly& alpha3) {
    if (delta.is_zero()) throw CurveError(CurveError::Kind::BadInput, "transform: delta = 0");
    const long n = e.n();
    require_degree(alpha1, n, "alpha1");
    require_degree(alpha2, 2 * n, "alpha2");
    require_degree(alpha3, 3 * n, "alpha3");

    // In Weierstrass change-of-variable terms the map X -> d^2(X+alpha2),
    // Y -> d^3(Y + alpha1 X + alpha3) is u = 1/delta, r = -alpha2,
    // s = -alpha1, t = alpha1*alpha2 - alpha3.
    const HomogeneousPoly& a1 = e.a1();
    const HomogeneousPoly& a2 = e.a2();
    const HomogeneousPoly& a3 = e.a3();
    const HomogeneousPoly& a4 = e.a4();
    const HomogeneousPoly& a6 = e.a6();
    const HomogeneousPoly t = alpha1 * alpha2 - alpha3;

    const Rational d2 = delta * delta;
    const Rational d3 = d2 * delta;
    const Rational d4 = d2 * d2;
    const Rational d6 = d4 * d2;

    HomogeneousPoly n1 = a1 - Rational(2) * alpha1;
    HomogeneousPoly n2 = a2 + alpha1 * a1 - Rational(3) * alpha2 - alpha1 * alpha1;
    HomogeneousPoly n3 = a3 - alpha2 * a1 + Rational(2) * t;
    HomogeneousPoly n4 = a4 + alpha1 * a3 - Rational(2) * (alpha2 * a2) -
                         (Rational(2) * (alpha1 * alpha2) - alpha3) * a1 +
                         Rational(3) * (alpha2 * alpha2) +
                         Rational(2) * (alpha1 * t);
    HomogeneousPoly n6 = a6 - alpha2 * a4 + alpha2 * alpha2 * a2 - alpha2 * alpha2 * alpha2 -
                         t * a3 - t * t + alpha2 * t * a1;

    FFCurve out = FFCurve::from_coeffs(n, delta * n1, d2 * n2, d3 * n3, d4 * n4, d6 * n6);

    // The discriminant scales by delta^12; degree and integral points are
    // untouched.
    Rational d12 = d6 * d6;
    if (!(out.discriminant() == d12 * e.discriminant()))
        throw std::logic_error("transform: discriminant scaling failed");
    return {out, CurveTransform{delta, alpha1, alpha2, alpha3}};
}

namespace {

// Homogeneous linear form c1*v + c0*v' of degree 1.
HomogeneousPoly linear(const Rational& c1, const Rational& c0) {
    return HomogeneousPoly(1, {c0, c1});
}

}  // namespace

FamilyName parse_family_name(const std::string& name) {
    if (name == "e1") return FamilyName::E1;
    if (name == "e2") return FamilyName::E2;
    if (name == "e3") return FamilyName::E3;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name_str(FamilyName f) {
    switch (f) {
        case FamilyName::E1: return "e1";
        case FamilyName::E2: return "e2";
        case FamilyName::E3: return "e3";
    }
    return "?";
}

std::pair<FFCurve, FFPoint> family(FamilyName which, const Rational& param) {
    if (param.is_zero() || param == Rational(1))
        throw CurveError(CurveError::Kind::BadInput,
                         "family: parameter 0 and 1 are excluded");
    const HomogeneousPoly zero;
    const HomogeneousPoly v = linear(Rational(1), Rational(0));    // s
    const HomogeneousPoly vp = linear(Rational(0), Rational(1));   // s'
    FFCurve curve = [&] {
        switch (which) {
            case FamilyName::E1: {
                const Rational& q = param;
                const HomogeneousPoly a1 = linear(-(q + Rational(1)), Rational(1));
                const HomogeneousPoly a2 = -Rational(1) * (q * (v * vp));
                const HomogeneousPoly a3 = q * (v * vp * (v - vp));
                return FFCurve::from_coeffs(1, a1, a2, a3, zero, zero);
            }
            case FamilyName::E2: {
                const Rational& u = param;
                const HomogeneousPoly a1 =
                    HomogeneousPoly(2, {Rational(-1), u - Rational(2), Rational(1)});
                const HomogeneousPoly rr1 = v + vp;                      // r + r'
                const HomogeneousPoly rru = v + u * vp;                  // r + u r'
                const HomogeneousPoly rru1 = v + (u - Rational(1)) * vp; // r + (u-1) r'
                const HomogeneousPoly a2 = -Rational(1) * (v * vp * rr1 * rru);
                const HomogeneousPoly a3 = -Rational(1) * (v * v * vp * rr1 * rru * rru1);
                return FFCurve::from_coeffs(2, a1, a2, a3, zero, zero);
            }
            case FamilyName::E3: {
                const Rational& a = param;
                const HomogeneousPoly a1 = HomogeneousPoly(
                    3, {Rational(-1), -(a + Rational(1)), Rational(1) - Rational(2) * a, a});
                const HomogeneousPoly tt1 = v + vp;                      // t + t'
                const HomogeneousPoly att = a * v + vp;                  // A t + t'
                const HomogeneousPoly att1 =
                    HomogeneousPoly(1, {Rational(1) - a, a});            // A t + (1-A) t'
                const HomogeneousPoly quad =
                    HomogeneousPoly(2, {Rational(1), Rational(1), a});   // A t^2 + t t' + t'^2
                const HomogeneousPoly a2 = -Rational(1) * (v * vp * tt1 * att * quad);
                const HomogeneousPoly a3 =
                    -Rational(1) * (v * v * v * vp * tt1 * att * att1 * quad);
                return FFCurve::from_coeffs(3, a1, a2, a3, zero, zero);
            }
        }
        throw std::logic_error("family: unreachable");
    }();
    const FFPoint point = FFPoint::affine(GradedFraction(), GradedFraction());
    if (!on_curve(curve, point)) throw std::logic_error("family: (0,0) not on curve");
    return {curve, point};
}

// ----- JSON forms -----

namespace {

Json coeff_array(const HomogeneousPoly& p) {
    Json arr = Json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

HomogeneousPoly poly_from_array(const Json& arr, long expected_degree) {
    if (!arr.is_array() || arr.empty())
        throw std::invalid_argument("curve json: coefficient array expected");
    std::vector<Rational> coeffs;
    for (const auto& c : arr) coeffs.push_back(Rational::parse(c.get<std::string>()));
    const long degree = static_cast<long>(coeffs.size()) - 1;
    if (expected_degree >= 0 && degree != expected_degree)
        throw std::invalid_argument("curve json: coefficient array has the wrong length");
    return HomogeneousPoly(static_cast<int>(degree), std::move(coeffs));
}

}  // namespace

std::string curve_to_json(const FFCurve& e) {
    Json j;
    j["n"] = e.n();
    const std::pair<const char*, const HomogeneousPoly*> items[] = {
        {"a1", &e.a1()}, {"a2", &e.a2()}, {"a3", &e.a3()}, {"a4", &e.a4()}, {"a6", &e.a6()}};
    for (const auto& [name, poly] : items)
        if (!poly->is_zero()) j[name] = coeff_array(*poly);
    return j.dump(2) + "\n";
}

FFCurve curve_from_json(const std::string& text) {
    const Json j = Json::parse(text);
    const long n = j.at("n").get<long>();
    auto read = [&](const char* name, long degree) {
        if (!j.contains(name)) return HomogeneousPoly();
        return poly_from_array(j.at(name), degree);
    };
    return FFCurve::from_coeffs(n, read("a1", n), read("a2", 2 * n), read("a3", 3 * n),
                                read("a4", 4 * n), read("a6", 6 * n));
}

std::string point_to_json(const FFPoint& p) {
    Json j;
    if (p.is_zero()) {
        j["zero"] = true;
    } else {
        j["x"] = {{"num", coeff_array(p.x().num())}, {"den", coeff_array(p.x().den())}};
        j["y"] = {{"num", coeff_array(p.y().num())}, {"den", coeff_array(p.y().den())}};
    }
    return j.dump(2) + "\n";
}

FFPoint point_from_json(const std::string& text) {
    const Json j = Json::parse(text);
    if (j.contains("zero") && j.at("zero").get<bool>()) return FFPoint::zero();
    auto frac = [&](const char* name) {
        const Json& c = j.at(name);
        return GradedFraction(poly_from_array(c.at("num"), -1), poly_from_array(c.at("den"), -1));
    };
    return FFPoint::affine(frac("x"), frac("y"));
}

}  // namespace heightlab
