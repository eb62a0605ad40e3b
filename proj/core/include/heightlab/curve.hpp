#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "heightlab/fraction.hpp"

namespace heightlab {

/// Construction / computation failures on curves carry a machine-readable
/// kind so callers can map them to exit codes.
class CurveError : public std::runtime_error {
public:
    enum class Kind { Degenerate, NonMinimal, BadInput };

    CurveError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Extended Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// over the rational function field of the projective line, with each a_i
/// homogeneous of degree i*n. The stored model is always minimal with a
/// nonzero discriminant of degree 12n.
class FFCurve {
public:
    static FFCurve from_coeffs(long n, HomogeneousPoly a1, HomogeneousPoly a2,
                               HomogeneousPoly a3, HomogeneousPoly a4, HomogeneousPoly a6);

    long n() const { return n_; }
    const HomogeneousPoly& a1() const { return a1_; }
    const HomogeneousPoly& a2() const { return a2_; }
    const HomogeneousPoly& a3() const { return a3_; }
    const HomogeneousPoly& a4() const { return a4_; }
    const HomogeneousPoly& a6() const { return a6_; }
    const HomogeneousPoly& b2() const { return b2_; }
    const HomogeneousPoly& b4() const { return b4_; }
    const HomogeneousPoly& b6() const { return b6_; }
    const HomogeneousPoly& b8() const { return b8_; }
    const HomogeneousPoly& c4() const { return c4_; }
    const HomogeneousPoly& c6() const { return c6_; }
    const HomogeneousPoly& discriminant() const { return disc_; }

private:
    FFCurve() = default;

    long n_ = 1;
    HomogeneousPoly a1_, a2_, a3_, a4_, a6_;
    HomogeneousPoly b2_, b4_, b6_, b8_, c4_, c6_, disc_;
};

/// A rational point: the zero point, or graded-fraction coordinates of
/// degrees (2n, 3n) satisfying the curve equation.
class FFPoint {
public:
    FFPoint() = default;  // zero
    static FFPoint zero() { return FFPoint(); }
    static FFPoint affine(GradedFraction x, GradedFraction y);

    bool is_zero() const { return zero_; }
    const GradedFraction& x() const;
    const GradedFraction& y() const;

    friend bool operator==(const FFPoint& p, const FFPoint& q) {
        if (p.zero_ || q.zero_) return p.zero_ == q.zero_;
        return p.x_ == q.x_ && p.y_ == q.y_;
    }

private:
    bool zero_ = true;
    GradedFraction x_, y_;
};

bool on_curve(const FFCurve& e, const FFPoint& p);

FFPoint point_negate(const FFCurve& e, const FFPoint& p);
FFPoint point_add(const FFCurve& e, const FFPoint& p, const FFPoint& q);
FFPoint scalar_mul(const FFCurve& e, const FFPoint& p, long m);

/// Twice the intersection number with the zero section: the degree of
/// the reduced denominator zeta^2 of x. Verifies the (zeta^2, zeta^3)
/// denominator shape and throws CurveError(NonMinimal) when it fails.
long naive_height(const FFCurve& e, const FFPoint& p);

bool is_integral(const FFCurve& e, const FFPoint& p);

/// Coordinate change X -> delta^2 (X + alpha2), Y -> delta^3 (Y + alpha1 X
/// + alpha3); preserves discriminant degree and integrality.
struct CurveTransform {
    Rational delta;
    HomogeneousPoly alpha1, alpha2, alpha3;

    FFPoint map(const FFPoint& p) const;
};

std::pair<FFCurve, CurveTransform> transform_curve(const FFCurve& e, const Rational& delta,
                                                   const HomogeneousPoly& alpha1,
                                                   const HomogeneousPoly& alpha2,
                                                   const HomogeneousPoly& alpha3);

enum class FamilyName { E1, E2, E3 };

FamilyName parse_family_name(const std::string& name);  // "e1" | "e2" | "e3"
std::string family_name_str(FamilyName f);

/// The extremal families, with the marked point (X, Y) = (0, 0).
/// The parameter must avoid 0 and 1.
std::pair<FFCurve, FFPoint> family(FamilyName which, const Rational& param);

/// JSON forms: curve {"n": ..., "a1": ["p/q", ...] ascending power of the
/// first variable, omitted = zero}; point {"x": {"num": [...], "den":
/// [...]}, "y": ...} or {"zero": true}.
std::string curve_to_json(const FFCurve& e);
FFCurve curve_from_json(const std::string& text);
std::string point_to_json(const FFPoint& p);
FFPoint point_from_json(const std::string& text);

}  // namespace heightlab
