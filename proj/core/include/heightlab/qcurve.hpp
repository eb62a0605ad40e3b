#pragma once

#include <optional>

#include "heightlab/rational.hpp"

namespace heightlab {

/// Constant elliptic curve over the rationals,
/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct QCurve {
    Rational a1, a2, a3, a4, a6;
};

struct QPoint {
    bool zero = true;
    Rational x, y;

    static QPoint at(Rational x_, Rational y_) { return {false, std::move(x_), std::move(y_)}; }
};

bool q_on_curve(const QCurve& e, const QPoint& p);
QPoint q_negate(const QCurve& e, const QPoint& p);
QPoint q_add(const QCurve& e, const QPoint& p, const QPoint& q);
QPoint q_mul(const QCurve& e, const QPoint& p, long m);

struct QIntegralRun {
    long run = 0;                           // largest M' with 1..M' all integral
    std::optional<long> first_non_integral;  // witness when run < max_m
};

/// Checks that the affine coordinates of mP are integers for m = 1..max_m
/// in the given model; throws std::domain_error if some mP = 0 in range.
QIntegralRun q_integral_run(const QCurve& e, const QPoint& p, long max_m);

}  // namespace heightlab
