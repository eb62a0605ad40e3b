#include "heightlab/qcurve.hpp"

#include <stdexcept>

namespace heightlab {

bool q_on_curve(const QCurve& e, const QPoint& p) {
    if (p.zero) return true;
    const Rational &x = p.x, &y = p.y;
    return y * y + e.a1 * x * y + e.a3 * y == x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
}

QPoint q_negate(const QCurve& e, const QPoint& p) {
    if (p.zero) return p;
    return QPoint::at(p.x, -p.y - e.a1 * p.x - e.a3);
}

QPoint q_add(const QCurve& e, const QPoint& p, const QPoint& q) {
    if (p.zero) return q;
    if (q.zero) return p;
    Rational slope;
    if (p.x == q.x) {
        if (p.y == -q.y - e.a1 * q.x - e.a3) return QPoint{};
        const Rational den = Rational(2) * p.y + e.a1 * p.x + e.a3;
        slope = (Rational(3) * p.x * p.x + Rational(2) * e.a2 * p.x + e.a4 - e.a1 * p.y) / den;
    } else {
        slope = (q.y - p.y) / (q.x - p.x);
    }
    const Rational nu = p.y - slope * p.x;
    const Rational x3 = slope * slope + e.a1 * slope - e.a2 - p.x - q.x;
    const Rational y3 = -(slope + e.a1) * x3 - nu - e.a3;
    return QPoint::at(x3, y3);
}

QPoint q_mul(const QCurve& e, const QPoint& p, long m) {
    if (m == 0 || p.zero) return QPoint{};
    if (m < 0) return q_negate(e, q_mul(e, p, -m));
    QPoint acc{};
    QPoint base = p;
    for (unsigned long bits = static_cast<unsigned long>(m); bits; bits >>= 1) {
        if (bits & 1) acc = q_add(e, acc, base);
        if (bits >> 1) base = q_add(e, base, base);
    }
    return acc;
}

QIntegralRun q_integral_run(const QCurve& e, const QPoint& p, long max_m) {
    if (p.zero) throw std::domain_error("q_integral_run: zero point");
    if (max_m < 1) throw std::domain_error("q_integral_run: max_m must be >= 1");
    QIntegralRun result;
    QPoint mp = p;
    for (long m = 1; m <= max_m; ++m) {
        if (mp.zero)
            throw std::domain_error("q_integral_run: torsion point (mP = 0 for m = " +
                                    std::to_string(m) + ")");
        const bool integral = mp.x.is_integer() && mp.y.is_integer();
        if (integral && result.run == m - 1) result.run = m;
        if (!integral && !result.first_non_integral) result.first_non_integral = m;
        if (m < max_m) mp = q_add(e, mp, p);
    }
    return result;
}

}  // namespace heightlab
