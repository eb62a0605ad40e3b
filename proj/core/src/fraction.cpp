#include "heightlab/fraction.hpp"

#include <stdexcept>

namespace heightlab {

GradedFraction::GradedFraction(HomogeneousPoly num, HomogeneousPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("GradedFraction: zero denominator");
    reduce();
}

void GradedFraction::reduce() {
    if (num_.is_zero()) {
        den_ = HomogeneousPoly::constant(Rational(1));
        return;
    }
    const HomogeneousPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    const Rational c = den_.content();
    den_ = den_.normalized();
    num_ = (Rational(1) / c) * num_;
}

int GradedFraction::degree() const {
    if (is_zero()) throw std::domain_error("GradedFraction: zero fraction has no degree");
    return num_.degree() - den_.degree();
}

GradedFraction GradedFraction::operator-() const {
    GradedFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

GradedFraction operator+(const GradedFraction& a, const GradedFraction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() != b.degree())
        throw std::domain_error("GradedFraction: degree mismatch in addition");
    return GradedFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

GradedFraction operator-(const GradedFraction& a, const GradedFraction& b) { return a + (-b); }

GradedFraction operator*(const GradedFraction& a, const GradedFraction& b) {
    if (a.is_zero() || b.is_zero()) return GradedFraction();
    return GradedFraction(a.num_ * b.num_, a.den_ * b.den_);
}

GradedFraction operator/(const GradedFraction& a, const GradedFraction& b) {
    if (b.is_zero()) throw std::domain_error("GradedFraction: division by zero");
    if (a.is_zero()) return GradedFraction();
    return GradedFraction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string GradedFraction::str(std::string_view var1, std::string_view var2) const {
    if (is_zero()) return "0";
    std::string s = "(" + num_.str(var1, var2) + ")";
    if (!(den_ == HomogeneousPoly::constant(Rational(1)))) s += "/(" + den_.str(var1, var2) + ")";
    return s;
}

}  // namespace heightlab
