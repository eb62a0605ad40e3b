#pragma once

#include "heightlab/poly.hpp"

namespace heightlab {

/// Quotient of homogeneous polynomials, graded by degree(num) -
/// degree(den). Canonical form: gcd(num, den) = 1 and den primitive
/// integer with positive leading coefficient (the rational scale lives
/// in the numerator). The zero fraction has num = 0, den = 1 and carries
/// no degree.
class GradedFraction {
public:
    GradedFraction() : den_(HomogeneousPoly::constant(Rational(1))) {}
    GradedFraction(HomogeneousPoly num, HomogeneousPoly den);

    static GradedFraction from_poly(HomogeneousPoly p) {
        return GradedFraction(std::move(p), HomogeneousPoly::constant(Rational(1)));
    }

    bool is_zero() const { return num_.is_zero(); }
    const HomogeneousPoly& num() const { return num_; }
    const HomogeneousPoly& den() const { return den_; }
    int degree() const;  // throws on zero

    GradedFraction operator-() const;
    friend GradedFraction operator+(const GradedFraction& a, const GradedFraction& b);
    friend GradedFraction operator-(const GradedFraction& a, const GradedFraction& b);
    friend GradedFraction operator*(const GradedFraction& a, const GradedFraction& b);
    friend GradedFraction operator/(const GradedFraction& a, const GradedFraction& b);
    friend bool operator==(const GradedFraction& a, const GradedFraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(std::string_view var1 = "s", std::string_view var2 = "s'") const;

private:
    void reduce();

    HomogeneousPoly num_;
    HomogeneousPoly den_;
};

}  // namespace heightlab
