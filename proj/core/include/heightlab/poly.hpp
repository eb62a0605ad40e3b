#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heightlab/rational.hpp"

namespace heightlab {

/// Exact homogeneous polynomial in two variables over the rationals.
/// coeffs()[i] is the coefficient of s^i * s'^(degree-i). The zero
/// polynomial is a distinguished value with no degree.
class HomogeneousPoly {
public:
    HomogeneousPoly() = default;  // zero
    HomogeneousPoly(int degree, std::vector<Rational> coeffs);

    static HomogeneousPoly constant(const Rational& c);
    /// s^i * s'^(degree - i).
    static HomogeneousPoly monomial(int degree, int i, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int i) const;

    /// Largest k with s^k dividing the polynomial.
    int valuation_at_s() const;
    /// Largest k with s'^k dividing the polynomial.
    int valuation_at_s_infinity() const;

    HomogeneousPoly operator-() const;
    friend HomogeneousPoly operator+(const HomogeneousPoly& p, const HomogeneousPoly& q);
    friend HomogeneousPoly operator-(const HomogeneousPoly& p, const HomogeneousPoly& q);
    friend HomogeneousPoly operator*(const HomogeneousPoly& p, const HomogeneousPoly& q);
    friend HomogeneousPoly operator*(const Rational& c, const HomogeneousPoly& p);
    friend bool operator==(const HomogeneousPoly& p, const HomogeneousPoly& q) {
        return p.coeffs_ == q.coeffs_;
    }

    /// Unique primitive-integer, positive-leading-coefficient scalar
    /// multiple (leading = highest power of the first variable).
    HomogeneousPoly normalized() const;
    /// The rational c with *this == c * normalized(); 0 for the zero poly.
    Rational content() const;
    bool is_normalized() const;

    /// "27*s^2-18*s*s'-s'^2" style rendering, descending powers of var1.
    std::string str(std::string_view var1 = "s", std::string_view var2 = "s'") const;

private:
    std::vector<Rational> coeffs_;  // size degree+1; empty = zero
};

/// Normalized gcd; gcd(p, 0) = normalized p, gcd(0, 0) = 0.
HomogeneousPoly poly_gcd(const HomogeneousPoly& p, const HomogeneousPoly& q);

/// Exact division in the graded ring; nullopt when q does not divide p.
std::optional<HomogeneousPoly> try_divide(const HomogeneousPoly& p, const HomogeneousPoly& q);

/// try_divide that throws std::domain_error on inexact division.
HomogeneousPoly divide_exact(const HomogeneousPoly& p, const HomogeneousPoly& q);

/// Multiplicity -> pairwise-coprime squarefree normalized factor, with
/// p = content * product of factor^multiplicity. Constant factors are
/// dropped; the zero polynomial is rejected.
std::map<int, HomogeneousPoly> squarefree_decomposition(const HomogeneousPoly& p);

}  // namespace heightlab
