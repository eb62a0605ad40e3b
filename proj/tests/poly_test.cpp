#include <doctest.h>

#include <random>

#include "heightlab/poly.hpp"

using namespace heightlab;

namespace {

// p = c0*s'^d + c1*s*s'^(d-1) + ...
HomogeneousPoly poly(int degree, std::vector<long> coeffs) {
    std::vector<Rational> cs;
    cs.reserve(coeffs.size());
    for (long c : coeffs) cs.emplace_back(c);
    return HomogeneousPoly(degree, std::move(cs));
}

const HomogeneousPoly s = poly(1, {0, 1});
const HomogeneousPoly sp = poly(1, {1, 0});

}  // namespace

TEST_CASE("construction and degree bookkeeping") {
    CHECK(HomogeneousPoly().is_zero());
    CHECK(poly(2, {0, 0, 0}).is_zero());
    CHECK_THROWS_AS(poly(2, {1, 2}), std::domain_error);
    CHECK_THROWS_AS(HomogeneousPoly().degree(), std::domain_error);
    CHECK(poly(3, {1, 0, 0, 2}).degree() == 3);
    CHECK((s * sp).degree() == 2);
    CHECK_THROWS_AS(s + poly(2, {1, 0, 0}), std::domain_error);
    CHECK((s - s).is_zero());
}

TEST_CASE("string rendering") {
    CHECK(poly(2, {-1, -18, 27}).str() == "27*s^2-18*s*s'-s'^2");
    CHECK(s.str() == "s");
    CHECK(sp.str() == "s'");
    CHECK((s - sp).str() == "s-s'");
    CHECK(poly(0, {7}).str() == "7");
    CHECK(poly(3, {0, 0, 0, -1}).str() == "-s^3");
    CHECK(poly(2, {1, 0, 1}).str(/*var1=*/"t", /*var2=*/"t'") == "t^2+t'^2");
    CHECK(HomogeneousPoly().str() == "0");
    CHECK(HomogeneousPoly::monomial(2, 1, Rational(1, 2)).str() == "1/2*s*s'");
}

TEST_CASE("normalization and content") {
    const HomogeneousPoly p = Rational(-4, 6) * (s * s - sp * sp);
    CHECK(p.content() == Rational(2, 3));
    CHECK(p.normalized().str() == "s^2-s'^2");
    CHECK(p.normalized().is_normalized());
    // leading coefficient (highest power of s) ends up positive
    CHECK((sp - s).normalized().str() == "s-s'");
    CHECK(HomogeneousPoly().content() == Rational(0));
}

TEST_CASE("valuations at the distinguished places") {
    const HomogeneousPoly p = s * s * sp * (s - sp);
    CHECK(p.valuation_at_s() == 2);
    CHECK(p.valuation_at_s_infinity() == 1);
    CHECK(sp.valuation_at_s() == 0);
    CHECK(sp.valuation_at_s_infinity() == 1);
}

TEST_CASE("gcd") {
    CHECK(poly_gcd(s * s - sp * sp, s - sp) == (s - sp));
    CHECK(poly_gcd(s * s, sp * sp).degree() == 0);
    CHECK(poly_gcd(HomogeneousPoly(), s * sp) == (s * sp));
    CHECK(poly_gcd(Rational(6) * (s * sp), Rational(-4) * (s * s)) == s);
    // gcd sees through the scale
    const HomogeneousPoly a = Rational(3, 7) * ((s - sp) * (s - sp) * s);
    const HomogeneousPoly b = Rational(-2) * ((s - sp) * sp);
    CHECK(poly_gcd(a, b) == (s - sp));
}

TEST_CASE("exact division") {
    const HomogeneousPoly p = (s - sp) * (s + sp) * s;
    CHECK(divide_exact(p, s - sp) == (s + sp) * s);
    CHECK(divide_exact(p, p) == HomogeneousPoly::constant(Rational(1)));
    CHECK_FALSE(try_divide(p, s * s).has_value());
    CHECK_FALSE(try_divide(s, s * sp).has_value());
    CHECK_THROWS_AS(divide_exact(p, HomogeneousPoly()), std::domain_error);
    // scale factors travel through division
    CHECK(divide_exact(Rational(3, 2) * p, Rational(3) * (s - sp)) ==
          Rational(1, 2) * ((s + sp) * s));
    CHECK(try_divide(HomogeneousPoly(), s).value().is_zero());
}

TEST_CASE("squarefree decomposition") {
    const auto parts = squarefree_decomposition(s * s * s * sp * sp * (s - sp));
    REQUIRE(parts.size() == 3);
    CHECK(parts.at(1) == (s - sp));
    CHECK(parts.at(2) == sp);
    CHECK(parts.at(3) == s);

    const auto single = squarefree_decomposition(s * sp * (s - sp));
    REQUIRE(single.size() == 1);
    CHECK(single.at(1) == s * sp * (s - sp));

    CHECK_THROWS_AS(squarefree_decomposition(HomogeneousPoly()), std::domain_error);

    // pure power of the place at infinity
    const auto inf = squarefree_decomposition(Rational(5) * (sp * sp * sp));
    REQUIRE(inf.size() == 1);
    CHECK(inf.at(3) == sp);
}

TEST_CASE("squarefree decomposition reassembles the input") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> exp(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        // random product of small linear factors
        HomogeneousPoly p = HomogeneousPoly::constant(Rational(1));
        for (int i = 0; i < 3; ++i) {
            long c1 = coeff(rng), c0 = coeff(rng);
            if (c1 == 0 && c0 == 0) c1 = 1;
            const HomogeneousPoly lin = poly(1, {c0, c1});
            const int e = exp(rng);
            for (int k = 0; k < e; ++k) p = p * lin;
        }
        HomogeneousPoly rebuilt = HomogeneousPoly::constant(Rational(1));
        for (const auto& [mult, factor] : squarefree_decomposition(p)) {
            CHECK(factor.is_normalized());
            // factors of distinct multiplicity are coprime
            for (const auto& [mult2, factor2] : squarefree_decomposition(p))
                if (mult != mult2) CHECK(poly_gcd(factor, factor2).degree() == 0);
            for (int k = 0; k < mult; ++k) rebuilt = rebuilt * factor;
        }
        CHECK(rebuilt == p.normalized());
    }
}
