#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heightlab/rational.hpp"

namespace heightlab {

/// Canonical representative of a rational's orbit under the infinite
/// dihedral group generated by z -> z+1 and z -> 1-z.
///
/// Invariants: gcd(a,b) = 1, 0 <= a/b <= 1/2, and a = 0 forces b = 1
/// (the trivial orbit, displayed "[0]").
struct OrbitGenerator {
    Int a;
    Int b;

    OrbitGenerator() : a(0), b(1) {}
    OrbitGenerator(Int a_, Int b_);
    OrbitGenerator(long a_, long b_) : OrbitGenerator(Int(a_), Int(b_)) {}

    bool is_trivial() const { return a == 0; }
    Rational value() const { return Rational(a, b); }

    /// "[a/b]", or "[0]" for the trivial orbit.
    std::string str() const;

    friend bool operator==(const OrbitGenerator& x, const OrbitGenerator& y) {
        return x.a == y.a && x.b == y.b;
    }
};

/// Display order used throughout: b descending, then a/b descending.
/// The trivial orbit (b = 1) sorts last automatically.
struct OrbitDisplayLess {
    bool operator()(const OrbitGenerator& x, const OrbitGenerator& y) const {
        if (x.b != y.b) return x.b > y.b;
        return x.a > y.a;
    }
};

/// Folds an arbitrary rational onto its dihedral-orbit representative.
OrbitGenerator canonicalize(const Rational& q);

/// B(z) = z^2 - z + 1/6 on [0,1]; throws outside that interval.
/// Callers that need the periodic extension must fold first.
Rational bernoulli2(const Rational& z);

/// Positive element of the abelian group G of formal integer
/// combinations of dihedral orbits: a finite multiset of generators
/// with multiplicities >= 1.
class Gamma {
public:
    using Terms = std::map<OrbitGenerator, long, OrbitDisplayLess>;

    Gamma() = default;

    /// Adds `mult` copies of g (mult >= 1).
    void add(const OrbitGenerator& g, long mult = 1);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Height-correction homomorphism lambda_m, extended linearly:
    /// each generator [a/b] contributes b * B((m*a mod b)/b). m >= 1.
    Rational lambda(long m) const;

    /// Discriminant-degree homomorphism: sum of mult * b.
    Int degree() const;

    /// Conductor-bound homomorphism: total multiplicity.
    long conductor_parts() const;

    /// Smallest L >= 1 with lambda(m) = lambda(m + L) for all m
    /// (the lcm of the generator denominators).
    Int lambda_period() const;

    Gamma& operator+=(const Gamma& o);
    friend Gamma operator+(Gamma a, const Gamma& b) { return a += b; }
    friend bool operator==(const Gamma& a, const Gamma& b) { return a.terms_ == b.terms_; }

    /// Canonical form: terms joined by "+", each "k[a/b]" with k omitted
    /// when 1, e.g. "[1/5]+[1/3]+[1/2]+2[0]".
    std::string str() const;

    /// Accepts the same grammar with arbitrary whitespace.
    static Gamma parse(std::string_view s);

private:
    Terms terms_;
};

/// (d(gamma), N(gamma)) in one call.
std::pair<Int, long> degree_and_conductor(const Gamma& g);

}  // namespace heightlab
