#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "heightlab/orbit.hpp"

namespace heightlab {

enum class SearchMode { GenusZero, AnyGenus };

/// Configuration for one exhaustive search over all positive gamma
/// with d(gamma) = 12n.
struct SearchConfig {
    long n = 1;
    SearchMode mode = SearchMode::GenusZero;
    std::optional<Rational> height_bound;  // H; default 2n/M^2 when M given
    std::optional<long> max_multiple;      // M
    std::optional<bool> moebius_filter;    // default: on in any-genus mode only
    long jobs = 1;

    /// H, or 2n/M^2 when only M was given. Throws without either.
    Rational resolved_height_bound() const;
    bool resolved_moebius() const { return moebius_filter.value_or(mode == SearchMode::AnyGenus); }
    /// Conductor-degree threshold from the rank inequality: 2n + 3 for a
    /// nonconstant curve over a genus-zero base with a nontorsion point.
    long conductor_threshold() const { return mode == SearchMode::GenusZero ? 2 * n + 3 : 0; }
};

enum class RejectReason { Conductor, NonIntegral, Negative, Monotonic, Moebius };

/// Outcome of the feasibility filters, with a witness for rejections.
struct Verdict {
    bool feasible = true;
    RejectReason reason = RejectReason::Conductor;
    long witness_m = 0;        // failing multiple, when applicable
    long witness_divisor = 0;  // failing divisor for monotonicity

    std::string str() const;
};

struct Candidate {
    Gamma gamma;
    Rational hhat;
    std::vector<Rational> naive_seq;  // h(mP) for m = 1..m_check
    Verdict verdict;
    long integral_run = 0;
    Int degree;
    long parts = 0;
};

struct SearchCounts {
    unsigned long long gammas_enumerated = 0;
    unsigned long long candidates_tested = 0;
    unsigned long long rejected_conductor = 0;
    unsigned long long rejected_nonintegral = 0;
    unsigned long long rejected_negative = 0;
    unsigned long long rejected_monotonic = 0;
    unsigned long long rejected_moebius = 0;
    unsigned long long feasible = 0;
};

struct SearchReport {
    SearchConfig config;
    Rational height_bound;  // resolved H actually used
    std::vector<Candidate> ranked;  // feasible, ascending by (hhat, gamma)
    std::vector<Candidate> run_champions;
    long max_integral_run = 0;
    SearchCounts counts;

    const Candidate* minimal_feasible() const { return ranked.empty() ? nullptr : &ranked[0]; }
};

/// Streams every positive gamma with d(gamma) = 12n and at least
/// min_parts terms, exactly once, in canonical order: partitions of 12n
/// in descending lexicographic order; within a partition, decorations a
/// ascending per part over 0 <= a <= b/2 with gcd(a, b) = 1.
void for_each_gamma(long n, long min_parts, const std::function<void(const Gamma&)>& fn);

/// Materialized form of for_each_gamma; intended for small n.
std::vector<Gamma> enumerate_gammas(long n, long min_parts);

/// All hhat = h + lambda_1(g) with h in {0, 2, 4, ...} and 0 < hhat <= H,
/// ascending.
std::vector<Rational> candidate_heights(const Gamma& g, const Rational& height_bound);

/// m^2 * hhat - lambda_m(g) for each m; values may be non-integral or
/// negative, feasibility_check judges them.
std::vector<Rational> naive_height_seq(const Gamma& g, const Rational& hhat,
                                       const std::vector<long>& multiples);

/// Applies the full filter stack: conductor threshold (genus-zero mode),
/// integrality/evenness of every h(mP) over the exactness period
/// lcm(2*den(hhat), lcm of b's), nonnegativity while m^2*hhat < 2n,
/// divisor monotonicity while m^2*hhat < 4n, and (when enabled) the
/// Moebius inequality.
Verdict feasibility_check(const Gamma& g, const Rational& hhat, const SearchConfig& cfg);

/// sum over m'|m of mu(m/m') * h(m'P); a negative value certifies
/// infeasibility.
Rational moebius_defect(const Gamma& g, const Rational& hhat, long m);

/// Largest M with m^2 * hhat = lambda_m(g) for all m = 1..M.
long integral_run(const Gamma& g, const Rational& hhat);

/// 2n/M^2, the bound that keeps every run-M candidate in range.
Rational default_height_bound(long n, long max_multiple);

/// Exhaustive deterministic search; report content is independent of
/// cfg.jobs.
SearchReport run_search(const SearchConfig& cfg);

}  // namespace heightlab
