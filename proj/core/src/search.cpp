#include "heightlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace heightlab {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

struct TermC {
    i64 a, b, mult;
};

struct CompactGamma {
    std::vector<TermC> terms;
    i64 lcm_b = 1;
    i64 total_mult = 0;
    i64 total_degree = 0;
};

// Everything in the fast path is exact int64 arithmetic over the common
// denominator 6L (L = lcm of the generator denominators). These caps keep
// every intermediate below overflow with a wide margin; they admit any
// search with 12n <= 720.
constexpr i64 kMaxLcm = 1 << 21;
constexpr i64 kMaxPeriod = i64(1) << 25;

i64 isqrt64(i64 x) {
    if (x < 0) return -1;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Largest m >= 0 with m^2 * hp < bound * hq.
i64 threshold_below(i64 bound, i64 hp, i64 hq) {
    const i128 x = i128(bound) * hq - 1;
    if (x < 0) return 0;
    const i128 lim = x / hp;
    if (lim > i128(4) * 1000000000000000000LL)
        throw std::overflow_error("search: threshold out of range");
    return isqrt64(static_cast<i64>(lim));
}

int moebius_mu(i64 x) {
    int mu = 1;
    for (i64 p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            x /= p;
            if (x % p == 0) return 0;
            mu = -mu;
        }
    }
    if (x > 1) mu = -mu;
    return mu;
}

// Numerator of lambda_m over the fixed denominator 6L: each generator
// [a/b] with multiplicity k contributes k * (L/b) * (6r^2 - 6rb + b^2)
// where r = m*a mod b.
i64 lambda_num_6L(const CompactGamma& g, i64 m) {
    i64 s = 0;
    for (const auto& t : g.terms) {
        const i64 r = (m % t.b) * t.a % t.b;
        s += t.mult * (g.lcm_b / t.b) * (6 * r * r - 6 * r * t.b + t.b * t.b);
    }
    return s;
}

CompactGamma compact_from(const Gamma& g) {
    CompactGamma c;
    for (const auto& [gen, mult] : g.terms()) {
        if (!gen.b.fits_slong_p())
            throw std::overflow_error("search: generator denominator too large");
        TermC t{gen.a.get_si(), gen.b.get_si(), mult};
        c.terms.push_back(t);
        c.lcm_b = std::lcm(c.lcm_b, t.b);
        if (c.lcm_b > kMaxLcm) throw std::overflow_error("search: lcm of denominators too large");
        c.total_mult += t.mult;
        c.total_degree += t.mult * t.b;
    }
    return c;
}

Gamma gamma_from(const CompactGamma& c) {
    Gamma g;
    for (const auto& t : c.terms) g.add(OrbitGenerator(Int(t.a), Int(t.b)), t.mult);
    return g;
}

struct EngineIn {
    i64 n = 1;
    long conductor_threshold = 0;  // 0 disables the filter
    bool moebius = false;
    i64 record_multiple = 0;
};

struct EngineOut {
    Verdict verdict;
    long run = 0;
    i64 m_check = 0;
    std::vector<i64> heights;  // heights[m] = h(mP) for 1 <= m <= m_check
};

// Full filter stack for one (gamma, hhat) candidate, hhat = hp/hq > 0
// reduced. Exact throughout; rejects carry the first failing witness in
// the documented order: conductor, then the ascending-m scan
// (integrality/evenness, nonnegativity, divisor monotonicity), then the
// periodic integrality tail, then the Moebius inequality.
EngineOut check_candidate(const CompactGamma& g, i64 hp, i64 hq, const EngineIn& in) {
    EngineOut out;

    if (in.conductor_threshold > 0 && g.total_mult < in.conductor_threshold) {
        out.verdict = {false, RejectReason::Conductor, g.total_mult, 0};
        return out;
    }

    const i64 L = g.lcm_b;
    const i64 sixL = 6 * L;
    if (hq > 6 * kMaxLcm) throw std::overflow_error("search: height denominator too large");
    const i64 D = sixL * hq;       // common denominator of h(m)
    const i64 twoD = 2 * D;

    const i64 m_nonneg = threshold_below(2 * in.n, hp, hq);
    const i64 m_mono = threshold_below(4 * in.n, hp, hq);
    const i64 m_max = threshold_below(4 * in.n, hp, hq) + 1;  // ceil(sqrt(4n/hhat))
    const i64 moebius_hi = in.moebius ? 6 * m_max : 0;
    out.m_check = std::max<i64>(in.record_multiple, m_mono);

    const i64 period = std::lcm(2 * hq, L);
    if (period > kMaxPeriod) throw std::overflow_error("search: exactness period too large");
    const i64 phase1_hi = std::max({m_mono, out.m_check, moebius_hi});

    out.heights.assign(static_cast<size_t>(phase1_hi) + 1, 0);

    long run = 0;
    for (i64 m = 1; m <= phase1_hi; ++m) {
        const i64 lam = lambda_num_6L(g, m);
        const i128 num = i128(m) * m * hp * sixL - i128(hq) * lam;
        if (num % twoD != 0) {
            out.verdict = {false, RejectReason::NonIntegral, m, 0};
            return out;
        }
        const i64 h = static_cast<i64>(num / D);
        out.heights[static_cast<size_t>(m)] = h;
        if (m <= m_nonneg && h < 0) {
            out.verdict = {false, RejectReason::Negative, m, 0};
            return out;
        }
        if (m <= m_mono) {
            for (i64 d = 1; 2 * d <= m; ++d) {
                if (m % d == 0 && out.heights[static_cast<size_t>(d)] > h) {
                    out.verdict = {false, RejectReason::Monotonic, m, d};
                    return out;
                }
            }
        }
        if (h == 0 && run == m - 1) run = m;
    }
    out.run = run;

    // Integrality/evenness is periodic with period lcm(2*den(hhat), L),
    // so scanning the remainder of one period is exhaustive for all m.
    // Only divisibility matters here; m^2 is reduced mod 2*hq to keep the
    // products inside 128 bits.
    for (i64 m = phase1_hi + 1; m <= period; ++m) {
        const i64 u = (m % (2 * hq)) * (m % (2 * hq)) % (2 * hq);
        const i128 num = i128(u) * hp * sixL - i128(hq) * lambda_num_6L(g, m);
        if (num % twoD != 0) {
            out.verdict = {false, RejectReason::NonIntegral, m, 0};
            return out;
        }
    }

    if (in.moebius) {
        for (i64 m = 2; m <= moebius_hi; ++m) {
            if (m > 4 * m_max && !(m % 6 == 0 && m / 6 <= m_max)) continue;
            i64 defect = 0;
            for (i64 d = 1; d <= m; ++d)
                if (m % d == 0) defect += moebius_mu(m / d) * out.heights[static_cast<size_t>(d)];
            if (defect < 0) {
                out.verdict = {false, RejectReason::Moebius, m, 0};
                return out;
            }
        }
    }

    out.verdict = {true, RejectReason::Conductor, 0, 0};
    return out;
}

// ---------------------------------------------------------------------
// Enumeration: partitions of 12n (descending lexicographic), each part b
// decorated with a in {0 <= a <= b/2, gcd(a,b) = 1} ascending,
// non-decreasing across equal parts.
// ---------------------------------------------------------------------

std::vector<std::vector<int>> decoration_choices(int max_b) {
    std::vector<std::vector<int>> ch(static_cast<size_t>(max_b) + 1);
    ch[1] = {0};
    for (int b = 2; b <= max_b; ++b)
        for (int a = 1; 2 * a <= b; ++a)
            if (std::gcd(a, b) == 1) ch[static_cast<size_t>(b)].push_back(a);
    return ch;
}

void walk_partitions(i64 remaining, i64 max_part, i64 min_parts, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        if (static_cast<i64>(acc.size()) >= min_parts) out.push_back(acc);
        return;
    }
    if (static_cast<i64>(acc.size()) + remaining < min_parts) return;
    for (i64 b = std::min(max_part, remaining); b >= 1; --b) {
        acc.push_back(static_cast<int>(b));
        walk_partitions(remaining - b, b, min_parts, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> list_partitions(i64 total, i64 min_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    walk_partitions(total, total, min_parts, acc, out);
    return out;
}

struct Run {
    i64 b;
    i64 count;
    const std::vector<int>* choices;
    std::vector<i64> ctr;  // contribution over 6L per choice, descending in a index
    u64 comb;              // number of decorations of this run
};

u64 multiset_count(u64 choices, u64 slots) {
    // C(choices + slots - 1, slots)
    u64 r = 1;
    for (u64 i = 1; i <= slots; ++i) r = r * (choices - 1 + i) / i;
    return r;
}

struct PartitionPlan {
    std::vector<Run> runs;
    i64 lcm_b = 1;
    i64 parts = 0;
    i64 degree = 0;
    std::vector<i64> suffix_min, suffix_max;  // over 6L, runs[i..]
    std::vector<u64> suffix_comb;
};

PartitionPlan plan_partition(const std::vector<int>& parts,
                             const std::vector<std::vector<int>>& choices) {
    PartitionPlan p;
    p.parts = static_cast<i64>(parts.size());
    for (int b : parts) {
        p.degree += b;
        p.lcm_b = std::lcm<i64>(p.lcm_b, b);
    }
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        Run r;
        r.b = parts[i];
        r.count = static_cast<i64>(j - i);
        r.choices = &choices[static_cast<size_t>(parts[i])];
        for (int a : *r.choices)
            r.ctr.push_back((p.lcm_b / r.b) * (6LL * a * a - 6LL * a * r.b + r.b * r.b));
        r.comb = multiset_count(r.choices->size(), static_cast<u64>(r.count));
        p.runs.push_back(std::move(r));
        i = j;
    }
    const size_t nr = p.runs.size();
    p.suffix_min.assign(nr + 1, 0);
    p.suffix_max.assign(nr + 1, 0);
    p.suffix_comb.assign(nr + 1, 1);
    for (size_t i = nr; i-- > 0;) {
        // B is decreasing on [0, 1/2], so the first choice maximizes the
        // contribution and the last one minimizes it.
        p.suffix_min[i] = p.suffix_min[i + 1] + p.runs[i].count * p.runs[i].ctr.back();
        p.suffix_max[i] = p.suffix_max[i + 1] + p.runs[i].count * p.runs[i].ctr.front();
        p.suffix_comb[i] = p.suffix_comb[i + 1] * p.runs[i].comb;
    }
    return p;
}

// Walks all decorations of a planned partition. Leaf(terms, lambda1_num,
// leaf_ordinal) is called once per gamma; Prune(run_idx, partial) may cut
// whole run subtrees (their leaves are still counted in the ordinal).
template <class Leaf, class Prune>
struct DecorationWalk {
    const PartitionPlan& plan;
    Leaf& leaf;
    Prune& prune;
    std::vector<TermC> terms;
    u64 ordinal = 0;

    void at_run(size_t ri, i64 partial) {
        if (ri == plan.runs.size()) {
            leaf(terms, partial, ordinal);
            ++ordinal;
            return;
        }
        if (prune(ri, partial)) {
            ordinal += plan.suffix_comb[ri];
            return;
        }
        assign(ri, 0, plan.runs[ri].count, partial);
    }

    // Distribute `remaining` identical slots of run ri over choices[ci..];
    // giving the current choice the largest count first yields ascending
    // lexicographic order on the non-decreasing decoration tuples.
    void assign(size_t ri, size_t ci, i64 remaining, i64 partial) {
        const Run& run = plan.runs[ri];
        if (remaining == 0) {
            at_run(ri + 1, partial);
            return;
        }
        if (ci + 1 == run.choices->size()) {
            terms.push_back({(*run.choices)[ci], run.b, remaining});
            at_run(ri + 1, partial + remaining * run.ctr[ci]);
            terms.pop_back();
            return;
        }
        for (i64 k = remaining; k >= 0; --k) {
            if (k > 0) terms.push_back({(*run.choices)[ci], run.b, k});
            assign(ri, ci + 1, remaining - k, partial + k * run.ctr[ci]);
            if (k > 0) terms.pop_back();
        }
    }
};

template <class Leaf, class Prune>
void walk_decorations(const PartitionPlan& plan, Leaf&& leaf, Prune&& prune) {
    DecorationWalk<Leaf, Prune> w{plan, leaf, prune, {}, 0};
    w.at_run(0, 0);
}

// ---------------------------------------------------------------------
// run_search
// ---------------------------------------------------------------------

struct RawFeasible {
    size_t part_idx;
    u64 leaf_ordinal;
    int cand_idx;
    CompactGamma gamma;
    i64 hp, hq;
    long run;
    i64 m_check;
    std::vector<i64> heights;
};

struct ShardState {
    SearchCounts counts;
    std::vector<RawFeasible> feasible;
};

void bump_rejection(SearchCounts& c, RejectReason r) {
    switch (r) {
        case RejectReason::Conductor: ++c.rejected_conductor; break;
        case RejectReason::NonIntegral: ++c.rejected_nonintegral; break;
        case RejectReason::Negative: ++c.rejected_negative; break;
        case RejectReason::Monotonic: ++c.rejected_monotonic; break;
        case RejectReason::Moebius: ++c.rejected_moebius; break;
    }
}

struct SearchJob {
    i64 n;
    i64 Hp, Hq;  // height bound
    i64 hmax;    // largest even h worth trying for hhat = h + lambda_1
    EngineIn engine;
};

void search_partition(const SearchJob& job, size_t part_idx, const PartitionPlan& plan,
                      ShardState& st) {
    const i64 sixL = 6 * plan.lcm_b;

    auto window_open = [&](i64 lo, i64 hi) {
        // Does [lo, hi]/6L meet some (-h, H-h] with h even >= 0?
        for (i64 h = 0; h <= job.hmax; h += 2) {
            const bool hi_ok = i128(hi) > i128(-h) * sixL;
            const bool lo_ok = i128(lo) * job.Hq <= (i128(job.Hp) - i128(h) * job.Hq) * sixL;
            if (hi_ok && lo_ok) return true;
        }
        return false;
    };

    auto prune = [&](size_t ri, i64 partial) {
        return !window_open(partial + plan.suffix_min[ri], partial + plan.suffix_max[ri]);
    };

    auto leaf = [&](const std::vector<TermC>& terms, i64 lambda1, u64 ordinal) {
        int cand_idx = 0;
        for (i64 h = 0; h <= job.hmax; h += 2) {
            const i64 num = h * sixL + lambda1;  // hhat = num / 6L
            if (num <= 0) continue;
            if (i128(num) * job.Hq > i128(job.Hp) * sixL) break;
            const i64 g = std::gcd(num, sixL);
            CompactGamma cg;
            cg.terms = terms;
            cg.lcm_b = plan.lcm_b;
            cg.total_mult = plan.parts;
            cg.total_degree = plan.degree;
            ++st.counts.candidates_tested;
            EngineOut res = check_candidate(cg, num / g, sixL / g, job.engine);
            if (!res.verdict.feasible) {
                bump_rejection(st.counts, res.verdict.reason);
            } else {
                ++st.counts.feasible;
                st.feasible.push_back({part_idx, ordinal, cand_idx, std::move(cg), num / g,
                                       sixL / g, res.run, res.m_check, std::move(res.heights)});
            }
            ++cand_idx;
        }
    };

    walk_decorations(plan, leaf, prune);
    // Pruned subtrees still belong to the gamma stream.
    st.counts.gammas_enumerated += plan.suffix_comb[0];
}

}  // namespace

// -----------------------------------------------------------------------
// Public surface
// -----------------------------------------------------------------------

Rational SearchConfig::resolved_height_bound() const {
    if (height_bound) {
        if (!(*height_bound > Rational(0)))
            throw std::invalid_argument("search: height bound must be positive");
        return *height_bound;
    }
    if (max_multiple) return default_height_bound(n, *max_multiple);
    throw std::invalid_argument("search: need a height bound or a max multiple");
}

std::string Verdict::str() const {
    if (feasible) return "feasible";
    switch (reason) {
        case RejectReason::Conductor:
            return "rejected(conductor,N=" + std::to_string(witness_m) + ")";
        case RejectReason::NonIntegral:
            return "rejected(nonintegral,m=" + std::to_string(witness_m) + ")";
        case RejectReason::Negative:
            return "rejected(negative,m=" + std::to_string(witness_m) + ")";
        case RejectReason::Monotonic:
            return "rejected(monotone,m=" + std::to_string(witness_m) +
                   ",div=" + std::to_string(witness_divisor) + ")";
        case RejectReason::Moebius:
            return "rejected(moebius,m=" + std::to_string(witness_m) + ")";
    }
    return "rejected";
}

void for_each_gamma(long n, long min_parts, const std::function<void(const Gamma&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_gamma: n must be >= 1");
    const i64 total = 12 * n;
    const auto choices = decoration_choices(static_cast<int>(total));
    const auto partitions = list_partitions(total, min_parts);
    auto no_prune = [](size_t, i64) { return false; };
    for (const auto& parts : partitions) {
        const PartitionPlan plan = plan_partition(parts, choices);
        walk_decorations(
            plan,
            [&](const std::vector<TermC>& terms, i64, u64) {
                CompactGamma cg;
                cg.terms = terms;
                fn(gamma_from(cg));
            },
            no_prune);
    }
}

std::vector<Gamma> enumerate_gammas(long n, long min_parts) {
    std::vector<Gamma> out;
    for_each_gamma(n, min_parts, [&](const Gamma& g) { out.push_back(g); });
    return out;
}

std::vector<Rational> candidate_heights(const Gamma& g, const Rational& height_bound) {
    if (!(height_bound > Rational(0)))
        throw std::invalid_argument("candidate_heights: bound must be positive");
    std::vector<Rational> out;
    const Rational lambda1 = g.lambda(1);
    for (Rational h(0);; h += 2) {
        const Rational hhat = h + lambda1;
        if (hhat > height_bound) break;
        if (hhat > Rational(0)) out.push_back(hhat);
    }
    return out;
}

std::vector<Rational> naive_height_seq(const Gamma& g, const Rational& hhat,
                                       const std::vector<long>& multiples) {
    std::vector<Rational> out;
    out.reserve(multiples.size());
    for (long m : multiples) out.push_back(Rational(m) * Rational(m) * hhat - g.lambda(m));
    return out;
}

Verdict feasibility_check(const Gamma& g, const Rational& hhat, const SearchConfig& cfg) {
    if (!(hhat > Rational(0))) throw std::domain_error("feasibility_check: hhat must be positive");
    if (!hhat.num().fits_slong_p() || !hhat.den().fits_slong_p())
        throw std::overflow_error("feasibility_check: hhat out of range");
    const CompactGamma cg = compact_from(g);
    EngineIn in;
    in.n = cfg.n;
    in.conductor_threshold = cfg.conductor_threshold();
    in.moebius = cfg.resolved_moebius();
    in.record_multiple = cfg.max_multiple.value_or(0);
    return check_candidate(cg, hhat.num().get_si(), hhat.den().get_si(), in).verdict;
}

Rational moebius_defect(const Gamma& g, const Rational& hhat, long m) {
    if (m < 1) throw std::domain_error("moebius_defect: m must be >= 1");
    Rational sum;
    for (long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        const int mu = moebius_mu(m / d);
        if (mu == 0) continue;
        sum += Rational(mu) * (Rational(d) * Rational(d) * hhat - g.lambda(d));
    }
    return sum;
}

long integral_run(const Gamma& g, const Rational& hhat) {
    if (!(hhat > Rational(0))) throw std::domain_error("integral_run: hhat must be positive");
    const Rational cap(g.degree(), 6);  // lambda_m never exceeds d/6
    for (long m = 1;; ++m) {
        const Rational want = Rational(m) * Rational(m) * hhat;
        if (want > cap) return m - 1;
        if (want != g.lambda(m)) return m - 1;
    }
}

Rational default_height_bound(long n, long max_multiple) {
    if (n < 1 || max_multiple < 1)
        throw std::invalid_argument("default_height_bound: n and M must be >= 1");
    return Rational(2 * n, max_multiple * max_multiple);
}

SearchReport run_search(const SearchConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("search: n must be >= 1");
    if (cfg.jobs < 1) throw std::invalid_argument("search: jobs must be >= 1");

    SearchReport report;
    report.config = cfg;
    report.height_bound = cfg.resolved_height_bound();
    if (!report.height_bound.num().fits_slong_p() || !report.height_bound.den().fits_slong_p())
        throw std::overflow_error("search: height bound out of range");

    SearchJob job;
    job.n = cfg.n;
    job.Hp = report.height_bound.num().get_si();
    job.Hq = report.height_bound.den().get_si();
    // hhat = h + lambda_1 with lambda_1 >= -n, hhat <= H: h <= H + n.
    job.hmax = 2 * ((job.Hp / job.Hq + cfg.n) / 2 + 1);
    job.engine.n = cfg.n;
    job.engine.conductor_threshold = cfg.conductor_threshold();
    job.engine.moebius = cfg.resolved_moebius();
    job.engine.record_multiple = cfg.max_multiple.value_or(0);

    const i64 total = 12 * cfg.n;
    const auto choices = decoration_choices(static_cast<int>(total));
    const long min_parts = cfg.mode == SearchMode::GenusZero ? cfg.conductor_threshold() : 0;
    const auto partitions = list_partitions(total, min_parts);

    const size_t nshards = static_cast<size_t>(std::min<long>(cfg.jobs, 64));
    std::vector<ShardState> shards(nshards);
    std::atomic<size_t> next{0};

    auto work = [&](size_t shard) {
        ShardState& st = shards[shard];
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= partitions.size()) break;
            search_partition(job, i, plan_partition(partitions[i], choices), st);
        }
    };

    if (nshards == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nshards);
        for (size_t s = 0; s < nshards; ++s) pool.emplace_back(work, s);
        for (auto& t : pool) t.join();
    }

    std::vector<RawFeasible> all;
    for (auto& st : shards) {
        report.counts.gammas_enumerated += st.counts.gammas_enumerated;
        report.counts.candidates_tested += st.counts.candidates_tested;
        report.counts.rejected_conductor += st.counts.rejected_conductor;
        report.counts.rejected_nonintegral += st.counts.rejected_nonintegral;
        report.counts.rejected_negative += st.counts.rejected_negative;
        report.counts.rejected_monotonic += st.counts.rejected_monotonic;
        report.counts.rejected_moebius += st.counts.rejected_moebius;
        report.counts.feasible += st.counts.feasible;
        std::move(st.feasible.begin(), st.feasible.end(), std::back_inserter(all));
    }
    std::sort(all.begin(), all.end(), [](const RawFeasible& x, const RawFeasible& y) {
        if (x.part_idx != y.part_idx) return x.part_idx < y.part_idx;
        if (x.leaf_ordinal != y.leaf_ordinal) return x.leaf_ordinal < y.leaf_ordinal;
        return x.cand_idx < y.cand_idx;
    });

    report.ranked.reserve(all.size());
    for (const auto& raw : all) {
        Candidate c;
        c.gamma = gamma_from(raw.gamma);
        c.hhat = Rational(raw.hp, raw.hq);
        c.naive_seq.reserve(static_cast<size_t>(raw.m_check));
        for (i64 m = 1; m <= raw.m_check; ++m)
            c.naive_seq.push_back(Rational(Int(raw.heights[static_cast<size_t>(m)])));
        c.verdict = Verdict{true, RejectReason::Conductor, 0, 0};
        c.integral_run = raw.run;
        c.degree = Int(raw.gamma.total_degree);
        c.parts = raw.gamma.total_mult;
        report.ranked.push_back(std::move(c));
    }
    std::stable_sort(report.ranked.begin(), report.ranked.end(),
                     [](const Candidate& x, const Candidate& y) {
                         if (x.hhat != y.hhat) return x.hhat < y.hhat;
                         return x.gamma.str() < y.gamma.str();
                     });

    for (const auto& c : report.ranked)
        report.max_integral_run = std::max(report.max_integral_run, c.integral_run);
    for (const auto& c : report.ranked)
        if (c.integral_run == report.max_integral_run && report.max_integral_run > 0)
            report.run_champions.push_back(c);

    return report;
}

}  // namespace heightlab
