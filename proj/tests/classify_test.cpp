#include <doctest.h>

#include <set>

#include "heightlab/classify.hpp"
#include "heightlab/golden.hpp"

using namespace heightlab;

namespace {

std::multiset<std::string> symbol_multiset(const FiberReport& r) {
    std::multiset<std::string> out;
    for (const auto& entry : r.entries)
        for (int i = 0; i < entry.place_degree; ++i) out.insert(entry.symbol());
    return out;
}

// Quadratic twist by a squarefree u of even degree: the narrow model with
// a4 = -27 c4 u^2, a6 = -54 c6 u^3. Fibers at roots of u swap with their
// *-partners.
FFCurve twist(const FFCurve& e, const HomogeneousPoly& u) {
    const long n2 = e.n() + u.degree() / 2;
    return FFCurve::from_coeffs(n2, HomogeneousPoly(), HomogeneousPoly(), HomogeneousPoly(),
                                Rational(-27) * (e.c4() * u * u),
                                Rational(-54) * (e.c6() * (u * u * u)));
}

const HomogeneousPoly s = HomogeneousPoly::monomial(1, 1);
const HomogeneousPoly sp = HomogeneousPoly::monomial(1, 0);

}  // namespace

TEST_CASE("e1(2) fiber configuration") {
    auto [e, p] = family(FamilyName::E1, Rational(2));
    const FiberReport r = classify_fibers(e);
    REQUIRE(r.entries.size() == 4);
    CHECK(r.entries[0].symbol() == "I5");
    CHECK(r.entries[0].place.str() == "s");
    CHECK(r.entries[1].symbol() == "I3");
    CHECK(r.entries[1].place.str() == "s'");
    CHECK(r.entries[2].symbol() == "I2");
    CHECK(r.entries[2].place.str() == "s-s'");
    CHECK(r.entries[3].symbol() == "I1");
    CHECK(r.entries[3].place.str() == "27*s^2-18*s*s'-s'^2");
    CHECK(r.entries[3].place_degree == 2);
    CHECK(r.total_degree == Int(12));
    CHECK(r.conductor_degree == 5);
}

TEST_CASE("e1 degenerations merge fibers as expected") {
    using Sym = std::multiset<std::string>;
    auto fibers_at = [](const char* q) {
        auto [e, p] = family(FamilyName::E1, Rational::parse(q));
        return classify_fibers(e);
    };
    CHECK(symbol_multiset(fibers_at("4/5")) == Sym{"I5", "I3", "I2", "II"});
    CHECK(symbol_multiset(fibers_at("-1")) == Sym{"I5", "IV", "I2", "I1"});
    CHECK(symbol_multiset(fibers_at("4")) == Sym{"I5", "I3", "III", "I1"});
    // conductor degree is unchanged by the mergers
    for (const char* q : {"2", "4/5", "-1", "4"}) CHECK(fibers_at(q).conductor_degree == 5);
    // the II fiber at q = 4/5 sits at the double root of the I1 quadratic
    const FiberReport r = fibers_at("4/5");
    bool found = false;
    for (const auto& entry : r.entries)
        if (entry.symbol() == "II") {
            found = true;
            CHECK(entry.place.str() == "27*s+5*s'");
            CHECK(entry.v_delta == 2);
        }
    CHECK(found);
}

TEST_CASE("semistable families satisfy the conductor bound") {
    for (auto [name, param, n] :
         {std::tuple{FamilyName::E1, 2L, 1L}, {FamilyName::E2, 3L, 2L}, {FamilyName::E3, 2L, 3L},
          {FamilyName::E1, 7L, 1L}, {FamilyName::E2, -2L, 2L}, {FamilyName::E3, 5L, 3L}}) {
        auto [e, p] = family(name, Rational(param));
        const FiberReport r = classify_fibers(e);
        CHECK(r.total_degree == Int(12 * n));
        CHECK(r.conductor_degree >= 2 * n + 3);
        for (const auto& entry : r.entries) CHECK(entry.type == KodairaType::In);
    }
}

TEST_CASE("quadratic twists produce the starred types") {
    using Sym = std::multiset<std::string>;
    auto [e1_2, pa] = family(FamilyName::E1, Rational(2));
    // I5 at s -> I5*, I3 at s' -> I3*
    CHECK(symbol_multiset(classify_fibers(twist(e1_2, s * sp))) ==
          Sym{"I5*", "I3*", "I2", "I1", "I1"});

    auto [e1_m1, pb] = family(FamilyName::E1, Rational(-1));
    // IV at s' -> II*
    CHECK(symbol_multiset(classify_fibers(twist(e1_m1, s * sp))) ==
          Sym{"I5*", "II*", "I2", "I1"});

    auto [e1_4, pc] = family(FamilyName::E1, Rational(4));
    // III at s-s' -> III*
    CHECK(symbol_multiset(classify_fibers(twist(e1_4, s * (s - sp)))) ==
          Sym{"I5*", "I3", "III*", "I1"});

    auto [e1_45, pd] = family(FamilyName::E1, Rational::parse("4/5"));
    // II at 27s+5s' -> IV*, I3 at s' -> I3*
    const HomogeneousPoly ii_place = HomogeneousPoly(1, {Rational(5), Rational(27)});
    CHECK(symbol_multiset(classify_fibers(twist(e1_45, ii_place * sp))) ==
          Sym{"I5", "I3*", "I2", "IV*"});

    // twisting at a good place creates an I0*
    auto twisted = twist(e1_2, (s + sp) * sp);
    const FiberReport r = classify_fibers(twisted);
    bool has_i0star = false;
    for (const auto& entry : r.entries)
        if (entry.symbol() == "I0*" && entry.place.str() == "s+s'") has_i0star = true;
    CHECK(has_i0star);
}

TEST_CASE("report serialization") {
    auto [e, p] = family(FamilyName::E1, Rational(2));
    const FiberReport r = classify_fibers(e);
    const std::string tsv = fiber_report_tsv(r);
    CHECK(tsv.find("place\tdegree\tkodaira\tvC4\tvC6\tvDelta\n") == 0);
    CHECK(tsv.find("s\t1\tI5\t0\t0\t5") != std::string::npos);
    CHECK(tsv.find("27*s^2-18*s*s'-s'^2\t2\tI1\t0\t0\t1") != std::string::npos);
    const std::string json = fiber_report_json(r);
    CHECK(json.find("\"kodaira\": \"I5\"") != std::string::npos);
    CHECK(json.find("\"N\": 5") != std::string::npos);
    CHECK(json.find("\"d\": 12") != std::string::npos);
}
