#include <doctest.h>

#include "heightlab/golden.hpp"
#include "heightlab/infer.hpp"

using namespace heightlab;

TEST_CASE("e1(2) height data is recovered uniquely") {
    auto [e, p] = family(FamilyName::E1, Rational(2));
    const auto survivors = infer_height_data(e, p, 12);
    REQUIRE(survivors.size() == 1);
    CHECK(survivors[0] == golden_minimum(1).data);
}

TEST_CASE("degenerations keep the same height data") {
    for (const char* q : {"4/5", "-1", "4"}) {
        auto [e, p] = family(FamilyName::E1, Rational::parse(q));
        const auto survivors = infer_height_data(e, p, 12);
        bool found = false;
        for (const auto& s : survivors)
            if (s.hhat == golden_minimum(1).data.hhat) found = true;
        CHECK(found);
    }
}

TEST_CASE("e2 and e3 height data") {
    auto [e2, p2] = family(FamilyName::E2, Rational(3));
    const auto s2 = infer_height_data(e2, p2, 16);
    REQUIRE(!s2.empty());
    bool f2 = false;
    for (const auto& s : s2)
        if (s == golden_minimum(2).data) f2 = true;
    CHECK(f2);

    auto [e3, p3] = family(FamilyName::E3, Rational(2));
    const auto s3 = infer_height_data(e3, p3, 18);
    bool f3 = false;
    for (const auto& s : s3)
        if (s == golden_minimum(3).data) f3 = true;
    CHECK(f3);
}

TEST_CASE("input validation") {
    auto [e, p] = family(FamilyName::E1, Rational(2));
    CHECK_THROWS_AS(infer_height_data(e, FFPoint::zero(), 12), std::domain_error);
    CHECK_THROWS_AS(infer_height_data(e, p, 0), std::domain_error);
}
