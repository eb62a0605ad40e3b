#include "heightlab/golden.hpp"

#include <stdexcept>

namespace heightlab {

namespace {

HeightData make(const char* hhat, const char* gamma) {
    return HeightData{Rational::parse(hhat), Gamma::parse(gamma)};
}

}  // namespace

const GoldenMinimum& golden_minimum(long n) {
    static const GoldenMinimum g1{1, make("1/30", "[1/5]+[1/3]+[1/2]+2[0]"), 6};
    static const GoldenMinimum g2{2, make("11/420", "[1/7]+[2/5]+[1/4]+[1/3]+[1/2]+3[0]"), 8};
    static const GoldenMinimum g3{
        3, make("23/840", "[1/8]+[3/7]+[1/5]+[1/4]+2[1/3]+[1/2]+4[0]"), 9};
    switch (n) {
        case 1: return g1;
        case 2: return g2;
        case 3: return g3;
        default: throw std::invalid_argument("golden_minimum: only n = 1, 2, 3");
    }
}

const GoldenMinimum& golden_for_family(FamilyName f) {
    switch (f) {
        case FamilyName::E1: return golden_minimum(1);
        case FamilyName::E2: return golden_minimum(2);
        case FamilyName::E3: return golden_minimum(3);
    }
    throw std::logic_error("golden_for_family: unreachable");
}

const HeightData& golden_n2_excluded() {
    static const HeightData d = make("4/165", "[1/11]+2[2/5]+[1/3]");
    return d;
}

const HeightData& golden_n3_moebius_excluded() {
    static const HeightData d = make("229/10920", "[1/13]+[3/8]+[3/7]+[1/5]+[1/3]");
    return d;
}

const std::vector<HeightData>& golden_n3_below_minimum() {
    static const std::vector<HeightData> rows = {
        make("23/1144", "[1/13]+[3/11]+[3/8]+2[1/2]"),
        make("17/728", "[1/13]+[3/8]+[2/7]+[1/4]+2[1/2]"),
        make("65/2772", "[1/11]+[4/9]+[2/7]+[1/4]+[1/3]+2[0]"),
        make("7/264", "[1/12]+[3/11]+[3/8]+2[1/2]+[0]"),
        make("41/1540", "[1/11]+[3/7]+2[1/5]+[1/4]+2[1/2]"),
    };
    return rows;
}

const QCurve& e14_curve() {
    static const QCurve e{Rational(1), Rational(0), Rational(0),
                          Rational::parse("-139761580"), Rational::parse("1587303040400")};
    return e;
}

const QPoint& e14_point() {
    static const QPoint p = QPoint::at(Rational::parse("11480"), Rational::parse("1217300"));
    return p;
}

}  // namespace heightlab
