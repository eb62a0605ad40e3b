#pragma once

#include <vector>

#include "heightlab/curve.hpp"
#include "heightlab/infer.hpp"
#include "heightlab/qcurve.hpp"

namespace heightlab {

/// Reference (hhat, gamma) for the minimal configurations at n = 1, 2, 3,
/// together with the maximal integral-multiple run each one realizes.
struct GoldenMinimum {
    long n;
    HeightData data;
    long run;
};

const GoldenMinimum& golden_minimum(long n);          // n in {1, 2, 3}
const GoldenMinimum& golden_for_family(FamilyName f);

/// The n = 2 configuration of smaller height that the Moebius inequality
/// rules out (hhat = 4/165).
const HeightData& golden_n2_excluded();

/// The n = 3 configuration with hhat = 229/10920 that the Moebius
/// inequality rules out.
const HeightData& golden_n3_moebius_excluded();

/// The five n = 3 configurations below 23/840 that survive every filter
/// but have too few fibers for a genus-zero base; ascending hhat.
const std::vector<HeightData>& golden_n3_below_minimum();

/// The constant curve over Q with fourteen consecutive integral multiples
/// of (11480, 1217300).
const QCurve& e14_curve();
const QPoint& e14_point();

}  // namespace heightlab
