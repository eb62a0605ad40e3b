#pragma once

#include <vector>

#include "heightlab/classify.hpp"
#include "heightlab/orbit.hpp"

namespace heightlab {

struct HeightData {
    Rational hhat;
    Gamma gamma;

    friend bool operator==(const HeightData& a, const HeightData& b) {
        return a.hhat == b.hhat && a.gamma == b.gamma;
    }
};

/// Recovers (hhat, gamma) from group-law naive heights: classifies the
/// fibers, brute-forces the component of P at each refined place, and
/// keeps every assignment whose hhat := h(P) + lambda_1(gamma) satisfies
/// h(mP) = m^2 hhat - lambda_m(gamma) for all m <= m_check. Survivors
/// are deduplicated and sorted by (hhat, gamma). Throws when some mP
/// vanishes (torsion) or when no assignment survives.
std::vector<HeightData> infer_height_data(const FFCurve& e, const FFPoint& p, long m_check);

}  // namespace heightlab
