#pragma once

#include <vector>

#include "heightlab/curve.hpp"
#include "heightlab/fiber.hpp"

namespace heightlab {

/// One refined place of bad reduction: a squarefree normalized factor of
/// the discriminant along which the valuations of c4, c6 and the
/// discriminant are constant. A factor of degree k bundles k conjugate
/// geometric fibers of the same Kodaira type.
struct FiberEntry {
    HomogeneousPoly place;
    int place_degree = 1;
    KodairaType type = KodairaType::In;
    int nu = 0;
    int v_c4 = 0;  // -1 means c4 is identically zero
    int v_c6 = 0;  // -1 means c6 is identically zero
    int v_delta = 0;

    std::string symbol() const { return kodaira_symbol(type, nu); }
};

struct FiberReport {
    long n = 1;
    std::vector<FiberEntry> entries;  // v_delta descending, then place string
    Int total_degree;                 // sum of place_degree * d_v = 12n
    long conductor_degree = 0;        // N = sum of place_degree * N_v
};

/// Splits the discriminant into refined places and classifies each by the
/// characteristic-zero valuation criteria. Throws CurveError(NonMinimal)
/// when the valuations match no Kodaira type.
FiberReport classify_fibers(const FFCurve& e);

std::string fiber_report_tsv(const FiberReport& report);
std::string fiber_report_json(const FiberReport& report);

}  // namespace heightlab
