#include "heightlab/classify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace heightlab {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kValInfinity = -1;

bool val_ge(int v, int bound) { return v == kValInfinity || v >= bound; }
bool val_eq(int v, int bound) { return v != kValInfinity && v == bound; }

// Splits a squarefree normalized factor f into pieces on which the
// valuation of p is constant, returning (piece, exact valuation) pairs.
std::vector<std::pair<HomogeneousPoly, int>> split_by_valuation(HomogeneousPoly f,
                                                                const HomogeneousPoly& p) {
    std::vector<std::pair<HomogeneousPoly, int>> out;
    if (p.is_zero()) {
        out.emplace_back(std::move(f), kValInfinity);
        return out;
    }
    HomogeneousPoly q = p;
    int v = 0;
    while (f.degree() > 0) {
        const HomogeneousPoly g = poly_gcd(f, q);
        const HomogeneousPoly exact = divide_exact(f, g);
        if (exact.degree() > 0) out.emplace_back(exact, v);
        if (g.degree() == 0) break;
        f = g;
        q = divide_exact(q, g).normalized();
        ++v;
    }
    return out;
}

std::pair<KodairaType, int> classify_one(int vd, int v4, int v6) {
    if (val_eq(v4, 0)) return {KodairaType::In, vd};
    switch (vd) {
        case 2: return {KodairaType::II, 0};
        case 3:
            if (val_eq(v4, 1)) return {KodairaType::III, 0};
            break;
        case 4:
            if (val_eq(v6, 2)) return {KodairaType::IV, 0};
            break;
        case 6:
            if (val_ge(v4, 2) && val_ge(v6, 3)) return {KodairaType::InStar, 0};
            break;
        case 8:
            if (val_eq(v4, 2) && val_eq(v6, 3)) return {KodairaType::InStar, 2};
            if (val_eq(v6, 4)) return {KodairaType::IVStar, 0};
            break;
        case 9:
            if (val_eq(v4, 2) && val_eq(v6, 3)) return {KodairaType::InStar, 3};
            if (val_eq(v4, 3)) return {KodairaType::IIIStar, 0};
            break;
        case 10:
            if (val_eq(v4, 2) && val_eq(v6, 3)) return {KodairaType::InStar, 4};
            if (val_eq(v6, 5)) return {KodairaType::IIStar, 0};
            break;
        default:
            if (vd >= 7 && val_eq(v4, 2) && val_eq(v6, 3)) return {KodairaType::InStar, vd - 6};
            break;
    }
    throw CurveError(CurveError::Kind::NonMinimal,
                     "classify: no Kodaira type matches valuations (vC4=" + std::to_string(v4) +
                         ", vC6=" + std::to_string(v6) + ", vDelta=" + std::to_string(vd) + ")");
}

}  // namespace

FiberReport classify_fibers(const FFCurve& e) {
    FiberReport report;
    report.n = e.n();
    report.total_degree = 0;

    for (const auto& [v_delta, factor] : squarefree_decomposition(e.discriminant())) {
        for (const auto& [piece4, v4] : split_by_valuation(factor, e.c4())) {
            for (const auto& [piece, v6] : split_by_valuation(piece4, e.c6())) {
                FiberEntry entry;
                entry.place = piece;
                entry.place_degree = piece.degree();
                entry.v_c4 = v4;
                entry.v_c6 = v6;
                entry.v_delta = v_delta;
                std::tie(entry.type, entry.nu) = classify_one(v_delta, v4, v6);
                report.entries.push_back(std::move(entry));
            }
        }
    }

    std::sort(report.entries.begin(), report.entries.end(),
              [](const FiberEntry& a, const FiberEntry& b) {
                  if (a.v_delta != b.v_delta) return a.v_delta > b.v_delta;
                  return a.place.str() < b.place.str();
              });

    for (const auto& entry : report.entries) {
        report.total_degree += Int(entry.place_degree) * fiber_degree(entry.type, entry.nu);
        report.conductor_degree += entry.place_degree * fiber_conductor(entry.type, entry.nu);
    }
    if (report.total_degree != Int(12 * e.n()))
        throw std::logic_error("classify: fiber degrees do not sum to 12n");
    return report;
}

std::string fiber_report_tsv(const FiberReport& report) {
    std::ostringstream out;
    out << "place\tdegree\tkodaira\tvC4\tvC6\tvDelta\n";
    for (const auto& entry : report.entries) {
        out << entry.place.str() << '\t' << entry.place_degree << '\t' << entry.symbol() << '\t'
            << entry.v_c4 << '\t' << entry.v_c6 << '\t' << entry.v_delta << '\n';
    }
    return out.str();
}

std::string fiber_report_json(const FiberReport& report) {
    Json j;
    j["n"] = report.n;
    Json arr = Json::array();
    for (const auto& entry : report.entries) {
        Json row;
        row["place"] = entry.place.str();
        row["degree"] = entry.place_degree;
        row["kodaira"] = entry.symbol();
        row["vC4"] = entry.v_c4;
        row["vC6"] = entry.v_c6;
        row["vDelta"] = entry.v_delta;
        arr.push_back(row);
    }
    j["fibers"] = arr;
    j["d"] = report.total_degree.get_si();
    j["N"] = report.conductor_degree;
    return j.dump(2) + "\n";
}

}  // namespace heightlab
