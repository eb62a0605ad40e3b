#include "heightlab/infer.hpp"

#include <algorithm>

namespace heightlab {

namespace {

// All gamma contributions a single refined place can make: one option per
// legal component choice, scaled by the place degree (conjugate fibers
// share the component data).
std::vector<Gamma> place_options(const FiberEntry& entry) {
    std::vector<Gamma> out;
    for (const auto& fc : legal_components(entry.type, entry.nu)) {
        const Gamma one = fiber_to_gamma(fc);
        Gamma scaled;
        for (int i = 0; i < entry.place_degree; ++i) scaled += one;
        out.push_back(std::move(scaled));
    }
    return out;
}

}  // namespace

std::vector<HeightData> infer_height_data(const FFCurve& e, const FFPoint& p, long m_check) {
    if (p.is_zero()) throw std::domain_error("infer_height_data: zero point");
    if (m_check < 1) throw std::domain_error("infer_height_data: m_check must be >= 1");

    std::vector<Rational> heights(static_cast<size_t>(m_check) + 1);
    FFPoint mp = p;
    for (long m = 1; m <= m_check; ++m) {
        if (mp.is_zero())
            throw std::domain_error("infer_height_data: torsion point (mP = 0 for m = " +
                                    std::to_string(m) + ")");
        heights[static_cast<size_t>(m)] = Rational(naive_height(e, mp));
        if (m < m_check) mp = point_add(e, mp, p);
    }

    const FiberReport fibers = classify_fibers(e);
    std::vector<std::vector<Gamma>> options;
    options.reserve(fibers.entries.size());
    for (const auto& entry : fibers.entries) options.push_back(place_options(entry));

    std::vector<HeightData> survivors;
    std::vector<size_t> pick(options.size(), 0);

    auto test_assignment = [&]() {
        Gamma gamma;
        for (size_t i = 0; i < options.size(); ++i) gamma += options[i][pick[i]];
        const Rational hhat = heights[1] + gamma.lambda(1);
        for (long m = 2; m <= m_check; ++m) {
            if (Rational(m) * Rational(m) * hhat - gamma.lambda(m) != heights[static_cast<size_t>(m)])
                return;
        }
        survivors.push_back(HeightData{hhat, std::move(gamma)});
    };

    // Odometer over the per-place component choices.
    for (;;) {
        test_assignment();
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }

    std::sort(survivors.begin(), survivors.end(), [](const HeightData& a, const HeightData& b) {
        if (a.hhat != b.hhat) return a.hhat < b.hhat;
        return a.gamma.str() < b.gamma.str();
    });
    survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());

    if (survivors.empty())
        throw std::runtime_error(
            "infer_height_data: no component assignment matches the computed naive heights");
    return survivors;
}

}  // namespace heightlab
