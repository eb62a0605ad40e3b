#include "heightlab/report.hpp"

#include <sstream>

#include <json.hpp>

namespace heightlab {

namespace {

using Json = nlohmann::ordered_json;

std::string heights_field(const std::vector<Rational>& hs) {
    std::ostringstream out;
    for (size_t i = 0; i < hs.size(); ++i) {
        if (i) out << ' ';
        out << hs[i].str();
    }
    return out.str();
}

Json candidate_json(const Candidate& c) {
    Json j;
    j["hhat"] = c.hhat.str();
    j["gamma"] = c.gamma.str();
    j["N"] = c.parts;
    j["d"] = c.degree.get_si();
    j["integral_run"] = c.integral_run;
    Json hs = Json::array();
    for (const auto& h : c.naive_seq) hs.push_back(h.str());
    j["naive_heights"] = hs;
    j["verdict"] = c.verdict.str();
    return j;
}

Candidate candidate_from_json(const Json& j) {
    Candidate c;
    c.hhat = Rational::parse(j.at("hhat").get<std::string>());
    c.gamma = Gamma::parse(j.at("gamma").get<std::string>());
    c.parts = j.at("N").get<long>();
    c.degree = Int(j.at("d").get<long>());
    c.integral_run = j.at("integral_run").get<long>();
    for (const auto& h : j.at("naive_heights"))
        c.naive_seq.push_back(Rational::parse(h.get<std::string>()));
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "feasible")
        throw std::invalid_argument("report: only feasible rows are serialized");
    c.verdict = Verdict{true, RejectReason::Conductor, 0, 0};
    return c;
}

const char* mode_name(SearchMode m) {
    return m == SearchMode::GenusZero ? "genus-zero" : "any-genus";
}

}  // namespace

std::string search_report_tsv(const SearchReport& report) {
    std::ostringstream out;
    out << "hhat\tgamma\tN\td\tintegral_run\tnaive_heights\tverdict\n";
    for (const auto& c : report.ranked) {
        out << c.hhat.str() << '\t' << c.gamma.str() << '\t' << c.parts << '\t' << c.degree
            << '\t' << c.integral_run << '\t' << heights_field(c.naive_seq) << '\t'
            << c.verdict.str() << '\n';
    }
    return out.str();
}

std::string search_report_json(const SearchReport& report) {
    Json j;
    Json cfg;
    cfg["n"] = report.config.n;
    cfg["mode"] = mode_name(report.config.mode);
    cfg["height_bound"] =
        report.config.height_bound ? Json(report.config.height_bound->str()) : Json(nullptr);
    cfg["max_multiple"] =
        report.config.max_multiple ? Json(*report.config.max_multiple) : Json(nullptr);
    cfg["moebius"] =
        report.config.moebius_filter ? Json(*report.config.moebius_filter) : Json(nullptr);
    cfg["jobs"] = report.config.jobs;
    j["config"] = cfg;
    j["height_bound"] = report.height_bound.str();
    j["max_integral_run"] = report.max_integral_run;

    Json counts;
    counts["gammas_enumerated"] = report.counts.gammas_enumerated;
    counts["candidates_tested"] = report.counts.candidates_tested;
    counts["rejected_conductor"] = report.counts.rejected_conductor;
    counts["rejected_nonintegral"] = report.counts.rejected_nonintegral;
    counts["rejected_negative"] = report.counts.rejected_negative;
    counts["rejected_monotonic"] = report.counts.rejected_monotonic;
    counts["rejected_moebius"] = report.counts.rejected_moebius;
    counts["feasible"] = report.counts.feasible;
    j["counts"] = counts;

    Json ranked = Json::array();
    for (const auto& c : report.ranked) ranked.push_back(candidate_json(c));
    j["candidates"] = ranked;

    Json champs = Json::array();
    for (const auto& c : report.run_champions) champs.push_back(candidate_json(c));
    j["run_champions"] = champs;

    return j.dump(2) + "\n";
}

SearchReport parse_search_report_json(const std::string& text) {
    const Json j = Json::parse(text);
    SearchReport r;
    const Json& cfg = j.at("config");
    r.config.n = cfg.at("n").get<long>();
    r.config.mode = cfg.at("mode").get<std::string>() == "genus-zero" ? SearchMode::GenusZero
                                                                      : SearchMode::AnyGenus;
    if (!cfg.at("height_bound").is_null())
        r.config.height_bound = Rational::parse(cfg.at("height_bound").get<std::string>());
    if (!cfg.at("max_multiple").is_null())
        r.config.max_multiple = cfg.at("max_multiple").get<long>();
    if (!cfg.at("moebius").is_null()) r.config.moebius_filter = cfg.at("moebius").get<bool>();
    r.config.jobs = cfg.at("jobs").get<long>();

    r.height_bound = Rational::parse(j.at("height_bound").get<std::string>());
    r.max_integral_run = j.at("max_integral_run").get<long>();

    const Json& counts = j.at("counts");
    r.counts.gammas_enumerated = counts.at("gammas_enumerated").get<unsigned long long>();
    r.counts.candidates_tested = counts.at("candidates_tested").get<unsigned long long>();
    r.counts.rejected_conductor = counts.at("rejected_conductor").get<unsigned long long>();
    r.counts.rejected_nonintegral = counts.at("rejected_nonintegral").get<unsigned long long>();
    r.counts.rejected_negative = counts.at("rejected_negative").get<unsigned long long>();
    r.counts.rejected_monotonic = counts.at("rejected_monotonic").get<unsigned long long>();
    r.counts.rejected_moebius = counts.at("rejected_moebius").get<unsigned long long>();
    r.counts.feasible = counts.at("feasible").get<unsigned long long>();

    for (const auto& c : j.at("candidates")) r.ranked.push_back(candidate_from_json(c));
    for (const auto& c : j.at("run_champions")) r.run_champions.push_back(candidate_from_json(c));
    return r;
}

}  // namespace heightlab
