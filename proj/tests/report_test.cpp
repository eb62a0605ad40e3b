#include <doctest.h>

#include "heightlab/golden.hpp"
#include "heightlab/report.hpp"

using namespace heightlab;

namespace {

SearchReport n3_report() {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.mode = SearchMode::GenusZero;
    cfg.max_multiple = 9;
    return run_search(cfg);
}

}  // namespace

TEST_CASE("tsv carries the golden n=3 minimal row") {
    const std::string tsv = search_report_tsv(n3_report());
    CHECK(tsv.rfind("hhat\tgamma\tN\td\tintegral_run\tnaive_heights\tverdict\n", 0) == 0);
    const auto first_row = tsv.substr(tsv.find('\n') + 1);
    CHECK(first_row.rfind("23/840\t[1/8]+[3/7]+[1/5]+[1/4]+2[1/3]+[1/2]+4[0]\t11\t36\t9\t", 0) ==
          0);
    CHECK(first_row.find("\tfeasible\n") != std::string::npos);
}

TEST_CASE("empty reports are header-only") {
    SearchConfig cfg;
    cfg.n = 1;
    cfg.mode = SearchMode::GenusZero;
    cfg.height_bound = Rational(1, 1000);
    const SearchReport report = run_search(cfg);
    CHECK(report.ranked.empty());
    CHECK(search_report_tsv(report) == "hhat\tgamma\tN\td\tintegral_run\tnaive_heights\tverdict\n");
    CHECK(report.minimal_feasible() == nullptr);
}

TEST_CASE("json round trips byte for byte") {
    const SearchReport report = n3_report();
    const std::string once = search_report_json(report);
    const SearchReport parsed = parse_search_report_json(once);
    CHECK(search_report_json(parsed) == once);
    // and the parsed content matches
    REQUIRE(parsed.ranked.size() == report.ranked.size());
    CHECK(parsed.ranked[0].hhat == report.ranked[0].hhat);
    CHECK(parsed.ranked[0].gamma == report.ranked[0].gamma);
    CHECK(parsed.counts.candidates_tested == report.counts.candidates_tested);
    CHECK(parsed.height_bound == report.height_bound);
    CHECK(parsed.max_integral_run == report.max_integral_run);
}

TEST_CASE("rationals serialize reduced, never as decimals") {
    const std::string json = search_report_json(n3_report());
    CHECK(json.find("23/840") != std::string::npos);
    CHECK(json.find('.') == std::string::npos);
    CHECK(json.find("e-") == std::string::npos);
}
