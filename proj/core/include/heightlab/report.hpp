#pragma once

#include <string>

#include "heightlab/search.hpp"

namespace heightlab {

/// One row per feasible candidate, ranked ascending. Columns:
/// hhat, gamma, N, d, integral_run, naive_heights (space-separated), verdict.
std::string search_report_tsv(const SearchReport& report);

/// Deterministic JSON with the same field names as the TSV columns,
/// plus the config echo, counts, and run champions.
std::string search_report_json(const SearchReport& report);

/// Inverse of search_report_json (round-trips byte-for-byte).
SearchReport parse_search_report_json(const std::string& text);

}  // namespace heightlab
