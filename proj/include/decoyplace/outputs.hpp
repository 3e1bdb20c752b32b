#pragma once

// CSV and JSON renderings of the analysis results.

#include <iosfwd>
#include <span>
#include <string>

#include "json.hpp"

#include "decoyplace/analysis.hpp"
#include "decoyplace/inference.hpp"
#include "decoyplace/placement.hpp"
#include "decoyplace/routermap.hpp"

namespace decoyplace {

/// Fixed six-decimal rendering used in every CSV.
std::string format_fraction(double v);

void write_ranking_csv(std::ostream& out, const AsFrequencyTable& table, const CountryMap& countries);
void write_cdf_csv(std::ostream& out, std::span<const CdfRow> rows);
void write_country_coverage_csv(std::ostream& out, const CoverageBreakdown& coverage);
void write_routers_csv(std::ostream& out, const RouterCensus& census, const RouterPlacement& placement);
void write_collateral_csv(std::ostream& out, std::span<const CollateralReport> reports);
void write_cone_bypass_csv(std::ostream& out, std::span<const ConeBypassRow> rows);

nlohmann::ordered_json to_json(const ParseStats& stats);
nlohmann::ordered_json to_json(const PlacementReport& report, const CoverageBreakdown& coverage);
nlohmann::ordered_json to_json(const RouterPlacement& placement);
nlohmann::ordered_json to_json(const ConeRankComparison& comparison);
nlohmann::ordered_json inference_stats_json(const PathCorpus& corpus);

}  // namespace decoyplace
