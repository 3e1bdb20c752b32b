#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "decoyplace/ingest.hpp"
#include "decoyplace/placement.hpp"
#include "decoyplace/topology.hpp"

namespace decoyplace {

struct CollateralReport {
  std::string country;
  std::size_t paths_involving = 0;  // paths with at least one AS of the country
  std::size_t foreign_origin = 0;   // ... whose origin is outside it
  std::size_t reentrant = 0;        // ... that leave the country and come back
  std::optional<double> fraction;   // foreign_origin / paths_involving; unset when no path is involved
};

/// Throws UsageError if no AS maps to `country_code`. Paths containing an
/// AS of unknown country are never counted as reentrant.
CollateralReport collateral_damage(const PathIndex& index, const CountryMap& countries,
                                   const std::string& country_code);

/// 1-based ranks, tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation of the average ranks of `x` and `y`. Throws
/// UsageError for unequal lengths, n < 2 or a constant input.
double spearman_rank(std::span<const double> x, std::span<const double> y);

struct ConeBypassRow {
  Asn asn;
  double through_self = 0.0;       // paths with the AS anywhere on them
  double through_1hop_only = 0.0;  // paths avoiding it but crossing a direct customer
  double through_neither = 0.0;
  std::size_t cone_size = 0;
};

ConeBypassRow cone_bypass(const PathIndex& index, const RelationshipGraph& g, Asn asn);

struct ConeRankComparison {
  std::vector<Asn> ases;  // transit ASes: nonempty cone and ranked by frequency
  std::vector<double> path_counts;
  std::vector<double> cone_sizes;
  std::optional<double> spearman;  // unset when undefined (fewer than 2 ASes, constant input)
};

ConeRankComparison compare_frequency_and_cone(const AsFrequencyTable& table, const RelationshipGraph& g);

inline constexpr std::uint64_t kDefaultRouterCostUsd = 885'000;

std::uint64_t cost_estimate(std::uint64_t total_routers, std::uint64_t unit_cost_usd = kDefaultRouterCostUsd);

}  // namespace decoyplace
