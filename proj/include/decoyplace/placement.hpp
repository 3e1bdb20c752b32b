#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "decoyplace/inference.hpp"
#include "decoyplace/ingest.hpp"

namespace decoyplace {

/// Flat view of a corpus: one entry per stored path, plus for every AS the
/// ids of paths it intercepts (appears on as a non-origin hop).
class PathIndex {
 public:
  explicit PathIndex(const PathCorpus& corpus);

  std::size_t size() const { return paths_.size(); }
  const EstimatedPath& path(std::size_t id) const { return *paths_[id]; }
  const std::vector<const EstimatedPath*>& paths() const { return paths_; }

  /// Sorted path ids; empty for ASes that intercept nothing.
  std::span<const std::uint32_t> intercepted_by(Asn a) const;

  /// Every AS seen anywhere in the corpus, ascending.
  const std::vector<Asn>& ases() const { return ases_; }

 private:
  std::vector<const EstimatedPath*> paths_;
  std::unordered_map<Asn, std::vector<std::uint32_t>> by_as_;
  std::vector<Asn> ases_;
};

/// covered / total >= threshold, evaluated without division.
bool meets_threshold(std::size_t covered, std::size_t total, double threshold);

struct AsFrequency {
  Asn asn;
  std::size_t paths_containing = 0;
  std::size_t rank = 0;  // 1-based, dense
};

struct AsFrequencyTable {
  std::vector<AsFrequency> rows;  // rank order
  std::size_t total_paths = 0;

  const AsFrequency* find(Asn a) const;
};

/// Descending path count, ascending ASN on ties. A path's own origin is
/// not credited.
AsFrequencyTable rank_ases(const PathIndex& index);

struct PlacedAs {
  Asn asn;
  std::string country;
  std::size_t rank = 0;
  std::size_t paths_containing = 0;
  std::size_t unique_added = 0;
  std::size_t cumulative = 0;
};

struct ExcludedAs {
  Asn asn;
  std::string country;
  std::size_t rank = 0;
};

struct PlacementReport {
  std::vector<PlacedAs> selected;
  std::vector<ExcludedAs> excluded_censor;
  double threshold = 0.9;
  double coverage = 0.0;
  std::size_t covered_paths = 0;
  std::size_t total_paths = 0;
  bool threshold_reached = false;
};

inline constexpr double kDefaultThreshold = 0.9;

/// Walks ASes in rank order, skipping censor-country ASes, until the union
/// of intercepted paths reaches `threshold` of all paths.
PlacementReport find_key_ases(const AsFrequencyTable& table, const PathIndex& index, double threshold,
                              const CountryMap& countries);

struct CountryCoverage {
  std::size_t covered = 0;
  std::size_t total = 0;

  double fraction() const { return total == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(total); }
};

struct CoverageBreakdown {
  std::size_t covered = 0;
  std::size_t total = 0;
  double fraction = 0.0;
  std::map<std::string, CountryCoverage> by_origin_country;  // "??" for unmapped origins
};

CoverageBreakdown coverage_of(std::span<const Asn> as_set, const PathIndex& index, const CountryMap& countries);

/// Number of paths intercepted by at least one AS of `as_set`.
std::size_t covered_paths(std::span<const Asn> as_set, const PathIndex& index);

struct CdfRow {
  std::size_t rank = 0;
  Asn asn;
  std::size_t unique_added = 0;
  double cumulative = 0.0;
};

/// Marginal and cumulative coverage of the top_n ranked ASes, no exclusions.
std::vector<CdfRow> cdf_series(const AsFrequencyTable& table, const PathIndex& index, std::size_t top_n);

}  // namespace decoyplace
