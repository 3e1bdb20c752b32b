#include "decoyplace/outputs.hpp"

#include <cstdio>
#include <ostream>
#include <set>

namespace decoyplace {

using nlohmann::ordered_json;

std::string format_fraction(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void write_ranking_csv(std::ostream& out, const AsFrequencyTable& table, const CountryMap& countries) {
  out << "asn,country,paths,rank\n";
  for (const auto& r : table.rows) {
    out << r.asn.str() << ',' << countries.country_label(r.asn) << ',' << r.paths_containing << ',' << r.rank << '\n';
  }
}

void write_cdf_csv(std::ostream& out, std::span<const CdfRow> rows) {
  out << "rank,asn,unique_added,cumulative\n";
  for (const auto& r : rows) {
    out << r.rank << ',' << r.asn.str() << ',' << r.unique_added << ',' << format_fraction(r.cumulative) << '\n';
  }
}

void write_country_coverage_csv(std::ostream& out, const CoverageBreakdown& coverage) {
  out << "country,covered,total,fraction\n";
  for (const auto& [cc, c] : coverage.by_origin_country) {
    out << cc << ',' << c.covered << ',' << c.total << ',' << format_fraction(c.fraction()) << '\n';
  }
}

void write_routers_csv(std::ostream& out, const RouterCensus& census, const RouterPlacement& placement) {
  std::set<RouterId> selected(placement.selected.begin(), placement.selected.end());
  out << "router,class,trace_count,selected\n";
  for (const auto& r : census.records) {
    out << r.id.value << ',' << to_string(r.classification) << ',' << r.trace_count << ','
        << (selected.contains(r.id) ? 1 : 0) << '\n';
  }
}

void write_collateral_csv(std::ostream& out, std::span<const CollateralReport> reports) {
  out << "country,paths_involving,foreign_origin,fraction,reentrant\n";
  for (const auto& r : reports) {
    out << r.country << ',' << r.paths_involving << ',' << r.foreign_origin << ','
        << (r.fraction ? format_fraction(*r.fraction) : "undefined") << ',' << r.reentrant << '\n';
  }
}

void write_cone_bypass_csv(std::ostream& out, std::span<const ConeBypassRow> rows) {
  out << "asn,cone_size,pct_through_self,pct_through_1hop_only,pct_through_neither\n";
  for (const auto& r : rows) {
    out << r.asn.str() << ',' << r.cone_size << ',' << format_fraction(100.0 * r.through_self) << ','
        << format_fraction(100.0 * r.through_1hop_only) << ',' << format_fraction(100.0 * r.through_neither) << '\n';
  }
}

ordered_json to_json(const ParseStats& stats) {
  ordered_json j{{"considered", stats.considered},       {"accepted", stats.accepted},
                 {"loops_dropped", stats.loops_dropped}, {"duplicates", stats.duplicates},
                 {"as_trans", stats.as_trans},           {"rejected", stats.rejects.size()}};
  auto rejects = ordered_json::array();
  for (const auto& r : stats.rejects) rejects.push_back({{"line", r.line}, {"reason", r.reason}});
  j["rejects"] = std::move(rejects);
  return j;
}

ordered_json to_json(const PlacementReport& report, const CoverageBreakdown& coverage) {
  ordered_json j;
  j["threshold"] = report.threshold;
  j["coverage"] = report.coverage;
  j["threshold_reached"] = report.threshold_reached;
  j["covered_paths"] = report.covered_paths;
  j["total_paths"] = report.total_paths;
  auto selected = ordered_json::array();
  for (const auto& s : report.selected) {
    selected.push_back({{"asn", s.asn.value},
                        {"country", s.country},
                        {"rank", s.rank},
                        {"paths", s.paths_containing},
                        {"unique_added", s.unique_added},
                        {"cumulative", s.cumulative}});
  }
  j["selected"] = std::move(selected);
  auto excluded = ordered_json::array();
  for (const auto& e : report.excluded_censor) {
    excluded.push_back({{"asn", e.asn.value}, {"country", e.country}, {"rank", e.rank}});
  }
  j["excluded_censor"] = std::move(excluded);
  auto by_country = ordered_json::object();
  for (const auto& [cc, c] : coverage.by_origin_country) {
    by_country[cc] = {{"covered", c.covered}, {"total", c.total}, {"fraction", c.fraction()}};
  }
  j["coverage_by_origin_country"] = std::move(by_country);
  return j;
}

ordered_json to_json(const RouterPlacement& p) {
  auto ids = [](const std::vector<RouterId>& v) {
    auto a = ordered_json::array();
    for (const auto& id : v) a.push_back(id.value);
    return a;
  };
  return {{"asn", p.asn.value},
          {"edge", p.edge},
          {"core", p.core},
          {"heavy_hitters", p.heavy_hitters},
          {"required", p.required},
          {"selected_set", p.edge_set_selected ? "edge" : "heavy_hitter"},
          {"threshold", p.threshold},
          {"traces", p.traces},
          {"trace_coverage", p.trace_coverage},
          {"selected", ids(p.selected)}};
}

ordered_json to_json(const ConeRankComparison& c) {
  ordered_json j;
  j["transit_ases"] = c.ases.size();
  j["spearman"] = c.spearman ? ordered_json(*c.spearman) : ordered_json(nullptr);
  j["defined"] = c.spearman.has_value();
  auto rows = ordered_json::array();
  for (std::size_t i = 0; i < c.ases.size(); ++i) {
    rows.push_back({{"asn", c.ases[i].value}, {"paths", c.path_counts[i]}, {"cone_size", c.cone_sizes[i]}});
  }
  j["ases"] = std::move(rows);
  return j;
}

ordered_json inference_stats_json(const PathCorpus& corpus) {
  ordered_json j;
  auto slices = ordered_json::array();
  for (const auto& s : corpus.slices) {
    auto homes = ordered_json::array();
    for (auto h : s.homes) homes.push_back(h.value);
    slices.push_back({{"prefix", s.prefix.str()},
                      {"label", s.label},
                      {"homes", std::move(homes)},
                      {"sure_paths", s.sure_paths},
                      {"covered_ases", s.paths.size()},
                      {"eligible_ases", s.eligible_ases},
                      {"coverage", s.coverage()},
                      {"rounds", s.rounds}});
  }
  j["prefixes"] = std::move(slices);
  j["total_paths"] = corpus.path_count();
  j["warnings"] = corpus.warnings;
  return j;
}

}  // namespace decoyplace
