#include "decoyplace/placement.hpp"

#include <algorithm>

namespace decoyplace {

PathIndex::PathIndex(const PathCorpus& corpus) {
  std::vector<Asn> seen;
  for (const auto& slice : corpus.slices) {
    for (const auto& [origin, p] : slice.paths) {
      auto id = static_cast<std::uint32_t>(paths_.size());
      paths_.push_back(&p);
      seen.insert(seen.end(), p.hops.begin(), p.hops.end());
      // paths are loop-free, so each AS is listed at most once per path
      for (std::size_t i = 1; i < p.hops.size(); ++i) by_as_[p.hops[i]].push_back(id);
    }
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  ases_ = std::move(seen);
}

std::span<const std::uint32_t> PathIndex::intercepted_by(Asn a) const {
  auto it = by_as_.find(a);
  if (it == by_as_.end()) return {};
  return it->second;
}

bool meets_threshold(std::size_t covered, std::size_t total, double threshold) {
  if (total == 0) return false;
  return static_cast<double>(covered) >= threshold * static_cast<double>(total);
}

const AsFrequency* AsFrequencyTable::find(Asn a) const {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const AsFrequency& r) { return r.asn == a; });
  return it == rows.end() ? nullptr : &*it;
}

AsFrequencyTable rank_ases(const PathIndex& index) {
  AsFrequencyTable table;
  table.total_paths = index.size();
  for (auto a : index.ases()) table.rows.push_back({a, index.intercepted_by(a).size(), 0});
  std::stable_sort(table.rows.begin(), table.rows.end(), [](const AsFrequency& x, const AsFrequency& y) {
    return x.paths_containing > y.paths_containing;
  });
  for (std::size_t i = 0; i < table.rows.size(); ++i) table.rows[i].rank = i + 1;
  return table;
}

namespace {

std::size_t mark(std::span<const std::uint32_t> ids, std::vector<bool>& covered) {
  std::size_t added = 0;
  for (auto id : ids) {
    if (!covered[id]) {
      covered[id] = true;
      ++added;
    }
  }
  return added;
}

}  // namespace

PlacementReport find_key_ases(const AsFrequencyTable& table, const PathIndex& index, double threshold,
                              const CountryMap& countries) {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw UsageError("threshold must lie in (0, 1]");
  PlacementReport report;
  report.threshold = threshold;
  report.total_paths = index.size();

  std::vector<bool> covered(index.size(), false);
  std::size_t cumulative = 0;
  for (const auto& row : table.rows) {
    if (meets_threshold(cumulative, index.size(), threshold)) break;
    if (row.paths_containing == 0) break;
    if (countries.is_censor(row.asn)) {
      report.excluded_censor.push_back({row.asn, countries.country_label(row.asn), row.rank});
      continue;
    }
    auto added = mark(index.intercepted_by(row.asn), covered);
    cumulative += added;
    report.selected.push_back(
        {row.asn, countries.country_label(row.asn), row.rank, row.paths_containing, added, cumulative});
  }
  report.covered_paths = cumulative;
  report.coverage = index.size() == 0 ? 0.0 : static_cast<double>(cumulative) / static_cast<double>(index.size());
  report.threshold_reached = meets_threshold(cumulative, index.size(), threshold);
  return report;
}

std::size_t covered_paths(std::span<const Asn> as_set, const PathIndex& index) {
  std::vector<bool> covered(index.size(), false);
  std::size_t total = 0;
  for (auto a : as_set) total += mark(index.intercepted_by(a), covered);
  return total;
}

CoverageBreakdown coverage_of(std::span<const Asn> as_set, const PathIndex& index, const CountryMap& countries) {
  std::vector<bool> covered(index.size(), false);
  CoverageBreakdown out;
  for (auto a : as_set) out.covered += mark(index.intercepted_by(a), covered);
  out.total = index.size();
  out.fraction = out.total == 0 ? 0.0 : static_cast<double>(out.covered) / static_cast<double>(out.total);
  for (std::size_t id = 0; id < index.size(); ++id) {
    auto& cc = out.by_origin_country[countries.country_label(index.path(id).origin())];
    ++cc.total;
    if (covered[id]) ++cc.covered;
  }
  return out;
}

std::vector<CdfRow> cdf_series(const AsFrequencyTable& table, const PathIndex& index, std::size_t top_n) {
  if (top_n == 0) throw UsageError("cdf_series: top_n must be at least 1");
  std::vector<bool> covered(index.size(), false);
  std::vector<CdfRow> rows;
  std::size_t cumulative = 0;
  for (const auto& r : table.rows) {
    if (rows.size() == top_n) break;
    auto added = mark(index.intercepted_by(r.asn), covered);
    cumulative += added;
    rows.push_back({r.rank, r.asn, added,
                    index.size() == 0 ? 0.0 : static_cast<double>(cumulative) / static_cast<double>(index.size())});
  }
  return rows;
}

}  // namespace decoyplace
