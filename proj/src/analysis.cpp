#include "decoyplace/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace decoyplace {

CollateralReport collateral_damage(const PathIndex& index, const CountryMap& countries,
                                   const std::string& country_code) {
  if (!countries.has_code(country_code)) throw UsageError("no AS is mapped to country " + country_code);
  CollateralReport out;
  out.country = country_code;

  enum class Where { In, Out, Unknown };
  std::vector<Where> seq;
  for (const auto* p : index.paths()) {
    seq.clear();
    bool involved = false;
    for (auto a : p->hops) {
      auto cc = countries.country_of(a);
      auto w = !cc ? Where::Unknown : (*cc == country_code ? Where::In : Where::Out);
      involved = involved || w == Where::In;
      seq.push_back(w);
    }
    if (!involved) continue;
    ++out.paths_involving;
    if (seq.front() != Where::In) ++out.foreign_origin;
    if (std::find(seq.begin(), seq.end(), Where::Unknown) != seq.end()) continue;
    // in ... out ... in
    auto first_in = std::find(seq.begin(), seq.end(), Where::In);
    auto out_after = std::find(first_in, seq.end(), Where::Out);
    if (std::find(out_after, seq.end(), Where::In) != seq.end()) ++out.reentrant;
  }
  if (out.paths_involving > 0) {
    out.fraction = static_cast<double>(out.foreign_origin) / static_cast<double>(out.paths_involving);
  }
  return out;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    auto j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share rank mean of (i+1)..(j+1)
    double rank = static_cast<double>(i + j + 2) / 2.0;
    for (auto k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman_rank(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw UsageError("spearman_rank: sequences differ in length");
  if (x.size() < 2) throw UsageError("undefined correlation: fewer than two observations");
  auto rx = average_ranks(x);
  auto ry = average_ranks(y);
  // rank sums are n(n+1)/2, so the mean is exactly (n+1)/2
  const double mean = static_cast<double>(x.size() + 1) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    double dx = rx[i] - mean, dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UsageError("undefined correlation: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

ConeBypassRow cone_bypass(const PathIndex& index, const RelationshipGraph& g, Asn asn) {
  if (!g.contains(asn)) throw UsageError("unknown AS" + asn.str());
  ConeBypassRow row;
  row.asn = asn;
  row.cone_size = customer_cone(g, asn).size();
  auto direct = g.customers(asn);
  std::set<Asn> customers(direct.begin(), direct.end());

  std::size_t self = 0, one_hop = 0;
  for (const auto* p : index.paths()) {
    if (std::find(p->hops.begin(), p->hops.end(), asn) != p->hops.end()) {
      ++self;
    } else if (std::any_of(p->hops.begin(), p->hops.end(), [&](Asn a) { return customers.contains(a); })) {
      ++one_hop;
    }
  }
  if (index.size() > 0) {
    auto total = static_cast<double>(index.size());
    row.through_self = static_cast<double>(self) / total;
    row.through_1hop_only = static_cast<double>(one_hop) / total;
    row.through_neither = static_cast<double>(index.size() - self - one_hop) / total;
  }
  return row;
}

ConeRankComparison compare_frequency_and_cone(const AsFrequencyTable& table, const RelationshipGraph& g) {
  ConeRankComparison out;
  for (const auto& r : table.rows) {
    if (!g.contains(r.asn)) continue;
    auto cone = customer_cone(g, r.asn).size();
    if (cone == 0) continue;
    out.ases.push_back(r.asn);
    out.path_counts.push_back(static_cast<double>(r.paths_containing));
    out.cone_sizes.push_back(static_cast<double>(cone));
  }
  try {
    out.spearman = spearman_rank(out.path_counts, out.cone_sizes);
  } catch (const UsageError&) {
    out.spearman.reset();
  }
  return out;
}

std::uint64_t cost_estimate(std::uint64_t total_routers, std::uint64_t unit_cost_usd) {
  return total_routers * unit_cost_usd;
}

}  // namespace decoyplace
