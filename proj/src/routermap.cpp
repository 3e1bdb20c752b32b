#include "decoyplace/routermap.hpp"

#include <algorithm>
#include <istream>

namespace decoyplace {

void PrefixToAsMap::add(const Prefix& prefix, Asn asn) {
  auto [it, inserted] = by_length_[prefix.length].emplace(prefix.network.value, asn);
  if (!inserted && it->second != asn) {
    throw InputError("prefix " + prefix.str() + " mapped to both AS" + it->second.str() + " and AS" + asn.str());
  }
  if (inserted) ++size_;
}

std::optional<Asn> PrefixToAsMap::lookup(Ipv4 ip) const {
  for (int len = 32; len >= 0; --len) {
    const auto& table = by_length_[static_cast<std::size_t>(len)];
    if (table.empty()) continue;
    auto it = table.find(ip.value & prefix_mask(static_cast<std::uint8_t>(len)));
    if (it != table.end()) return it->second;
  }
  return std::nullopt;
}

PrefixToAsParse parse_prefix_to_as(std::istream& in) {
  PrefixToAsParse out;
  detail::for_each_data_line(in, out.stats, [&](std::size_t line_no, std::string_view line) {
    auto fields = detail::split(line, '|');
    std::optional<Prefix> prefix;
    std::optional<Asn> asn;
    if (fields.size() == 2) {
      prefix = parse_prefix(detail::trim(fields[0]));
      asn = parse_asn(detail::trim(fields[1]));
    }
    if (!prefix || !asn) {
      out.stats.rejects.push_back({line_no, "expected PREFIX|ASN"});
      return;
    }
    try {
      out.map.add(*prefix, *asn);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
    ++out.stats.accepted;
  });
  return out;
}

AttributedTrace attribute(const RouterTrace& trace, const PrefixToAsMap& p2a) {
  AttributedTrace out{&trace, std::vector<std::optional<Asn>>(trace.hops.size())};
  for (std::size_t i = 0; i < trace.hops.size(); ++i) {
    if (trace.hops[i]) out.owners[i] = p2a.lookup(*trace.hops[i]);
  }
  return out;
}

std::optional<TrimmedTrace> trim_trace(const AttributedTrace& attributed, Asn target) {
  const auto& owners = attributed.owners;
  const auto& hops = attributed.trace->hops;
  auto first = std::find(owners.begin(), owners.end(), std::optional<Asn>{target});
  if (first == owners.end()) return std::nullopt;
  auto last = std::find(owners.rbegin(), owners.rend(), std::optional<Asn>{target});
  auto begin = static_cast<std::size_t>(first - owners.begin());
  auto end = owners.size() - static_cast<std::size_t>(last - owners.rbegin());
  TrimmedTrace out;
  for (auto i = begin; i < end; ++i) {
    out.hops.push_back({hops[i], hops[i].has_value() && owners[i] != target});
  }
  return out;
}

std::optional<TrimmedTrace> trim_trace(const RouterTrace& trace, const PrefixToAsMap& p2a, Asn target) {
  return trim_trace(attribute(trace, p2a), target);
}

const char* to_string(RouterClass c) { return c == RouterClass::Edge ? "edge" : "core"; }

std::size_t RouterCensus::edge_count() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                [](const RouterRecord& r) { return r.classification == RouterClass::Edge; }));
}

std::size_t RouterCensus::core_count() const { return records.size() - edge_count(); }

RouterCensus classify_routers(Asn asn, std::span<const TrimmedTrace> traces, const AliasMap& aliases) {
  RouterCensus census;
  census.asn = asn;

  struct Seen {
    bool edge = false;
    std::vector<std::uint32_t> traces;
  };
  std::map<RouterId, Seen> seen;
  std::vector<std::vector<RouterId>> per_trace(traces.size());

  for (std::size_t t = 0; t < traces.size(); ++t) {
    const auto& hops = traces[t].hops;
    for (std::size_t i = 0; i < hops.size(); ++i) {
      if (!hops[i].ip) continue;
      if (hops[i].third_party) {
        ++census.third_party_hops;
        continue;
      }
      auto id = aliases.resolve(*hops[i].ip);
      auto& s = seen[id];
      // span ends are always target-owned responding hops
      if (i == 0 || i + 1 == hops.size()) s.edge = true;
      if (s.traces.empty() || s.traces.back() != t) s.traces.push_back(static_cast<std::uint32_t>(t));
      per_trace[t].push_back(std::move(id));
    }
  }

  std::map<RouterId, std::uint32_t> position;
  for (auto& [id, s] : seen) {
    position.emplace(id, static_cast<std::uint32_t>(census.records.size()));
    census.records.push_back({id, asn, s.edge ? RouterClass::Edge : RouterClass::Core, s.traces.size()});
  }
  census.trace_routers.resize(traces.size());
  for (std::size_t t = 0; t < traces.size(); ++t) {
    auto& out = census.trace_routers[t];
    for (const auto& id : per_trace[t]) out.push_back(position.at(id));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return census;
}

namespace {

std::size_t traces_covered(const RouterCensus& census, const std::vector<bool>& chosen) {
  std::size_t covered = 0;
  for (const auto& routers : census.trace_routers) {
    if (std::any_of(routers.begin(), routers.end(), [&](std::uint32_t r) { return chosen[r]; })) ++covered;
  }
  return covered;
}

bool covers(std::size_t covered, std::size_t total, double threshold) {
  return static_cast<double>(covered) >= threshold * static_cast<double>(total);
}

}  // namespace

RouterPlacement find_key_routers(const RouterCensus& census, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw UsageError("router threshold must lie in (0, 1]");
  if (census.trace_routers.empty()) throw UsageError("no traces through AS" + census.asn.str());

  RouterPlacement out;
  out.asn = census.asn;
  out.threshold = threshold;
  out.traces = census.trace_routers.size();
  out.edge = census.edge_count();
  out.core = census.core_count();

  // records are already in RouterId order, so a stable sort keeps it on ties
  std::vector<std::uint32_t> order(census.records.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return census.records[a].trace_count > census.records[b].trace_count;
  });

  // incremental union over traces
  std::vector<std::vector<std::uint32_t>> traces_of(census.records.size());
  for (std::uint32_t t = 0; t < census.trace_routers.size(); ++t) {
    for (auto r : census.trace_routers[t]) traces_of[r].push_back(t);
  }
  std::vector<bool> trace_hit(out.traces, false);
  std::size_t covered = 0;
  for (auto r : order) {
    if (covers(covered, out.traces, threshold)) break;
    for (auto t : traces_of[r]) {
      if (!trace_hit[t]) {
        trace_hit[t] = true;
        ++covered;
      }
    }
    out.heavy_hitter_set.push_back(census.records[r].id);
  }
  out.heavy_hitters = out.heavy_hitter_set.size();

  out.required = std::min(out.edge, out.heavy_hitters);
  out.edge_set_selected = !(out.heavy_hitters < out.edge);
  if (out.edge_set_selected) {
    for (const auto& rec : census.records) {
      if (rec.classification == RouterClass::Edge) out.selected.push_back(rec.id);
    }
  } else {
    out.selected = out.heavy_hitter_set;
  }
  out.trace_coverage = router_trace_coverage(census, out.selected);
  return out;
}

double router_trace_coverage(const RouterCensus& census, std::span<const RouterId> ids) {
  if (census.trace_routers.empty()) return 0.0;
  std::vector<bool> chosen(census.records.size(), false);
  for (const auto& id : ids) {
    auto it = std::lower_bound(census.records.begin(), census.records.end(), id,
                               [](const RouterRecord& r, const RouterId& v) { return r.id < v; });
    if (it != census.records.end() && it->id == id) chosen[static_cast<std::size_t>(it - census.records.begin())] = true;
  }
  return static_cast<double>(traces_covered(census, chosen)) / static_cast<double>(census.trace_routers.size());
}

RouterRollup placement_rollup(std::span<const RouterPlacement> placements, const CountryMap& countries) {
  if (placements.empty()) throw UsageError("placement_rollup needs at least one placement");
  RouterRollup out;
  for (const auto& p : placements) {
    out.total_required += p.required;
    out.by_country[countries.country_label(p.asn)] += p.required;
    out.by_as.emplace_back(p.asn, p.required);
  }
  return out;
}

}  // namespace decoyplace
