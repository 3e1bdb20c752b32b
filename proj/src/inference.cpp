#include "decoyplace/inference.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

namespace decoyplace {

bool better_path(const EstimatedPath& a, const EstimatedPath& b) {
  if (a.hops.size() != b.hops.size()) return a.hops.size() < b.hops.size();
  if (a.uncertainty != b.uncertainty) return a.uncertainty < b.uncertainty;
  if (a.frequency_index != b.frequency_index) return a.frequency_index > b.frequency_index;
  return a.hops < b.hops;
}

const EstimatedPath& select_best(std::span<const EstimatedPath> candidates) {
  if (candidates.empty()) throw UsageError("select_best: no candidate paths");
  const EstimatedPath* best = &candidates.front();
  for (const auto& c : candidates.subspan(1)) {
    if (better_path(c, *best)) best = &c;
  }
  return *best;
}

void SurePathSet::add_rib_path(const AsPath& path) {
  for (std::size_t start = 0; start < path.size(); ++start) {
    ++frequency_[AsPath(path.begin() + static_cast<std::ptrdiff_t>(start), path.end())];
  }
}

std::uint64_t SurePathSet::frequency(const AsPath& hops) const {
  auto it = frequency_.find(hops);
  return it == frequency_.end() ? 0 : it->second;
}

std::vector<Asn> SurePathSet::homes() const {
  std::set<Asn> homes;
  for (const auto& [hops, f] : frequency_) homes.insert(hops.back());
  return {homes.begin(), homes.end()};
}

std::map<Asn, std::vector<EstimatedPath>> SurePathSet::by_origin() const {
  std::map<Asn, std::vector<EstimatedPath>> out;
  for (const auto& [hops, f] : frequency_) out[hops.front()].push_back({hops, 0, f});
  return out;
}

SurePathSet extract_sure_paths(std::span<const RibEntry> entries, const Prefix& prefix) {
  SurePathSet sure;
  for (const auto& e : entries) {
    if (e.prefix == prefix) sure.add_rib_path(e.as_path);
  }
  return sure;
}

namespace {

using Choice = std::optional<EstimatedPath>;

void offer(Choice& slot, EstimatedPath&& candidate) {
  if (!slot || better_path(candidate, *slot)) slot = std::move(candidate);
}

}  // namespace

PrefixSlice infer_paths(const Prefix& prefix, const SurePathSet& sure, const RelationshipGraph& g) {
  using Index = RelationshipGraph::Index;
  const auto n = g.vertex_count();

  PrefixSlice slice;
  slice.prefix = prefix;
  slice.homes = sure.homes();
  slice.sure_paths = sure.size();
  std::size_t homes_in_graph = 0;
  for (auto h : slice.homes) homes_in_graph += g.contains(h) ? 1 : 0;
  slice.eligible_ases = n - homes_in_graph;

  // Best path overall, and best path made only of provider-to-customer
  // links. Only the latter may follow a peer or provider-to-customer hop.
  std::vector<Choice> sure_best(n), sure_down(n);
  for (auto& [origin, candidates] : sure.by_origin()) {
    auto idx = g.index_of(origin);
    if (!idx) continue;
    for (auto& c : candidates) {
      if (!is_valley_free(c.hops, g)) continue;
      if (is_downhill(c.hops, g)) offer(sure_down[*idx], EstimatedPath(c));
      offer(sure_best[*idx], std::move(c));
    }
  }

  auto extend = [&](Index x, const EstimatedPath& tail) -> Choice {
    auto asn = g.asn_at(x);
    if (std::find(tail.hops.begin(), tail.hops.end(), asn) != tail.hops.end()) return std::nullopt;
    EstimatedPath p;
    p.hops.reserve(tail.hops.size() + 1);
    p.hops.push_back(asn);
    p.hops.insert(p.hops.end(), tail.hops.begin(), tail.hops.end());
    if (auto f = sure.frequency(p.hops); f > 0) {
      p.frequency_index = f;
    } else {
      p.uncertainty = tail.uncertainty + 1;
      p.frequency_index = tail.frequency_index;
    }
    return p;
  };

  std::vector<Choice> best = sure_best, down = sure_down;
  while (true) {
    std::vector<Choice> next_best = sure_best, next_down = sure_down;
    for (Index x = 0; x < n; ++x) {
      for (const auto& nb : g.neighbors(x)) {
        const Choice& via = nb.rel == Relationship::CustomerToProvider ? best[nb.index] : down[nb.index];
        if (!via) continue;
        auto cand = extend(x, *via);
        if (!cand) continue;
        if (nb.rel == Relationship::ProviderToCustomer) offer(next_down[x], EstimatedPath(*cand));
        offer(next_best[x], std::move(*cand));
      }
    }
    bool changed = next_best != best || next_down != down;
    best = std::move(next_best);
    down = std::move(next_down);
    if (!changed) break;
    ++slice.rounds;
  }

  std::set<Asn> homes(slice.homes.begin(), slice.homes.end());
  for (Index x = 0; x < n; ++x) {
    if (best[x] && !homes.contains(g.asn_at(x))) slice.paths.emplace(g.asn_at(x), std::move(*best[x]));
  }
  return slice;
}

std::size_t PathCorpus::path_count() const {
  std::size_t total = 0;
  for (const auto& s : slices) total += s.paths.size();
  return total;
}

PathCorpus build_corpus(std::span<const PrefixTarget> prefixes, std::span<const RibEntry> entries,
                        const RelationshipGraph& g, unsigned threads) {
  std::vector<PrefixTarget> unique;
  std::set<Prefix> seen;
  for (const auto& t : prefixes) {
    if (seen.insert(t.prefix).second) unique.push_back(t);
  }

  PathCorpus corpus;
  corpus.slices.resize(unique.size());
  std::vector<SurePathSet> sure(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i) sure[i] = extract_sure_paths(entries, unique[i].prefix);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < unique.size(); i = next++) {
      corpus.slices[i] = infer_paths(unique[i].prefix, sure[i], g);
      corpus.slices[i].label = unique[i].label;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, unique.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  for (std::size_t i = 0; i < unique.size(); ++i) {
    if (sure[i].empty()) corpus.warnings.push_back("prefix " + unique[i].prefix.str() + " has no sure paths");
  }
  return corpus;
}

void write_paths(std::ostream& out, const PathCorpus& corpus) {
  for (const auto& slice : corpus.slices) {
    const auto prefix = slice.prefix.str();
    for (const auto& [origin, p] : slice.paths) {
      out << prefix << '|' << origin.str() << '|' << join_path(p.hops) << '|' << p.uncertainty << '|'
          << p.frequency_index << '\n';
    }
  }
}

PathsParse parse_paths(std::istream& in) {
  PathsParse out;
  std::map<Prefix, std::size_t> slot;
  std::vector<std::set<Asn>> homes;
  detail::for_each_data_line(in, out.stats, [&](std::size_t line_no, std::string_view line) {
    auto fields = detail::split(line, '|');
    auto fail = [&](std::string reason) { out.stats.rejects.push_back({line_no, std::move(reason)}); };
    if (fields.size() != 5) return fail("expected PREFIX|ORIGIN|PATH|uncertainty|frequency");
    auto prefix = parse_prefix(fields[0]);
    auto origin = parse_asn(fields[1]);
    if (!prefix || !origin) return fail("malformed prefix or origin");
    EstimatedPath p;
    for (auto tok : detail::split(fields[2], ' ')) {
      auto a = parse_asn(tok);
      if (!a) return fail("malformed path");
      p.hops.push_back(*a);
    }
    auto u = parse_count(fields[3]);
    auto f = parse_count(fields[4]);
    if (!u || !f || *u > 0xFFFFFFFFull) return fail("malformed uncertainty or frequency");
    p.uncertainty = static_cast<std::uint32_t>(*u);
    p.frequency_index = *f;
    if (p.hops.front() != *origin || p.uncertainty >= p.hops.size()) return fail("inconsistent path fields");

    auto [it, inserted] = slot.try_emplace(*prefix, out.corpus.slices.size());
    if (inserted) {
      out.corpus.slices.emplace_back().prefix = *prefix;
      homes.emplace_back();
    }
    auto& slice = out.corpus.slices[it->second];
    homes[it->second].insert(p.hops.back());
    if (!slice.paths.emplace(*origin, std::move(p)).second) return fail("duplicate origin for prefix");
    ++out.stats.accepted;
  });
  for (std::size_t i = 0; i < homes.size(); ++i) {
    out.corpus.slices[i].homes.assign(homes[i].begin(), homes[i].end());
  }
  return out;
}

}  // namespace decoyplace
