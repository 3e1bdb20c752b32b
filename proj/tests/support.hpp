#pragma once

// Test fixtures and brute-force oracles. The oracles here deliberately
// avoid the library's graph, valley-free and tie-break code paths.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "decoyplace/inference.hpp"
#include "decoyplace/ingest.hpp"
#include "decoyplace/routermap.hpp"
#include "decoyplace/synth.hpp"
#include "decoyplace/topology.hpp"

namespace support {

using namespace decoyplace;

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(DECOYPLACE_FIXTURE_DIR) / name;
}

inline Asn as(std::uint32_t v) { return Asn{v}; }

inline AsPath path_of(std::initializer_list<std::uint32_t> v) {
  AsPath p;
  for (auto x : v) p.push_back(Asn{x});
  return p;
}

inline RawEdge p2c(std::uint32_t provider, std::uint32_t customer) {
  return {Asn{provider}, Asn{customer}, EdgeKind::ProviderToCustomer, 0};
}

inline RawEdge p2p(std::uint32_t a, std::uint32_t b) { return {Asn{a}, Asn{b}, EdgeKind::PeerToPeer, 0}; }

// A=1 B=2 C=3 D=4 E=5 F=6 G=7
enum SevenAs : std::uint32_t { A = 1, B, C, D, E, F, G };

inline std::vector<RawEdge> seven_as_edges() {
  return {p2c(A, B), p2c(A, C), p2c(B, D), p2c(B, E), p2c(C, F), p2c(C, G), p2p(B, C)};
}

/// Renders "D-B-C-F" style names for the seven-AS fixture.
inline std::string letters(const AsPath& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '-';
    s += static_cast<char>('A' + p[i].value - 1);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Independent relationship oracle

enum class Step { Up, Down, Peer, Missing };

class EdgeOracle {
 public:
  explicit EdgeOracle(const std::vector<RawEdge>& edges) {
    for (const auto& e : edges) {
      if (e.first == e.second) continue;
      if (e.kind == EdgeKind::PeerToPeer) {
        steps_[{e.first, e.second}] = Step::Peer;
        steps_[{e.second, e.first}] = Step::Peer;
      } else {
        steps_[{e.first, e.second}] = Step::Down;
        steps_[{e.second, e.first}] = Step::Up;
      }
      vertices_.insert(e.first);
      vertices_.insert(e.second);
    }
  }

  Step step(Asn a, Asn b) const {
    auto it = steps_.find({a, b});
    return it == steps_.end() ? Step::Missing : it->second;
  }

  /// Label sequence matches Up* Peer? Down*.
  bool valley_free(const AsPath& p) const {
    if (p.empty()) return false;
    if (p.size() == 1) return vertices_.contains(p[0]);
    std::vector<Step> s;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) s.push_back(step(p[i], p[i + 1]));
    std::size_t i = 0;
    while (i < s.size() && s[i] == Step::Up) ++i;
    if (i < s.size() && s[i] == Step::Peer) ++i;
    while (i < s.size() && s[i] == Step::Down) ++i;
    return i == s.size();
  }

  const std::set<Asn>& vertices() const { return vertices_; }

  std::vector<Asn> neighbors(Asn a) const {
    std::vector<Asn> out;
    for (const auto& [k, v] : steps_) {
      if (k.first == a) out.push_back(k.second);
    }
    return out;
  }

 private:
  std::map<std::pair<Asn, Asn>, Step> steps_;
  std::set<Asn> vertices_;
};

/// Every simple path (2+ ASes) over existing links, no label filtering.
inline std::vector<AsPath> all_simple_paths(const EdgeOracle& g, std::size_t max_len) {
  std::vector<AsPath> out;
  AsPath cur;
  std::function<void()> dfs = [&] {
    if (cur.size() >= 2) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (auto n : g.neighbors(cur.back())) {
      if (std::find(cur.begin(), cur.end(), n) != cur.end()) continue;
      cur.push_back(n);
      dfs();
      cur.pop_back();
    }
  };
  for (auto v : g.vertices()) {
    cur = {v};
    dfs();
  }
  return out;
}

/// Number of RIB entries for `prefix` whose path ends with `suffix`.
inline std::uint64_t count_suffix(const std::vector<RibEntry>& rib, const Prefix& prefix, const AsPath& suffix) {
  std::uint64_t n = 0;
  for (const auto& e : rib) {
    if (e.prefix != prefix || e.as_path.size() < suffix.size()) continue;
    if (std::equal(suffix.begin(), suffix.end(), e.as_path.end() - static_cast<std::ptrdiff_t>(suffix.size()))) ++n;
  }
  return n;
}

struct OraclePick {
  AsPath hops;
  std::uint32_t uncertainty = 0;
  std::uint64_t frequency = 0;
};

/// Best path per origin by exhaustive search: every valley-free simple path
/// from the origin to a home AS, scored by its longest sure suffix, then
/// ranked by (length, uncertainty, -frequency, hops).
inline std::map<Asn, OraclePick> oracle_choices(const std::vector<RawEdge>& edges, const std::vector<RibEntry>& rib,
                                                const Prefix& prefix, const std::set<AsPath>& valley_free_paths) {
  std::set<Asn> homes;
  for (const auto& e : rib) {
    if (e.prefix == prefix) homes.insert(e.as_path.back());
  }
  EdgeOracle g(edges);
  using Key = std::tuple<std::size_t, std::uint32_t, std::int64_t, AsPath>;
  std::map<Asn, Key> best;
  for (const auto& q : valley_free_paths) {
    if (!homes.contains(q.back()) || homes.contains(q.front())) continue;
    std::size_t base = 0;
    std::uint64_t f = 0;
    for (std::size_t len = q.size(); len >= 1; --len) {
      AsPath suffix(q.end() - static_cast<std::ptrdiff_t>(len), q.end());
      if (auto c = count_suffix(rib, prefix, suffix); c > 0) {
        base = len;
        f = c;
        break;
      }
    }
    Key key{q.size(), static_cast<std::uint32_t>(q.size() - base), -static_cast<std::int64_t>(f), q};
    auto [it, inserted] = best.emplace(q.front(), key);
    if (!inserted && key < it->second) it->second = key;
  }
  std::map<Asn, OraclePick> out;
  for (const auto& [origin, key] : best) {
    out[origin] = {std::get<3>(key), std::get<1>(key), static_cast<std::uint64_t>(-std::get<2>(key))};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random small instances

struct RandomInstance {
  std::vector<RawEdge> edges;
  std::vector<RibEntry> rib;
  Prefix prefix{Ipv4{0xC0000200}, 24};  // 192.0.2.0/24
};

/// At most `max_ases` ASes and `max_edges` links with mixed labels, plus a
/// handful of RIB paths that may or may not be valley-free.
inline RandomInstance random_instance(std::uint64_t seed, std::size_t max_ases = 12, std::size_t max_edges = 30) {
  SeededRng rng(seed);
  RandomInstance inst;
  auto n = static_cast<std::uint32_t>(rng.between(3, max_ases));
  std::set<std::pair<std::uint32_t, std::uint32_t>> used;
  auto target_edges = rng.between(n - 1, std::min<std::uint64_t>(max_edges, n * (n - 1) / 2));
  // spanning-ish backbone first so most instances are connected
  for (std::uint32_t v = 2; v <= n && inst.edges.size() < target_edges; ++v) {
    auto u = static_cast<std::uint32_t>(rng.between(1, v - 1));
    used.insert({u, v});
    inst.edges.push_back(rng.chance(0.25) ? p2p(u, v) : rng.chance(0.5) ? p2c(u, v) : p2c(v, u));
  }
  for (int attempts = 0; inst.edges.size() < target_edges && attempts < 200; ++attempts) {
    auto a = static_cast<std::uint32_t>(rng.between(1, n));
    auto b = static_cast<std::uint32_t>(rng.between(1, n));
    if (a == b || !used.insert(std::minmax(a, b)).second) continue;
    inst.edges.push_back(rng.chance(0.25) ? p2p(a, b) : p2c(a, b));
  }

  EdgeOracle g(inst.edges);
  auto homes = rng.chance(0.2) ? 2 : 1;
  for (int h = 0; h < homes; ++h) {
    auto home = Asn{static_cast<std::uint32_t>(rng.between(1, n))};
    auto rows = rng.between(1, 5);
    for (std::uint64_t r = 0; r < rows; ++r) {
      AsPath rev{home};
      auto hops = rng.between(0, 4);
      for (std::uint64_t k = 0; k < hops; ++k) {
        auto nb = g.neighbors(rev.back());
        if (nb.empty()) break;
        auto next = rng.pick(nb);
        if (std::find(rev.begin(), rev.end(), next) != rev.end()) break;
        rev.push_back(next);
      }
      if (rng.chance(0.1)) rev.push_back(Asn{900});  // AS outside the graph
      AsPath path(rev.rbegin(), rev.rend());
      inst.rib.push_back({inst.prefix, path, "rv"});
      if (rng.chance(0.2)) inst.rib.push_back({inst.prefix, path, "rv"});  // repeated row
    }
  }
  return inst;
}

/// RIB rows as the parser would deliver them: prepending collapsed.
inline std::vector<RibEntry> collapsed(std::vector<RibEntry> rib) {
  for (auto& e : rib) collapse_prepending(e.as_path);
  return rib;
}

// ---------------------------------------------------------------------------
// Coverage oracles over plain path lists

inline std::vector<AsPath> corpus_paths(const PathCorpus& corpus) {
  std::vector<AsPath> out;
  for (const auto& s : corpus.slices) {
    for (const auto& [o, p] : s.paths) out.push_back(p.hops);
  }
  return out;
}

/// Paths with at least one AS of `chosen` past the origin.
inline std::size_t union_count(const std::vector<AsPath>& paths, const std::set<Asn>& chosen) {
  std::size_t n = 0;
  for (const auto& p : paths) {
    bool hit = false;
    for (std::size_t i = 1; i < p.size(); ++i) hit = hit || chosen.contains(p[i]);
    n += hit ? 1 : 0;
  }
  return n;
}

inline bool covers(std::size_t covered, std::size_t total, double t) {
  return static_cast<double>(covered) >= t * static_cast<double>(total);
}

// ---------------------------------------------------------------------------
// Router oracle: trimming, aliasing and greedy coverage from raw traces

/// Router sets per trace touching `target`, plus the set of edge routers.
struct RouterTruth {
  std::vector<std::set<std::string>> traces;
  std::set<std::string> edge;
  std::set<std::string> all;
};

inline RouterTruth router_truth(const std::vector<RouterTrace>& traces,
                                const std::vector<std::pair<Prefix, Asn>>& p2a, const AliasMap& aliases,
                                Asn target) {
  auto owner = [&](Ipv4 ip) -> std::optional<Asn> {
    int best = -1;
    std::optional<Asn> out;
    for (const auto& [pfx, a] : p2a) {
      if (pfx.contains(ip) && pfx.length > best) {
        best = pfx.length;
        out = a;
      }
    }
    return out;
  };
  std::map<std::string, std::string> canon;
  for (const auto& members : aliases.routers()) {
    std::string low;
    for (auto ip : members) {
      if (low.empty() || ip.str() < low) low = ip.str();
    }
    for (auto ip : members) canon[ip.str()] = low;
  }
  auto rid = [&](Ipv4 ip) {
    auto it = canon.find(ip.str());
    return it == canon.end() ? ip.str() : it->second;
  };

  RouterTruth out;
  for (const auto& t : traces) {
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < t.hops.size(); ++i) {
      if (t.hops[i] && owner(*t.hops[i]) == target) inside.push_back(i);
    }
    if (inside.empty()) continue;
    std::set<std::string> routers;
    for (auto i : inside) routers.insert(rid(*t.hops[i]));
    out.edge.insert(rid(*t.hops[inside.front()]));
    out.edge.insert(rid(*t.hops[inside.back()]));
    out.all.insert(routers.begin(), routers.end());
    out.traces.push_back(std::move(routers));
  }
  return out;
}

inline std::size_t router_union(const RouterTruth& truth, const std::set<std::string>& chosen) {
  std::size_t n = 0;
  for (const auto& t : truth.traces) {
    n += std::any_of(t.begin(), t.end(), [&](const std::string& r) { return chosen.contains(r); }) ? 1 : 0;
  }
  return n;
}

/// Greedy heavy-hitter list: routers by descending trace count, id order on
/// ties, taken until `t` of the traces are covered.
inline std::vector<std::string> heavy_hitters(const RouterTruth& truth, double t) {
  std::map<std::string, std::size_t> count;
  for (const auto& tr : truth.traces) {
    for (const auto& r : tr) ++count[r];
  }
  std::vector<std::pair<std::string, std::size_t>> order(count.begin(), count.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  std::set<std::string> chosen;
  for (const auto& [r, c] : order) {
    if (covers(router_union(truth, chosen), truth.traces.size(), t)) break;
    out.push_back(r);
    chosen.insert(r);
  }
  return out;
}

}  // namespace support
