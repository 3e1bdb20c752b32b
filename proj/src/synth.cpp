#include "decoyplace/synth.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "decoyplace/types.hpp"

namespace decoyplace {

namespace {

constexpr std::uint32_t kFirstAsn = 10'000;

struct Tiered {
  std::size_t tier1 = 0;
  std::size_t tier2 = 0;
  std::vector<std::vector<std::size_t>> providers, customers, peers;
};

Asn asn_of(std::size_t i) { return Asn{kFirstAsn + static_cast<std::uint32_t>(i)}; }

// 10.0.0.0/8 carved into /20 infrastructure blocks, one per AS.
Ipv4 block_base(std::size_t i) { return Ipv4{(10u << 24) | (static_cast<std::uint32_t>(i) << 12)}; }

Tiered build_tiers(const SynthConfig& cfg, SeededRng& rng, std::vector<RawEdge>& edges) {
  Tiered t;
  const auto n = cfg.ases;
  t.tier1 = std::max<std::size_t>(1, std::min(cfg.tier1, n / 4));
  t.tier2 = std::max<std::size_t>(1, n / 5);
  t.providers.resize(n);
  t.customers.resize(n);
  t.peers.resize(n);

  std::set<std::pair<std::size_t, std::size_t>> used;
  auto link_p2c = [&](std::size_t provider, std::size_t customer) {
    if (!used.insert(std::minmax(provider, customer)).second) return;
    t.customers[provider].push_back(customer);
    t.providers[customer].push_back(provider);
    edges.push_back({asn_of(provider), asn_of(customer), EdgeKind::ProviderToCustomer, 0});
  };
  auto link_p2p = [&](std::size_t a, std::size_t b) {
    if (a == b || !used.insert(std::minmax(a, b)).second) return;
    t.peers[a].push_back(b);
    t.peers[b].push_back(a);
    edges.push_back({asn_of(a), asn_of(b), EdgeKind::PeerToPeer, 0});
  };

  for (std::size_t a = 0; a < t.tier1; ++a) {
    for (std::size_t b = a + 1; b < t.tier1; ++b) link_p2p(a, b);
  }
  const auto t2_end = t.tier1 + t.tier2;
  for (auto i = t.tier1; i < t2_end && i < n; ++i) {
    auto count = rng.between(1, 2);
    for (std::uint64_t k = 0; k < count; ++k) link_p2c(rng.below(t.tier1), i);
  }
  for (auto i = t.tier1; i < t2_end && i < n; ++i) {
    if (rng.chance(0.4)) link_p2p(i, t.tier1 + rng.below(t.tier2));
  }
  for (auto i = t2_end; i < n; ++i) {
    auto count = rng.between(1, 2);
    for (std::uint64_t k = 0; k < count; ++k) {
      // mostly tier-2 providers, occasionally a tier-1 or an earlier stub
      auto roll = rng.unit();
      std::size_t provider = roll < 0.1 ? rng.below(t.tier1)
                             : roll < 0.2 && i > t2_end ? t2_end + rng.below(i - t2_end)
                                                        : t.tier1 + rng.below(t.tier2);
      link_p2c(provider, i);
    }
  }
  return t;
}

// Reverse walk from the home AS: climb providers, maybe cross one peer
// link, then descend customers. Read backwards it is a valley-free path.
AsPath random_route(const Tiered& t, std::size_t home, SeededRng& rng) {
  std::vector<std::size_t> rev{home};
  auto step = [&](const std::vector<std::size_t>& options) {
    if (options.empty()) return false;
    auto next = rng.pick(options);
    if (std::find(rev.begin(), rev.end(), next) != rev.end()) return false;
    rev.push_back(next);
    return true;
  };
  auto climb = rng.between(1, 4);
  for (std::uint64_t k = 0; k < climb; ++k) {
    if (!step(t.providers[rev.back()])) break;
  }
  if (rng.chance(0.5)) step(t.peers[rev.back()]);
  auto descend = rng.between(0, 3);
  for (std::uint64_t k = 0; k < descend; ++k) {
    if (!step(t.customers[rev.back()])) break;
  }
  AsPath path;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) path.push_back(asn_of(*it));
  return path;
}

std::string two_digit(std::size_t i) { return (i < 10 ? "0" : "") + std::to_string(i); }

}  // namespace

SynthBundle generate_bundle(const SynthConfig& cfg) {
  if (cfg.ases < 8) throw UsageError("synthetic topology needs at least 8 ASes");
  if (cfg.ases > 4096) throw UsageError("synthetic topology supports at most 4096 ASes");
  if (cfg.prefixes > 16384) throw UsageError("synthetic bundle supports at most 16384 prefixes");
  SeededRng rng(cfg.seed);
  SynthBundle b;
  auto tiers = build_tiers(cfg, rng, b.edges);
  const auto n = cfg.ases;
  const auto stub_begin = tiers.tier1 + tiers.tier2;

  // countries: tier-1 networks in a fixed rotation, the rest drawn with
  // a bias toward a few large markets
  static const std::vector<std::string> kTier1Codes{"US", "DE", "CN", "GB", "RU", "US", "JP", "NL"};
  static const std::vector<std::string> kCodes{"US", "US", "US", "DE", "GB", "FR", "NL", "JP", "BR",
                                               "IN", "CN", "CN", "RU", "RU", "IR", "SE", "ZA", "AU"};
  for (std::size_t i = 0; i < n; ++i) {
    b.countries.assign(asn_of(i), i < tiers.tier1 ? kTier1Codes[i % kTier1Codes.size()] : rng.pick(kCodes));
  }
  for (const char* cc : {"CN", "IR", "RU"}) b.countries.add_censor(cc);

  for (std::size_t p = 0; p < cfg.prefixes; ++p) {
    auto home = stub_begin < n ? stub_begin + rng.below(n - stub_begin) : rng.below(n);
    // /24s carved from 100.64.0.0/10
    Prefix prefix{Ipv4{((100u << 24) | (64u << 16)) + (static_cast<std::uint32_t>(p) << 8)}, 24};
    b.prefixes.push_back({prefix, "site-" + std::to_string(p + 1)});
    b.prefix_to_as.emplace_back(prefix, asn_of(home));
    for (std::size_t v = 0; v < cfg.vantages; ++v) {
      auto path = random_route(tiers, home, rng);
      if (rng.chance(0.1)) path.insert(path.begin(), path.front());  // prepending
      b.rib.push_back({prefix, std::move(path), "rv" + two_digit(v + 1)});
    }
  }

  for (std::size_t i = 0; i < n; ++i) b.prefix_to_as.emplace_back(Prefix{block_base(i), 20}, asn_of(i));

  // router-level structure for tier-1 and tier-2 networks
  struct Router {
    std::vector<Ipv4> interfaces;
  };
  struct AsRouters {
    std::size_t as_index;
    std::vector<Router> edges, cores;
    std::vector<double> core_weight;
    double total_weight = 0.0;
  };
  std::vector<AsRouters> traced;
  for (std::size_t i = 0; i < stub_begin && i < n; ++i) {
    AsRouters ar{i, {}, {}, {}, 0.0};
    auto base = block_base(i).value;
    std::uint32_t next_ip = 1;
    auto make_router = [&] {
      Router r;
      auto ifaces = rng.between(1, 3);
      for (std::uint64_t k = 0; k < ifaces; ++k) r.interfaces.push_back(Ipv4{base + next_ip++});
      if (r.interfaces.size() > 1) b.aliases.add_router(r.interfaces);
      return r;
    };
    auto edge_count = rng.between(3, 12);
    auto core_count = rng.between(2, 20);
    for (std::uint64_t k = 0; k < edge_count; ++k) ar.edges.push_back(make_router());
    for (std::uint64_t k = 0; k < core_count; ++k) {
      ar.cores.push_back(make_router());
      ar.core_weight.push_back(1.0 / static_cast<double>(k + 1));
      ar.total_weight += ar.core_weight.back();
    }
    traced.push_back(std::move(ar));
    b.traced_ases.push_back(asn_of(i));
  }

  auto foreign_hop = [&](std::size_t as_index) {
    return Ipv4{block_base(as_index).value + 2048 + static_cast<std::uint32_t>(rng.below(2000))};
  };
  auto iface = [&](const Router& r) { return rng.pick(r.interfaces); };
  auto pick_core = [&](const AsRouters& ar) -> const Router& {
    auto x = rng.unit() * ar.total_weight;
    for (std::size_t k = 0; k < ar.cores.size(); ++k) {
      x -= ar.core_weight[k];
      if (x < 0) return ar.cores[k];
    }
    return ar.cores.back();
  };

  for (std::size_t t = 0; t < cfg.traces && !traced.empty(); ++t) {
    const auto& ar = traced[rng.below(traced.size())];
    auto before = stub_begin + rng.below(n - stub_begin);
    auto after = stub_begin + rng.below(n - stub_begin);
    std::vector<std::optional<Ipv4>> hops;
    for (auto k = rng.between(1, 2); k > 0; --k) hops.emplace_back(foreign_hop(before));

    auto ingress = rng.below(ar.edges.size());
    auto egress = rng.below(ar.edges.size());
    hops.emplace_back(iface(ar.edges[ingress]));
    for (auto k = rng.between(1, 4); k > 0; --k) {
      hops.emplace_back(iface(pick_core(ar)));
      if (rng.chance(0.02)) hops.emplace_back(foreign_hop(before));  // third-party reply
      if (rng.chance(0.04)) hops.emplace_back(std::nullopt);
    }
    hops.emplace_back(iface(ar.edges[egress]));
    for (auto k = rng.between(1, 2); k > 0; --k) {
      hops.emplace_back(rng.chance(0.05) ? std::optional<Ipv4>{} : std::optional<Ipv4>{foreign_hop(after)});
    }
    const auto& target = rng.pick(b.prefixes);
    Ipv4 dst{target.prefix.network.value + 1 + static_cast<std::uint32_t>(rng.below(250))};
    hops.emplace_back(dst);
    b.traces.push_back({"pl" + two_digit(1 + rng.below(40)), dst, std::move(hops)});
  }
  return b;
}

void write_bundle(const SynthBundle& b, const std::filesystem::path& dir, const std::string& stem) {
  std::filesystem::create_directories(dir);
  auto open = [&](const std::string& suffix) {
    std::ofstream out(dir / (stem + suffix), std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / (stem + suffix)).string());
    return out;
  };
  {
    auto out = open(".rels.txt");
    out << "# provider|customer|-1 or peer|peer|0\n";
    write_relationships(out, b.edges);
  }
  {
    auto out = open(".rib.txt");
    out << "# prefix|as path (origin last)|vantage\n";
    write_rib(out, b.rib);
  }
  {
    auto out = open(".prefixes.txt");
    for (const auto& t : b.prefixes) out << t.prefix.str() << '|' << t.label << '\n';
  }
  {
    auto out = open(".countries.txt");
    for (const auto& [asn, cc] : b.countries.mapping()) out << asn.str() << '|' << cc << '\n';
  }
  {
    auto out = open(".censors.txt");
    for (const auto& cc : b.countries.censors()) out << cc << '\n';
  }
  {
    auto out = open(".traces.txt");
    write_traces(out, b.traces);
  }
  {
    auto out = open(".aliases.txt");
    write_alias_map(out, b.aliases);
  }
  {
    auto out = open(".p2a.txt");
    for (const auto& [prefix, asn] : b.prefix_to_as) out << prefix.str() << '|' << asn.str() << '\n';
  }
}

}  // namespace decoyplace
