#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "decoyplace/ingest.hpp"
#include "decoyplace/types.hpp"

namespace decoyplace {

/// Longest-prefix-match attribution of addresses to ASes.
class PrefixToAsMap {
 public:
  /// Throws InputError if the identical prefix is already mapped to a
  /// different AS.
  void add(const Prefix& prefix, Asn asn);
  std::optional<Asn> lookup(Ipv4 ip) const;
  std::size_t size() const { return size_; }

 private:
  std::array<std::unordered_map<std::uint32_t, Asn>, 33> by_length_;
  std::size_t size_ = 0;
};

struct PrefixToAsParse {
  PrefixToAsMap map;
  ParseStats stats;
};

/// `PREFIX|ASN`.
PrefixToAsParse parse_prefix_to_as(std::istream& in);

struct TrimmedHop {
  std::optional<Ipv4> ip;    // nullopt for a non-responding hop
  bool third_party = false;  // responded from an address outside the target AS
};

/// Contiguous span of a trace from its first to last hop inside one AS.
struct TrimmedTrace {
  std::vector<TrimmedHop> hops;
};

/// A trace with each responding hop attributed to its AS.
struct AttributedTrace {
  const RouterTrace* trace = nullptr;
  std::vector<std::optional<Asn>> owners;
};

AttributedTrace attribute(const RouterTrace& trace, const PrefixToAsMap& p2a);

/// nullopt when no hop of the trace belongs to `target`.
std::optional<TrimmedTrace> trim_trace(const AttributedTrace& trace, Asn target);
std::optional<TrimmedTrace> trim_trace(const RouterTrace& trace, const PrefixToAsMap& p2a, Asn target);

enum class RouterClass { Edge, Core };

const char* to_string(RouterClass c);

struct RouterRecord {
  RouterId id;
  Asn asn;
  RouterClass classification = RouterClass::Core;
  std::size_t trace_count = 0;  // distinct trimmed traces containing the router
};

/// Routers of one AS after alias resolution, with the router set of every
/// trimmed trace (indices into `records`).
struct RouterCensus {
  Asn asn;
  std::vector<RouterRecord> records;  // ordered by RouterId
  std::vector<std::vector<std::uint32_t>> trace_routers;
  std::size_t third_party_hops = 0;

  std::size_t edge_count() const;
  std::size_t core_count() const;
};

/// A router is Edge if it is ever the first or last hop of a trimmed trace.
/// Third-party and non-responding hops are not counted.
RouterCensus classify_routers(Asn asn, std::span<const TrimmedTrace> traces, const AliasMap& aliases);

struct RouterPlacement {
  Asn asn;
  std::size_t edge = 0;           // E
  std::size_t core = 0;           // C
  std::size_t heavy_hitters = 0;  // H
  std::size_t required = 0;       // min(E, H)
  bool edge_set_selected = false;
  std::vector<RouterId> selected;
  std::vector<RouterId> heavy_hitter_set;
  double threshold = 0.9;
  double trace_coverage = 0.0;  // of the selected set
  std::size_t traces = 0;
};

/// H is the shortest prefix of routers sorted by descending trace_count
/// (RouterId order on ties) covering at least `threshold` of the traces.
/// The heavy-hitter set is chosen when H < E, the edge set otherwise.
RouterPlacement find_key_routers(const RouterCensus& census, double threshold);

/// Fraction of the census traces containing at least one router of `ids`.
double router_trace_coverage(const RouterCensus& census, std::span<const RouterId> ids);

struct RouterRollup {
  std::size_t total_required = 0;
  std::map<std::string, std::size_t> by_country;
  std::vector<std::pair<Asn, std::size_t>> by_as;
};

RouterRollup placement_rollup(std::span<const RouterPlacement> placements, const CountryMap& countries);

}  // namespace decoyplace
