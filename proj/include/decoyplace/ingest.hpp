#pragma once

// Text-format readers and writers for every input data set. All formats are
// line oriented, pipe delimited, with blank lines and `#` comments ignored.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "decoyplace/types.hpp"

namespace decoyplace {

struct LineReject {
  std::size_t line = 0;
  std::string reason;
};

struct ParseStats {
  std::size_t considered = 0;  // non-blank, non-comment lines
  std::size_t accepted = 0;
  std::size_t loops_dropped = 0;
  std::size_t duplicates = 0;
  std::size_t as_trans = 0;  // entries mentioning AS23456
  std::vector<LineReject> rejects;
};

struct RibEntry {
  Prefix prefix;
  AsPath as_path;  // neighbor-most first, origin last
  std::string source_vantage;

  bool operator==(const RibEntry&) const = default;
};

struct RibParse {
  std::vector<RibEntry> entries;
  ParseStats stats;
};

/// `PREFIX|ASN ASN ...[|VANTAGE]`. Prepending is collapsed before loop
/// detection; looping paths are dropped and counted.
RibParse parse_rib(std::istream& in, const std::string& default_vantage = {});
void write_rib(std::ostream& out, std::span<const RibEntry> entries);

/// Collapses consecutive duplicates; returns false if the result still loops.
bool collapse_prepending(AsPath& path);

enum class EdgeKind { ProviderToCustomer, PeerToPeer };

struct RawEdge {
  Asn first;
  Asn second;
  EdgeKind kind = EdgeKind::PeerToPeer;  // ProviderToCustomer: first is provider of second
  std::size_t line = 0;

  bool operator==(const RawEdge& o) const { return first == o.first && second == o.second && kind == o.kind; }
};

struct RelationshipParse {
  std::vector<RawEdge> edges;
  ParseStats stats;
};

/// `ASN|ASN|CODE[|source]` with CODE -1 (provider|customer) or 0 (peers).
/// Throws InputError when the same AS pair carries two different labels.
RelationshipParse parse_relationships(std::istream& in);
void write_relationships(std::ostream& out, std::span<const RawEdge> edges);

struct RouterTrace {
  std::string source_label;
  Ipv4 destination;
  std::vector<std::optional<Ipv4>> hops;  // nullopt is a non-responding hop

  bool operator==(const RouterTrace&) const = default;
};

struct TraceParse {
  std::vector<RouterTrace> traces;
  ParseStats stats;
};

/// `SRC|DST_IP|hop,hop,*,hop`.
TraceParse parse_traces(std::istream& in);
void write_traces(std::ostream& out, std::span<const RouterTrace> traces);

class AliasMap {
 public:
  AliasMap() = default;

  /// Throws InputError if `members` shares an address with a known router.
  void add_router(std::vector<Ipv4> members);

  RouterId resolve(Ipv4 ip) const;
  std::size_t router_count() const { return routers_.size(); }
  const std::vector<std::vector<Ipv4>>& routers() const { return routers_; }

 private:
  std::unordered_map<Ipv4, std::size_t> index_;
  std::vector<std::vector<Ipv4>> routers_;  // canonical member first
  std::vector<RouterId> ids_;
};

AliasMap parse_alias_map(std::istream& in);
void write_alias_map(std::ostream& out, const AliasMap& aliases);

class CountryMap {
 public:
  static constexpr const char* kUnknown = "??";

  void assign(Asn asn, std::string code) { mapping_[asn] = std::move(code); }
  void add_censor(std::string code) { censors_.insert(std::move(code)); }

  /// ISO alpha-2 code or nullopt for unmapped ASes.
  std::optional<std::string> country_of(Asn asn) const;
  std::string country_label(Asn asn) const { return country_of(asn).value_or(kUnknown); }
  bool is_censor_code(const std::string& code) const { return censors_.contains(code); }
  bool is_censor(Asn asn) const;
  bool has_code(const std::string& code) const;

  const std::map<Asn, std::string>& mapping() const { return mapping_; }
  const std::set<std::string>& censors() const { return censors_; }

 private:
  std::map<Asn, std::string> mapping_;
  std::set<std::string> censors_;
};

bool is_country_code(std::string_view code);

/// `ASN|CC` lines into `map`.
ParseStats parse_countries(std::istream& in, CountryMap& map);
/// One CC per line.
ParseStats parse_censors(std::istream& in, CountryMap& map);

struct PrefixTarget {
  Prefix prefix;
  std::string label;

  bool operator==(const PrefixTarget&) const = default;
};

struct PrefixListParse {
  std::vector<PrefixTarget> targets;
  ParseStats stats;
};

/// `PREFIX` or `PREFIX|label`.
PrefixListParse parse_prefix_list(std::istream& in);

namespace detail {

/// Splits on `sep`, no trimming.
std::vector<std::string_view> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);

/// Calls `fn(line_number, trimmed_line)` for each data line.
template <typename Fn>
void for_each_data_line(std::istream& in, ParseStats& stats, Fn&& fn);

}  // namespace detail

}  // namespace decoyplace

#include "decoyplace/detail/lines.hpp"
