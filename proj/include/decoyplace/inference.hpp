#pragma once

// Prefix-to-AS path estimation: RIB paths (and all their suffixes) are sure
// paths; every other AS gets a path by extending a neighbor's path one hop
// at a time under valley-free and loop-free constraints. Each AS keeps one
// path, chosen by length, then uncertainty, then frequency index.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "decoyplace/ingest.hpp"
#include "decoyplace/topology.hpp"
#include "decoyplace/types.hpp"

namespace decoyplace {

/// A route from hops.front() to the prefix's home AS (hops.back()). The
/// trailing base_suffix_len hops are a sure path; uncertainty counts the
/// ASes appended in front of it. Sure paths have uncertainty 0.
struct EstimatedPath {
  AsPath hops;
  std::uint32_t uncertainty = 0;
  std::uint64_t frequency_index = 0;

  Asn origin() const { return hops.front(); }
  bool sure() const { return uncertainty == 0; }
  std::size_t base_suffix_len() const { return hops.size() - uncertainty; }

  bool operator==(const EstimatedPath&) const = default;
};

/// Tie-break order: fewer hops, then lower uncertainty, then higher
/// frequency index, then lexicographically smaller hop sequence.
bool better_path(const EstimatedPath& a, const EstimatedPath& b);

/// Throws UsageError on an empty list.
const EstimatedPath& select_best(std::span<const EstimatedPath> candidates);

/// Sure paths for one prefix: every RIB path and each of its suffixes,
/// with the number of RIB entries containing it as a suffix.
class SurePathSet {
 public:
  void add_rib_path(const AsPath& path);

  /// 0 if `hops` is not a sure path.
  std::uint64_t frequency(const AsPath& hops) const;
  bool empty() const { return frequency_.empty(); }
  std::size_t size() const { return frequency_.size(); }

  /// Home ASes (last hop of every sure path).
  std::vector<Asn> homes() const;

  /// Sure candidates grouped by the AS they start from.
  std::map<Asn, std::vector<EstimatedPath>> by_origin() const;

  const std::map<AsPath, std::uint64_t>& all() const { return frequency_; }

 private:
  std::map<AsPath, std::uint64_t> frequency_;
};

/// Exact-prefix match; no supernet fallback.
SurePathSet extract_sure_paths(std::span<const RibEntry> entries, const Prefix& prefix);

struct PrefixSlice {
  Prefix prefix;
  std::string label;
  std::vector<Asn> homes;
  std::map<Asn, EstimatedPath> paths;  // keyed by origin; home ASes omitted
  std::size_t rounds = 0;              // extension rounds until nothing changed
  std::size_t sure_paths = 0;
  std::size_t eligible_ases = 0;       // graph ASes other than the homes

  double coverage() const {
    return eligible_ases == 0 ? 0.0 : static_cast<double>(paths.size()) / static_cast<double>(eligible_ases);
  }
};

/// Round-synchronous relaxation until no AS changes its choice. Each round
/// evaluates every AS against the previous round's choices, so the result
/// is independent of visiting order.
PrefixSlice infer_paths(const Prefix& prefix, const SurePathSet& sure, const RelationshipGraph& g);

struct PathCorpus {
  std::vector<PrefixSlice> slices;
  std::vector<std::string> warnings;

  std::size_t path_count() const;
  bool empty() const { return path_count() == 0; }
};

/// Per-prefix inference, run in parallel across prefixes. Duplicate
/// prefixes in the list are inferred once.
PathCorpus build_corpus(std::span<const PrefixTarget> prefixes, std::span<const RibEntry> entries,
                        const RelationshipGraph& g, unsigned threads = 0);

/// `PREFIX|ORIGIN|A B C ...|uncertainty|frequency`, slices in corpus order,
/// origins ascending.
void write_paths(std::ostream& out, const PathCorpus& corpus);

struct PathsParse {
  PathCorpus corpus;
  ParseStats stats;
};

PathsParse parse_paths(std::istream& in);

}  // namespace decoyplace
