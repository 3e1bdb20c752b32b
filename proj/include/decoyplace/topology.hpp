#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "decoyplace/ingest.hpp"
#include "decoyplace/types.hpp"

namespace decoyplace {

/// Relationship of the first AS to the second. CustomerToProvider is an
/// uphill step when reading a path from its origin toward the destination.
enum class Relationship : std::uint8_t { None, ProviderToCustomer, CustomerToProvider, PeerToPeer };

Relationship invert(Relationship r);
const char* to_string(Relationship r);

struct GraphStats {
  std::size_t self_edges_rejected = 0;
  std::size_t duplicate_edges = 0;
};

/// Labeled AS adjacency. Vertices are dense indices ordered by ASN; each
/// adjacency list is ordered by neighbor index.
class RelationshipGraph {
 public:
  using Index = std::uint32_t;

  struct Neighbor {
    Index index;
    Relationship rel;  // relationship(self, neighbor)
  };

  RelationshipGraph() = default;

  /// Self-edges are skipped and counted; a pair with two different labels
  /// throws InputError.
  static RelationshipGraph build(std::span<const RawEdge> edges, GraphStats* stats = nullptr);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return p2c_count_ + p2p_count_; }
  std::size_t p2c_count() const { return p2c_count_; }
  std::size_t p2p_count() const { return p2p_count_; }

  bool contains(Asn a) const { return index_.contains(a); }
  std::optional<Index> index_of(Asn a) const;
  Asn asn_at(Index i) const { return vertices_[i]; }
  const std::vector<Asn>& vertices() const { return vertices_; }
  std::span<const Neighbor> neighbors(Index i) const { return adjacency_[i]; }

  Relationship relationship(Asn a, Asn b) const;
  Relationship relationship(Index a, Index b) const;

  std::vector<Asn> customers(Asn a) const;

  /// One edge per labeled pair, p2c edges provider first, sorted.
  std::vector<RawEdge> edges() const;

 private:
  std::vector<Asn> vertices_;
  std::unordered_map<Asn, Index> index_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::size_t p2c_count_ = 0;
  std::size_t p2p_count_ = 0;
};

struct ValleyCheck {
  bool valley_free = false;
  std::string reason;  // empty when valley_free

  explicit operator bool() const { return valley_free; }
};

/// Label sequence read origin to destination must be
/// CustomerToProvider*, at most one PeerToPeer, then ProviderToCustomer*.
/// Unlabeled links make the path invalid.
ValleyCheck check_valley_free(std::span<const Asn> path, const RelationshipGraph& g);
bool is_valley_free(std::span<const Asn> path, const RelationshipGraph& g);

bool is_loop_free(std::span<const Asn> path);

/// True iff every link on the path is ProviderToCustomer (a one-AS path
/// qualifies). Such paths can be extended over any kind of link.
bool is_downhill(std::span<const Asn> path, const RelationshipGraph& g);

inline constexpr std::size_t kEnumerationVertexLimit = 16;

/// Every simple valley-free path of 2..max_len ASes. Exponential; refuses
/// graphs above kEnumerationVertexLimit vertices.
std::set<AsPath> enumerate_valley_free(const RelationshipGraph& g, std::size_t max_len);

/// Transitive closure over ProviderToCustomer edges, excluding `a`.
std::set<Asn> customer_cone(const RelationshipGraph& g, Asn a);

/// Cone sizes for every vertex, index aligned with g.vertices().
std::vector<std::size_t> customer_cone_sizes(const RelationshipGraph& g);

}  // namespace decoyplace
