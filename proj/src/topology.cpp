#include "decoyplace/topology.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace decoyplace {

Relationship invert(Relationship r) {
  switch (r) {
    case Relationship::ProviderToCustomer:
      return Relationship::CustomerToProvider;
    case Relationship::CustomerToProvider:
      return Relationship::ProviderToCustomer;
    default:
      return r;
  }
}

const char* to_string(Relationship r) {
  switch (r) {
    case Relationship::ProviderToCustomer:
      return "p2c";
    case Relationship::CustomerToProvider:
      return "c2p";
    case Relationship::PeerToPeer:
      return "p2p";
    case Relationship::None:
      break;
  }
  return "none";
}

RelationshipGraph RelationshipGraph::build(std::span<const RawEdge> edges, GraphStats* stats) {
  GraphStats local;
  GraphStats& st = stats ? *stats : local;

  // (low, high) -> relationship(low, high)
  std::map<std::pair<Asn, Asn>, Relationship> labels;
  for (const auto& e : edges) {
    if (e.first == e.second) {
      ++st.self_edges_rejected;
      continue;
    }
    auto rel = e.kind == EdgeKind::PeerToPeer ? Relationship::PeerToPeer : Relationship::ProviderToCustomer;
    std::pair key{e.first, e.second};
    if (e.second < e.first) {
      key = {e.second, e.first};
      rel = invert(rel);
    }
    auto [it, inserted] = labels.emplace(key, rel);
    if (!inserted) {
      if (it->second != rel) {
        throw InputError("conflicting labels for AS" + key.first.str() + "/AS" + key.second.str());
      }
      ++st.duplicate_edges;
    }
  }

  RelationshipGraph g;
  for (const auto& [key, rel] : labels) {
    g.vertices_.push_back(key.first);
    g.vertices_.push_back(key.second);
  }
  std::sort(g.vertices_.begin(), g.vertices_.end());
  g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());
  for (Index i = 0; i < g.vertices_.size(); ++i) g.index_.emplace(g.vertices_[i], i);
  g.adjacency_.resize(g.vertices_.size());

  for (const auto& [key, rel] : labels) {
    auto a = g.index_.at(key.first);
    auto b = g.index_.at(key.second);
    g.adjacency_[a].push_back({b, rel});
    g.adjacency_[b].push_back({a, invert(rel)});
    (rel == Relationship::PeerToPeer ? g.p2p_count_ : g.p2c_count_)++;
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end(), [](const Neighbor& x, const Neighbor& y) { return x.index < y.index; });
  }
  return g;
}

std::optional<RelationshipGraph::Index> RelationshipGraph::index_of(Asn a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Relationship RelationshipGraph::relationship(Index a, Index b) const {
  const auto& adj = adjacency_[a];
  auto it = std::lower_bound(adj.begin(), adj.end(), b, [](const Neighbor& n, Index v) { return n.index < v; });
  if (it == adj.end() || it->index != b) return Relationship::None;
  return it->rel;
}

Relationship RelationshipGraph::relationship(Asn a, Asn b) const {
  auto ia = index_of(a);
  auto ib = index_of(b);
  if (!ia || !ib) return Relationship::None;
  return relationship(*ia, *ib);
}

std::vector<Asn> RelationshipGraph::customers(Asn a) const {
  std::vector<Asn> out;
  if (auto ia = index_of(a)) {
    for (const auto& n : adjacency_[*ia]) {
      if (n.rel == Relationship::ProviderToCustomer) out.push_back(vertices_[n.index]);
    }
  }
  return out;
}

std::vector<RawEdge> RelationshipGraph::edges() const {
  std::vector<RawEdge> out;
  for (Index a = 0; a < vertices_.size(); ++a) {
    for (const auto& n : adjacency_[a]) {
      if (n.rel == Relationship::ProviderToCustomer) {
        out.push_back({vertices_[a], vertices_[n.index], EdgeKind::ProviderToCustomer, 0});
      } else if (n.rel == Relationship::PeerToPeer && a < n.index) {
        out.push_back({vertices_[a], vertices_[n.index], EdgeKind::PeerToPeer, 0});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RawEdge& x, const RawEdge& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  return out;
}

ValleyCheck check_valley_free(std::span<const Asn> path, const RelationshipGraph& g) {
  if (path.empty()) return {false, "empty path"};
  if (path.size() == 1) {
    if (!g.contains(path[0])) return {false, "unknown AS " + path[0].str()};
    return {true, {}};
  }
  bool descending = false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto rel = g.relationship(path[i], path[i + 1]);
    switch (rel) {
      case Relationship::None:
        return {false, "unknown link " + path[i].str() + "-" + path[i + 1].str()};
      case Relationship::CustomerToProvider:
        if (descending) return {false, "valley at " + path[i].str() + "-" + path[i + 1].str()};
        break;
      case Relationship::PeerToPeer:
        if (descending) return {false, "peer link after peak at " + path[i].str() + "-" + path[i + 1].str()};
        descending = true;
        break;
      case Relationship::ProviderToCustomer:
        descending = true;
        break;
    }
  }
  return {true, {}};
}

bool is_valley_free(std::span<const Asn> path, const RelationshipGraph& g) {
  return check_valley_free(path, g).valley_free;
}

bool is_loop_free(std::span<const Asn> path) {
  std::unordered_set<Asn> seen;
  for (auto a : path) {
    if (!seen.insert(a).second) return false;
  }
  return true;
}

bool is_downhill(std::span<const Asn> path, const RelationshipGraph& g) {
  if (path.size() == 1) return g.contains(path[0]);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (g.relationship(path[i], path[i + 1]) != Relationship::ProviderToCustomer) return false;
  }
  return !path.empty();
}

namespace {

struct Enumerator {
  const RelationshipGraph& g;
  std::size_t max_len;
  std::vector<bool> on_path;
  AsPath path;
  std::set<AsPath> out;

  void extend(RelationshipGraph::Index at, bool descending) {
    if (path.size() >= 2) out.insert(path);
    if (path.size() == max_len) return;
    for (const auto& n : g.neighbors(at)) {
      if (on_path[n.index]) continue;
      bool next_descending = descending;
      switch (n.rel) {
        case Relationship::CustomerToProvider:
          if (descending) continue;
          break;
        case Relationship::PeerToPeer:
          if (descending) continue;
          next_descending = true;
          break;
        case Relationship::ProviderToCustomer:
          next_descending = true;
          break;
        case Relationship::None:
          continue;
      }
      on_path[n.index] = true;
      path.push_back(g.asn_at(n.index));
      extend(n.index, next_descending);
      path.pop_back();
      on_path[n.index] = false;
    }
  }
};

}  // namespace

std::set<AsPath> enumerate_valley_free(const RelationshipGraph& g, std::size_t max_len) {
  if (g.vertex_count() > kEnumerationVertexLimit) {
    throw UsageError("enumerate_valley_free refuses graphs with more than " +
                     std::to_string(kEnumerationVertexLimit) + " vertices");
  }
  Enumerator e{g, max_len, std::vector<bool>(g.vertex_count(), false), {}, {}};
  for (RelationshipGraph::Index v = 0; v < g.vertex_count(); ++v) {
    e.on_path[v] = true;
    e.path = {g.asn_at(v)};
    e.extend(v, false);
    e.on_path[v] = false;
  }
  return std::move(e.out);
}

std::set<Asn> customer_cone(const RelationshipGraph& g, Asn a) {
  auto start = g.index_of(a);
  if (!start) throw UsageError("unknown AS" + a.str());
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<RelationshipGraph::Index> stack{*start};
  seen[*start] = true;
  std::set<Asn> cone;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& n : g.neighbors(v)) {
      if (n.rel != Relationship::ProviderToCustomer || seen[n.index]) continue;
      seen[n.index] = true;
      cone.insert(g.asn_at(n.index));
      stack.push_back(n.index);
    }
  }
  return cone;
}

std::vector<std::size_t> customer_cone_sizes(const RelationshipGraph& g) {
  std::vector<std::size_t> sizes(g.vertex_count());
  for (RelationshipGraph::Index v = 0; v < g.vertex_count(); ++v) {
    sizes[v] = customer_cone(g, g.asn_at(v)).size();
  }
  return sizes;
}

}  // namespace decoyplace
