#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ohg/error.hpp"

namespace ohg {

using Index = std::size_t;

/// One oriented incidence (v, e, k, sigma). Vertex and edge are positions in
/// the owning hypergraph's insertion-ordered id lists.
struct Incidence {
  Index vertex = 0;
  Index edge = 0;
  int slot = 1;
  int sign = +1;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Incidence as written by a caller, addressed by ids.
struct IncidenceRecord {
  std::string vertex;
  std::string edge;
  int slot = 1;
  int sign = +1;
};

/// Incidence addressed by position; slots are assigned on construction.
struct IndexedIncidence {
  Index vertex = 0;
  Index edge = 0;
  int sign = +1;
};

enum class NodeKind : std::uint8_t { vertex, edge };

/// An element of V or E. Vertices and edges are the two sides of the
/// incidence graph, so most traversal code works on nodes.
struct Node {
  NodeKind kind = NodeKind::vertex;
  Index index = 0;

  bool is_vertex() const { return kind == NodeKind::vertex; }
  bool is_edge() const { return kind == NodeKind::edge; }

  friend auto operator<=>(const Node&, const Node&) = default;
};

inline Node vertex_node(Index v) { return {NodeKind::vertex, v}; }
inline Node edge_node(Index e) { return {NodeKind::edge, e}; }

/// The quadruple (V, E, I, sigma). Immutable once built; every operation in
/// the library returns a new value.
class OrientedHypergraph {
 public:
  OrientedHypergraph() = default;

  /// Validating constructor. Throws Error with kind duplicate_id, unknown_id,
  /// slot_gap, or (strict mode only) mixed_signs.
  static OrientedHypergraph build(std::vector<std::string> vertices,
                                  std::vector<std::string> edges,
                                  const std::vector<IncidenceRecord>& incidences,
                                  bool strict = true);

  /// Positional constructor used by transforms. Slots are renumbered
  /// 1..k per (vertex, edge) pair in list order; sign mixing is allowed.
  static OrientedHypergraph from_indexed(std::vector<std::string> vertices,
                                         std::vector<std::string> edges,
                                         const std::vector<IndexedIncidence>& incidences);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t incidence_count() const { return incidences_.size(); }
  std::size_t node_count() const { return vertices_.size() + edges_.size(); }

  std::span<const std::string> vertices() const { return vertices_; }
  std::span<const std::string> edges() const { return edges_; }
  std::span<const Incidence> incidences() const { return incidences_; }
  const Incidence& incidence(Index i) const { return incidences_.at(i); }

  const std::string& vertex_id(Index v) const { return vertices_.at(v); }
  const std::string& edge_id(Index e) const { return edges_.at(e); }
  const std::string& id(Node n) const {
    return n.is_vertex() ? vertex_id(n.index) : edge_id(n.index);
  }

  std::optional<Index> find_vertex(std::string_view id) const;
  std::optional<Index> find_edge(std::string_view id) const;
  Index vertex_index(std::string_view id) const;  // throws unknown_id
  Index edge_index(std::string_view id) const;    // throws unknown_id
  bool has_id(std::string_view id) const { return find_vertex(id) || find_edge(id); }

  /// Incidence positions touching a vertex or edge, in incidence-list order.
  std::span<const Index> vertex_incidences(Index v) const { return at_vertex_.at(v); }
  std::span<const Index> edge_incidences(Index e) const { return at_edge_.at(e); }
  std::span<const Index> node_incidences(Node n) const {
    return n.is_vertex() ? vertex_incidences(n.index) : edge_incidences(n.index);
  }

  std::size_t degree(Index v) const { return at_vertex_.at(v).size(); }
  std::size_t edge_size(Index e) const { return at_edge_.at(e).size(); }
  std::size_t multiplicity(Index v, Index e) const;

  /// The endpoint of incidence i opposite to node n.
  Node other_end(Index i, Node n) const {
    const Incidence& inc = incidences_[i];
    return n.is_vertex() ? edge_node(inc.edge) : vertex_node(inc.vertex);
  }

  bool is_simple() const;
  bool is_strict() const;

  friend bool operator==(const OrientedHypergraph& a, const OrientedHypergraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
           a.incidences_ == b.incidences_;
  }

 private:
  void index_ids();
  void index_incidences();

  std::vector<std::string> vertices_;
  std::vector<std::string> edges_;
  std::vector<Incidence> incidences_;
  std::unordered_map<std::string, Index> vertex_lookup_;
  std::unordered_map<std::string, Index> edge_lookup_;
  std::vector<std::vector<Index>> at_vertex_;
  std::vector<std::vector<Index>> at_edge_;
};

// Id-addressed counting queries. Each throws unknown_id for a missing id.
std::size_t degree(const OrientedHypergraph& g, std::string_view vertex);
std::size_t edge_size(const OrientedHypergraph& g, std::string_view edge);
std::size_t multiplicity(const OrientedHypergraph& g, std::string_view vertex,
                         std::string_view edge);

/// Labeled equality that ignores incidence order and slot numbering: same id
/// lists and, per (vertex, edge) pair, the same multiset of signs.
bool same_structure(const OrientedHypergraph& a, const OrientedHypergraph& b);

/// Vertices and edges exchange roles; sigma*(e, v, k) = sigma(v, e, k).
OrientedHypergraph incidence_dual(const OrientedHypergraph& g);

/// The bipartite graph on V u E whose edges are the incidences.
struct IncidenceGraph {
  struct Arc {
    Index left = 0;   // hypergraph vertex
    Index right = 0;  // hypergraph edge
    int sign = +1;
    Index incidence = 0;
  };
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<Arc> arcs;

  bool has_parallel_arcs() const;
};

IncidenceGraph to_incidence_graph(const OrientedHypergraph& g);

/// Partition of V u E into connected components. Components are ordered by
/// their first node (vertices before edges, insertion order), and each
/// component lists its nodes in that same order.
std::vector<std::vector<Node>> connected_components(const OrientedHypergraph& g);
std::size_t component_count(const OrientedHypergraph& g);
bool is_connected(const OrientedHypergraph& g);

enum class SubMode { cross_induced, edge_restriction, edge_induced };

OrientedHypergraph sub_hypergraph(const OrientedHypergraph& g,
                                  const std::vector<std::string>& vertices,
                                  const std::vector<std::string>& edges, SubMode mode);

// Positional forms. Output keeps the parent's relative order of ids and
// incidences.
OrientedHypergraph cross_induced(const OrientedHypergraph& g, const std::vector<bool>& keep_vertex,
                                 const std::vector<bool>& keep_edge);
OrientedHypergraph edge_induced(const OrientedHypergraph& g, const std::vector<bool>& keep_edge);
OrientedHypergraph keep_incidences(const OrientedHypergraph& g, const std::vector<bool>& keep_vertex,
                                   const std::vector<bool>& keep_edge,
                                   const std::vector<bool>& keep_incidence);

}  // namespace ohg
