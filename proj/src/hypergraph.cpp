#include "ohg/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace ohg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unknown_id: return "UnknownId";
    case ErrorKind::duplicate_id: return "DuplicateId";
    case ErrorKind::slot_gap: return "SlotGap";
    case ErrorKind::mixed_signs: return "MixedSigns";
    case ErrorKind::invalid_walk: return "InvalidWalk";
    case ErrorKind::not_a_circle: return "NotACircle";
    case ErrorKind::not_a_2edge: return "NotA2Edge";
    case ErrorKind::loop_edge: return "LoopEdge";
    case ErrorKind::not_degree2: return "NotDegree2";
    case ErrorKind::same_edge: return "SameEdge";
    case ErrorKind::bad_bipartition: return "BadBipartition";
    case ErrorKind::bad_entries: return "BadEntries";
    case ErrorKind::limit_exceeded: return "LimitExceeded";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::semantic_error: return "SemanticError";
    case ErrorKind::infeasible_params: return "InfeasibleParams";
  }
  return "Error";
}

namespace {

void check_sign(int sign) {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorKind::semantic_error, "incidence sign must be +1 or -1");
  }
}

}  // namespace

void OrientedHypergraph::index_ids() {
  vertex_lookup_.clear();
  edge_lookup_.clear();
  for (Index v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].empty()) throw Error(ErrorKind::syntax_error, "empty vertex id");
    if (!vertex_lookup_.emplace(vertices_[v], v).second) {
      throw Error(ErrorKind::duplicate_id, "duplicate vertex id '" + vertices_[v] + "'");
    }
  }
  for (Index e = 0; e < edges_.size(); ++e) {
    if (edges_[e].empty()) throw Error(ErrorKind::syntax_error, "empty edge id");
    if (vertex_lookup_.contains(edges_[e])) {
      throw Error(ErrorKind::duplicate_id,
                  "id '" + edges_[e] + "' is used for both a vertex and an edge");
    }
    if (!edge_lookup_.emplace(edges_[e], e).second) {
      throw Error(ErrorKind::duplicate_id, "duplicate edge id '" + edges_[e] + "'");
    }
  }
}

void OrientedHypergraph::index_incidences() {
  at_vertex_.assign(vertices_.size(), {});
  at_edge_.assign(edges_.size(), {});
  for (Index i = 0; i < incidences_.size(); ++i) {
    at_vertex_[incidences_[i].vertex].push_back(i);
    at_edge_[incidences_[i].edge].push_back(i);
  }
}

OrientedHypergraph OrientedHypergraph::build(std::vector<std::string> vertices,
                                             std::vector<std::string> edges,
                                             const std::vector<IncidenceRecord>& incidences,
                                             bool strict) {
  OrientedHypergraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.index_ids();

  std::map<std::pair<Index, Index>, std::vector<const IncidenceRecord*>> by_pair;
  g.incidences_.reserve(incidences.size());
  for (const IncidenceRecord& rec : incidences) {
    auto v = g.find_vertex(rec.vertex);
    if (!v) throw Error(ErrorKind::unknown_id, "incidence references unknown vertex '" + rec.vertex + "'");
    auto e = g.find_edge(rec.edge);
    if (!e) throw Error(ErrorKind::unknown_id, "incidence references unknown edge '" + rec.edge + "'");
    check_sign(rec.sign);
    g.incidences_.push_back({*v, *e, rec.slot, rec.sign});
    by_pair[{*v, *e}].push_back(&rec);
  }

  for (const auto& [pair, recs] : by_pair) {
    std::vector<int> slots;
    for (const IncidenceRecord* r : recs) slots.push_back(r->slot);
    std::sort(slots.begin(), slots.end());
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (slots[k] != static_cast<int>(k) + 1) {
        throw Error(ErrorKind::slot_gap, "slots of (" + recs.front()->vertex + ", " +
                                             recs.front()->edge +
                                             ") are not 1..multiplicity");
      }
    }
    if (strict) {
      for (const IncidenceRecord* r : recs) {
        if (r->sign != recs.front()->sign) {
          throw Error(ErrorKind::mixed_signs, "incidences of (" + recs.front()->vertex + ", " +
                                                  recs.front()->edge +
                                                  ") carry different signs in strict mode");
        }
      }
    }
  }
  g.index_incidences();
  return g;
}

OrientedHypergraph OrientedHypergraph::from_indexed(std::vector<std::string> vertices,
                                                    std::vector<std::string> edges,
                                                    const std::vector<IndexedIncidence>& incidences) {
  OrientedHypergraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.index_ids();
  std::map<std::pair<Index, Index>, int> next_slot;
  g.incidences_.reserve(incidences.size());
  for (const IndexedIncidence& inc : incidences) {
    if (inc.vertex >= g.vertices_.size() || inc.edge >= g.edges_.size()) {
      throw Error(ErrorKind::unknown_id, "incidence position out of range");
    }
    check_sign(inc.sign);
    int slot = ++next_slot[{inc.vertex, inc.edge}];
    g.incidences_.push_back({inc.vertex, inc.edge, slot, inc.sign});
  }
  g.index_incidences();
  return g;
}

std::optional<Index> OrientedHypergraph::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<Index> OrientedHypergraph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

Index OrientedHypergraph::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error(ErrorKind::unknown_id, "unknown vertex '" + std::string(id) + "'");
}

Index OrientedHypergraph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw Error(ErrorKind::unknown_id, "unknown edge '" + std::string(id) + "'");
}

std::size_t OrientedHypergraph::multiplicity(Index v, Index e) const {
  std::size_t count = 0;
  for (Index i : at_vertex_.at(v)) {
    if (incidences_[i].edge == e) ++count;
  }
  return count;
}

bool OrientedHypergraph::is_simple() const {
  for (Index v = 0; v < vertices_.size(); ++v) {
    std::set<Index> seen;
    for (Index i : at_vertex_[v]) {
      if (!seen.insert(incidences_[i].edge).second) return false;
    }
  }
  return true;
}

bool OrientedHypergraph::is_strict() const {
  std::map<std::pair<Index, Index>, int> sign_of;
  for (const Incidence& inc : incidences_) {
    auto [it, fresh] = sign_of.emplace(std::pair{inc.vertex, inc.edge}, inc.sign);
    if (!fresh && it->second != inc.sign) return false;
  }
  return true;
}

std::size_t degree(const OrientedHypergraph& g, std::string_view vertex) {
  return g.degree(g.vertex_index(vertex));
}

std::size_t edge_size(const OrientedHypergraph& g, std::string_view edge) {
  return g.edge_size(g.edge_index(edge));
}

std::size_t multiplicity(const OrientedHypergraph& g, std::string_view vertex,
                         std::string_view edge) {
  return g.multiplicity(g.vertex_index(vertex), g.edge_index(edge));
}

bool same_structure(const OrientedHypergraph& a, const OrientedHypergraph& b) {
  if (!std::ranges::equal(a.vertices(), b.vertices()) || !std::ranges::equal(a.edges(), b.edges()) ||
      a.incidence_count() != b.incidence_count()) {
    return false;
  }
  auto signature = [](const OrientedHypergraph& g) {
    std::vector<std::tuple<Index, Index, int>> s;
    for (const Incidence& inc : g.incidences()) s.emplace_back(inc.vertex, inc.edge, inc.sign);
    std::sort(s.begin(), s.end());
    return s;
  };
  return signature(a) == signature(b);
}

OrientedHypergraph incidence_dual(const OrientedHypergraph& g) {
  std::vector<IncidenceRecord> recs;
  recs.reserve(g.incidence_count());
  for (const Incidence& inc : g.incidences()) {
    recs.push_back({g.edge_id(inc.edge), g.vertex_id(inc.vertex), inc.slot, inc.sign});
  }
  return OrientedHypergraph::build(std::vector<std::string>(g.edges().begin(), g.edges().end()),
                                   std::vector<std::string>(g.vertices().begin(), g.vertices().end()),
                                   recs, /*strict=*/false);
}

bool IncidenceGraph::has_parallel_arcs() const {
  std::set<std::pair<Index, Index>> seen;
  for (const Arc& a : arcs) {
    if (!seen.insert({a.left, a.right}).second) return true;
  }
  return false;
}

IncidenceGraph to_incidence_graph(const OrientedHypergraph& g) {
  IncidenceGraph out;
  out.left_count = g.vertex_count();
  out.right_count = g.edge_count();
  out.arcs.reserve(g.incidence_count());
  for (Index i = 0; i < g.incidence_count(); ++i) {
    const Incidence& inc = g.incidence(i);
    out.arcs.push_back({inc.vertex, inc.edge, inc.sign, i});
  }
  return out;
}

namespace {

struct DisjointSets {
  std::vector<Index> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Index find(Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<Node>> connected_components(const OrientedHypergraph& g) {
  const std::size_t n = g.vertex_count();
  DisjointSets sets(g.node_count());
  for (const Incidence& inc : g.incidences()) sets.unite(inc.vertex, n + inc.edge);
  std::vector<std::vector<Node>> comps;
  std::vector<std::optional<std::size_t>> slot(g.node_count());
  for (Index x = 0; x < g.node_count(); ++x) {
    Index root = sets.find(x);
    if (!slot[root]) {
      slot[root] = comps.size();
      comps.emplace_back();
    }
    comps[*slot[root]].push_back(x < n ? vertex_node(x) : edge_node(x - n));
  }
  return comps;
}

std::size_t component_count(const OrientedHypergraph& g) {
  return connected_components(g).size();
}

bool is_connected(const OrientedHypergraph& g) { return component_count(g) <= 1; }

OrientedHypergraph keep_incidences(const OrientedHypergraph& g, const std::vector<bool>& keep_vertex,
                                   const std::vector<bool>& keep_edge,
                                   const std::vector<bool>& keep_incidence) {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::vector<Index> vpos(g.vertex_count()), epos(g.edge_count());
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (keep_vertex[v]) {
      vpos[v] = vertices.size();
      vertices.push_back(g.vertex_id(v));
    }
  }
  for (Index e = 0; e < g.edge_count(); ++e) {
    if (keep_edge[e]) {
      epos[e] = edges.size();
      edges.push_back(g.edge_id(e));
    }
  }
  std::vector<IndexedIncidence> incs;
  for (Index i = 0; i < g.incidence_count(); ++i) {
    const Incidence& inc = g.incidence(i);
    if (keep_incidence[i] && keep_vertex[inc.vertex] && keep_edge[inc.edge]) {
      incs.push_back({vpos[inc.vertex], epos[inc.edge], inc.sign});
    }
  }
  return OrientedHypergraph::from_indexed(std::move(vertices), std::move(edges), incs);
}

OrientedHypergraph cross_induced(const OrientedHypergraph& g, const std::vector<bool>& keep_vertex,
                                 const std::vector<bool>& keep_edge) {
  return keep_incidences(g, keep_vertex, keep_edge, std::vector<bool>(g.incidence_count(), true));
}

OrientedHypergraph edge_induced(const OrientedHypergraph& g, const std::vector<bool>& keep_edge) {
  std::vector<bool> keep_vertex(g.vertex_count(), false);
  for (const Incidence& inc : g.incidences()) {
    if (keep_edge[inc.edge]) keep_vertex[inc.vertex] = true;
  }
  return cross_induced(g, keep_vertex, keep_edge);
}

OrientedHypergraph sub_hypergraph(const OrientedHypergraph& g,
                                  const std::vector<std::string>& vertices,
                                  const std::vector<std::string>& edges, SubMode mode) {
  std::vector<bool> keep_vertex(g.vertex_count(), false);
  std::vector<bool> keep_edge(g.edge_count(), false);
  for (const std::string& e : edges) keep_edge[g.edge_index(e)] = true;
  switch (mode) {
    case SubMode::edge_induced:
      return edge_induced(g, keep_edge);
    case SubMode::edge_restriction:
      keep_vertex.assign(g.vertex_count(), true);
      return cross_induced(g, keep_vertex, keep_edge);
    case SubMode::cross_induced:
      for (const std::string& v : vertices) keep_vertex[g.vertex_index(v)] = true;
      return cross_induced(g, keep_vertex, keep_edge);
  }
  return g;
}

}  // namespace ohg
