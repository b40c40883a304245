#include "ohg/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ohg {

namespace {

// Small union-find over the nodes of a hypergraph: vertices first, then edges.
class NodeSets {
 public:
  explicit NodeSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<bool> all(std::size_t n) { return std::vector<bool>(n, true); }

}  // namespace

OrientedHypergraph weak_delete_vertex(const OrientedHypergraph& g, std::string_view vertex) {
  std::vector<bool> keep = all(g.vertex_count());
  keep[g.vertex_index(vertex)] = false;
  return cross_induced(g, keep, all(g.edge_count()));
}

OrientedHypergraph weak_delete_edge(const OrientedHypergraph& g, std::string_view edge) {
  std::vector<bool> keep = all(g.edge_count());
  keep[g.edge_index(edge)] = false;
  return cross_induced(g, all(g.vertex_count()), keep);
}

OrientedHypergraph break_incidence(const OrientedHypergraph& g, Index incidence) {
  if (incidence >= g.incidence_count()) throw Error(ErrorKind::unknown_id, "no such incidence");
  std::vector<bool> keep = all(g.incidence_count());
  keep[incidence] = false;
  return keep_incidences(g, all(g.vertex_count()), all(g.edge_count()), keep);
}

OrientedHypergraph break_incidence(const OrientedHypergraph& g, std::string_view vertex,
                                   std::string_view edge, int slot) {
  const Index v = g.vertex_index(vertex);
  const Index e = g.edge_index(edge);
  for (Index i : g.vertex_incidences(v)) {
    if (g.incidence(i).edge == e && g.incidence(i).slot == slot) return break_incidence(g, i);
  }
  throw Error(ErrorKind::unknown_id, "no incidence (" + std::string(vertex) + ", " +
                                         std::string(edge) + ", " + std::to_string(slot) + ")");
}

OrientedHypergraph strong_delete_vertex(const OrientedHypergraph& g, std::string_view vertex) {
  const Index v = g.vertex_index(vertex);
  std::vector<bool> keep_vertex = all(g.vertex_count());
  std::vector<bool> keep_edge = all(g.edge_count());
  keep_vertex[v] = false;
  for (Index i : g.vertex_incidences(v)) keep_edge[g.incidence(i).edge] = false;
  return cross_induced(g, keep_vertex, keep_edge);
}

OrientedHypergraph strong_delete_edge(const OrientedHypergraph& g, std::string_view edge) {
  const Index e = g.edge_index(edge);
  std::vector<bool> keep_vertex = all(g.vertex_count());
  std::vector<bool> keep_edge = all(g.edge_count());
  keep_edge[e] = false;
  for (Index i : g.edge_incidences(e)) keep_vertex[g.incidence(i).vertex] = false;
  return cross_induced(g, keep_vertex, keep_edge);
}

OrientedHypergraph switching(const OrientedHypergraph& g, const std::vector<int>& vertex_theta,
                             const std::vector<int>& edge_theta) {
  std::vector<IndexedIncidence> incs;
  incs.reserve(g.incidence_count());
  for (const Incidence& inc : g.incidences()) {
    incs.push_back({inc.vertex, inc.edge, vertex_theta[inc.vertex] * inc.sign * edge_theta[inc.edge]});
  }
  return OrientedHypergraph::from_indexed(
      std::vector<std::string>(g.vertices().begin(), g.vertices().end()),
      std::vector<std::string>(g.edges().begin(), g.edges().end()), incs);
}

OrientedHypergraph switching(const OrientedHypergraph& g, const SwitchingFunction& theta) {
  std::vector<int> vt(g.vertex_count(), 1);
  std::vector<int> et(g.edge_count(), 1);
  for (const auto& [id, value] : theta) {
    if (value != 1 && value != -1) {
      throw Error(ErrorKind::bad_entries, "switching value for " + id + " must be +1 or -1");
    }
    if (auto v = g.find_vertex(id)) {
      vt[*v] = value;
    } else if (auto e = g.find_edge(id)) {
      et[*e] = value;
    } else {
      throw Error(ErrorKind::unknown_id, "unknown id " + id);
    }
  }
  return switching(g, vt, et);
}

OrientedHypergraph contract_2edge(const OrientedHypergraph& g, std::string_view edge) {
  const Index e = g.edge_index(edge);
  if (g.edge_size(e) != 2) {
    throw Error(ErrorKind::not_a_2edge, std::string(edge) + " has size " +
                                            std::to_string(g.edge_size(e)));
  }
  const Incidence& ia = g.incidence(g.edge_incidences(e)[0]);
  const Incidence& ib = g.incidence(g.edge_incidences(e)[1]);
  if (ia.vertex == ib.vertex) {
    throw Error(ErrorKind::loop_edge, std::string(edge) + " meets a single vertex twice");
  }
  Index keep = ia.vertex;
  Index gone = ib.vertex;
  if (g.vertex_id(gone) < g.vertex_id(keep)) std::swap(keep, gone);
  // Negative adjacency: switch the smaller endpoint first.
  const int flip = (-ia.sign * ib.sign < 0) ? -1 : 1;

  std::vector<std::string> vertices;
  std::vector<Index> vpos(g.vertex_count());
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (v == gone) continue;
    vpos[v] = vertices.size();
    vertices.push_back(g.vertex_id(v));
  }
  vpos[gone] = vpos[keep];
  std::vector<std::string> edges;
  std::vector<Index> epos(g.edge_count());
  for (Index f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    epos[f] = edges.size();
    edges.push_back(g.edge_id(f));
  }
  std::vector<IndexedIncidence> incs;
  for (const Incidence& inc : g.incidences()) {
    if (inc.edge == e) continue;
    const int sign = inc.vertex == keep ? flip * inc.sign : inc.sign;
    incs.push_back({vpos[inc.vertex], epos[inc.edge], sign});
  }
  return OrientedHypergraph::from_indexed(std::move(vertices), std::move(edges), incs);
}

OrientedHypergraph contract_2vertex(const OrientedHypergraph& g, std::string_view vertex,
                                    std::optional<std::string> merged_id) {
  const Index v = g.vertex_index(vertex);
  if (g.degree(v) != 2) {
    throw Error(ErrorKind::not_degree2, std::string(vertex) + " has degree " +
                                            std::to_string(g.degree(v)));
  }
  const Index e0 = g.incidence(g.vertex_incidences(v)[0]).edge;
  const Index e1 = g.incidence(g.vertex_incidences(v)[1]).edge;
  if (e0 == e1) {
    throw Error(ErrorKind::same_edge, std::string(vertex) + " meets a single edge twice");
  }
  OrientedHypergraph out = incidence_dual(contract_2edge(incidence_dual(g), vertex));
  if (!merged_id) return out;
  const std::string& kept = std::min(g.edge_id(e0), g.edge_id(e1));
  if (*merged_id != kept && out.has_id(*merged_id)) {
    throw Error(ErrorKind::duplicate_id, "merged id " + *merged_id + " is already in use");
  }
  std::vector<std::string> edges(out.edges().begin(), out.edges().end());
  *std::find(edges.begin(), edges.end(), kept) = *merged_id;
  std::vector<IndexedIncidence> incs;
  for (const Incidence& inc : out.incidences()) incs.push_back({inc.vertex, inc.edge, inc.sign});
  return OrientedHypergraph::from_indexed(
      std::vector<std::string>(out.vertices().begin(), out.vertices().end()), std::move(edges), incs);
}

std::size_t fresh_suffix(const OrientedHypergraph& g) {
  for (std::size_t n = 1;; ++n) {
    const std::string s = std::to_string(n);
    if (!g.has_id("u#" + s) && !g.has_id("e#" + s + ".1") && !g.has_id("e#" + s + ".2")) return n;
  }
}

bool vertex_on_circle(const OrientedHypergraph& g, Index v) {
  const std::size_t nv = g.vertex_count();
  NodeSets sets(nv + g.edge_count());
  for (const Incidence& inc : g.incidences()) {
    if (inc.vertex != v) sets.unite(inc.vertex, nv + inc.edge);
  }
  std::set<std::size_t> roots;
  std::set<Index> seen_edges;
  for (Index i : g.vertex_incidences(v)) {
    const Index e = g.incidence(i).edge;
    // A repeated edge already closes a circle of length 1 through v.
    if (!seen_edges.insert(e).second) return true;
    if (!roots.insert(sets.find(nv + e)).second) return true;
  }
  return false;
}

SubdivisionResult subdivide_edge(const OrientedHypergraph& g, std::string_view edge,
                                 const std::vector<Index>& part1, const std::vector<Index>& part2,
                                 int sign1, int sign2) {
  const Index e = g.edge_index(edge);
  if ((sign1 != 1 && sign1 != -1) || (sign2 != 1 && sign2 != -1)) {
    throw Error(ErrorKind::bad_entries, "subdivision signs must be +1 or -1");
  }
  std::vector<int> side(g.incidence_count(), 0);
  auto mark = [&](const std::vector<Index>& part, int label) {
    for (Index i : part) {
      if (i >= g.incidence_count() || g.incidence(i).edge != e) {
        throw Error(ErrorKind::bad_bipartition, "incidence " + std::to_string(i) +
                                                    " does not belong to " + std::string(edge));
      }
      if (side[i] != 0) {
        throw Error(ErrorKind::bad_bipartition, "incidence " + std::to_string(i) + " listed twice");
      }
      side[i] = label;
    }
  };
  mark(part1, 1);
  mark(part2, 2);
  for (Index i : g.edge_incidences(e)) {
    if (side[i] == 0) {
      throw Error(ErrorKind::bad_bipartition, "incidence " + std::to_string(i) + " of " +
                                                  std::string(edge) + " is in neither part");
    }
  }

  const std::string n = std::to_string(fresh_suffix(g));
  SubdivisionResult result;
  result.new_vertex = "u#" + n;
  result.first_edge = "e#" + n + ".1";
  result.second_edge = "e#" + n + ".2";

  std::vector<std::string> vertices(g.vertices().begin(), g.vertices().end());
  const Index u = vertices.size();
  vertices.push_back(result.new_vertex);
  std::vector<std::string> edges;
  std::vector<Index> epos(g.edge_count());
  Index first = 0;
  for (Index f = 0; f < g.edge_count(); ++f) {
    epos[f] = edges.size();
    if (f == e) {
      first = edges.size();
      edges.push_back(result.first_edge);
      edges.push_back(result.second_edge);
    } else {
      edges.push_back(g.edge_id(f));
    }
  }
  std::vector<IndexedIncidence> incs;
  for (Index i = 0; i < g.incidence_count(); ++i) {
    const Incidence& inc = g.incidence(i);
    const Index target = inc.edge == e ? first + (side[i] == 2 ? 1 : 0) : epos[inc.edge];
    incs.push_back({inc.vertex, target, inc.sign});
  }
  incs.push_back({u, first, sign1});
  incs.push_back({u, first + 1, sign2});
  result.hypergraph = OrientedHypergraph::from_indexed(std::move(vertices), std::move(edges), incs);
  result.compatibility = sign1 * sign2 < 0 ? Compatibility::compatible : Compatibility::incompatible;
  result.balanced = result.compatibility == Compatibility::compatible ||
                    !vertex_on_circle(result.hypergraph, u);
  return result;
}

}  // namespace ohg
