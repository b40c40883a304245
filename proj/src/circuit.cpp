#include "ohg/circuit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ohg/transforms.hpp"

namespace ohg {

namespace {

using IdSet = std::set<std::string>;

IdSet as_set(const std::vector<std::string>& ids) { return {ids.begin(), ids.end()}; }

PseudoFlowerPart part_from_block(const OrientedHypergraph& h, const IncidenceBlock& b) {
  PseudoFlowerPart p;
  std::vector<bool> edge_in(h.edge_count(), false), vertex_in_block(h.vertex_count(), false);
  for (const Node& x : b.nodes) (x.is_vertex() ? vertex_in_block : edge_in)[x.index] = true;
  std::vector<bool> touches(h.vertex_count(), false);
  for (const Incidence& inc : h.incidences()) {
    if (edge_in[inc.edge]) touches[inc.vertex] = true;
  }
  for (Index e = 0; e < h.edge_count(); ++e) {
    if (edge_in[e]) p.edges.push_back(h.edge_id(e));
  }
  for (Index v = 0; v < h.vertex_count(); ++v) {
    if (!touches[v]) continue;
    p.vertices.push_back(h.vertex_id(v));
    (vertex_in_block[v] ? p.flower_vertices : p.thorns).push_back(h.vertex_id(v));
  }
  p.flower_incidences = b.incidences;
  return p;
}

std::vector<bool> edge_mask(const OrientedHypergraph& h, const std::vector<std::string>& ids) {
  std::vector<bool> keep(h.edge_count(), false);
  for (const std::string& e : ids) keep[h.edge_index(e)] = true;
  return keep;
}

// Incidences joining vertex v to edges of the pseudo-flower.
std::size_t degree_in(const OrientedHypergraph& h, const PseudoFlowerPart& p, const std::string& v) {
  const std::vector<bool> in = edge_mask(h, p.edges);
  std::size_t d = 0;
  for (Index i : h.vertex_incidences(h.vertex_index(v))) d += in[h.incidence(i).edge];
  return d;
}

// Two pseudo-flowers of a hypercircle either touch only at common thorns or
// are adjacent along one shared briar. Returns the briar when adjacent.
struct PairCheck {
  std::optional<std::string> violation;
  std::optional<std::string> briar;
};

PairCheck check_pair(const OrientedHypergraph& h, const PseudoFlowerPart& a,
                     const PseudoFlowerPart& b) {
  PairCheck out;
  const IdSet ea = as_set(a.edges), eb = as_set(b.edges);
  const IdSet va = as_set(a.vertices), vb = as_set(b.vertices);
  std::vector<std::string> ce, cv;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(ce));
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(cv));
  if (ce.size() >= 2) {
    out.violation = "pseudo-flowers share " + std::to_string(ce.size()) + " edges";
    return out;
  }
  const IdSet ta = as_set(a.thorns), tb = as_set(b.thorns);
  if (ce.empty()) {
    for (const std::string& v : cv) {
      if (!ta.count(v) || !tb.count(v)) {
        out.violation = "common vertex " + v + " is not a thorn of both pseudo-flowers";
        return out;
      }
    }
    return out;
  }
  const std::string& briar = ce.front();
  const Index e = h.edge_index(briar);
  IdSet on_briar;
  bool thorn_a = false, thorn_b = false;
  for (Index i : h.edge_incidences(e)) {
    const std::string& v = h.vertex_id(h.incidence(i).vertex);
    on_briar.insert(v);
    thorn_a = thorn_a || ta.count(v);
    thorn_b = thorn_b || tb.count(v);
  }
  if (!thorn_a || !thorn_b) {
    out.violation = "shared edge " + briar + " is not a briar of both pseudo-flowers";
    return out;
  }
  if (IdSet(cv.begin(), cv.end()) != on_briar) {
    out.violation = "pseudo-flowers sharing " + briar + " also share other vertices";
    return out;
  }
  std::vector<std::string> both = a.edges;
  both.insert(both.end(), b.edges.begin(), b.edges.end());
  const OrientedHypergraph u = edge_induced(h, edge_mask(h, both));
  if (component_count(weak_delete_edge(u, briar)) <= component_count(u)) {
    out.violation = "shared briar " + briar + " is not an isthmus of the union";
    return out;
  }
  out.briar = briar;
  return out;
}

struct HypercircleCheck {
  std::vector<PseudoFlowerPart> parts;
  std::vector<PseudoFlowerAdjacency> adjacencies;
  std::size_t order = 0;
  std::string failure;
  bool limit_hit = false;
};

HypercircleCheck check_hypercircle(const OrientedHypergraph& h, const Limits& limits) {
  HypercircleCheck out;
  if (h.node_count() == 0 || !is_connected(h)) {
    out.failure = "the contracted hypergraph is not connected";
    return out;
  }
  if (h.vertex_count() == 0) return out;  // a single 0-edge
  std::vector<std::size_t> vertex_hits(h.vertex_count(), 0), edge_hits(h.edge_count(), 0);
  for (const IncidenceBlock& b : incidence_blocks(h)) {
    if (!b.nontrivial()) continue;
    const auto flower = is_flower(block_hypergraph(h, b), limits);
    if (!flower) {
      out.limit_hit = true;
      out.failure = "flower check over the edge limit";
      return out;
    }
    if (!*flower) {
      out.failure = "a block of the incidence graph is not a flower";
      return out;
    }
    for (const Node& x : b.nodes) ++(x.is_vertex() ? vertex_hits : edge_hits)[x.index];
    out.parts.push_back(part_from_block(h, b));
  }
  for (Index v = 0; v < h.vertex_count(); ++v) {
    if (vertex_hits[v] != 1) {
      out.failure = "vertex " + h.vertex_id(v) + " lies in " + std::to_string(vertex_hits[v]) +
                    " flower-parts";
      return out;
    }
  }
  for (Index e = 0; e < h.edge_count(); ++e) {
    if (edge_hits[e] == 0) {
      out.failure = "edge " + h.edge_id(e) + " lies in no flower-part";
      return out;
    }
  }
  for (const PseudoFlowerPart& p : out.parts) {
    for (const std::string& t : p.thorns) {
      if (degree_in(h, p, t) != 1) {
        out.failure = "thorn " + t + " is not monovalent in its pseudo-flower";
        return out;
      }
    }
  }
  for (std::size_t i = 0; i < out.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < out.parts.size(); ++j) {
      PairCheck c = check_pair(h, out.parts[i], out.parts[j]);
      if (c.violation) {
        out.failure = *c.violation;
        return out;
      }
      if (c.briar) out.adjacencies.push_back({i, j, *c.briar});
    }
  }
  out.order = out.parts.size();
  return out;
}

Recognition fail(std::string why) {
  Recognition r;
  r.failure = std::move(why);
  return r;
}

}  // namespace

Recognition recognize_hypercircle(const OrientedHypergraph& g, const Limits& limits) {
  if (g.node_count() == 0) return fail("empty hypergraph");
  if (!is_connected(g)) return fail("disconnected");

  HypercircleDecomposition d;
  std::vector<bool> on_circle(g.vertex_count(), false), edge_in_block(g.edge_count(), false);
  for (const IncidenceBlock& b : incidence_blocks(g)) {
    if (!b.nontrivial()) continue;
    for (const Node& x : b.nodes) (x.is_vertex() ? on_circle : edge_in_block)[x.index] = true;
    d.pseudo_flowers.push_back(part_from_block(g, b));
  }
  for (Index e = 0; e < g.edge_count(); ++e) {
    if (g.edge_size(e) != 1) continue;
    const std::string& v = g.vertex_id(g.incidence(g.edge_incidences(e)[0]).vertex);
    d.one_edges.push_back(g.edge_id(e));
    PseudoFlowerPart p;
    p.edges = {g.edge_id(e)};
    p.vertices = {v};
    p.thorns = {v};
    p.one_edge = true;
    d.pseudo_flowers.push_back(std::move(p));
  }
  d.isthmi = structural_inventory(g).isthmi;

  // Arteries: components of the edges on no circle that are not 1-edges.
  std::vector<bool> artery_edge(g.edge_count(), false);
  for (Index e = 0; e < g.edge_count(); ++e) {
    artery_edge[e] = !edge_in_block[e] && g.edge_size(e) >= 2;
  }
  std::vector<Index> comp(g.edge_count());
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](Index x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (Index v = 0; v < g.vertex_count(); ++v) {
    std::optional<Index> first;
    for (Index i : g.vertex_incidences(v)) {
      const Index e = g.incidence(i).edge;
      if (!artery_edge[e]) continue;
      if (first) comp[find(e)] = find(*first);
      else first = e;
    }
  }
  std::map<Index, std::vector<std::string>> groups;
  for (Index e = 0; e < g.edge_count(); ++e) {
    if (artery_edge[e]) groups[find(e)].push_back(g.edge_id(e));
  }
  std::vector<std::pair<Index, std::vector<std::string>>> ordered(groups.begin(), groups.end());
  std::sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
    return g.edge_index(a.second.front()) < g.edge_index(b.second.front());
  });
  for (auto& [root, edges] : ordered) {
    const OrientedHypergraph a = edge_induced(g, edge_mask(g, edges));
    ArteryPart part;
    part.edges = edges;
    part.vertices.assign(a.vertices().begin(), a.vertices().end());
    const ArteryCheck check = is_artery(a);
    if (!check.artery) return fail("edges off every circle do not form an artery");
    part.externals = check.externals;
    d.arteries.push_back(std::move(part));
  }
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (on_circle[v]) continue;
    bool touches_artery = false;
    for (Index i : g.vertex_incidences(v)) touches_artery = touches_artery || artery_edge[g.incidence(i).edge];
    if (!touches_artery) {
      ArteryPart part;
      part.vertices = {g.vertex_id(v)};
      part.externals = {g.vertex_id(v)};
      part.vertex_artery = true;
      d.arteries.push_back(std::move(part));
    }
  }

  // Undo the subdivisions: contract every vertex that lies on no circle.
  OrientedHypergraph h = g;
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (on_circle[v]) continue;
    const std::string& id = g.vertex_id(v);
    const Index hv = h.vertex_index(id);
    if (h.degree(hv) != 2) {
      return fail("vertex " + id + " lies on no circle but has degree " +
                  std::to_string(h.degree(hv)));
    }
    const Incidence& a = h.incidence(h.vertex_incidences(hv)[0]);
    const Incidence& b = h.incidence(h.vertex_incidences(hv)[1]);
    if (a.edge == b.edge || vertex_on_circle(h, hv)) {
      return fail("vertex " + id + " became part of a circle during contraction");
    }
    ContractionStep step;
    step.vertex = id;
    step.kept_edge = std::min(h.edge_id(a.edge), h.edge_id(b.edge));
    step.absorbed_edge = std::max(h.edge_id(a.edge), h.edge_id(b.edge));
    step.switched = a.sign * b.sign > 0;
    h = contract_2vertex(h, id);
    d.subdivision_record.push_back(std::move(step));
  }

  HypercircleCheck hc = check_hypercircle(h, limits);
  if (!hc.failure.empty()) {
    Recognition r = fail(hc.failure);
    r.limit_hit = hc.limit_hit;
    return r;
  }
  d.hypercircle = std::move(h);
  d.hypercircle_pseudo_flowers = std::move(hc.parts);
  d.adjacencies = std::move(hc.adjacencies);
  d.order = hc.order;
  Recognition r;
  r.decomposition = std::move(d);
  return r;
}

std::vector<std::string> validate_decomposition(const OrientedHypergraph& g,
                                                const HypercircleDecomposition& d,
                                                const Limits& limits) {
  std::vector<std::string> bad;
  auto report = [&](std::string msg) { bad.push_back(std::move(msg)); };

  // Subdivision record: replay it.
  OrientedHypergraph h = g;
  IdSet contracted;
  for (const ContractionStep& s : d.subdivision_record) {
    const auto v = h.find_vertex(s.vertex);
    if (!v) {
      report("record names unknown vertex " + s.vertex);
      return bad;
    }
    if (h.degree(*v) != 2) {
      report("recorded vertex " + s.vertex + " does not have degree 2");
      return bad;
    }
    if (vertex_on_circle(h, *v)) report("recorded vertex " + s.vertex + " lies on a circle");
    const Incidence& a = h.incidence(h.vertex_incidences(*v)[0]);
    const Incidence& b = h.incidence(h.vertex_incidences(*v)[1]);
    if (a.edge == b.edge) {
      report("recorded vertex " + s.vertex + " meets one edge twice");
      return bad;
    }
    const IdSet pair{h.edge_id(a.edge), h.edge_id(b.edge)};
    if (pair != IdSet{s.kept_edge, s.absorbed_edge}) {
      report("record edges for " + s.vertex + " do not match");
    }
    if (s.switched != (a.sign * b.sign > 0)) report("record compatibility for " + s.vertex + " is wrong");
    h = contract_2vertex(h, s.vertex);
    contracted.insert(s.vertex);
  }
  if (!(h == d.hypercircle)) report("replaying the record does not give the stated hypercircle");
  for (Index v = 0; v < g.vertex_count(); ++v) {
    const bool on = vertex_on_circle(g, v);
    if (on && contracted.count(g.vertex_id(v))) report("contracted vertex " + g.vertex_id(v) + " is on a circle");
    if (!on && !contracted.count(g.vertex_id(v))) {
      report("vertex " + g.vertex_id(v) + " is on no circle but was not contracted");
    }
  }

  // Hypercircle level.
  const OrientedHypergraph& hc = d.hypercircle;
  if (!is_connected(hc) || hc.node_count() == 0) report("hypercircle is not connected");
  if (d.order == 0) {
    if (hc.vertex_count() != 0 || hc.edge_count() != 1) report("order 0 requires a single 0-edge");
    if (!d.hypercircle_pseudo_flowers.empty()) report("a 0-hypercircle has no pseudo-flowers");
  } else {
    if (d.hypercircle_pseudo_flowers.size() != d.order) report("order does not match the pseudo-flowers");
    std::vector<std::size_t> vhits(hc.vertex_count(), 0), ehits(hc.edge_count(), 0);
    std::vector<std::size_t> ihits(hc.incidence_count(), 0);
    for (const PseudoFlowerPart& p : d.hypercircle_pseudo_flowers) {
      std::vector<bool> kv(hc.vertex_count(), false), ke(hc.edge_count(), false),
          ki(hc.incidence_count(), false);
      const IdSet thorns = as_set(p.thorns);
      const std::vector<bool> pe = edge_mask(hc, p.edges);
      for (Index i : p.flower_incidences) {
        if (i >= hc.incidence_count()) {
          report("flower-part incidence out of range");
          return bad;
        }
        ki[i] = true;
        ++ihits[i];
        kv[hc.incidence(i).vertex] = true;
        ke[hc.incidence(i).edge] = true;
      }
      // The flower-part is the pseudo-flower with its thorns removed.
      for (Index i = 0; i < hc.incidence_count(); ++i) {
        const Incidence& inc = hc.incidence(i);
        const bool expected = pe[inc.edge] && !thorns.count(hc.vertex_id(inc.vertex));
        if (expected != ki[i]) report("flower-part incidences disagree with the pseudo-flower");
      }
      for (const std::string& v : p.flower_vertices) ++vhits[hc.vertex_index(v)];
      for (const std::string& e : p.edges) ++ehits[hc.edge_index(e)];
      const auto flower = is_flower(keep_incidences(hc, kv, ke, ki), limits);
      if (flower && !*flower) report("a flower-part is not a flower");
      for (const std::string& t : p.thorns) {
        if (degree_in(hc, p, t) != 1) report("thorn " + t + " is not monovalent");
      }
    }
    for (Index v = 0; v < hc.vertex_count(); ++v) {
      if (vhits[v] != 1) report("vertex " + hc.vertex_id(v) + " is not in exactly one flower-part");
    }
    for (Index e = 0; e < hc.edge_count(); ++e) {
      if (ehits[e] == 0) report("edge " + hc.edge_id(e) + " is in no flower-part");
    }
    for (std::size_t c : ihits) {
      if (c > 1) report("flower-parts share an incidence");
    }
    std::vector<PseudoFlowerAdjacency> adj;
    const auto& parts = d.hypercircle_pseudo_flowers;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        PairCheck c = check_pair(hc, parts[i], parts[j]);
        if (c.violation) report(*c.violation);
        if (c.briar) adj.push_back({i, j, *c.briar});
      }
    }
    auto same = [](const PseudoFlowerAdjacency& a, const PseudoFlowerAdjacency& b) {
      return a.first == b.first && a.second == b.second && a.briar == b.briar;
    };
    if (!std::equal(adj.begin(), adj.end(), d.adjacencies.begin(), d.adjacencies.end(), same)) {
      report("adjacency list does not match");
    }
  }

  // Input level: arterial and thorn connection conditions.
  if (!is_connected(g)) report("not connected");
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) report("monovalent vertex " + g.vertex_id(v) + " (not floral)");
  }
  const std::size_t c0 = component_count(g);
  IdSet artery_vertices, artery_edges, anchors, vertex_arteries;
  for (const ArteryPart& a : d.arteries) {
    if (a.vertex_artery) {
      if (a.vertices.size() != 1 || !a.edges.empty()) report("malformed vertex-artery");
      vertex_arteries.insert(a.vertices.begin(), a.vertices.end());
    } else {
      const OrientedHypergraph sub = edge_induced(g, edge_mask(g, a.edges));
      const ArteryCheck check = is_artery(sub);
      if (!check.artery) report("listed artery is not an artery");
      if (as_set(check.externals) != as_set(a.externals)) report("artery externals do not match");
    }
    for (const std::string& v : a.vertices) {
      if (!artery_vertices.insert(v).second) report("arteries share vertex " + v);
      if (component_count(weak_delete_vertex(g, v)) <= c0) {
        report("deleting artery vertex " + v + " does not disconnect");
      }
    }
    for (const std::string& e : a.edges) {
      if (!artery_edges.insert(e).second) report("arteries share edge " + e);
      if (component_count(weak_delete_edge(g, e)) <= c0) {
        report("deleting artery edge " + e + " does not disconnect");
      }
    }
    anchors.insert(a.externals.begin(), a.externals.end());
  }
  IdSet flower_vertices, one_edge_vertices;
  for (const PseudoFlowerPart& p : d.pseudo_flowers) {
    flower_vertices.insert(p.flower_vertices.begin(), p.flower_vertices.end());
    if (p.one_edge) {
      one_edge_vertices.insert(p.vertices.begin(), p.vertices.end());
      if (p.edges.size() != 1 || g.edge_size(g.edge_index(p.edges.front())) != 1) {
        report("listed 1-edge pseudo-flower is not a 1-edge");
      }
    }
    for (const std::string& e : p.edges) {
      if (artery_edges.count(e)) report("artery and pseudo-flower share edge " + e);
    }
    for (const std::string& v : p.vertices) {
      if (artery_vertices.count(v) && !anchors.count(v)) {
        report("pseudo-flower meets an artery at internal vertex " + v);
      }
    }
  }
  for (const PseudoFlowerPart& p : d.pseudo_flowers) {
    for (const std::string& t : p.thorns) {
      const bool met = anchors.count(t) || vertex_arteries.count(t) || flower_vertices.count(t) ||
                       (one_edge_vertices.count(t) && !p.one_edge);
      if (!met) report("thorn " + t + " is met by no artery, 1-edge or adjacent flower-part");
    }
  }
  return bad;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::circuit: return "circuit";
    case Verdict::not_circuit: return "not-circuit";
    case Verdict::out_of_scope_unbalanced: return "out-of-scope-unbalanced";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

OrientedHypergraph strip_isolated(const OrientedHypergraph& g) {
  std::vector<bool> keep(g.vertex_count(), true);
  for (Index v = 0; v < g.vertex_count(); ++v) keep[v] = g.degree(v) > 0;
  return cross_induced(g, keep, std::vector<bool>(g.edge_count(), true));
}

CircuitVerdict verdict(Verdict v, std::string reason) {
  CircuitVerdict out;
  out.verdict = v;
  out.reason = std::move(reason);
  return out;
}

}  // namespace

CircuitVerdict classify_structurally(const OrientedHypergraph& input, const Limits& limits) {
  // Isolated vertices are zero rows and play no part in column dependency.
  const OrientedHypergraph g = strip_isolated(input);
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) {
      return verdict(Verdict::not_circuit, "monovalent vertex " + g.vertex_id(v));
    }
  }
  try {
    const BalanceResult b = is_balanced(g, limits);
    if (!b.balanced) {
      return verdict(Verdict::out_of_scope_unbalanced,
                     "negative circle " + describe(g, *b.negative_circle));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::limit_exceeded) throw;
    return verdict(Verdict::unknown, e.what());
  }
  if (g.edge_count() == 0) return verdict(Verdict::not_circuit, "no edges");
  if (!is_connected(g)) return verdict(Verdict::not_circuit, "disconnected");
  if (!g.is_simple()) {
    return verdict(Verdict::unknown, "repeated incidences are outside the classified family");
  }
  Recognition r = recognize_hypercircle(g, limits);
  if (r.limit_hit) return verdict(Verdict::unknown, r.failure);
  if (!r.decomposition) return verdict(Verdict::not_circuit, r.failure);
  const std::vector<std::string> problems = validate_decomposition(g, *r.decomposition, limits);
  if (!problems.empty()) {
    throw std::logic_error("hypercircle witness failed re-validation: " + problems.front());
  }
  CircuitVerdict out = verdict(Verdict::circuit, std::to_string(r.decomposition->order) + "-hypercircle");
  out.witness = std::move(r.decomposition);
  return out;
}

namespace {

bool disagrees(Verdict v, const DependencyCertificate& oracle) {
  const bool minimal = oracle.status == DependencyStatus::minimally_dependent;
  return (v == Verdict::circuit && !minimal) || (v == Verdict::not_circuit && minimal);
}

}  // namespace

CircuitVerdict classify_balanced_circuit(const OrientedHypergraph& g, const Limits& limits) {
  CircuitVerdict out = classify_structurally(g, limits);
  out.oracle = is_minimally_dependent(g);
  if (disagrees(out.verdict, out.oracle)) {
    throw std::logic_error("structural verdict " + std::string(to_string(out.verdict)) +
                           " contradicts the exact certificate (" +
                           std::string(to_string(out.oracle.status)) + ")");
  }
  return out;
}

CrossValidation cross_validate(const OrientedHypergraph& g, const Limits& limits) {
  CrossValidation out;
  out.oracle = is_minimally_dependent(g);
  try {
    const CircuitVerdict v = classify_structurally(g, limits);
    out.structural = v.verdict;
    out.reason = v.reason;
  } catch (const std::logic_error& e) {
    out.structural = Verdict::unknown;
    out.mismatch = true;
    out.reason = e.what();
    return out;
  }
  if (out.structural == Verdict::out_of_scope_unbalanced) {
    out.skipped = true;
    return out;
  }
  out.mismatch = disagrees(out.structural, out.oracle);
  return out;
}

}  // namespace ohg
