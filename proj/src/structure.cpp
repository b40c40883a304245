#include <algorithm>

#include "ohg/structure.hpp"
#include "ohg/transforms.hpp"

namespace ohg {

bool edge_on_circle(const OrientedHypergraph& g, Index e) {
  const std::vector<bool> bridge = bridge_incidences(g);
  for (Index i : g.edge_incidences(e)) {
    if (!bridge[i]) return true;
  }
  return false;
}

StructureReport structural_inventory(const OrientedHypergraph& g) {
  StructureReport r;
  const std::vector<bool> bridge = bridge_incidences(g);
  std::vector<bool> on_circle(g.edge_count(), false);
  for (Index i = 0; i < g.incidence_count(); ++i) {
    if (!bridge[i]) on_circle[g.incidence(i).edge] = true;
  }
  std::vector<bool> twig(g.edge_count(), false), briar(g.edge_count(), false);
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) r.isolated_vertices.push_back(g.vertex_id(v));
    if (g.degree(v) != 1) continue;
    r.monovalent_vertices.push_back(g.vertex_id(v));
    const Index e = g.incidence(g.vertex_incidences(v)[0]).edge;
    if (on_circle[e]) {
      r.thorns.push_back(g.vertex_id(v));
      briar[e] = true;
    } else {
      r.leaves.push_back(g.vertex_id(v));
      twig[e] = true;
    }
  }
  for (Index e = 0; e < g.edge_count(); ++e) {
    if (twig[e]) r.twigs.push_back(g.edge_id(e));
    if (briar[e]) r.briars.push_back(g.edge_id(e));
  }
  const std::size_t c = component_count(g);
  for (Index e = 0; e < g.edge_count(); ++e) {
    if (component_count(weak_delete_edge(g, g.edge_id(e))) > c) r.isthmi.push_back(g.edge_id(e));
  }
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (component_count(weak_delete_vertex(g, g.vertex_id(v))) > c) {
      r.cut_vertices.push_back(g.vertex_id(v));
    }
  }
  for (Index i = 0; i < g.incidence_count(); ++i) {
    if (component_count(break_incidence(g, i)) > c) r.shoals.push_back(i);
  }
  return r;
}

std::string_view to_string(FlowerVerdict verdict) {
  switch (verdict) {
    case FlowerVerdict::flower: return "flower";
    case FlowerVerdict::pseudo_flower: return "pseudo-flower";
    case FlowerVerdict::neither: return "neither";
    case FlowerVerdict::unknown: return "unknown";
  }
  return "?";
}

std::optional<bool> is_flower(const OrientedHypergraph& g, const Limits& limits) {
  if (!is_circle_covered(g)) return false;
  const std::size_t m = g.edge_count();
  if (m > limits.max_flower_edges || m >= 63) return std::nullopt;
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::vector<bool> keep(m);
    for (Index e = 0; e < m; ++e) keep[e] = (mask >> e) & 1;
    if (is_circle_covered(edge_induced(g, keep))) return false;
  }
  return true;
}

FlowerAnalysis flower_analysis(const OrientedHypergraph& g, const Limits& limits) {
  FlowerAnalysis out;
  if (is_circle_covered(g)) {
    auto flower = is_flower(g, limits);
    if (!flower) {
      out.verdict = FlowerVerdict::unknown;
      out.reason = "too many edges for the minimality check";
    } else if (*flower) {
      out.verdict = FlowerVerdict::flower;
    } else {
      out.reason = "a proper edge subset is already circle-covered";
    }
    return out;
  }

  const std::vector<bool> bridge = bridge_incidences(g);
  std::vector<bool> keep_vertex(g.vertex_count(), true);
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 1) continue;
    const Index e = g.incidence(g.vertex_incidences(v)[0]).edge;
    bool on_circle = g.edge_size(e) == 1;
    for (Index i : g.edge_incidences(e)) on_circle = on_circle || !bridge[i];
    if (on_circle) {
      out.thorns.push_back(g.vertex_id(v));
      keep_vertex[v] = false;
    }
  }
  if (out.thorns.empty()) {
    out.reason = "not circle-covered and has no thorns";
    return out;
  }
  OrientedHypergraph part = cross_induced(g, keep_vertex, std::vector<bool>(g.edge_count(), true));
  auto flower = is_flower(part, limits);
  if (!flower) {
    out.verdict = FlowerVerdict::unknown;
    out.reason = "too many edges for the minimality check";
  } else if (*flower) {
    out.verdict = FlowerVerdict::pseudo_flower;
    out.flower_part = std::move(part);
  } else {
    out.reason = "removing the thorns does not leave a flower";
  }
  return out;
}

ArteryCheck is_artery(const OrientedHypergraph& g) {
  ArteryCheck out;
  if (g.vertex_count() == 1 && g.edge_count() == 0) {
    out.artery = true;
    out.externals.push_back(g.vertex_id(0));
    return out;
  }
  if (g.node_count() == 0 || !is_connected(g)) return out;
  for (Index e = 0; e < g.edge_count(); ++e) {
    if (g.edge_size(e) == 1) return out;
  }
  for (bool b : bridge_incidences(g)) {
    if (!b) return out;
  }
  for (Index v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(v);
    if (d != 1 && d != 2) return out;
    (d == 2 ? out.internals : out.externals).push_back(g.vertex_id(v));
  }
  out.artery = true;
  return out;
}

OrientedHypergraph matrix_hypergraph(const IntMatrix& m) {
  std::vector<std::string> rows, cols;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back("r" + std::to_string(r + 1));
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back("c" + std::to_string(c + 1));
  std::vector<IndexedIncidence> incs;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::int64_t x = m(r, c);
      if (x == 0) continue;
      if (x != 1 && x != -1) {
        throw Error(ErrorKind::bad_entries, "entry (" + std::to_string(r + 1) + ", " +
                                                std::to_string(c + 1) + ") is " +
                                                std::to_string(x) + ", expected 0, 1 or -1");
      }
      incs.push_back({r, c, static_cast<int>(x)});
    }
  }
  return OrientedHypergraph::from_indexed(std::move(rows), std::move(cols), incs);
}

MatrixBalance matrix_is_balanced(const IntMatrix& m, const Limits& limits) {
  const OrientedHypergraph g = matrix_hypergraph(m);
  MatrixBalance out;
  for (const Walk& c : enumerate_circles(g, limits)) {
    const CircleInfo info = classify_circle(g, c);
    if (info.purity != Purity::pure || info.sign > 0) continue;
    HoleWitness w;
    for (const Node& x : c.nodes()) (x.is_vertex() ? w.rows : w.cols).push_back(x.index);
    w.submatrix = IntMatrix(w.rows.size(), w.cols.size());
    for (std::size_t r = 0; r < w.rows.size(); ++r) {
      for (std::size_t k = 0; k < w.cols.size(); ++k) {
        w.submatrix(r, k) = m(w.rows[r], w.cols[k]);
        w.entry_sum += w.submatrix(r, k);
      }
    }
    if (((w.entry_sum % 4) + 4) % 4 != 2) {
      throw std::logic_error("negative pure circle with an even hole sum");
    }
    out.balanced = false;
    out.odd_hole = std::move(w);
    return out;
  }
  return out;
}

}  // namespace ohg
