#include "ohg/walk.hpp"

#include <algorithm>
#include <set>
#include <functional>
#include <tuple>

namespace ohg {

std::vector<Node> Walk::nodes() const {
  std::vector<Node> out = elements;
  if (is_circle() && !out.empty()) out.pop_back();
  return out;
}

bool circle_less(const Walk& a, const Walk& b) {
  const std::size_t la = a.length();
  const std::size_t lb = b.length();
  return std::forward_as_tuple(la, a.elements, a.incidences) <
         std::forward_as_tuple(lb, b.elements, b.incidences);
}

int adjacency_sign(const OrientedHypergraph& g, Index first, Index second) {
  const Incidence& a = g.incidence(first);
  const Incidence& b = g.incidence(second);
  if (first == second || a.edge != b.edge) return 0;
  return -a.sign * b.sign;
}

int adjacency_sign(const OrientedHypergraph& g, const Adjacency& adj) {
  auto v = g.find_vertex(adj.v);
  auto w = g.find_vertex(adj.w);
  auto e = g.find_edge(adj.edge);
  if (!v || !w || !e) return 0;
  auto locate = [&](Index vertex, int slot) -> std::optional<Index> {
    for (Index i : g.vertex_incidences(vertex)) {
      if (g.incidence(i).edge == *e && g.incidence(i).slot == slot) return i;
    }
    return std::nullopt;
  };
  auto first = locate(*v, adj.k1);
  auto second = locate(*w, adj.k2);
  if (!first || !second) return 0;
  return adjacency_sign(g, *first, *second);
}

namespace {

bool incidence_joins(const OrientedHypergraph& g, Index i, Node a, Node b) {
  if (a.kind == b.kind) return false;
  const Incidence& inc = g.incidence(i);
  Node v = a.is_vertex() ? a : b;
  Node e = a.is_vertex() ? b : a;
  return inc.vertex == v.index && inc.edge == e.index;
}

[[noreturn]] void bad_walk(const std::string& why) { throw Error(ErrorKind::invalid_walk, why); }

}  // namespace

void validate_walk(const OrientedHypergraph& g, const Walk& walk) {
  const std::size_t n = walk.incidences.size();
  if (walk.elements.size() != n + 1) bad_walk("walk must have one more element than incidences");
  for (const Node& x : walk.elements) {
    if ((x.is_vertex() && x.index >= g.vertex_count()) || (x.is_edge() && x.index >= g.edge_count())) {
      bad_walk("walk element out of range");
    }
  }
  for (Index i : walk.incidences) {
    if (i >= g.incidence_count()) bad_walk("walk incidence out of range");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!incidence_joins(g, walk.incidences[j], walk.elements[j], walk.elements[j + 1])) {
      bad_walk("incidence " + std::to_string(j + 1) + " does not join its neighbours");
    }
  }
  std::set<Index> incs(walk.incidences.begin(), walk.incidences.end());
  if (incs.size() != n) bad_walk("repeated incidence");
  std::vector<Node> distinct = walk.nodes();
  std::set<Node> seen(distinct.begin(), distinct.end());
  if (seen.size() != distinct.size()) bad_walk("repeated vertex or edge");
  if (walk.is_circle()) {
    if (n < 2 || n % 2 != 0) bad_walk("a circle has 2k incidences with k >= 1");
    if (walk.elements.front() != walk.elements.back()) bad_walk("a circle must close");
    if (!walk.elements.front().is_vertex()) bad_walk("a circle starts at a vertex");
  }
}

int walk_sign(const OrientedHypergraph& g, const Walk& walk) {
  validate_walk(g, walk);
  const std::size_t n = walk.incidences.size();
  int sign = (n / 2) % 2 == 0 ? 1 : -1;
  for (Index i : walk.incidences) sign *= g.incidence(i).sign;
  return sign;
}

Walk normalize_circle(const OrientedHypergraph& g, const Walk& circle) {
  (void)g;
  const std::size_t n = circle.incidences.size();
  // Position of the smallest vertex among even positions of a0..a_{n-1}.
  std::size_t start = 0;
  bool found = false;
  for (std::size_t j = 0; j < n; ++j) {
    const Node& x = circle.elements[j];
    if (x.is_vertex() && (!found || x.index < circle.elements[start].index)) {
      start = j;
      found = true;
    }
  }
  auto build = [&](bool forward) {
    Walk w;
    w.kind = WalkKind::circle;
    for (std::size_t step = 0; step <= n; ++step) {
      std::size_t pos = forward ? (start + step) % n : (start + n - step) % n;
      w.elements.push_back(circle.elements[pos]);
      if (step < n) {
        // Incidence between element pos and the next element in this direction.
        std::size_t inc_pos = forward ? pos : (pos + n - 1) % n;
        w.incidences.push_back(circle.incidences[inc_pos]);
      }
    }
    return w;
  };
  Walk fwd = build(true);
  Walk bwd = build(false);
  auto key = [](const Walk& w) { return std::tuple(w.elements[1].index, w.incidences[0]); };
  return key(fwd) <= key(bwd) ? fwd : bwd;
}

Walk circle_from_incidences(const OrientedHypergraph& g, const std::vector<Index>& cyclic) {
  const std::size_t n = cyclic.size();
  if (n < 2 || n % 2 != 0) bad_walk("a circle has an even number of incidences");
  // Find the node shared by the last and first incidence: that is a0.
  const Incidence& first = g.incidence(cyclic.front());
  const Incidence& last = g.incidence(cyclic.back());
  Node a0;
  if (n == 2) {
    a0 = vertex_node(first.vertex);
  } else if (first.vertex == last.vertex) {
    a0 = vertex_node(first.vertex);
  } else if (first.edge == last.edge) {
    a0 = edge_node(first.edge);
  } else {
    bad_walk("incidence sequence is not cyclic");
  }
  Walk w;
  w.kind = WalkKind::circle;
  Node cur = a0;
  for (Index i : cyclic) {
    w.elements.push_back(cur);
    w.incidences.push_back(i);
    cur = g.other_end(i, cur);
  }
  w.elements.push_back(cur);
  if (!a0.is_vertex()) {
    // Rotate by one so the circle starts at a vertex.
    Walk r;
    r.kind = WalkKind::circle;
    for (std::size_t j = 1; j <= n; ++j) r.elements.push_back(w.elements[j]);
    r.elements.push_back(w.elements[1]);
    for (std::size_t j = 1; j < n; ++j) r.incidences.push_back(w.incidences[j]);
    r.incidences.push_back(w.incidences[0]);
    w = std::move(r);
  }
  validate_walk(g, w);
  return normalize_circle(g, w);
}

Walk path_from_incidences(const OrientedHypergraph& g, Node start, const std::vector<Index>& incs) {
  Walk w;
  w.kind = WalkKind::path;
  Node cur = start;
  w.elements.push_back(cur);
  for (Index i : incs) {
    cur = g.other_end(i, cur);
    w.incidences.push_back(i);
    w.elements.push_back(cur);
  }
  validate_walk(g, w);
  return w;
}

Walk dual_walk(const OrientedHypergraph& dual, const Walk& walk) {
  Walk w = walk;
  for (Node& x : w.elements) {
    x.kind = x.is_vertex() ? NodeKind::edge : NodeKind::vertex;
  }
  if (!w.is_circle()) return w;
  // The dual circle starts at an edge of the dual; re-read it from a vertex.
  return circle_from_incidences(dual, w.incidences);
}

std::string describe(const OrientedHypergraph& g, const Walk& walk) {
  std::string out;
  for (std::size_t j = 0; j < walk.elements.size(); ++j) {
    if (j > 0) out += ' ';
    out += g.id(walk.elements[j]);
  }
  return out;
}

}  // namespace ohg
