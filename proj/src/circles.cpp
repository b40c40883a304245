#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>
#include <deque>
#include <functional>
#include <limits>
#include <set>

#include "gamma.hpp"
#include "ohg/structure.hpp"

namespace ohg {

using detail::Gamma;

IncidenceSet incidence_set(const OrientedHypergraph& g, const Walk& w) {
  IncidenceSet s(g.incidence_count());
  for (Index i : w.incidences) s.set(i);
  return s;
}

std::vector<Walk> enumerate_circles(const OrientedHypergraph& g, const Limits& limits) {
  const Gamma gm(g);
  const std::size_t max_incs = 2 * limits.max_circle_length;
  std::vector<std::vector<Index>> found;
  std::vector<char> on_path(gm.size, 0);
  std::vector<Index> path;

  // Is there a route from `from` back to `start` through unused keys above start?
  auto can_return = [&](std::size_t from, std::size_t start) {
    std::vector<char> seen(gm.size, 0);
    std::deque<std::size_t> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (auto [w, i] : gm.adj[u]) {
        if (w == start && u != from) return true;
        if (w == start && !path.empty() && i != path.back()) return true;
        if (w < start || on_path[w] || seen[w]) continue;
        seen[w] = 1;
        queue.push_back(w);
      }
    }
    return false;
  };

  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t u) {
    for (auto [w, i] : gm.adj[u]) {
      if (!path.empty() && i == path.back()) continue;
      if (w == start) {
        if (!path.empty() && path.front() < i) {
          found.push_back(path);
          found.back().push_back(i);
          if (found.size() > limits.max_circles) {
            throw Error(ErrorKind::limit_exceeded,
                        "more than " + std::to_string(limits.max_circles) + " circles");
          }
        }
        continue;
      }
      if (w < start || on_path[w]) continue;
      if (path.size() + 2 > max_incs) {
        path.push_back(i);
        on_path[w] = 1;
        const bool longer = can_return(w, start);
        on_path[w] = 0;
        path.pop_back();
        if (longer) {
          throw Error(ErrorKind::limit_exceeded, "a circle is longer than " +
                                                     std::to_string(limits.max_circle_length));
        }
        continue;
      }
      path.push_back(i);
      on_path[w] = 1;
      extend(start, w);
      on_path[w] = 0;
      path.pop_back();
    }
  };

  for (std::size_t s = 0; s < gm.size; ++s) {
    on_path[s] = 1;
    extend(s, s);
    on_path[s] = 0;
  }

  std::vector<Walk> circles;
  circles.reserve(found.size());
  for (const auto& incs : found) circles.push_back(circle_from_incidences(g, incs));
  std::sort(circles.begin(), circles.end(), circle_less);
  return circles;
}

CircleInfo classify_circle(const OrientedHypergraph& g, const Walk& c) {
  if (!c.is_circle()) throw Error(ErrorKind::not_a_circle, "walk is a path");
  try {
    validate_walk(g, c);
  } catch (const Error& e) {
    throw Error(ErrorKind::not_a_circle, e.what());
  }
  CircleInfo info;
  info.sign = walk_sign(g, c);
  std::vector<char> vin(g.vertex_count(), 0), ein(g.edge_count(), 0);
  for (const Node& x : c.nodes()) (x.is_vertex() ? vin : ein)[x.index] = 1;
  const IncidenceSet on = incidence_set(g, c);
  for (Index i = 0; i < g.incidence_count(); ++i) {
    const Incidence& inc = g.incidence(i);
    if (!on.test(i) && vin[inc.vertex] && ein[inc.edge]) {
      info.purity = Purity::degenerate;
      break;
    }
  }
  return info;
}

std::vector<IncidenceBlock> incidence_blocks(const OrientedHypergraph& g) {
  const Gamma gm(g);
  constexpr Index none = std::numeric_limits<Index>::max();
  std::vector<std::size_t> disc(gm.size, 0), low(gm.size, 0);
  std::vector<char> visited(gm.size, 0);
  std::size_t timer = 0;
  std::vector<Index> stack;
  std::vector<IncidenceBlock> blocks;

  auto close_block = [&](Index last) {
    IncidenceBlock b;
    Index i;
    do {
      i = stack.back();
      stack.pop_back();
      b.incidences.push_back(i);
    } while (i != last);
    std::sort(b.incidences.begin(), b.incidences.end());
    std::set<Node> nodes;
    for (Index j : b.incidences) {
      nodes.insert(vertex_node(g.incidence(j).vertex));
      nodes.insert(edge_node(g.incidence(j).edge));
    }
    b.nodes.assign(nodes.begin(), nodes.end());
    blocks.push_back(std::move(b));
  };

  std::function<void(std::size_t, Index)> dfs = [&](std::size_t u, Index parent_inc) {
    visited[u] = 1;
    disc[u] = low[u] = timer++;
    for (auto [w, i] : gm.adj[u]) {
      if (i == parent_inc) continue;
      if (!visited[w]) {
        stack.push_back(i);
        dfs(w, i);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) close_block(i);
      } else if (disc[w] < disc[u]) {
        stack.push_back(i);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  for (std::size_t u = 0; u < gm.size; ++u) {
    if (!visited[u]) dfs(u, none);
  }
  std::sort(blocks.begin(), blocks.end(), [](const IncidenceBlock& a, const IncidenceBlock& b) {
    return a.incidences.front() < b.incidences.front();
  });
  return blocks;
}

OrientedHypergraph block_hypergraph(const OrientedHypergraph& g, const IncidenceBlock& block) {
  std::vector<bool> kv(g.vertex_count(), false), ke(g.edge_count(), false),
      ki(g.incidence_count(), false);
  for (const Node& x : block.nodes) (x.is_vertex() ? kv : ke)[x.index] = true;
  for (Index i : block.incidences) ki[i] = true;
  return keep_incidences(g, kv, ke, ki);
}

std::vector<bool> bridge_incidences(const OrientedHypergraph& g) {
  std::vector<bool> bridge(g.incidence_count(), false);
  for (const IncidenceBlock& b : incidence_blocks(g)) {
    if (!b.nontrivial()) bridge[b.incidences.front()] = true;
  }
  return bridge;
}

bool is_inseparable(const OrientedHypergraph& g) {
  if (g.incidence_count() <= 1) return true;
  const auto blocks = incidence_blocks(g);
  return blocks.size() == 1;
}

bool is_inseparable_by_circles(const OrientedHypergraph& g, const Limits& limits) {
  const std::size_t n = g.incidence_count();
  if (n <= 1) return true;
  std::vector<IncidenceSet> sets;
  for (const Walk& c : enumerate_circles(g, limits)) sets.push_back(incidence_set(g, c));
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const bool shared = std::any_of(sets.begin(), sets.end(), [&](const IncidenceSet& s) {
        return s.test(i) && s.test(j);
      });
      if (!shared) return false;
    }
  }
  return true;
}

bool is_circle_covered(const OrientedHypergraph& g) {
  if (g.node_count() == 0 || !is_connected(g)) return false;
  if (g.vertex_count() == 0 && g.edge_count() == 1) return true;
  return g.incidence_count() >= 2 && is_inseparable(g);
}

// ------------------------------------------------------------------ thetas

std::string_view to_string(ThetaKind kind) {
  switch (kind) {
    case ThetaKind::vertex_theta: return "vertex-theta";
    case ThetaKind::edge_theta: return "edge-theta";
    case ThetaKind::cross_theta: return "cross-theta";
  }
  return "?";
}

namespace {

// Orders a set of incidences forming a simple path, starting at `start`.
std::vector<Index> order_path(const OrientedHypergraph& g, const IncidenceSet& set, Node start) {
  std::vector<Index> out;
  IncidenceSet left = set;
  Node cur = start;
  while (left.any()) {
    bool moved = false;
    for (Index i : g.node_incidences(cur)) {
      if (left.test(i)) {
        left.reset(i);
        out.push_back(i);
        cur = g.other_end(i, cur);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return out;
}

ThetaKind theta_kind(Node a, Node b) {
  if (a.kind != b.kind) return ThetaKind::cross_theta;
  return a.is_vertex() ? ThetaKind::vertex_theta : ThetaKind::edge_theta;
}

void sort_paths(std::array<Walk, 3>& paths) {
  std::sort(paths.begin(), paths.end(), [](const Walk& a, const Walk& b) {
    return std::forward_as_tuple(a.incidences.size(), a.incidences) <
           std::forward_as_tuple(b.incidences.size(), b.incidences);
  });
}

std::vector<Node> nodes_of(const OrientedHypergraph& g, const IncidenceSet& s) {
  std::set<Node> out;
  for (auto i = s.find_first(); i != IncidenceSet::npos; i = s.find_next(i)) {
    out.insert(vertex_node(g.incidence(i).vertex));
    out.insert(edge_node(g.incidence(i).edge));
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Theta> find_thetas(const OrientedHypergraph& g, const Limits& limits) {
  const std::vector<Walk> circles = enumerate_circles(g, limits);
  std::vector<IncidenceSet> sets;
  std::vector<std::vector<Node>> nodes;
  for (const Walk& c : circles) {
    sets.push_back(incidence_set(g, c));
    std::vector<Node> n = c.nodes();
    std::sort(n.begin(), n.end());
    nodes.push_back(std::move(n));
  }
  std::set<IncidenceSet> seen;
  std::vector<Theta> out;
  for (std::size_t a = 0; a < circles.size(); ++a) {
    for (std::size_t b = a + 1; b < circles.size(); ++b) {
      const IncidenceSet common = sets[a] & sets[b];
      if (common.none()) continue;
      std::vector<Node> shared;
      std::set_intersection(nodes[a].begin(), nodes[a].end(), nodes[b].begin(), nodes[b].end(),
                            std::back_inserter(shared));
      if (nodes_of(g, common) != shared || shared.size() != common.count() + 1) continue;
      // The common part is a forest with one more node than arcs; it is a
      // single path exactly when it is connected, i.e. when it has two ends.
      std::vector<Node> ends;
      for (const Node& x : shared) {
        std::size_t deg = 0;
        for (Index i : g.node_incidences(x)) deg += common.test(i);
        if (deg == 1) ends.push_back(x);
      }
      if (ends.size() != 2) continue;
      const std::vector<Index> p = order_path(g, common, ends[0]);
      if (p.size() != common.count()) continue;
      const IncidenceSet all = sets[a] | sets[b];
      if (!seen.insert(all).second) continue;
      Theta t;
      t.first = ends[0];
      t.second = ends[1];
      t.kind = theta_kind(t.first, t.second);
      t.paths[0] = path_from_incidences(g, t.first, p);
      t.paths[1] = path_from_incidences(g, t.first, order_path(g, sets[a] - common, t.first));
      t.paths[2] = path_from_incidences(g, t.first, order_path(g, sets[b] - common, t.first));
      sort_paths(t.paths);
      out.push_back(std::move(t));
    }
  }
  return out;
}

namespace {

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t,
                                                    FlowTraits::edge_descriptor>>>>;

// Node-split network on the incidence graph: key k becomes in = 2k and
// out = 2k + 1, joined by a unit arc except at the two terminals.
class SplitNetwork {
 public:
  struct Arc {
    FlowGraph::edge_descriptor edge;
    std::size_t from = 0;
    std::size_t to = 0;
    std::optional<Index> incidence;
  };

  SplitNetwork(const OrientedHypergraph& g, const Gamma& gm, std::size_t source, std::size_t sink)
      : graph_(2 * gm.size), source_(2 * source + 1), sink_(2 * sink) {
    for (std::size_t k = 0; k < gm.size; ++k) {
      if (k != source && k != sink) add(2 * k, 2 * k + 1, 1, std::nullopt);
    }
    for (Index i = 0; i < g.incidence_count(); ++i) {
      const std::size_t v = g.incidence(i).vertex;
      const std::size_t e = gm.vertex_count + g.incidence(i).edge;
      add(2 * v + 1, 2 * e, 1, i);
      add(2 * e + 1, 2 * v, 1, i);
    }
  }

  long max_flow() { return boost::edmonds_karp_max_flow(graph_, source_, sink_); }

  // Splits the flow into unit source-sink routes, dropping any circulation.
  std::vector<std::vector<Index>> routes(std::size_t count) {
    auto cap = boost::get(boost::edge_capacity, graph_);
    auto res = boost::get(boost::edge_residual_capacity, graph_);
    std::vector<long> flow(arcs_.size());
    std::vector<std::vector<std::size_t>> out(boost::num_vertices(graph_));
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      flow[a] = cap[arcs_[a].edge] - res[arcs_[a].edge];
      if (flow[a] > 0) out[arcs_[a].from].push_back(a);
    }
    std::vector<std::vector<Index>> result;
    for (std::size_t r = 0; r < count; ++r) {
      std::vector<std::size_t> trail;
      std::vector<std::size_t> at{source_};
      while (at.back() != sink_) {
        std::size_t next_arc = arcs_.size();
        for (std::size_t a : out[at.back()]) {
          if (flow[a] > 0) {
            next_arc = a;
            break;
          }
        }
        if (next_arc == arcs_.size()) return result;
        const std::size_t to = arcs_[next_arc].to;
        auto loop = std::find(at.begin(), at.end(), to);
        if (loop != at.end()) {
          // Cancel the cycle just closed and resume from its start.
          const std::size_t keep = static_cast<std::size_t>(loop - at.begin());
          flow[next_arc] -= 1;
          for (std::size_t j = keep; j < trail.size(); ++j) flow[trail[j]] -= 1;
          trail.resize(keep);
          at.resize(keep + 1);
          continue;
        }
        trail.push_back(next_arc);
        at.push_back(to);
      }
      std::vector<Index> incs;
      for (std::size_t a : trail) {
        flow[a] -= 1;
        if (arcs_[a].incidence) incs.push_back(*arcs_[a].incidence);
      }
      result.push_back(std::move(incs));
    }
    return result;
  }

 private:
  void add(std::size_t from, std::size_t to, long capacity, std::optional<Index> incidence) {
    auto cap = boost::get(boost::edge_capacity, graph_);
    auto rev = boost::get(boost::edge_reverse, graph_);
    auto e = boost::add_edge(from, to, graph_).first;
    auto r = boost::add_edge(to, from, graph_).first;
    cap[e] = capacity;
    cap[r] = 0;
    rev[e] = r;
    rev[r] = e;
    arcs_.push_back({e, from, to, incidence});
  }

  FlowGraph graph_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::optional<Theta> find_cross_theta(const OrientedHypergraph& g) {
  const Gamma gm(g);
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 3) continue;
    for (Index e = 0; e < g.edge_count(); ++e) {
      if (g.edge_size(e) < 3) continue;
      SplitNetwork net(g, gm, v, gm.vertex_count + e);
      if (net.max_flow() < 3) continue;
      auto routes = net.routes(3);
      if (routes.size() < 3) continue;
      Theta t;
      t.first = vertex_node(v);
      t.second = edge_node(e);
      t.kind = ThetaKind::cross_theta;
      for (std::size_t r = 0; r < 3; ++r) t.paths[r] = path_from_incidences(g, t.first, routes[r]);
      sort_paths(t.paths);
      return t;
    }
  }
  return std::nullopt;
}

// ----------------------------------------------------------------- balance

BalanceResult is_balanced(const OrientedHypergraph& g, const Limits& limits) {
  for (const Walk& c : enumerate_circles(g, limits)) {
    if (walk_sign(g, c) < 0) return {false, c};
  }
  return {};
}

BalanceabilityResult is_balanceable(const OrientedHypergraph& g) {
  auto t = find_cross_theta(g);
  return {!t.has_value(), std::move(t)};
}

std::optional<std::vector<Index>> brute_force_balanceable(const OrientedHypergraph& g,
                                                          const Limits& limits) {
  const std::size_t n = g.incidence_count();
  if (n > limits.max_bruteforce_incidences || n >= 63) {
    throw Error(ErrorKind::limit_exceeded,
                std::to_string(n) + " incidences is over the brute-force limit");
  }
  std::vector<std::uint64_t> masks;
  std::vector<int> base;
  for (const Walk& c : enumerate_circles(g, limits)) {
    std::uint64_t m = 0;
    for (Index i : c.incidences) m |= std::uint64_t{1} << i;
    masks.push_back(m);
    base.push_back(walk_sign(g, c));
  }
  for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << n); ++flips) {
    bool ok = true;
    for (std::size_t c = 0; c < masks.size() && ok; ++c) {
      const int parity = std::popcount(flips & masks[c]) % 2 == 0 ? 1 : -1;
      ok = base[c] * parity > 0;
    }
    if (ok) {
      std::vector<Index> out;
      for (Index i = 0; i < n; ++i) {
        if (flips >> i & 1) out.push_back(i);
      }
      return out;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- forests

namespace {

struct Forest {
  std::vector<std::optional<Index>> parent_inc;  // per key
  std::vector<std::size_t> parent;
  std::vector<std::size_t> depth;
  std::vector<bool> in_tree;  // per incidence
};

Forest bfs_forest(const OrientedHypergraph& g, const Gamma& gm) {
  Forest f;
  f.parent_inc.assign(gm.size, std::nullopt);
  f.parent.assign(gm.size, 0);
  f.depth.assign(gm.size, 0);
  f.in_tree.assign(g.incidence_count(), false);
  std::vector<char> seen(gm.size, 0);
  for (std::size_t root = 0; root < gm.size; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (auto [w, i] : gm.adj[u]) {
        if (seen[w]) continue;
        seen[w] = 1;
        f.parent_inc[w] = i;
        f.parent[w] = u;
        f.depth[w] = f.depth[u] + 1;
        f.in_tree[i] = true;
        queue.push_back(w);
      }
    }
  }
  return f;
}

// Cyclic incidence sequence of the fundamental circle closed by incidence i.
std::vector<Index> fundamental_cycle(const OrientedHypergraph& g, const Gamma& gm, const Forest& f,
                                     Index i) {
  std::size_t x = g.incidence(i).vertex;
  std::size_t y = gm.vertex_count + g.incidence(i).edge;
  std::vector<Index> from_x, from_y;
  while (f.depth[x] > f.depth[y]) {
    from_x.push_back(*f.parent_inc[x]);
    x = f.parent[x];
  }
  while (f.depth[y] > f.depth[x]) {
    from_y.push_back(*f.parent_inc[y]);
    y = f.parent[y];
  }
  while (x != y) {
    from_x.push_back(*f.parent_inc[x]);
    x = f.parent[x];
    from_y.push_back(*f.parent_inc[y]);
    y = f.parent[y];
  }
  std::vector<Index> cycle = from_x;
  cycle.insert(cycle.end(), from_y.rbegin(), from_y.rend());
  cycle.push_back(i);
  return cycle;
}

}  // namespace

OrientedHypergraph tree_orientation(const OrientedHypergraph& g) {
  const Gamma gm(g);
  const Forest f = bfs_forest(g, gm);
  std::vector<IndexedIncidence> incs;
  for (const Incidence& inc : g.incidences()) incs.push_back({inc.vertex, inc.edge, 1});
  for (Index i = 0; i < g.incidence_count(); ++i) {
    if (f.in_tree[i]) continue;
    // Every other incidence of the fundamental circle is a +1 tree incidence.
    const std::size_t k = fundamental_cycle(g, gm, f, i).size() / 2;
    incs[i].sign = k % 2 == 0 ? 1 : -1;
  }
  return OrientedHypergraph::from_indexed(
      std::vector<std::string>(g.vertices().begin(), g.vertices().end()),
      std::vector<std::string>(g.edges().begin(), g.edges().end()), incs);
}

CyclomaticForms cyclomatic_forms(const OrientedHypergraph& g) {
  const auto nodes = static_cast<std::int64_t>(g.node_count());
  const auto c = static_cast<std::int64_t>(component_count(g));
  std::int64_t sizes = 0, degrees = 0;
  for (Index e = 0; e < g.edge_count(); ++e) sizes += static_cast<std::int64_t>(g.edge_size(e));
  for (Index v = 0; v < g.vertex_count(); ++v) degrees += static_cast<std::int64_t>(g.degree(v));
  CyclomaticForms f;
  f.by_incidences = static_cast<std::int64_t>(g.incidence_count()) - nodes + c;
  f.by_edge_sizes = sizes - nodes + c;
  f.by_degrees = degrees - nodes + c;
  return f;
}

std::size_t cyclomatic_number(const OrientedHypergraph& g) {
  return static_cast<std::size_t>(cyclomatic_forms(g).by_incidences);
}

std::vector<Index> non_forest_incidences(const OrientedHypergraph& g) {
  const Gamma gm(g);
  const Forest f = bfs_forest(g, gm);
  std::vector<Index> out;
  for (Index i = 0; i < g.incidence_count(); ++i) {
    if (!f.in_tree[i]) out.push_back(i);
  }
  return out;
}

std::vector<Walk> essential_circles(const OrientedHypergraph& g) {
  const Gamma gm(g);
  const Forest f = bfs_forest(g, gm);
  std::vector<Walk> out;
  for (Index i = 0; i < g.incidence_count(); ++i) {
    if (!f.in_tree[i]) out.push_back(circle_from_incidences(g, fundamental_cycle(g, gm, f, i)));
  }
  return out;
}

}  // namespace ohg
