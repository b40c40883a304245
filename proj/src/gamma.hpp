#pragma once

// Internal view of the incidence graph with integer node keys: vertex v is
// key v and edge e is key |V| + e.

#include <utility>
#include <vector>

#include "ohg/hypergraph.hpp"

namespace ohg::detail {

struct Gamma {
  std::size_t vertex_count = 0;
  std::size_t size = 0;
  // (neighbour key, incidence) in incidence-list order.
  std::vector<std::vector<std::pair<std::size_t, Index>>> adj;

  explicit Gamma(const OrientedHypergraph& g) : vertex_count(g.vertex_count()), size(g.node_count()), adj(size) {
    for (Index i = 0; i < g.incidence_count(); ++i) {
      const Incidence& inc = g.incidence(i);
      const std::size_t v = inc.vertex;
      const std::size_t e = vertex_count + inc.edge;
      adj[v].push_back({e, i});
      adj[e].push_back({v, i});
    }
  }

  std::size_t key(Node n) const { return n.is_vertex() ? n.index : vertex_count + n.index; }
  Node node(std::size_t k) const {
    return k < vertex_count ? vertex_node(k) : edge_node(k - vertex_count);
  }
};

}  // namespace ohg::detail
