#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ohg/hypergraph.hpp"

namespace ohg {

OrientedHypergraph weak_delete_vertex(const OrientedHypergraph& g, std::string_view vertex);
OrientedHypergraph weak_delete_edge(const OrientedHypergraph& g, std::string_view edge);

/// Removes the single incidence (vertex, edge, slot). Remaining slots of the
/// pair are renumbered 1..k-1 in incidence-list order.
OrientedHypergraph break_incidence(const OrientedHypergraph& g, std::string_view vertex,
                                   std::string_view edge, int slot);
OrientedHypergraph break_incidence(const OrientedHypergraph& g, Index incidence);

/// Removes the vertex together with every edge it meets.
OrientedHypergraph strong_delete_vertex(const OrientedHypergraph& g, std::string_view vertex);
/// Removes the edge together with every vertex it meets.
OrientedHypergraph strong_delete_edge(const OrientedHypergraph& g, std::string_view edge);

/// theta maps vertex or edge ids to +1/-1; unlisted ids stay +1.
using SwitchingFunction = std::map<std::string, int, std::less<>>;

OrientedHypergraph switching(const OrientedHypergraph& g, const SwitchingFunction& theta);
OrientedHypergraph switching(const OrientedHypergraph& g, const std::vector<int>& vertex_theta,
                             const std::vector<int>& edge_theta);

/// Signed 2-edge contraction. A negative edge is made positive by switching
/// its lexicographically smaller endpoint; the endpoints are then identified
/// under that smaller id and the edge is removed.
OrientedHypergraph contract_2edge(const OrientedHypergraph& g, std::string_view edge);

/// 2-vertex contraction, the incidence dual of contract_2edge. An
/// incompatible vertex is made compatible by switching the lexicographically
/// smaller of its two edges. The merged edge takes that smaller id and
/// position unless merged_id is given.
OrientedHypergraph contract_2vertex(const OrientedHypergraph& g, std::string_view vertex,
                                    std::optional<std::string> merged_id = std::nullopt);

/// Smallest n >= 1 for which "u#n", "e#n.1" and "e#n.2" are all unused.
std::size_t fresh_suffix(const OrientedHypergraph& g);

enum class Compatibility { compatible, incompatible };

struct SubdivisionResult {
  OrientedHypergraph hypergraph;
  std::string new_vertex;
  std::string first_edge;
  std::string second_edge;
  Compatibility compatibility = Compatibility::compatible;
  bool balanced = true;
};

/// Splits edge e at a new vertex. part1 and part2 are incidence positions
/// that partition e's incidences (either may be empty). The new vertex meets
/// the first part's edge with sign1 and the second's with sign2.
SubdivisionResult subdivide_edge(const OrientedHypergraph& g, std::string_view edge,
                                 const std::vector<Index>& part1, const std::vector<Index>& part2,
                                 int sign1, int sign2);

/// True when vertex v (by position) lies on some circle, i.e. at least two of
/// its incidences stay connected after v is removed from the incidence graph.
bool vertex_on_circle(const OrientedHypergraph& g, Index v);

}  // namespace ohg
