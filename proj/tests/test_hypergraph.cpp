#include "doctest.h"
#include "ohg/hypergraph.hpp"
#include "ohg/walk.hpp"
#include "support.hpp"

using namespace ohg;
using test::make;

namespace {

OrientedHypergraph triangle() {
  return make("u v w", "e1 e2 e3", "u e1 + v e1 -  v e2 + w e2 -  w e3 + u e3 -");
}

ErrorKind build_error(const std::vector<IncidenceRecord>& recs, bool strict = true) {
  try {
    OrientedHypergraph::build({"v", "w"}, {"e"}, recs, strict);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::semantic_error;
}

}  // namespace

TEST_CASE("build validates incidences") {
  const OrientedHypergraph g = triangle();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.incidence_count() == 6);
  CHECK(g.is_simple());
  CHECK(g.is_strict());

  CHECK(build_error({{"v", "e", 2, 1}}) == ErrorKind::slot_gap);
  CHECK(build_error({{"v", "e", 1, 1}, {"v", "e", 2, -1}}) == ErrorKind::mixed_signs);
  CHECK(build_error({{"x", "e", 1, 1}}) == ErrorKind::unknown_id);
  CHECK(build_error({{"v", "f", 1, 1}}) == ErrorKind::unknown_id);
  CHECK_NOTHROW(OrientedHypergraph::build({"v"}, {"e"}, {{"v", "e", 1, 1}, {"v", "e", 2, -1}}, false));
  CHECK_THROWS_AS(OrientedHypergraph::build({"a", "a"}, {}, {}), Error);
  CHECK_THROWS_AS(OrientedHypergraph::build({"a"}, {"a"}, {}), Error);
}

TEST_CASE("counting queries") {
  const OrientedHypergraph g = triangle();
  CHECK(degree(g, "u") == 2);
  CHECK(edge_size(g, "e1") == 2);
  const OrientedHypergraph iso = make("u v", "e", "u e +");
  CHECK(degree(iso, "v") == 0);
  const OrientedHypergraph multi = make("v", "e", "v e + v e + v e +");
  CHECK(multiplicity(multi, "v", "e") == 3);
  CHECK_FALSE(multi.is_simple());
  CHECK_THROWS_AS(degree(g, "nope"), Error);
}

TEST_CASE("adjacency signs") {
  const OrientedHypergraph g = make("v w x", "e f", "v e + w e -  v f + w f +  x f +");
  CHECK(adjacency_sign(g, Adjacency{"v", 1, "w", 1, "e"}) == 1);
  CHECK(adjacency_sign(g, Adjacency{"v", 1, "w", 1, "f"}) == -1);
  CHECK(adjacency_sign(g, Adjacency{"v", 1, "x", 1, "e"}) == 0);
  CHECK(adjacency_sign(g, Adjacency{"v", 2, "w", 1, "e"}) == 0);
}

TEST_CASE("walk signs") {
  const OrientedHypergraph single = make("v", "e", "v e -");
  const Walk p = path_from_incidences(single, vertex_node(0), {0});
  CHECK(walk_sign(single, p) == -1);

  // Length-2 circle with all four signs +1; cross-check against adjacencies.
  const OrientedHypergraph two = make("a b", "x y", "a x + b x +  a y + b y +");
  const Walk c = circle_from_incidences(two, {0, 1, 3, 2});
  CHECK(c.length() == 2);
  CHECK(walk_sign(two, c) == 1);
  const int by_adjacency = adjacency_sign(two, 0, 1) * adjacency_sign(two, 3, 2);
  CHECK(walk_sign(two, c) == by_adjacency);

  const OrientedHypergraph t = triangle();
  const Walk tc = circle_from_incidences(t, {0, 1, 2, 3, 4, 5});
  CHECK(walk_sign(t, tc) == adjacency_sign(t, 0, 1) * adjacency_sign(t, 2, 3) * adjacency_sign(t, 4, 5));
  CHECK(tc.elements.front() == vertex_node(0));
}

TEST_CASE("invalid walks are rejected") {
  const OrientedHypergraph t = triangle();
  Walk w;
  w.kind = WalkKind::path;
  w.elements = {vertex_node(0), edge_node(1)};
  w.incidences = {0};
  CHECK_THROWS_AS(validate_walk(t, w), Error);
}

TEST_CASE("incidence dual") {
  const OrientedHypergraph t = triangle();
  CHECK(incidence_dual(incidence_dual(t)) == t);
  const OrientedHypergraph par = make("a b c", "x y", "a x + b x + c x +  a y + b y + c y +");
  const OrientedHypergraph d = incidence_dual(par);
  CHECK(d.vertex_count() == 2);
  CHECK(d.edge_count() == 3);
  for (Index e = 0; e < d.edge_count(); ++e) CHECK(d.edge_size(e) == 2);
}

TEST_CASE("incidence graph") {
  const IncidenceGraph t = to_incidence_graph(triangle());
  CHECK(t.left_count + t.right_count == 6);
  CHECK(t.arcs.size() == 6);
  CHECK_FALSE(t.has_parallel_arcs());
  CHECK(to_incidence_graph(make("v", "e", "v e + v e +")).has_parallel_arcs());
  const IncidenceGraph empty = to_incidence_graph(OrientedHypergraph{});
  CHECK(empty.arcs.empty());
  CHECK(empty.left_count + empty.right_count == 0);
}

TEST_CASE("connected components") {
  CHECK(component_count(triangle()) == 1);
  CHECK(component_count(make("u v w z", "e1 e2 e3", "u e1 + v e1 -  v e2 + w e2 -  w e3 + u e3 -")) == 2);
  const OrientedHypergraph two = make("a b c d e f", "x y z p q r",
                                      "a x + b x - b y + c y - c z + a z -"
                                      " d p + e p - e q + f q - f r + d r -");
  const auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].front() == vertex_node(0));
  CHECK(comps[1].front() == vertex_node(3));
}

TEST_CASE("sub-hypergraphs") {
  const OrientedHypergraph t = triangle();
  const OrientedHypergraph e1 = sub_hypergraph(t, {}, {"e1"}, SubMode::edge_induced);
  CHECK(e1.vertex_count() == 2);
  CHECK(e1.edge_count() == 1);
  CHECK(e1.incidence_count() == 2);
  const OrientedHypergraph zero = sub_hypergraph(t, {}, {"e1", "e2", "e3"}, SubMode::cross_induced);
  CHECK(zero.vertex_count() == 0);
  CHECK(zero.edge_count() == 3);
  CHECK(zero.incidence_count() == 0);
  const OrientedHypergraph restr = sub_hypergraph(t, {}, {"e1"}, SubMode::edge_restriction);
  CHECK(restr.vertex_count() == 3);
  CHECK(restr.incidence_count() == 2);
}

TEST_CASE("labelled equality and structural equality") {
  const OrientedHypergraph a = make("v w", "e", "v e + w e -");
  const OrientedHypergraph b = OrientedHypergraph::build({"v", "w"}, {"e"}, {{"w", "e", 1, -1}, {"v", "e", 1, 1}});
  CHECK_FALSE(a == b);
  CHECK(same_structure(a, b));
  CHECK_FALSE(same_structure(a, make("v w", "e", "v e + w e +")));
}
