#include "doctest.h"
#include "ohg/structure.hpp"
#include "ohg/transforms.hpp"
#include "ohg/walk.hpp"
#include "support.hpp"

using namespace ohg;
using test::make;

namespace {

OrientedHypergraph triangle() {
  return make("u v w", "e1 e2 e3", "u e1 + v e1 -  v e2 + w e2 -  w e3 + u e3 -");
}

// Every adjacency sign, indexed by ordered incidence pair.
std::vector<int> adjacency_table(const OrientedHypergraph& g) {
  std::vector<int> out;
  for (Index e = 0; e < g.edge_count(); ++e) {
    for (Index i : g.edge_incidences(e)) {
      for (Index j : g.edge_incidences(e)) {
        if (i != j) out.push_back(adjacency_sign(g, i, j));
      }
    }
  }
  return out;
}

std::vector<int> circle_signs(const OrientedHypergraph& g) {
  std::vector<int> out;
  for (const Walk& c : enumerate_circles(g)) out.push_back(walk_sign(g, c));
  return out;
}

ErrorKind error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::semantic_error;
}

}  // namespace

TEST_CASE("weak and strong deletion") {
  const OrientedHypergraph t = triangle();
  const OrientedHypergraph wv = weak_delete_vertex(t, "u");
  CHECK(wv.vertex_count() == 2);
  CHECK(wv.edge_count() == 3);
  CHECK(wv.incidence_count() == 4);

  const OrientedHypergraph we = weak_delete_edge(t, "e1");
  CHECK(we.vertex_count() == 3);
  CHECK(we.edge_count() == 2);
  CHECK(we.incidence_count() == 4);

  const OrientedHypergraph sv = strong_delete_vertex(t, "u");
  CHECK(sv.vertices().size() == 2);
  CHECK(sv.edge_count() == 1);
  CHECK(sv.edge_id(0) == "e2");

  const OrientedHypergraph se = strong_delete_edge(t, "e1");
  CHECK(se.vertex_count() == 1);
  CHECK(se.vertex_id(0) == "w");
  CHECK(se.edge_count() == 2);
  CHECK(se.incidence_count() == 2);

  const OrientedHypergraph bi = break_incidence(t, "u", "e1", 1);
  CHECK(bi.incidence_count() == 5);
  CHECK(edge_size(bi, "e1") == 1);
  CHECK(enumerate_circles(bi).empty());
  CHECK(error_of([&] { break_incidence(t, "u", "e2", 1); }) == ErrorKind::unknown_id);
}

TEST_CASE("switching") {
  const OrientedHypergraph t = triangle();
  CHECK(switching(t, SwitchingFunction{}) == t);
  CHECK(switching(switching(t, {{"u", -1}, {"e2", -1}}), {{"u", -1}, {"e2", -1}}) == t);
  CHECK(error_of([&] { switching(t, {{"u", 2}}); }) == ErrorKind::bad_entries);
  CHECK(error_of([&] { switching(t, {{"q", -1}}); }) == ErrorKind::unknown_id);

  // An edge switch keeps every adjacency sign.
  const OrientedHypergraph es = switching(t, {{"e1", -1}, {"e3", -1}});
  CHECK_FALSE(es == t);
  CHECK(adjacency_table(es) == adjacency_table(t));

  // A vertex switch keeps every circle sign but changes adjacencies.
  const OrientedHypergraph p = make("a b", "x y z", "a x + b x +  a y + b y -  a z - b z -");
  const OrientedHypergraph vs = switching(p, {{"a", -1}});
  CHECK(circle_signs(vs) == circle_signs(p));
  CHECK_FALSE(adjacency_table(vs) == adjacency_table(p));
}

TEST_CASE("2-edge contraction") {
  const OrientedHypergraph t = triangle();
  const OrientedHypergraph c = contract_2edge(t, "e1");
  CHECK(c.vertex_count() == 2);
  CHECK(c.find_vertex("u"));
  CHECK_FALSE(c.find_vertex("v"));
  CHECK(c.edge_count() == 2);
  CHECK(is_balanced(c).balanced);

  // A negative 2-edge is switched positive first, so balance survives.
  const OrientedHypergraph neg = make("u v w", "e1 e2 e3", "u e1 + v e1 +  v e2 + w e2 -  w e3 + u e3 +");
  CHECK(is_balanced(neg).balanced);
  CHECK(is_balanced(contract_2edge(neg, "e1")).balanced);

  const OrientedHypergraph bad = make("u v w", "e1 e2 e3", "u e1 + v e1 +  v e2 + w e2 -  w e3 + u e3 -");
  CHECK_FALSE(is_balanced(bad).balanced);
  CHECK_FALSE(is_balanced(contract_2edge(bad, "e1")).balanced);

  // Contracting an isthmus keeps the component count.
  const OrientedHypergraph pend = test::fixture("pendant");
  CHECK(component_count(contract_2edge(pend, "w")) == component_count(pend));

  CHECK(error_of([&] { contract_2edge(make("a b c", "x", "a x + b x + c x +"), "x"); }) ==
        ErrorKind::not_a_2edge);
  CHECK(error_of([&] { contract_2edge(make("a", "x", "a x + a x +"), "x"); }) == ErrorKind::loop_edge);
}

TEST_CASE("2-vertex contraction") {
  const OrientedHypergraph artery = make("a m b", "x y", "a x + m x -  m y + b y -");
  const OrientedHypergraph c = contract_2vertex(artery, "m");
  CHECK(c.vertex_count() == 2);
  REQUIRE(c.edge_count() == 1);
  CHECK(c.edge_id(0) == "x");
  CHECK(c.edge_size(0) == 2);
  CHECK(contract_2vertex(artery, "m", std::string("xy")).edge_id(0) == "xy");

  // Incidence dual of a 2-edge contraction.
  const OrientedHypergraph t = triangle();
  const OrientedHypergraph via_dual = incidence_dual(contract_2edge(incidence_dual(t), "u"));
  CHECK(same_structure(contract_2vertex(t, "u"), via_dual));

  CHECK(error_of([&] { contract_2vertex(artery, "a"); }) == ErrorKind::not_degree2);
  CHECK(error_of([&] { contract_2vertex(make("a", "x", "a x + a x +"), "a"); }) == ErrorKind::same_edge);
}

TEST_CASE("subdivision") {
  const OrientedHypergraph t = triangle();
  const auto split = [&](int s1, int s2) { return subdivide_edge(t, "e1", {0}, {1}, s1, s2); };

  const SubdivisionResult ok = split(1, -1);
  CHECK(ok.compatibility == Compatibility::compatible);
  CHECK(ok.balanced);
  CHECK(ok.new_vertex == "u#1");
  CHECK(ok.first_edge == "e#1.1");
  CHECK(ok.second_edge == "e#1.2");
  CHECK(ok.hypergraph.vertex_count() == 4);
  CHECK(ok.hypergraph.edge_count() == 4);
  CHECK(circle_signs(ok.hypergraph) == circle_signs(t));
  CHECK(cyclomatic_number(ok.hypergraph) == cyclomatic_number(t));

  const SubdivisionResult flip = split(1, 1);
  CHECK(flip.compatibility == Compatibility::incompatible);
  CHECK_FALSE(flip.balanced);
  CHECK_FALSE(is_balanced(flip.hypergraph).balanced);

  // Off every circle an incompatible split cannot hurt balance.
  const SubdivisionResult pend = subdivide_edge(test::fixture("pendant"), "w", {6}, {7}, 1, 1);
  CHECK(pend.balanced);

  // One part may be empty.
  const SubdivisionResult empty = subdivide_edge(t, "e1", {0, 1}, {}, 1, -1);
  CHECK(empty.hypergraph.edge_size(*empty.hypergraph.find_edge("e#1.2")) == 1);

  CHECK(error_of([&] { subdivide_edge(t, "e1", {0}, {}, 1, -1); }) == ErrorKind::bad_bipartition);
  CHECK(error_of([&] { subdivide_edge(t, "e1", {0}, {2}, 1, -1); }) == ErrorKind::bad_bipartition);
  CHECK(error_of([&] { subdivide_edge(t, "e1", {0}, {1}, 0, -1); }) == ErrorKind::bad_entries);

  // Fresh names skip taken suffixes.
  CHECK(fresh_suffix(make("u#1", "e", "u#1 e +")) == 2);
}
