#include "doctest.h"
#include "ohg/circuit.hpp"
#include "ohg/transforms.hpp"
#include "support.hpp"

using namespace ohg;
using test::make;

namespace {

OrientedHypergraph triangle() {
  return make("a b c", "x y z", "a x + b x -  b y + c y -  c z + a z -");
}

// Three triangles, each with a thorn on one edge; the thorns share a 3-edge.
OrientedHypergraph three_pseudo_flowers() {
  std::string inc;
  std::string vs, es;
  for (int i = 1; i <= 3; ++i) {
    const std::string k = std::to_string(i);
    vs += "a" + k + " b" + k + " c" + k + " t" + k + " ";
    es += "x" + k + " y" + k + " z" + k + " ";
    inc += "a" + k + " x" + k + " + b" + k + " x" + k + " - t" + k + " x" + k + " + ";
    inc += "b" + k + " y" + k + " + c" + k + " y" + k + " - ";
    inc += "c" + k + " z" + k + " + a" + k + " z" + k + " - ";
    inc += "t" + k + " h + ";
  }
  return make(vs, es + "h", inc);
}

}  // namespace

TEST_CASE("balanced triangle is a 1-hypercircle") {
  const CircuitVerdict v = classify_balanced_circuit(triangle());
  CHECK(v.verdict == Verdict::circuit);
  REQUIRE(v.witness);
  CHECK(v.witness->order == 1);
  CHECK(v.oracle.status == DependencyStatus::minimally_dependent);
  CHECK(validate_decomposition(triangle(), *v.witness).empty());
}

TEST_CASE("pendant edge makes the triangle independent-free but not minimal") {
  const OrientedHypergraph g =
      make("a b c d", "x y z w", "a x + b x -  b y + c y -  c z + a z -  c w + d w -");
  const CircuitVerdict v = classify_balanced_circuit(g);
  CHECK(v.verdict == Verdict::not_circuit);
  CHECK(v.oracle.status != DependencyStatus::minimally_dependent);
}

TEST_CASE("0-edge is a 0-hypercircle") {
  const OrientedHypergraph g = make("", "x", "");
  const CircuitVerdict v = classify_balanced_circuit(g);
  CHECK(v.verdict == Verdict::circuit);
  REQUIRE(v.witness);
  CHECK(v.witness->order == 0);
}

TEST_CASE("two 1-edges joined by a path") {
  const OrientedHypergraph g = make("a b c", "p x y q", "a p +  a x + b x -  b y + c y -  c q +");
  const CircuitVerdict v = classify_balanced_circuit(g);
  CHECK(v.verdict == Verdict::circuit);
  REQUIRE(v.witness);
  CHECK(v.witness->one_edges == std::vector<std::string>{"p", "q"});
  CHECK(v.witness->subdivision_record.size() == 3);
}

TEST_CASE("unbalanced input is out of scope") {
  const OrientedHypergraph g = make("a b c", "x y z", "a x + b x +  b y + c y -  c z + a z -");
  CHECK(classify_structurally(g).verdict == Verdict::out_of_scope_unbalanced);
  CHECK(cross_validate(g).skipped);
}

TEST_CASE("balanced theta and dumbbell are not circuits") {
  const OrientedHypergraph theta =
      make("a b c", "x y z w", "a x + b x -  b y + c y -  c z + a z -  a w + c w -");
  CHECK(classify_balanced_circuit(theta).verdict == Verdict::not_circuit);
  const OrientedHypergraph dumbbell = make(
      "a b c d e f", "x y z p q r s",
      "a x + b x -  b y + c y -  c z + a z -  c s + d s -  d p + e p -  e q + f q -  f r + d r -");
  CHECK(classify_balanced_circuit(dumbbell).verdict == Verdict::not_circuit);
}

TEST_CASE("pseudo-flowers meeting a 3-edge at their thorns") {
  const OrientedHypergraph g = three_pseudo_flowers();
  const CircuitVerdict v = classify_balanced_circuit(g);
  REQUIRE(v.verdict == Verdict::circuit);
  CHECK(v.witness->order == 3);
  CHECK(v.witness->adjacencies.size() == 3);
  CHECK(v.witness->pseudo_flowers.size() == 3);
  CHECK(v.witness->hypercircle.edge_count() == 7);
  CHECK(validate_decomposition(g, *v.witness).empty());
}

TEST_CASE("isolated vertices are ignored") {
  const OrientedHypergraph g = make("a b c u", "x y z", "a x + b x -  b y + c y -  c z + a z -");
  CHECK(classify_balanced_circuit(g).verdict == Verdict::circuit);
}

TEST_CASE("tampered witnesses are rejected") {
  const OrientedHypergraph g = three_pseudo_flowers();
  const CircuitVerdict v = classify_structurally(g);
  REQUIRE(v.witness);

  HypercircleDecomposition d = *v.witness;
  d.order = 2;
  CHECK_FALSE(validate_decomposition(g, d).empty());

  d = *v.witness;
  d.subdivision_record.pop_back();
  CHECK_FALSE(validate_decomposition(g, d).empty());

  d = *v.witness;
  d.adjacencies.clear();
  CHECK_FALSE(validate_decomposition(g, d).empty());

  d = *v.witness;
  d.arteries.front().externals.pop_back();
  CHECK_FALSE(validate_decomposition(g, d).empty());
}

TEST_CASE("subdivision closure") {
  const OrientedHypergraph g = triangle();
  for (int s2 : {-1, 1}) {
    const SubdivisionResult r = subdivide_edge(g, "x", {0}, {1}, 1, s2);
    if (!r.balanced) continue;
    CHECK(classify_balanced_circuit(r.hypergraph).verdict == Verdict::circuit);
  }
}
