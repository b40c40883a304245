#include <algorithm>

#include "doctest.h"
#include "ohg/linalg.hpp"
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

OrientedHypergraph parallel3() {
  return make("a b c", "x y", "a x + b x + c x +  a y + b y + c y +");
}

// Vertices a, b, c; e = {a, b, c}, f = {b, c}, g = {c, a}.
OrientedHypergraph degenerate() {
  return make("a b c", "e f g", "a e + b e + c e +  b f + c f -  c g + a g -");
}

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

TEST_CASE("circle enumeration") {
  CHECK(enumerate_circles(triangle()).size() == 1);
  CHECK(enumerate_circles(parallel3()).size() == 3);
  CHECK(enumerate_circles(make("a b c", "x y", "a x + b x -  b y + c y -")).empty());
  CHECK(enumerate_circles(make("", "x", "")).empty());

  const auto circles = enumerate_circles(parallel3());
  for (std::size_t i = 1; i < circles.size(); ++i) CHECK(circle_less(circles[i - 1], circles[i]));
  CHECK(circles.front().length() == 2);

  Limits tight;
  tight.max_circles = 2;
  CHECK_THROWS_AS(enumerate_circles(parallel3(), tight), Error);
}

TEST_CASE("circle purity and sign") {
  const OrientedHypergraph d = degenerate();
  const auto circles = enumerate_circles(d);
  REQUIRE(circles.size() == 3);
  int degenerate_count = 0;
  for (const Walk& c : circles) {
    const CircleInfo info = classify_circle(d, c);
    CHECK(info.sign == walk_sign(d, c));
    if (info.purity == Purity::degenerate) {
      ++degenerate_count;
      CHECK(c.length() == 3);
    }
  }
  CHECK(degenerate_count == 1);

  const OrientedHypergraph t = triangle();
  CHECK(classify_circle(t, enumerate_circles(t).front()).purity == Purity::pure);
  Walk not_circle = enumerate_circles(t).front();
  not_circle.incidences.pop_back();
  CHECK_THROWS_AS(classify_circle(t, not_circle), Error);
}

TEST_CASE("thetas") {
  const auto ct = find_cross_theta(degenerate());
  REQUIRE(ct);
  CHECK(ct->kind == ThetaKind::cross_theta);
  CHECK(ct->first.kind != ct->second.kind);

  CHECK(has_cross_theta(make("v", "e", "v e + v e + v e +")));
  CHECK_FALSE(has_cross_theta(parallel3()));
  CHECK_FALSE(has_cross_theta(triangle()));
  CHECK(has_cross_theta(test::fixture("cross_theta")));

  // Two parallel 3-edges: three vertex-to-vertex paths give vertex thetas.
  const auto thetas = find_thetas(parallel3());
  CHECK_FALSE(thetas.empty());
  for (const Theta& th : thetas) CHECK(th.kind != ThetaKind::cross_theta);
  CHECK(to_string(ThetaKind::cross_theta) == "cross-theta");
}

TEST_CASE("balance and balanceability") {
  CHECK(is_balanced(triangle()).balanced);
  const BalanceResult ub = is_balanced(test::fixture("unbalanced_triangle"));
  CHECK_FALSE(ub.balanced);
  REQUIRE(ub.negative_circle);
  CHECK(walk_sign(test::fixture("unbalanced_triangle"), *ub.negative_circle) == -1);

  const OrientedHypergraph u = test::fixture("unbalanced_triangle");
  CHECK(is_balanceable(u).balanceable);
  CHECK(brute_force_balanceable(u).has_value());
  CHECK(is_balanced(tree_orientation(u)).balanced);

  const OrientedHypergraph d = degenerate();
  const BalanceabilityResult bd = is_balanceable(d);
  CHECK_FALSE(bd.balanceable);
  CHECK(bd.cross_theta);
  CHECK_FALSE(brute_force_balanceable(d).has_value());

  Limits tight;
  tight.max_bruteforce_incidences = 3;
  CHECK_THROWS_AS(brute_force_balanceable(d, tight), Error);
}

TEST_CASE("cyclomatic number and essential circles") {
  const auto check = [](const OrientedHypergraph& g, std::size_t phi) {
    const CyclomaticForms f = cyclomatic_forms(g);
    CHECK(f.by_incidences == static_cast<std::int64_t>(phi));
    CHECK(f.by_edge_sizes == f.by_incidences);
    CHECK(f.by_degrees == f.by_incidences);
    CHECK(cyclomatic_number(g) == phi);
    CHECK(essential_circles(g).size() == phi);
    CHECK(non_forest_incidences(g).size() == phi);
    CHECK(cyclomatic_number(incidence_dual(g)) == phi);
  };
  check(triangle(), 1);
  check(parallel3(), 2);
  check(make("a b c", "x y", "a x + b x -  b y + c y -"), 0);
  check(make("", "x", ""), 0);
  check(degenerate(), 2);

  // Breaking one incidence from each essential circle leaves no circles.
  const OrientedHypergraph d = degenerate();
  const auto extra = non_forest_incidences(d);
  std::vector<bool> keep(d.incidence_count(), true);
  for (Index i : extra) keep[i] = false;
  std::vector<bool> all_v(d.vertex_count(), true), all_e(d.edge_count(), true);
  CHECK(enumerate_circles(keep_incidences(d, all_v, all_e, keep)).empty());
}

TEST_CASE("structural inventory") {
  const StructureReport pend = structural_inventory(test::fixture("pendant"));
  CHECK(pend.monovalent_vertices == std::vector<std::string>{"d"});
  CHECK(pend.leaves == std::vector<std::string>{"d"});
  CHECK(pend.thorns.empty());
  CHECK(pend.twigs == std::vector<std::string>{"w"});
  CHECK(contains(pend.isthmi, "w"));
  CHECK(pend.cut_vertices == std::vector<std::string>{"c"});

  const StructureReport path = structural_inventory(make("a b c", "x y", "a x + b x -  b y + c y -"));
  CHECK(path.cut_vertices == std::vector<std::string>{"b"});
  CHECK(path.isthmi == std::vector<std::string>{"x", "y"});

  const OrientedHypergraph pf = make("a b c t", "x y z", "a x + b x + t x +  b y + c y -  c z + a z +");
  const StructureReport p = structural_inventory(pf);
  CHECK(p.thorns == std::vector<std::string>{"t"});
  CHECK(p.briars == std::vector<std::string>{"x"});
  CHECK(p.leaves.empty());

  const StructureReport iso = structural_inventory(make("a b", "x", "a x +"));
  CHECK(iso.isolated_vertices == std::vector<std::string>{"b"});
}

TEST_CASE("inseparability") {
  for (const OrientedHypergraph& g :
       {triangle(), parallel3(), degenerate(), test::fixture("pendant"), test::fixture("dumbbell"),
        test::fixture("k4_dual_flower"), make("", "x", "")}) {
    CHECK(is_inseparable(g) == is_inseparable_by_circles(g));
  }
  CHECK(is_inseparable(triangle()));
  CHECK_FALSE(is_inseparable(test::fixture("pendant")));
  CHECK(is_circle_covered(make("", "x", "")));
  CHECK_FALSE(is_circle_covered(make("a b", "x", "a x + b x -")));
  const auto blocks = incidence_blocks(test::fixture("pendant"));
  CHECK(std::count_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.nontrivial(); }) == 1);
}

TEST_CASE("flowers and pseudo-flowers") {
  CHECK(is_flower(triangle()) == true);
  CHECK(is_flower(parallel3()) == true);
  CHECK(is_flower(make("", "x", "")) == true);
  CHECK(is_flower(test::fixture("k4_dual_flower")) == true);
  CHECK(is_flower(test::fixture("dumbbell")) == false);
  // Every proper edge subset leaves a pendant or has no circle.
  CHECK(is_flower(degenerate()) == true);

  const FlowerAnalysis one = flower_analysis(make("v", "e", "v e +"));
  CHECK(one.verdict == FlowerVerdict::pseudo_flower);
  CHECK(one.thorns == std::vector<std::string>{"v"});
  // A 1-edge hung on a circle vertex leaves no monovalent vertex at all.
  const OrientedHypergraph hung =
      make("u v w", "e1 e2 e3 h", "u e1 + v e1 -  v e2 + w e2 -  w e3 + u e3 -  u h +");
  CHECK(flower_analysis(hung).verdict == FlowerVerdict::neither);

  const OrientedHypergraph pf = make("a b c t", "x y z", "a x + b x + t x +  b y + c y -  c z + a z +");
  const FlowerAnalysis a = flower_analysis(pf);
  CHECK(a.verdict == FlowerVerdict::pseudo_flower);
  CHECK(a.thorns == std::vector<std::string>{"t"});
  REQUIRE(a.flower_part);
  CHECK(is_flower(*a.flower_part) == true);
  CHECK(flower_analysis(triangle()).thorns.empty());
  CHECK(flower_analysis(test::fixture("pendant")).verdict == FlowerVerdict::neither);

  Limits tight;
  tight.max_flower_edges = 2;
  CHECK_FALSE(is_flower(triangle(), tight).has_value());
  CHECK(flower_analysis(triangle(), tight).verdict == FlowerVerdict::unknown);
}

TEST_CASE("arteries") {
  const ArteryCheck path = is_artery(make("a m b", "x y", "a x + m x -  m y + b y -"));
  CHECK(path.artery);
  CHECK(path.externals == std::vector<std::string>{"a", "b"});
  CHECK(path.internals == std::vector<std::string>{"m"});

  const ArteryCheck single = is_artery(make("v", "", ""));
  CHECK(single.artery);
  CHECK(single.externals == std::vector<std::string>{"v"});

  CHECK_FALSE(is_artery(triangle()).artery);
  CHECK_FALSE(is_artery(make("a", "x", "a x +")).artery);

  // A 3-artery contracts to a 3-edge.
  OrientedHypergraph a3 = make("a b c m", "x y z", "a x + m x -  b y + m y -  c z + m z -");
  a3 = weak_delete_vertex(a3, "m");
  CHECK_FALSE(is_artery(a3).artery);
  const OrientedHypergraph k = make("a b c m n p", "x y z w",
                                    "a x + m x -  b y + n y -  c z + p z -  m w + n w + p w +");
  const ArteryCheck ka = is_artery(k);
  CHECK(ka.artery);
  CHECK(ka.externals == std::vector<std::string>{"a", "b", "c"});
  const OrientedHypergraph kc =
      contract_2vertex(contract_2vertex(contract_2vertex(k, "m"), "n"), "p");
  REQUIRE(kc.edge_count() == 1);
  CHECK(kc.edge_size(0) == 3);
}

TEST_CASE("matrix balance") {
  const MatrixBalance hole = matrix_is_balanced(IntMatrix(2, 2, {1, 1, 1, -1}));
  CHECK_FALSE(hole.balanced);
  REQUIRE(hole.odd_hole);
  CHECK(hole.odd_hole->entry_sum % 4 == 2);

  CHECK(matrix_is_balanced(IntMatrix(2, 2, {1, 1, 1, 1})).balanced);

  // The only pure circle of the 6-cycle circulant has length 3.
  const IntMatrix circ(3, 3, {1, 1, 0, 0, 1, 1, 1, 0, 1});
  const OrientedHypergraph h = matrix_hypergraph(circ);
  const auto circles = enumerate_circles(h);
  REQUIRE(circles.size() == 1);
  CHECK(walk_sign(h, circles.front()) == -1);
  const MatrixBalance mb = matrix_is_balanced(circ);
  CHECK_FALSE(mb.balanced);
  REQUIRE(mb.odd_hole);
  CHECK(mb.odd_hole->entry_sum == 6);

  CHECK(matrix_is_balanced(IntMatrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})).balanced);
  CHECK_THROWS_AS(matrix_is_balanced(IntMatrix(1, 1, {2})), Error);
}
