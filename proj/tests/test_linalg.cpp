#include "doctest.h"
#include "ohg/linalg.hpp"
#include "ohg/verify.hpp"
#include "support.hpp"

using namespace ohg;
using test::make;

namespace {

std::vector<Integer> ints(std::initializer_list<int> xs) {
  std::vector<Integer> out;
  for (int x : xs) out.push_back(x);
  return out;
}

// Rank from maximal nonzero minors, independent of elimination.
std::size_t rank_by_minors(const IntMatrix& m) {
  std::size_t best = 0;
  const std::size_t n = m.cols();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Index> cols;
    for (Index c = 0; c < n; ++c) {
      if (mask >> c & 1) cols.push_back(c);
    }
    if (cols.size() > best && columns_independent(m, cols)) best = cols.size();
  }
  return best;
}

}  // namespace

TEST_CASE("incidence matrix entries") {
  const IncidenceMatrix z = incidence_matrix(make("", "x", ""));
  CHECK(z.entries.rows() == 0);
  CHECK(z.entries.cols() == 1);

  const IncidenceMatrix t = incidence_matrix(make("u v w", "e1 e2 e3", "u e1 + v e1 -  v e2 + w e2 -  w e3 + u e3 -"));
  for (std::size_t c = 0; c < 3; ++c) {
    int plus = 0, minus = 0, zero = 0;
    for (std::size_t r = 0; r < 3; ++r) {
      const auto x = t.entries(r, c);
      plus += x == 1;
      minus += x == -1;
      zero += x == 0;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);
    CHECK(zero == 1);
  }
  CHECK(t.row_labels == std::vector<std::string>{"u", "v", "w"});

  const IncidenceMatrix m = incidence_matrix(make("v", "e", "v e + v e +"));
  CHECK(m.entries(0, 0) == 2);
}

TEST_CASE("rank and nullity") {
  CHECK(rank_nullity(IntMatrix(3, 1)) == RankNullity{0, 1});
  CHECK(rank_nullity(IntMatrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})) == RankNullity{3, 0});
  const IntMatrix tri = incidence_matrix(make("u v w", "e1 e2 e3", "u e1 + v e1 -  v e2 + w e2 -  w e3 + u e3 -")).entries;
  const RankNullity rn = rank_nullity(tri);
  CHECK(rn.nullity == 1);
  CHECK(rn.rank == rank_by_minors(tri));
  const IntMatrix wide(2, 4, {1, 2, 3, 4, 2, 4, 6, 9});
  CHECK(rank_nullity(wide).rank == rank_by_minors(wide));
  CHECK(rank_nullity(IntMatrix(0, 0)) == RankNullity{0, 0});
}

TEST_CASE("nullspace basis") {
  CHECK(nullspace_basis(IntMatrix(3, 2, {1, 1, 1, 1, 1, 1})) == std::vector<std::vector<Integer>>{ints({1, -1})});
  CHECK(nullspace_basis(IntMatrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})).empty());
  CHECK(nullspace_basis(IntMatrix(3, 1)) == std::vector<std::vector<Integer>>{ints({1})});
  // Content is removed and the vector checked against the matrix.
  const IntMatrix m(2, 3, {2, 4, 6, 1, 3, 5});
  const auto basis = nullspace_basis(m);
  REQUIRE(basis.size() == 1);
  for (std::size_t r = 0; r < 2; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < 3; ++c) s += basis[0][c] * m(r, c);
    CHECK(s == 0);
  }
  CHECK(basis[0] == ints({1, -2, 1}));
}

TEST_CASE("big entries stay exact") {
  // Elimination on a matrix with large entries needs exact division.
  const std::int64_t big = 3037000493;
  const IntMatrix m(3, 3, {big, big - 1, 1, big - 1, big - 2, 1, 1, 1, 0});
  // Row 1 minus row 2 equals row 3.
  CHECK(rank_nullity(m) == RankNullity{2, 1});
  CHECK_FALSE(columns_independent(m, {0, 1, 2}));
}

TEST_CASE("minimal dependency certificates") {
  const DependencyCertificate zero = is_minimally_dependent(make("", "x", ""));
  CHECK(zero.status == DependencyStatus::minimally_dependent);
  REQUIRE(zero.generator);
  CHECK(*zero.generator == ints({1}));

  const DependencyCertificate mono = is_minimally_dependent(
      make("a b c d", "x y z w", "a x + b x -  b y + c y -  c z + a z -  c w + d w -"));
  CHECK(mono.status != DependencyStatus::minimally_dependent);
  // The pendant edge gets a zero coordinate, so the one kernel vector lacks
  // full support.
  CHECK(mono.nullity == 1);
  REQUIRE(mono.generator);
  CHECK(mono.generator->back() == 0);

  const OrientedHypergraph par = make("a b c", "x y", "a x + b x + c x +  a y + b y + c y +");
  const DependencyCertificate p = is_minimally_dependent(par);
  CHECK(p.status == DependencyStatus::minimally_dependent);
  REQUIRE(p.generator);
  CHECK(*p.generator == ints({1, -1}));
  const IntMatrix pm = incidence_matrix(par).entries;
  CHECK(brute_force_circuit(pm));
  CHECK(columns_independent(pm, {0}));
  CHECK(columns_independent(pm, {1}));

  const IntMatrix id(2, 2, {1, 0, 0, 1});
  CHECK(is_minimally_dependent(id).status == DependencyStatus::independent);
  const IntMatrix two_zero(1, 2);
  const DependencyCertificate tz = is_minimally_dependent(two_zero);
  CHECK(tz.status == DependencyStatus::dependent_not_minimal);
  CHECK(tz.nullity == 2);
  CHECK_FALSE(tz.generator);

  const std::vector<Index> cols{0, 1};
  const DependencyCertificate sub = is_minimally_dependent(pm, cols);
  CHECK(sub.columns == cols);
  CHECK(to_string(DependencyStatus::dependent_not_minimal) == "dependent-not-minimal");
}
