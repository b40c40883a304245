#pragma once

#include <array>
#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ohg/hypergraph.hpp"
#include "ohg/linalg.hpp"
#include "ohg/walk.hpp"

namespace ohg {

/// Hard limits on exponential searches. Exceeding one raises
/// Error(limit_exceeded) or, in classifiers, an "unknown" verdict.
struct Limits {
  std::size_t max_circle_length = 16;
  std::size_t max_circles = 10000;
  std::size_t max_flower_edges = 16;
  std::size_t max_bruteforce_incidences = 20;
};

using IncidenceSet = boost::dynamic_bitset<>;

IncidenceSet incidence_set(const OrientedHypergraph& g, const Walk& w);

// ---------------------------------------------------------------- circles

/// All circles of g in canonical order (length, then normalized form).
std::vector<Walk> enumerate_circles(const OrientedHypergraph& g, const Limits& limits = {});

enum class Purity { pure, degenerate };

struct CircleInfo {
  int sign = 1;
  Purity purity = Purity::pure;
};

/// Throws not_a_circle if c is not a circle of g. Degenerate means some
/// incidence off the circle joins one of its vertices to one of its edges.
CircleInfo classify_circle(const OrientedHypergraph& g, const Walk& c);

// ---------------------------------------------------------- incidence graph

/// A biconnected component of the incidence graph, as a set of incidences.
/// Blocks with a single incidence are bridges.
struct IncidenceBlock {
  std::vector<Index> incidences;
  std::vector<Node> nodes;

  bool nontrivial() const { return incidences.size() >= 2; }
};

std::vector<IncidenceBlock> incidence_blocks(const OrientedHypergraph& g);

/// The subhypergraph spanned by one block: its nodes and incidences only.
OrientedHypergraph block_hypergraph(const OrientedHypergraph& g, const IncidenceBlock& block);

/// Incidences whose removal disconnects their component.
std::vector<bool> bridge_incidences(const OrientedHypergraph& g);

/// Every pair of incidences lies on a common circle. Decided through the
/// block structure of the incidence graph.
bool is_inseparable(const OrientedHypergraph& g);
/// The same property checked pair by pair against enumerated circles.
bool is_inseparable_by_circles(const OrientedHypergraph& g, const Limits& limits = {});

/// Connected and either a single 0-edge, or inseparable with a circle.
bool is_circle_covered(const OrientedHypergraph& g);

// ------------------------------------------------------------------ thetas

enum class ThetaKind { vertex_theta, edge_theta, cross_theta };

std::string_view to_string(ThetaKind kind);

struct Theta {
  Node first;
  Node second;
  std::array<Walk, 3> paths;  // each runs from first to second
  ThetaKind kind = ThetaKind::vertex_theta;
};

/// Thetas assembled from pairs of circles meeting in a single path. Each
/// theta is reported once.
std::vector<Theta> find_thetas(const OrientedHypergraph& g, const Limits& limits = {});

/// Searches every vertex/edge pair for three internally disjoint paths.
std::optional<Theta> find_cross_theta(const OrientedHypergraph& g);
inline bool has_cross_theta(const OrientedHypergraph& g) { return find_cross_theta(g).has_value(); }

// ----------------------------------------------------------------- balance

struct BalanceResult {
  bool balanced = true;
  std::optional<Walk> negative_circle;
};

BalanceResult is_balanced(const OrientedHypergraph& g, const Limits& limits = {});

struct BalanceabilityResult {
  bool balanceable = true;
  std::optional<Theta> cross_theta;
};

BalanceabilityResult is_balanceable(const OrientedHypergraph& g);

/// Tries every subset of incidences to negate. Returns the first flip set
/// (in increasing bitmask order) that balances g, or nullopt if none does.
/// Throws limit_exceeded above limits.max_bruteforce_incidences.
std::optional<std::vector<Index>> brute_force_balanceable(const OrientedHypergraph& g,
                                                          const Limits& limits = {});

/// Keeps the incidence pattern of g and re-signs it: incidences of a
/// spanning forest of the incidence graph get +1, and every other incidence
/// is chosen so its fundamental circle is positive. The result is balanced
/// whenever any orientation of the pattern is.
OrientedHypergraph tree_orientation(const OrientedHypergraph& g);

// -------------------------------------------------------------- cyclomatic

struct CyclomaticForms {
  std::int64_t by_incidences = 0;
  std::int64_t by_edge_sizes = 0;
  std::int64_t by_degrees = 0;
};

CyclomaticForms cyclomatic_forms(const OrientedHypergraph& g);
std::size_t cyclomatic_number(const OrientedHypergraph& g);

/// Incidences outside the deterministic BFS spanning forest of the incidence
/// graph, in increasing order.
std::vector<Index> non_forest_incidences(const OrientedHypergraph& g);

/// One fundamental circle per non-forest incidence, in that order.
std::vector<Walk> essential_circles(const OrientedHypergraph& g);

// ---------------------------------------------------------------- species

struct StructureReport {
  std::vector<std::string> isolated_vertices;
  std::vector<std::string> monovalent_vertices;
  std::vector<std::string> leaves;
  std::vector<std::string> thorns;
  std::vector<std::string> twigs;
  std::vector<std::string> briars;
  std::vector<std::string> isthmi;
  std::vector<std::string> cut_vertices;
  std::vector<Index> shoals;
};

StructureReport structural_inventory(const OrientedHypergraph& g);

/// True when edge e (by position) lies on some circle.
bool edge_on_circle(const OrientedHypergraph& g, Index e);

enum class FlowerVerdict { flower, pseudo_flower, neither, unknown };

std::string_view to_string(FlowerVerdict verdict);

struct FlowerAnalysis {
  FlowerVerdict verdict = FlowerVerdict::neither;
  std::vector<std::string> thorns;
  std::optional<OrientedHypergraph> flower_part;
  std::string reason;
};

/// Minimality is checked over all proper nonempty edge subsets, so graphs
/// with more than limits.max_flower_edges edges get verdict unknown.
/// The vertex of a 1-edge counts as a thorn here: removing it leaves a
/// 0-edge, which is a flower.
FlowerAnalysis flower_analysis(const OrientedHypergraph& g, const Limits& limits = {});

/// Circle-covered with no proper circle-covered edge-induced part. nullopt
/// when the edge count is over the limit.
std::optional<bool> is_flower(const OrientedHypergraph& g, const Limits& limits = {});

struct ArteryCheck {
  bool artery = false;
  std::vector<std::string> externals;
  std::vector<std::string> internals;
};

ArteryCheck is_artery(const OrientedHypergraph& g);

struct HoleWitness {
  std::vector<Index> rows;
  std::vector<Index> cols;
  IntMatrix submatrix;
  std::int64_t entry_sum = 0;
};

struct MatrixBalance {
  bool balanced = true;
  std::optional<HoleWitness> odd_hole;
};

/// The hypergraph of a {0,+1,-1} matrix: rows "r1".., columns "c1"..
OrientedHypergraph matrix_hypergraph(const IntMatrix& m);

/// Balanced in the matrix sense: every pure circle of the associated
/// hypergraph is positive. Throws bad_entries for entries outside {0,+1,-1}.
MatrixBalance matrix_is_balanced(const IntMatrix& m, const Limits& limits = {});

}  // namespace ohg
