#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ohg/hypergraph.hpp"

namespace ohg {

/// Seeded source of bounded integers. The standard distributions are not
/// specified bit-for-bit, so draws are made directly from the engine to keep
/// output identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  int sign() { return chance(1, 2) ? 1 : -1; }
  /// Index drawn with probability proportional to weights[i].
  std::size_t weighted(const std::vector<std::uint32_t>& weights);

 private:
  std::mt19937_64 engine_;
};

struct GeneratorParams {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  std::size_t min_edges = 1;
  std::size_t max_edges = 6;
  /// size_weights[k] is the relative weight of an edge with k incidences.
  std::vector<std::uint32_t> size_weights = {1, 3, 10, 4, 2};
  /// Chance, in percent, that a (vertex, edge) pair is negative.
  std::uint32_t negative_percent = 50;
  /// Largest number of slots joining one vertex to one edge.
  std::size_t multiplicity_cap = 1;
  std::uint64_t seed = 1;
  bool connected = false;
  /// Redraws allowed when connected is set.
  std::size_t attempts = 1000;
};

/// Throws Error(infeasible_params) for empty ranges, all-zero weights, or a
/// connected request that no draw satisfies. Vertices are named v1.., edges
/// e1... Signs are equal per (vertex, edge) pair.
OrientedHypergraph random_instance(const GeneratorParams& params);
OrientedHypergraph random_instance(const GeneratorParams& params, Rng& rng);

/// Random pattern in which most vertices have degree 2, re-signed by
/// tree_orientation and then switched at random. Returns nullopt when the
/// pattern admits no balanced orientation.
std::optional<OrientedHypergraph> random_degree2_balanced(Rng& rng, std::size_t max_nodes);

/// Switches every vertex and edge independently with probability 1/2.
OrientedHypergraph random_switching(const OrientedHypergraph& g, Rng& rng);

/// A balanced flower: the incidence dual of a random 2-connected loopless
/// multigraph, balanced by tree_orientation and randomly switched.
OrientedHypergraph random_balanced_flower(Rng& rng, std::size_t max_nodes);

/// Pseudo-flowers joined into a tree by arteries at their thorns, with
/// 1-edges as leaves, balanced and switched. Every vertex has degree 2.
OrientedHypergraph random_thorn_connection(Rng& rng, std::size_t max_pseudo_flowers,
                                           std::size_t max_flower_nodes);

/// Contracts every vertex lying on no circle, leaving the hypercircle that
/// the input subdivides. Vertices must have degree 2 where they are
/// contracted.
OrientedHypergraph contract_off_circle(const OrientedHypergraph& g);

/// One balanced subdivision of a random edge. Tries a random sign pair
/// first and falls back to a compatible one.
OrientedHypergraph random_balanced_subdivision(const OrientedHypergraph& g, Rng& rng);

/// Visits every connected 0/1 incidence pattern with at least one edge and
/// |V| + |E| <= max_nodes, one per arrangement with rows and columns in
/// non-increasing lexicographic order. All signs are +1.
void for_each_pattern(std::size_t max_nodes,
                      const std::function<void(const OrientedHypergraph&)>& visit);

/// Visits every connected pattern with multiplicities up to max_multiplicity
/// and at most max_incidences incidences, with rows and columns in
/// non-increasing lexicographic order, no isolated vertex, and no vertex or
/// edge meeting a single incidence. All signs are +1.
void for_each_multipattern(std::size_t max_incidences, std::size_t max_multiplicity,
                           const std::function<void(const OrientedHypergraph&)>& visit);

}  // namespace ohg
