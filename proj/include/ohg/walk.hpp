#pragma once

#include <string>
#include <vector>

#include "ohg/hypergraph.hpp"

namespace ohg {

enum class WalkKind { path, circle };

/// Alternating sequence a0, i1, a1, ..., in, an of nodes and incidences.
/// For a circle an == a0 and n = 2k for a circle of length k.
struct Walk {
  WalkKind kind = WalkKind::path;
  std::vector<Node> elements;
  std::vector<Index> incidences;

  bool is_circle() const { return kind == WalkKind::circle; }
  /// Circle length k, or the number of incidences of a path.
  std::size_t length() const {
    return is_circle() ? incidences.size() / 2 : incidences.size();
  }
  /// Distinct nodes (a circle's closing repeat is dropped).
  std::vector<Node> nodes() const;

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Canonical circle order: length first, then normalized element sequence.
bool circle_less(const Walk& a, const Walk& b);

struct Adjacency {
  std::string v;
  int k1 = 1;
  std::string w;
  int k2 = 1;
  std::string edge;
};

/// -sigma(v,e,k1) * sigma(w,e,k2); 0 when the adjacency does not exist
/// (unknown ids, missing slots, or the same incidence twice).
int adjacency_sign(const OrientedHypergraph& g, const Adjacency& adj);

/// Sign of the adjacency formed by two distinct incidences of one edge.
int adjacency_sign(const OrientedHypergraph& g, Index first, Index second);

/// Throws invalid_walk if the sequence is not a path or circle of g.
void validate_walk(const OrientedHypergraph& g, const Walk& walk);

/// (-1)^floor(n/2) times the product of the n incidence signs.
int walk_sign(const OrientedHypergraph& g, const Walk& walk);

/// Builds a circle from a cyclic incidence sequence and normalizes it:
/// start at the smallest vertex position, go toward the smaller first edge.
Walk circle_from_incidences(const OrientedHypergraph& g, const std::vector<Index>& cyclic);
Walk normalize_circle(const OrientedHypergraph& g, const Walk& circle);

/// Builds a path from start node following the given incidences.
Walk path_from_incidences(const OrientedHypergraph& g, Node start, const std::vector<Index>& incs);

/// The same walk read in the incidence dual (vertex and edge roles swapped).
/// Circles are re-normalized for the dual's labeling.
Walk dual_walk(const OrientedHypergraph& dual, const Walk& walk);

std::string describe(const OrientedHypergraph& g, const Walk& walk);

}  // namespace ohg
