#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ohg/hypergraph.hpp"
#include "ohg/linalg.hpp"

namespace ohg {

/// Text form of a hypergraph:
///
///   ohg 1
///   # name: triangle
///   v a
///   e x
///   i a x 1 +
///
/// Other '#' lines are comments. Ids are any run of non-space characters.
struct HypergraphDocument {
  int version = 1;
  OrientedHypergraph graph;
  std::string name;
  std::vector<std::string> notes;
};

/// Throws Error(syntax_error) with a 1-based line/column for malformed lines,
/// repeated declarations and undeclared ids, and Error(semantic_error) when
/// the hypergraph itself is rejected (slot gaps, mixed signs in strict mode).
HypergraphDocument parse_document(std::string_view text, bool strict = true);
OrientedHypergraph parse(std::string_view text, bool strict = true);

std::string serialize(const HypergraphDocument& doc);
std::string serialize(const OrientedHypergraph& g);

/// Incidence graph as a DOT digraph. A +1 incidence is an arc from the edge
/// into the vertex, a -1 incidence an arc out of the vertex.
std::string dot_export(const OrientedHypergraph& g, std::string_view name = "ohg");

/// Aligned table with vertex rows and edge columns, preceded by a size line.
std::string format_matrix(const IncidenceMatrix& m);

}  // namespace ohg
