#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ohg/hypergraph.hpp"
#include "ohg/linalg.hpp"
#include "ohg/structure.hpp"

namespace ohg {

/// A pseudo-flower inside some host hypergraph, described by ids. For a
/// 1-edge pseudo-flower the flower-part is the bare 0-edge.
struct PseudoFlowerPart {
  std::vector<std::string> edges;
  std::vector<std::string> vertices;
  std::vector<std::string> thorns;
  std::vector<std::string> flower_vertices;
  std::vector<Index> flower_incidences;  // positions in the host
  bool one_edge = false;
};

struct ArteryPart {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::vector<std::string> externals;
  bool vertex_artery = false;
};

/// One 2-vertex contraction undoing a balanced subdivision.
struct ContractionStep {
  std::string vertex;
  std::string kept_edge;
  std::string absorbed_edge;
  bool switched = false;  // the vertex was incompatible
};

struct PseudoFlowerAdjacency {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string briar;
};

struct HypercircleDecomposition {
  // Pieces of the input hypergraph.
  std::vector<PseudoFlowerPart> pseudo_flowers;
  std::vector<ArteryPart> arteries;
  std::vector<std::string> one_edges;
  std::vector<std::string> isthmi;
  std::vector<ContractionStep> subdivision_record;

  // The hypercircle reached by the contractions and its own pieces.
  OrientedHypergraph hypercircle;
  std::vector<PseudoFlowerPart> hypercircle_pseudo_flowers;
  std::vector<PseudoFlowerAdjacency> adjacencies;
  std::size_t order = 0;
};

struct Recognition {
  std::optional<HypercircleDecomposition> decomposition;
  std::string failure;
  bool limit_hit = false;
};

/// Decides whether a connected hypergraph is a balanced subdivision of a
/// hypercircle: every vertex off all circles is 2-vertex-contracted, and
/// the result must split into flower-parts glued along single briars.
/// Does not test balance.
Recognition recognize_hypercircle(const OrientedHypergraph& g, const Limits& limits = {});

/// Re-checks every claim of a decomposition against g from scratch.
/// Returns one message per violated condition.
std::vector<std::string> validate_decomposition(const OrientedHypergraph& g,
                                                const HypercircleDecomposition& d,
                                                const Limits& limits = {});

enum class Verdict { circuit, not_circuit, out_of_scope_unbalanced, unknown };

std::string_view to_string(Verdict v);

struct CircuitVerdict {
  Verdict verdict = Verdict::unknown;
  std::optional<HypercircleDecomposition> witness;
  std::string reason;
  DependencyCertificate oracle;
};

/// Structural verdict only; the oracle field is left empty.
CircuitVerdict classify_structurally(const OrientedHypergraph& g, const Limits& limits = {});

/// Structural verdict plus the exact certificate. Throws std::logic_error
/// if a circuit/not-circuit verdict disagrees with the certificate.
CircuitVerdict classify_balanced_circuit(const OrientedHypergraph& g, const Limits& limits = {});

struct CrossValidation {
  Verdict structural = Verdict::unknown;
  DependencyCertificate oracle;
  bool skipped = false;
  bool mismatch = false;
  std::string reason;
};

/// Runs both deciders and reports without throwing.
CrossValidation cross_validate(const OrientedHypergraph& g, const Limits& limits = {});

}  // namespace ohg
