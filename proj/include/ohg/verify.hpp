#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ohg/hypergraph.hpp"
#include "ohg/linalg.hpp"
#include "ohg/structure.hpp"

namespace ohg {

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t exhaustive_max_size = 9;
  std::size_t random_count = 10000;
  std::size_t random_max_size = 14;
  std::size_t theta_max_incidences = 14;
  std::size_t balanceability_max_incidences = 10;
  std::size_t balanceability_max_multiplicity = 3;
  std::size_t balanceability_random_count = 2000;
  std::size_t invariance_count = 1000;
  std::size_t rank_law_count = 500;
  std::size_t duality_count = 1000;
  std::size_t oracle_max_edges = 6;
  std::size_t oracle_max_size = 9;
  std::size_t oracle_random_count = 2000;
  Limits limits;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::size_t unknown = 0;
  std::vector<std::string> details;  // first few violations, then counters
  double seconds = 0;

  bool passed() const { return violations == 0; }
};

CriterionResult check_classification(const VerifyOptions& options);
/// Only the exhaustive tier of the classification check.
CriterionResult check_classification_exhaustive(const VerifyOptions& options);
CriterionResult check_theta_parity(const VerifyOptions& options);
CriterionResult check_balanceability(const VerifyOptions& options);
CriterionResult check_invariance(const VerifyOptions& options);
CriterionResult check_rank_law(const VerifyOptions& options);
CriterionResult check_duality(const VerifyOptions& options);
CriterionResult check_oracle(const VerifyOptions& options);

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

std::string format_result(const CriterionResult& r);

/// Definition-level circuit test: every column together is dependent and
/// every set with one column removed is independent. Independence is
/// decided by searching for a nonzero maximal minor, each determinant by
/// cofactor expansion.
bool brute_force_circuit(const IntMatrix& m);
bool columns_independent(const IntMatrix& m, const std::vector<Index>& columns);

struct InstanceReport {
  std::vector<std::string> violations;
  bool limit_hit = false;
};

/// Every module-level invariant that applies to a single hypergraph.
InstanceReport check_instance(const OrientedHypergraph& g, std::uint64_t seed,
                              const Limits& limits = {});

}  // namespace ohg
