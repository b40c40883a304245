#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ohg/hypergraph.hpp"

namespace ohg {

using Integer = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix select_columns(std::span<const Index> columns) const;
  IntMatrix without_column(std::size_t c) const;
  IntMatrix without_row(std::size_t r) const;
  IntMatrix with_row_negated(std::size_t r) const;
  IntMatrix with_column_negated(std::size_t c) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Rows labeled by vertex ids, columns by edge ids, both in G's order.
struct IncidenceMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  IntMatrix entries;
};

/// eta_ij = sum over slots k of sigma(v_i, e_j, k).
IncidenceMatrix incidence_matrix(const OrientedHypergraph& g);

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  friend bool operator==(const RankNullity&, const RankNullity&) = default;
};

RankNullity rank_nullity(const IntMatrix& m);

/// Kernel basis {x : M x = 0}; one vector per free column, in column order.
/// Each vector is integral, has content 1, and its first nonzero entry is
/// positive.
std::vector<std::vector<Integer>> nullspace_basis(const IntMatrix& m);

enum class DependencyStatus { independent, dependent_not_minimal, minimally_dependent };

std::string_view to_string(DependencyStatus status);

struct DependencyCertificate {
  DependencyStatus status = DependencyStatus::independent;
  std::size_t nullity = 0;
  /// Present exactly when nullity == 1.
  std::optional<std::vector<Integer>> generator;
  /// Columns of the parent matrix this certificate speaks about.
  std::vector<Index> columns;
};

/// Minimal dependency of the selected columns: nullity 1 and a generator
/// with no zero coordinate.
DependencyCertificate is_minimally_dependent(const IntMatrix& m, std::span<const Index> columns);
DependencyCertificate is_minimally_dependent(const IntMatrix& m);
DependencyCertificate is_minimally_dependent(const OrientedHypergraph& g);

}  // namespace ohg
