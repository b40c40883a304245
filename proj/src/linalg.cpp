#include "ohg/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <numeric>
#include <utility>

namespace ohg {

using Rational = boost::multiprecision::cpp_rational;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data has wrong size");
}

IntMatrix IntMatrix::select_columns(std::span<const Index> columns) const {
  IntMatrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
  }
  return out;
}

IntMatrix IntMatrix::without_column(std::size_t c) const {
  std::vector<Index> keep;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (j != c) keep.push_back(j);
  }
  return select_columns(keep);
}

IntMatrix IntMatrix::without_row(std::size_t r) const {
  IntMatrix out(rows_ - 1, cols_);
  for (std::size_t i = 0, k = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(i, j);
    ++k;
  }
  return out;
}

IntMatrix IntMatrix::with_row_negated(std::size_t r) const {
  IntMatrix out = *this;
  for (std::size_t j = 0; j < cols_; ++j) out(r, j) = -out(r, j);
  return out;
}

IntMatrix IntMatrix::with_column_negated(std::size_t c) const {
  IntMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out(i, c) = -out(i, c);
  return out;
}

IncidenceMatrix incidence_matrix(const OrientedHypergraph& g) {
  IncidenceMatrix m;
  m.row_labels.assign(g.vertices().begin(), g.vertices().end());
  m.col_labels.assign(g.edges().begin(), g.edges().end());
  m.entries = IntMatrix(g.vertex_count(), g.edge_count());
  for (const Incidence& inc : g.incidences()) m.entries(inc.vertex, inc.edge) += inc.sign;
  return m;
}

namespace {

// Fraction-free row echelon form. Every intermediate entry is a minor of the
// input, so each division by the previous pivot is exact.
struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivot_cols;
};

Echelon bareiss_echelon(const IntMatrix& m) {
  Echelon ech;
  ech.rows.assign(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) ech.rows[i][j] = m(i, j);
  }
  auto& a = ech.rows;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        assert(num % prev == 0);
        a[i][j] = num / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ech.pivot_cols.push_back(c);
    ++r;
  }
  return ech;
}

std::vector<Integer> clear_and_normalize(const std::vector<Rational>& x) {
  Integer denom = 1;
  for (const Rational& q : x) {
    Integer d = boost::multiprecision::denominator(q);
    denom = denom / boost::multiprecision::gcd(denom, d) * d;
  }
  std::vector<Integer> out;
  out.reserve(x.size());
  Integer content = 0;
  for (const Rational& q : x) {
    Integer v = boost::multiprecision::numerator(q) * (denom / boost::multiprecision::denominator(q));
    content = boost::multiprecision::gcd(content, abs(v));
    out.push_back(v);
  }
  if (content > 1) {
    for (Integer& v : out) v /= content;
  }
  for (const Integer& v : out) {
    if (v != 0) {
      if (v < 0) {
        for (Integer& w : out) w = -w;
      }
      break;
    }
  }
  return out;
}

}  // namespace

RankNullity rank_nullity(const IntMatrix& m) {
  Echelon ech = bareiss_echelon(m);
  return {ech.pivot_cols.size(), m.cols() - ech.pivot_cols.size()};
}

std::vector<std::vector<Integer>> nullspace_basis(const IntMatrix& m) {
  Echelon ech = bareiss_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.cols(), Rational(0));
    x[f] = 1;
    for (std::size_t r = ech.pivot_cols.size(); r-- > 0;) {
      const std::size_t pc = ech.pivot_cols[r];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (ech.rows[r][j] != 0 && x[j] != 0) acc += Rational(ech.rows[r][j]) * x[j];
      }
      x[pc] = -acc / Rational(ech.rows[r][pc]);
    }
    basis.push_back(clear_and_normalize(x));
  }
  return basis;
}

std::string_view to_string(DependencyStatus status) {
  switch (status) {
    case DependencyStatus::independent: return "independent";
    case DependencyStatus::dependent_not_minimal: return "dependent-not-minimal";
    case DependencyStatus::minimally_dependent: return "minimally-dependent";
  }
  return "?";
}

DependencyCertificate is_minimally_dependent(const IntMatrix& m, std::span<const Index> columns) {
  DependencyCertificate cert;
  cert.columns.assign(columns.begin(), columns.end());
  std::vector<std::vector<Integer>> basis = nullspace_basis(m.select_columns(columns));
  cert.nullity = basis.size();
  if (cert.nullity == 0) {
    cert.status = DependencyStatus::independent;
    return cert;
  }
  if (cert.nullity == 1) {
    cert.generator = basis.front();
    bool full_support = true;
    for (const Integer& v : *cert.generator) full_support = full_support && v != 0;
    cert.status = full_support ? DependencyStatus::minimally_dependent
                               : DependencyStatus::dependent_not_minimal;
    return cert;
  }
  cert.status = DependencyStatus::dependent_not_minimal;
  return cert;
}

DependencyCertificate is_minimally_dependent(const IntMatrix& m) {
  std::vector<Index> all(m.cols());
  std::iota(all.begin(), all.end(), 0);
  return is_minimally_dependent(m, all);
}

DependencyCertificate is_minimally_dependent(const OrientedHypergraph& g) {
  return is_minimally_dependent(incidence_matrix(g).entries);
}

}  // namespace ohg
