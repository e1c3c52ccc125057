#pragma once

// Exact Gaussian elimination over Q / Q(i) on sparse rows.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tpa/error.hpp"
#include "tpa/scalar.hpp"

namespace tpa {

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;
using Vector = std::vector<Scalar>;

inline constexpr std::size_t kDefaultCapacity = 20000;

/// Largest number of unknowns a solver will accept. TPA_CAPACITY overrides.
inline std::size_t capacity_limit() {
  if (const char* env = std::getenv("TPA_CAPACITY")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCapacity;
}

inline void check_capacity(std::size_t unknowns) {
  std::size_t cap = capacity_limit();
  if (unknowns > cap)
    throw Error(ErrorKind::capacity, "system has " + std::to_string(unknowns) + " unknowns, capacity is " +
                                         std::to_string(cap));
}

inline SparseRow to_sparse_row(const Vector& v) {
  SparseRow r;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) r.emplace_back(j, v[j]);
  return r;
}

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static ExactMatrix from_dense(const std::vector<std::vector<Scalar>>& dense) {
    std::size_t cols = dense.empty() ? 0 : dense.front().size();
    ExactMatrix m(0, cols);
    for (const auto& r : dense) {
      if (r.size() != cols) throw dimension_error("ragged matrix");
      SparseRow row;
      for (std::size_t j = 0; j < cols; ++j)
        if (!r[j].is_zero()) row.emplace_back(j, r[j]);
      m.rows_.push_back(std::move(row));
    }
    return m;
  }
  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, Scalar(1));
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseRow& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<SparseRow>& sparse_rows() const { return rows_; }

  /// Appends a row; entries may be unsorted and repeated (they are summed).
  void add_row(SparseRow entries) {
    for (const auto& e : entries)
      if (e.first >= cols_) throw dimension_error("column index out of range");
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow merged;
    for (auto& e : entries) {
      if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
      else merged.push_back(std::move(e));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second.is_zero(); }),
                 merged.end());
    rows_.push_back(std::move(merged));
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw dimension_error("matrix-vector product");
    Vector out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& [j, c] : rows_[i]) out[i] += c * v[j];
    return out;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

namespace detail {

// a - f * b on sorted sparse rows
inline SparseRow axpy(const SparseRow& a, const Scalar& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -(f * ib->second));
      ++ib;
    } else {
      Scalar c = ia->second - f * ib->second;
      if (!c.is_zero()) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

inline Scalar entry(const SparseRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) return it->second;
  return Scalar(0);
}

}  // namespace detail

/// Incremental row echelon form. Rows are inserted one at a time and reduced
/// against existing pivots (first nonzero column is the pivot).
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols), pivot_of_col_(cols, kNone) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Returns true if the row increased the rank.
  bool insert(SparseRow row) {
    reduced_ = false;
    while (!row.empty()) {
      std::size_t lead = row.front().first;
      std::size_t p = pivot_of_col_[lead];
      if (p == kNone) {
        Scalar inv = row.front().second.inverse();
        for (auto& e : row) e.second *= inv;
        pivot_of_col_[lead] = pivots_.size();
        pivots_.push_back(std::move(row));
        return true;
      }
      Scalar f = row.front().second;
      row = detail::axpy(row, f, pivots_[p]);
    }
    return false;
  }

  /// Reduced row echelon rows ordered by pivot column.
  std::vector<SparseRow> reduced_rows() {
    reduce();
    std::vector<SparseRow> out;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_of_col_[c] != kNone) out.push_back(pivots_[pivot_of_col_[c]]);
    return out;
  }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_of_col_[c] != kNone) out.push_back(c);
    return out;
  }

  /// Echelon-normalized nullspace basis: every vector has leading coordinate 1,
  /// which is the only nonzero entry of that column across the basis.
  std::vector<Vector> nullspace() {
    reduce();
    std::vector<Vector> kernel;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (pivot_of_col_[f] != kNone) continue;
      Vector v(cols_);
      v[f] = Scalar(1);
      for (std::size_t c = 0; c < f; ++c) {
        std::size_t p = pivot_of_col_[c];
        if (p == kNone) continue;
        Scalar e = detail::entry(pivots_[p], f);
        if (!e.is_zero()) v[c] = -e;
      }
      kernel.push_back(std::move(v));
    }
    return normalize_basis(kernel, cols_);
  }

  /// Brings an arbitrary spanning list to reduced echelon form (zero rows dropped).
  static std::vector<Vector> normalize_basis(const std::vector<Vector>& vectors, std::size_t cols) {
    RowEchelon ech(cols);
    for (const auto& v : vectors) {
      if (v.size() != cols) throw dimension_error("vector length");
      SparseRow r;
      for (std::size_t j = 0; j < cols; ++j)
        if (!v[j].is_zero()) r.emplace_back(j, v[j]);
      ech.insert(std::move(r));
    }
    std::vector<Vector> out;
    for (const auto& r : ech.reduced_rows()) {
      Vector v(cols);
      for (const auto& [j, c] : r) v[j] = c;
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void reduce() {
    if (reduced_) return;
    // back substitution, highest pivot first
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_of_col_[c] != kNone) cols.push_back(c);
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
      SparseRow& row = pivots_[pivot_of_col_[*it]];
      // rows with larger pivots are already reduced, so they carry no other
      // pivot columns and the factors collected here stay valid
      std::vector<std::pair<std::size_t, Scalar>> hits;
      for (std::size_t k = 1; k < row.size(); ++k)
        if (pivot_of_col_[row[k].first] != kNone) hits.emplace_back(pivot_of_col_[row[k].first], row[k].second);
      for (const auto& [p, f] : hits) row = detail::axpy(row, f, pivots_[p]);
    }
    reduced_ = true;
  }

  std::size_t cols_;
  std::vector<std::size_t> pivot_of_col_;
  std::vector<SparseRow> pivots_;
  bool reduced_ = true;
};

inline std::vector<Vector> nullspace(const ExactMatrix& m) {
  RowEchelon ech(m.cols());
  for (const auto& r : m.sparse_rows()) ech.insert(r);
  return ech.nullspace();
}

inline std::size_t rank(const ExactMatrix& m) {
  RowEchelon ech(m.cols());
  for (const auto& r : m.sparse_rows()) ech.insert(r);
  return ech.rank();
}

/// Inverse of a square matrix given as dense rows; throws if singular.
inline std::vector<Vector> invert(const std::vector<Vector>& a) {
  std::size_t n = a.size();
  RowEchelon ech(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw dimension_error("matrix is not square");
    SparseRow r;
    for (std::size_t j = 0; j < n; ++j)
      if (!a[i][j].is_zero()) r.emplace_back(j, a[i][j]);
    r.emplace_back(n + i, Scalar(1));
    ech.insert(std::move(r));
  }
  auto rows = ech.reduced_rows();
  if (rows.size() != n) throw Error(ErrorKind::invalid_argument, "matrix is singular");
  for (const auto& r : rows)
    if (r.front().first >= n) throw Error(ErrorKind::invalid_argument, "matrix is singular");
  std::vector<Vector> inv(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, c] : rows[i])
      if (j >= n) inv[i][j - n] = c;
  return inv;
}

}  // namespace tpa
