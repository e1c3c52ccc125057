#pragma once

// Spaces of delta-derivations, delta-biderivations, Hom-Lie maps and
// TP-compatible commutative products, computed as exact nullspaces.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/error.hpp"
#include "tpa/identity.hpp"
#include "tpa/linsolve.hpp"
#include "tpa/scalar.hpp"

namespace tpa {

enum class Shape { linear_map, bilinear_map };

struct SolutionSpace {
  std::string kind;
  Shape shape = Shape::linear_map;
  std::size_t algebra_dim = 0;
  std::optional<Scalar> delta;
  std::string mode;
  std::vector<std::string> labels;
  std::vector<Vector> basis;  // LinearMap / BilinearMap vector layouts

  std::size_t dimension() const { return basis.size(); }
  std::size_t unknowns() const {
    return shape == Shape::linear_map ? algebra_dim * algebra_dim : algebra_dim * algebra_dim * algebra_dim;
  }
  LinearMap linear(std::size_t i) const {
    if (shape != Shape::linear_map) throw Error(ErrorKind::invalid_argument, "solution space holds bilinear maps");
    return LinearMap::from_vector(algebra_dim, basis.at(i));
  }
  BilinearMap bilinear(std::size_t i) const {
    if (shape != Shape::bilinear_map) throw Error(ErrorKind::invalid_argument, "solution space holds linear maps");
    return BilinearMap::from_vector(algebra_dim, basis.at(i));
  }

  bool contains(const Vector& v) const {
    if (v.size() != unknowns()) throw dimension_error("candidate length");
    RowEchelon ech(unknowns());
    for (const auto& b : basis) ech.insert(to_sparse_row(b));
    return !ech.insert(to_sparse_row(v));
  }
};

namespace detail {

/// Accumulates sparse condition rows keyed by output coordinate.
class ConditionRows {
 public:
  explicit ConditionRows(std::size_t outputs) : rows_(outputs) {}
  void add(std::size_t out, std::size_t unknown, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = rows_[out].emplace(unknown, c);
    if (!fresh) it->second += c;
  }
  void flush(RowEchelon& ech) {
    for (auto& r : rows_) {
      SparseRow row;
      for (auto& [u, c] : r)
        if (!c.is_zero()) row.emplace_back(u, std::move(c));
      r.clear();
      if (!row.empty()) ech.insert(std::move(row));
    }
  }

 private:
  std::vector<std::map<std::size_t, Scalar>> rows_;
};

inline void require_lie(const Algebra& l, const char* what) {
  for (const char* id : {"anticomm", "jacobi"}) {
    Bindings b;
    b.bracket = &l;
    auto rep = check_identity(id, b);
    if (!rep.holds) throw precondition_error(std::string(what) + " needs a Lie algebra: " + rep.summary());
  }
}

}  // namespace detail

/// phi[x,y] = delta([phi x, y] + [x, phi y]) on all basis pairs.
inline SolutionSpace delta_derivations(const Algebra& a, const Scalar& delta) {
  const std::size_t n = a.dim();
  check_capacity(n * n);
  auto u = [n](std::size_t j, std::size_t k) { return j * n + k; };
  RowEchelon ech(n * n);
  detail::ConditionRows rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [p, c] : a.product(i, j))
        for (std::size_t m = 0; m < n; ++m) rows.add(m, u(p, m), c);
      // -delta [phi e_i, e_j] - delta [e_i, phi e_j]
      for (std::size_t q = 0; q < n; ++q) {
        for (const auto& [m, c] : a.product(q, j)) rows.add(m, u(i, q), -(delta * c));
        for (const auto& [m, c] : a.product(i, q)) rows.add(m, u(j, q), -(delta * c));
      }
      rows.flush(ech);
    }
  SolutionSpace s;
  s.kind = "delta-derivations";
  s.shape = Shape::linear_map;
  s.algebra_dim = n;
  s.delta = delta;
  s.labels = a.labels();
  s.basis = ech.nullspace();
  return s;
}

/// phi[x1..xm] = delta * sum_i [x1, .., phi xi, .., xm] on all basis tuples.
inline SolutionSpace nary_delta_derivations(const NAryAlgebra& a, const Scalar& delta) {
  const std::size_t n = a.dim();
  const std::size_t m = a.arity();
  check_capacity(n * n);
  auto u = [n](std::size_t j, std::size_t k) { return j * n + k; };
  RowEchelon ech(n * n);
  detail::ConditionRows rows(n);
  std::vector<std::size_t> idx(m, 0);
  for (std::size_t flat = 0; flat < a.tuple_count(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t s = m; s-- > 0;) {
      idx[s] = rem % n;
      rem /= n;
    }
    for (const auto& [p, c] : a.entry(idx))
      for (std::size_t out = 0; out < n; ++out) rows.add(out, u(p, out), c);
    for (std::size_t s = 0; s < m; ++s) {
      auto sub = idx;
      for (std::size_t q = 0; q < n; ++q) {
        sub[s] = q;
        for (const auto& [out, c] : a.entry(sub)) rows.add(out, u(idx[s], q), -(delta * c));
      }
    }
    rows.flush(ech);
  }
  SolutionSpace s;
  s.kind = "nary-delta-derivations";
  s.shape = Shape::linear_map;
  s.algebra_dim = n;
  s.delta = delta;
  s.labels = a.labels();
  s.basis = ech.nullspace();
  return s;
}

enum class BiderivationMode { general, symmetric };

namespace detail {

/// Unknown index of phi(e_i, e_j)_k; symmetric mode folds (i,j) to i <= j.
struct BilinearUnknowns {
  std::size_t n;
  bool symmetric;

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    if (!symmetric) return i * n + j;
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  }
  std::size_t pairs() const { return symmetric ? n * (n + 1) / 2 : n * n; }
  std::size_t count() const { return pairs() * n; }
  std::size_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return pair_index(i, j) * n + k; }

  /// Expands a solution over folded unknowns to the (i*n+j)*n+k layout.
  Vector expand(const Vector& v) const {
    Vector out(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[(i * n + j) * n + k] = v[(*this)(i, j, k)];
    return out;
  }
};

inline std::vector<Vector> expand_all(const BilinearUnknowns& u, const std::vector<Vector>& basis) {
  std::vector<Vector> out;
  for (const auto& v : basis) out.push_back(u.expand(v));
  return RowEchelon::normalize_basis(out, u.n * u.n * u.n);
}

/// Rows for phi([e_a,e_b], e_c) = delta([phi(e_a,e_c), e_b] + [e_a, phi(e_b,e_c)]).
inline void first_argument_rows(const Algebra& a, const Scalar& delta, const BilinearUnknowns& u, RowEchelon& ech) {
  const std::size_t n = a.dim();
  ConditionRows rows(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        for (const auto& [p, c] : a.product(x, y))
          for (std::size_t m = 0; m < n; ++m) rows.add(m, u(p, z, m), c);
        for (std::size_t q = 0; q < n; ++q) {
          for (const auto& [m, c] : a.product(q, y)) rows.add(m, u(x, z, q), -(delta * c));
          for (const auto& [m, c] : a.product(x, q)) rows.add(m, u(y, z, q), -(delta * c));
        }
        rows.flush(ech);
      }
}

/// Rows for phi(e_a, [e_b,e_c]) = delta([phi(e_a,e_b), e_c] + [e_b, phi(e_a,e_c)]).
inline void second_argument_rows(const Algebra& a, const Scalar& delta, const BilinearUnknowns& u, RowEchelon& ech) {
  const std::size_t n = a.dim();
  ConditionRows rows(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        for (const auto& [p, c] : a.product(y, z))
          for (std::size_t m = 0; m < n; ++m) rows.add(m, u(x, p, m), c);
        for (std::size_t q = 0; q < n; ++q) {
          for (const auto& [m, c] : a.product(q, z)) rows.add(m, u(x, y, q), -(delta * c));
          for (const auto& [m, c] : a.product(y, q)) rows.add(m, u(x, z, q), -(delta * c));
        }
        rows.flush(ech);
      }
}

}  // namespace detail

inline SolutionSpace delta_biderivations(const Algebra& a, const Scalar& delta,
                                         BiderivationMode mode = BiderivationMode::general) {
  const std::size_t n = a.dim();
  detail::BilinearUnknowns u{n, mode == BiderivationMode::symmetric};
  check_capacity(u.count());
  RowEchelon ech(u.count());
  detail::first_argument_rows(a, delta, u, ech);
  detail::second_argument_rows(a, delta, u, ech);
  SolutionSpace s;
  s.kind = "delta-biderivations";
  s.shape = Shape::bilinear_map;
  s.algebra_dim = n;
  s.delta = delta;
  s.mode = mode == BiderivationMode::symmetric ? "symmetric" : "general";
  s.labels = a.labels();
  s.basis = detail::expand_all(u, ech.nullspace());
  return s;
}

/// [phi(x),[y,z]] + [phi(y),[z,x]] + [phi(z),[x,y]] = 0 on all basis triples.
inline SolutionSpace hom_lie_maps(const Algebra& l) {
  detail::require_lie(l, "hom_lie_maps");
  const std::size_t n = l.dim();
  check_capacity(n * n);
  auto u = [n](std::size_t j, std::size_t k) { return j * n + k; };
  RowEchelon ech(n * n);
  detail::ConditionRows rows(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t cyc[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
        for (const auto& t : cyc) {
          Element inner = Element::from_sparse(n, l.product(t[1], t[2]));
          if (inner.is_zero()) continue;
          for (std::size_t q = 0; q < n; ++q)
            for (const auto& [m, c] : l.multiply(l.basis(q), inner).sparse()) rows.add(m, u(t[0], q), c);
        }
        rows.flush(ech);
      }
  SolutionSpace s;
  s.kind = "hom-lie";
  s.shape = Shape::linear_map;
  s.algebra_dim = n;
  s.labels = l.labels();
  s.basis = ech.nullspace();
  return s;
}

/// Commutative products with 2z[x,y] = [zx,y] + [x,zy] for the fixed bracket.
inline SolutionSpace tp_product_space(const Algebra& l) {
  detail::require_lie(l, "tp_product_space");
  const std::size_t n = l.dim();
  detail::BilinearUnknowns u{n, true};
  check_capacity(u.count());
  RowEchelon ech(u.count());
  detail::ConditionRows rows(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        // 2 z·[x,y]
        for (const auto& [p, c] : l.product(x, y))
          for (std::size_t m = 0; m < n; ++m) rows.add(m, u(z, p, m), Scalar(2) * c);
        for (std::size_t q = 0; q < n; ++q) {
          // -[z·x, y]
          for (const auto& [m, c] : l.product(q, y)) rows.add(m, u(z, x, q), -c);
          // -[x, z·y]
          for (const auto& [m, c] : l.product(x, q)) rows.add(m, u(z, y, q), -c);
        }
        rows.flush(ech);
      }
  SolutionSpace s;
  s.kind = "tp-products";
  s.shape = Shape::bilinear_map;
  s.algebra_dim = n;
  s.mode = "symmetric";
  s.labels = l.labels();
  s.basis = detail::expand_all(u, ech.nullspace());
  return s;
}

/// Runs "assoc" on a product taken from a bilinear solution space.
inline CheckReport filter_associative(const SolutionSpace& space, const Vector& candidate) {
  if (space.shape != Shape::bilinear_map)
    throw Error(ErrorKind::invalid_argument, "filter_associative needs a space of bilinear maps");
  if (!space.contains(candidate))
    throw Error(ErrorKind::invalid_argument, "candidate is not in the solution space");
  Algebra prod = BilinearMap::from_vector(space.algebra_dim, candidate).to_algebra(space.labels);
  Bindings b;
  b.product = &prod;
  return check_identity("assoc", b);
}

}  // namespace tpa
