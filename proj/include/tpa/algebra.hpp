#pragma once

// Structure-constant algebras: binary, n-ary and super, plus linear and
// bilinear maps acting on a fixed basis.

#include <algorithm>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tpa/error.hpp"
#include "tpa/linsolve.hpp"
#include "tpa/scalar.hpp"

namespace tpa {

/// Sparse coefficient list (basis index, coefficient), sorted, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

inline SparseVec make_sparse(SparseVec raw) {
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& e : raw) {
    if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
    else out.push_back(std::move(e));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second.is_zero(); }), out.end());
  return out;
}

/// Dense coordinate vector of an element of a finite-dimensional algebra.
class Element {
 public:
  Element() = default;
  explicit Element(std::size_t dim) : c_(dim) {}
  explicit Element(std::vector<Scalar> coords) : c_(std::move(coords)) {}

  static Element basis(std::size_t dim, std::size_t i) {
    if (i >= dim) throw dimension_error("basis index out of range");
    Element e(dim);
    e.c_[i] = Scalar(1);
    return e;
  }
  static Element from_sparse(std::size_t dim, const SparseVec& v) {
    Element e(dim);
    for (const auto& [k, c] : v) {
      if (k >= dim) throw dimension_error("coordinate index out of range");
      e.c_[k] += c;
    }
    return e;
  }

  std::size_t size() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& coords() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
  }
  SparseVec sparse() const {
    SparseVec out;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) out.emplace_back(i, c_[i]);
    return out;
  }

  Element& operator+=(const Element& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
  }
  Element& operator-=(const Element& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    return *this;
  }
  Element& operator*=(const Scalar& s) {
    for (auto& x : c_)
      if (!x.is_zero()) x *= s;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  Element operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const Element& a, const Element& b) { return a.c_ == b.c_; }

 private:
  void check(const Element& o) const {
    if (o.c_.size() != c_.size()) throw dimension_error("element lengths differ");
  }
  std::vector<Scalar> c_;
};

inline std::vector<std::string> default_labels(std::size_t dim, const std::string& stem = "e") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

inline std::string render(const SparseVec& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c << ")*";
    os << (k < labels.size() ? labels[k] : "#" + std::to_string(k));
  }
  return os.str();
}

/// Square matrix; column j holds the image of basis vector j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(std::size_t dim) : dim_(dim), m_(dim * dim) {}

  static LinearMap identity(std::size_t dim) {
    LinearMap f(dim);
    for (std::size_t i = 0; i < dim; ++i) f.at(i, i) = Scalar(1);
    return f;
  }
  static LinearMap from_columns(const std::vector<Element>& cols) {
    LinearMap f(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) f.set_image(j, cols[j]);
    return f;
  }
  /// Unknown vector layout: index j * dim + k is the e_k-coefficient of f(e_j).
  static LinearMap from_vector(std::size_t dim, const Vector& v) {
    if (v.size() != dim * dim) throw dimension_error("linear map vector length");
    LinearMap f(dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) f.at(k, j) = v[j * dim + k];
    return f;
  }
  Vector to_vector() const {
    Vector v(dim_ * dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) v[j * dim_ + k] = at(k, j);
    return v;
  }

  std::size_t dim() const { return dim_; }
  const Scalar& at(std::size_t row, std::size_t col) const { return m_[row * dim_ + col]; }
  Scalar& at(std::size_t row, std::size_t col) { return m_[row * dim_ + col]; }

  Element image(std::size_t j) const {
    Element e(dim_);
    for (std::size_t k = 0; k < dim_; ++k) e[k] = at(k, j);
    return e;
  }
  void set_image(std::size_t j, const Element& e) {
    if (e.size() != dim_ || j >= dim_) throw dimension_error("linear map image");
    for (std::size_t k = 0; k < dim_; ++k) at(k, j) = e[k];
  }

  Element apply(const Element& x) const {
    if (x.size() != dim_) throw dimension_error("linear map argument");
    Element out(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (x[j].is_zero()) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        if (!at(k, j).is_zero()) out[k] += at(k, j) * x[j];
    }
    return out;
  }

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) {
    if (a.dim_ != b.dim_) throw dimension_error("composition");
    LinearMap r(a.dim_);
    for (std::size_t j = 0; j < a.dim_; ++j) r.set_image(j, a.apply(b.image(j)));
    return r;
  }
  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.dim_ == b.dim_ && a.m_ == b.m_; }

  bool is_zero() const {
    return std::all_of(m_.begin(), m_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  std::vector<Vector> rows() const {
    std::vector<Vector> out(dim_, Vector(dim_));
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out[r][c] = at(r, c);
    return out;
  }

  bool is_invertible() const { return rank(ExactMatrix::from_dense(rows())) == dim_; }

  LinearMap inverse() const {
    auto inv = invert(rows());
    LinearMap r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r.at(i, j) = inv[i][j];
    return r;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> m_;
};

/// Finite-dimensional algebra with one binary product given by structure
/// constants e_i * e_j = sum_k c_ij^k e_k.
class Algebra {
 public:
  Algebra() = default;

  /// Validates indices, drops zero coefficients, and checks the unit axiom
  /// when a unit is supplied.
  Algebra(std::size_t dim, std::vector<std::string> labels, std::vector<SparseVec> table,
          std::optional<Element> unit = std::nullopt)
      : dim_(dim), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
    if (labels_.empty()) labels_ = default_labels(dim_);
    if (labels_.size() != dim_) throw dimension_error("label count does not match dimension");
    if (table_.empty()) table_.resize(dim_ * dim_);
    if (table_.size() != dim_ * dim_) throw dimension_error("structure table size");
    for (auto& entry : table_) {
      for (const auto& [k, c] : entry)
        if (k >= dim_) throw Error(ErrorKind::invalid_argument, "structure constant index out of range");
      entry = make_sparse(std::move(entry));
    }
    if (unit_) {
      if (unit_->size() != dim_) throw dimension_error("unit coordinates");
      for (std::size_t j = 0; j < dim_; ++j) {
        Element ej = Element::basis(dim_, j);
        if (multiply(*unit_, ej) != ej || multiply(ej, *unit_) != ej)
          throw Error(ErrorKind::invalid_argument, "unit axiom violated at " + labels_[j]);
      }
    }
  }

  static Algebra zero(std::size_t dim, std::vector<std::string> labels = {}) {
    return Algebra(dim, std::move(labels), {});
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const std::vector<SparseVec>& table() const { return table_; }
  bool is_unital() const { return unit_.has_value(); }
  const std::optional<Element>& unit() const { return unit_; }

  Element basis(std::size_t i) const { return Element::basis(dim_, i); }

  Element multiply(const Element& x, const Element& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw dimension_error("multiply arguments");
    Element out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        const SparseVec& e = product(i, j);
        if (e.empty()) continue;
        Scalar xy = x[i] * y[j];
        for (const auto& [k, c] : e) out[k] += xy * c;
      }
    }
    return out;
  }

  bool is_zero_product() const {
    return std::all_of(table_.begin(), table_.end(), [](const SparseVec& v) { return v.empty(); });
  }

  bool is_antisymmetric_table() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) {
        auto a = Element::from_sparse(dim_, product(i, j));
        auto b = Element::from_sparse(dim_, product(j, i));
        if (!(a + b).is_zero()) return false;
      }
    return true;
  }

  Algebra with_unit(std::optional<Element> unit) const { return Algebra(dim_, labels_, table_, std::move(unit)); }
  Algebra with_labels(std::vector<std::string> labels) const { return Algebra(dim_, std::move(labels), table_, unit_); }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_ && a.unit_ == b.unit_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  std::optional<Element> unit_;
};

/// Incremental builder: set(i, j, k, c) accumulates c into c_ij^k.
class AlgebraBuilder {
 public:
  explicit AlgebraBuilder(std::size_t dim, std::vector<std::string> labels = {})
      : dim_(dim), labels_(std::move(labels)), table_(dim * dim) {}

  AlgebraBuilder& add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorKind::invalid_argument, "index out of range");
    if (!c.is_zero()) table_[i * dim_ + j].emplace_back(k, c);
    return *this;
  }
  /// Sets e_i e_j = v and e_j e_i = sign * v.
  AlgebraBuilder& add_symmetric(std::size_t i, std::size_t j, std::size_t k, const Scalar& c, int sign = 1) {
    add(i, j, k, c);
    if (i != j) add(j, i, k, Scalar(sign) * c);
    return *this;
  }
  AlgebraBuilder& add_element(std::size_t i, std::size_t j, const Element& v) {
    for (const auto& [k, c] : v.sparse()) add(i, j, k, c);
    return *this;
  }
  AlgebraBuilder& unit(Element u) {
    unit_ = std::move(u);
    return *this;
  }
  Algebra build() const { return Algebra(dim_, labels_, table_, unit_); }

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  std::optional<Element> unit_;
};

/// 3-tensor phi(e_i, e_j) = sum_k c_ijk e_k.
class BilinearMap {
 public:
  BilinearMap() = default;
  explicit BilinearMap(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  /// Unknown layout (i * dim + j) * dim + k.
  static BilinearMap from_vector(std::size_t dim, const Vector& v) {
    if (v.size() != dim * dim * dim) throw dimension_error("bilinear map vector length");
    BilinearMap b(dim);
    b.c_ = v;
    return b;
  }
  static BilinearMap from_algebra(const Algebra& a) {
    BilinearMap b(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (const auto& [k, c] : a.product(i, j)) b.at(i, j, k) = c;
    return b;
  }

  std::size_t dim() const { return dim_; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Vector& to_vector() const { return c_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (at(i, j, k) != at(j, i, k)) return false;
    return true;
  }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  Algebra to_algebra(std::vector<std::string> labels = {}) const {
    AlgebraBuilder b(dim_, std::move(labels));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) b.add(i, j, k, at(i, j, k));
    return b.build();
  }

 private:
  std::size_t dim_ = 0;
  Vector c_;
};

/// m-ary algebra; the table is indexed by the m-tuple in base-dim order.
class NAryAlgebra {
 public:
  NAryAlgebra() = default;
  NAryAlgebra(std::size_t dim, std::size_t arity, std::vector<std::string> labels, std::vector<SparseVec> table)
      : dim_(dim), arity_(arity), labels_(std::move(labels)), table_(std::move(table)) {
    if (arity_ < 2) throw Error(ErrorKind::invalid_argument, "arity must be at least 2");
    if (labels_.empty()) labels_ = default_labels(dim_);
    if (labels_.size() != dim_) throw dimension_error("label count does not match dimension");
    std::size_t cells = tuple_count();
    if (table_.empty()) table_.resize(cells);
    if (table_.size() != cells) throw dimension_error("n-ary structure table size");
    for (auto& entry : table_) {
      for (const auto& [k, c] : entry)
        if (k >= dim_) throw Error(ErrorKind::invalid_argument, "structure constant index out of range");
      entry = make_sparse(std::move(entry));
    }
  }

  static NAryAlgebra from_binary(const Algebra& a) {
    return NAryAlgebra(a.dim(), 2, a.labels(), a.table());
  }

  /// Fills every permutation of `indices` with sign(perm) * value.
  static void set_antisymmetric(std::vector<SparseVec>& table, std::size_t dim, std::vector<std::size_t> indices,
                                const SparseVec& value) {
    std::vector<std::size_t> perm(indices.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
      int sign = 1;
      for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) sign = -sign;
      std::size_t flat = 0;
      for (std::size_t p : perm) flat = flat * dim + indices[p];
      SparseVec v = value;
      for (auto& e : v) e.second *= Scalar(sign);
      table[flat] = v;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<SparseVec>& table() const { return table_; }
  std::size_t tuple_count() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < arity_; ++i) n *= dim_;
    return n;
  }
  std::size_t flat_index(std::span<const std::size_t> idx) const {
    std::size_t flat = 0;
    for (std::size_t i : idx) flat = flat * dim_ + i;
    return flat;
  }
  const SparseVec& entry(std::span<const std::size_t> idx) const { return table_[flat_index(idx)]; }

  Element apply(std::span<const Element> args) const {
    if (args.size() != arity_) throw dimension_error("arity mismatch");
    for (const auto& a : args)
      if (a.size() != dim_) throw dimension_error("n-ary argument");
    Element out(dim_);
    std::vector<SparseVec> nz;
    for (const auto& a : args) {
      nz.push_back(a.sparse());
      if (nz.back().empty()) return out;
    }
    std::vector<std::size_t> pos(arity_, 0);
    std::vector<std::size_t> idx(arity_);
    while (true) {
      Scalar coef(1);
      for (std::size_t s = 0; s < arity_; ++s) {
        idx[s] = nz[s][pos[s]].first;
        coef *= nz[s][pos[s]].second;
      }
      for (const auto& [k, c] : entry(idx)) out[k] += coef * c;
      std::size_t s = arity_;
      while (s > 0) {
        --s;
        if (++pos[s] < nz[s].size()) break;
        pos[s] = 0;
        if (s == 0) return out;
      }
    }
  }

  bool is_zero_product() const {
    return std::all_of(table_.begin(), table_.end(), [](const SparseVec& v) { return v.empty(); });
  }

  /// Total antisymmetry under adjacent transpositions, checked on every tuple.
  bool is_antisymmetric() const {
    std::vector<std::size_t> idx(arity_, 0);
    for (std::size_t flat = 0; flat < tuple_count(); ++flat) {
      std::size_t rem = flat;
      for (std::size_t s = arity_; s-- > 0;) {
        idx[s] = rem % dim_;
        rem /= dim_;
      }
      Element v = Element::from_sparse(dim_, table_[flat]);
      for (std::size_t s = 0; s + 1 < arity_; ++s) {
        auto swapped = idx;
        std::swap(swapped[s], swapped[s + 1]);
        Element w = Element::from_sparse(dim_, entry(swapped));
        if (!(v + w).is_zero()) return false;
      }
    }
    return true;
  }

  friend bool operator==(const NAryAlgebra& a, const NAryAlgebra& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::size_t arity_ = 2;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

/// Z/2-graded algebra on a homogeneous basis.
class SuperAlgebra {
 public:
  SuperAlgebra() = default;
  SuperAlgebra(Algebra algebra, std::vector<int> parity) : algebra_(std::move(algebra)), parity_(std::move(parity)) {
    if (parity_.size() != algebra_.dim()) throw dimension_error("parity vector length");
    for (int p : parity_)
      if (p != 0 && p != 1) throw Error(ErrorKind::invalid_argument, "parity must be 0 or 1");
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [k, c] : algebra_.product(i, j))
          if (parity_[k] != (parity_[i] + parity_[j]) % 2)
            throw Error(ErrorKind::invalid_argument, "parity-inconsistent product " + algebra_.labels()[i] + " * " +
                                                         algebra_.labels()[j]);
  }

  std::size_t dim() const { return algebra_.dim(); }
  const Algebra& algebra() const { return algebra_; }
  const std::vector<int>& parity() const { return parity_; }
  int parity(std::size_t i) const { return parity_[i]; }

 private:
  Algebra algebra_;
  std::vector<int> parity_;
};

}  // namespace tpa
