#pragma once

// Verified transposed Poisson pairs and n-ary tuples, and the constructions
// that produce them: brackets from derivations, tensor products, Kantor
// doubles, ternary lifts and nilpotent n-Lie structures.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/error.hpp"
#include "tpa/identity.hpp"
#include "tpa/linsolve.hpp"

namespace tpa {

namespace detail {

inline void require(const CheckReport& rep, const std::string& what) {
  if (!rep.holds) throw precondition_error(what + ": " + rep.summary());
}

inline CheckReport check_with(const char* id, const Algebra* product, const Algebra* bracket,
                              const LinearMap* map = nullptr) {
  Bindings b;
  b.product = product;
  b.bracket = bracket;
  b.map = map;
  return check_identity(id, b);
}

}  // namespace detail

/// Runs comm, assoc, anticomm, jacobi and tp-compat in that order.
inline std::vector<CheckReport> verify_tp(const Algebra& product, const Algebra& bracket) {
  if (product.dim() != bracket.dim()) throw dimension_error("product and bracket dimensions differ");
  return {detail::check_with("comm", &product, nullptr), detail::check_with("assoc", &product, nullptr),
          detail::check_with("anticomm", nullptr, &bracket), detail::check_with("jacobi", nullptr, &bracket),
          detail::check_with("tp-compat", &product, &bracket)};
}

inline bool all_hold(const std::vector<CheckReport>& reps) {
  for (const auto& r : reps)
    if (!r.holds) return false;
  return true;
}

/// A commutative associative product and a Lie bracket on one basis that
/// pass the transposed Poisson compatibility. Construction verifies.
class TPPair {
 public:
  TPPair(Algebra product, Algebra bracket) : product_(std::move(product)), bracket_(std::move(bracket)) {
    for (const auto& r : verify_tp(product_, bracket_)) detail::require(r, "not a transposed Poisson pair");
  }

  std::size_t dim() const { return product_.dim(); }
  const Algebra& product() const { return product_; }
  const Algebra& bracket() const { return bracket_; }
  const std::vector<std::string>& labels() const { return product_.labels(); }
  const std::optional<Element>& unit() const { return product_.unit(); }
  bool is_unital() const { return product_.is_unital(); }

  Bindings bindings() const {
    Bindings b;
    b.product = &product_;
    b.bracket = &bracket_;
    return b;
  }

 private:
  Algebra product_;
  Algebra bracket_;
};

/// Commutative associative product plus an n-Lie bracket satisfying the
/// n-ary compatibility.
class NTPTuple {
 public:
  NTPTuple(Algebra product, NAryAlgebra bracket) : product_(std::move(product)), bracket_(std::move(bracket)) {
    if (product_.dim() != bracket_.dim()) throw dimension_error("product and n-ary bracket dimensions differ");
    Bindings b;
    b.product = &product_;
    b.nary = &bracket_;
    detail::require(check_identity("comm", b), "not a transposed Poisson n-Lie tuple");
    detail::require(check_identity("assoc", b), "not a transposed Poisson n-Lie tuple");
    if (!bracket_.is_antisymmetric()) throw precondition_error("n-ary bracket is not antisymmetric");
    detail::require(check_identity("nlie-fundamental", b), "not a transposed Poisson n-Lie tuple");
    detail::require(check_identity("tp-nlie", b), "not a transposed Poisson n-Lie tuple");
  }

  std::size_t dim() const { return product_.dim(); }
  std::size_t arity() const { return bracket_.arity(); }
  const Algebra& product() const { return product_; }
  const NAryAlgebra& bracket() const { return bracket_; }

 private:
  Algebra product_;
  NAryAlgebra bracket_;
};

inline NTPTuple as_ntp(const TPPair& p) { return NTPTuple(p.product(), NAryAlgebra::from_binary(p.bracket())); }

/// Derivation law of `d` for `a` on all basis pairs.
inline CheckReport derivation_check(const Algebra& a, const LinearMap& d) {
  return detail::check_with("derivation-product", &a, nullptr, &d);
}

/// [x,y] := D(x)·y - x·D(y).
inline Algebra bracket_from_derivation(const Algebra& a, const LinearMap& d) {
  if (d.dim() != a.dim()) throw dimension_error("derivation dimension");
  detail::require(detail::check_with("comm", &a, nullptr), "product is not commutative");
  detail::require(detail::check_with("assoc", &a, nullptr), "product is not associative");
  detail::require(derivation_check(a, d), "map is not a derivation");
  const std::size_t n = a.dim();
  AlgebraBuilder b(n, a.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b.add_element(i, j, a.multiply(d.image(i), a.basis(j)) - a.multiply(a.basis(i), d.image(j)));
  return b.build();
}

/// x ↦ [x,1] for a unital pair.
inline LinearMap unit_derivation(const TPPair& p) {
  if (!p.is_unital()) throw Error(ErrorKind::invalid_argument, "pair has no unit");
  std::vector<Element> cols;
  for (std::size_t i = 0; i < p.dim(); ++i) cols.push_back(p.bracket().multiply(p.bracket().basis(i), *p.unit()));
  return LinearMap::from_columns(cols);
}

/// Product and bracket on the tensor basis a⊗b (index i1 * n2 + i2).
inline TPPair tensor_product(const TPPair& p, const TPPair& q) {
  const std::size_t n1 = p.dim(), n2 = q.dim(), n = n1 * n2;
  std::vector<std::string> labels;
  for (const auto& a : p.labels())
    for (const auto& b : q.labels()) labels.push_back(a + "⊗" + b);
  AlgebraBuilder prod(n, labels), br(n, labels);
  for (std::size_t x1 = 0; x1 < n1; ++x1)
    for (std::size_t x2 = 0; x2 < n2; ++x2)
      for (std::size_t y1 = 0; y1 < n1; ++y1)
        for (std::size_t y2 = 0; y2 < n2; ++y2) {
          const std::size_t i = x1 * n2 + x2, j = y1 * n2 + y2;
          const auto& m1 = p.product().product(x1, y1);
          const auto& m2 = q.product().product(x2, y2);
          const auto& b1 = p.bracket().product(x1, y1);
          const auto& b2 = q.bracket().product(x2, y2);
          for (const auto& [k1, c1] : m1)
            for (const auto& [k2, c2] : m2) prod.add(i, j, k1 * n2 + k2, c1 * c2);
          for (const auto& [k1, c1] : b1)
            for (const auto& [k2, c2] : m2) br.add(i, j, k1 * n2 + k2, c1 * c2);
          for (const auto& [k1, c1] : m1)
            for (const auto& [k2, c2] : b2) br.add(i, j, k1 * n2 + k2, c1 * c2);
        }
  if (p.is_unital() && q.is_unital()) {
    Element u(n);
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t b = 0; b < n2; ++b) u[a * n2 + b] = (*p.unit())[a] * (*q.unit())[b];
    prod.unit(u);
  }
  return TPPair(prod.build(), br.build());
}

/// A ⊕ Ax̄ with a∘c = a·c, a∘(dx̄) = (a·d)x̄, (bx̄)∘c = (b·c)x̄, (bx̄)∘(dx̄) = [b,d].
inline SuperAlgebra kantor_double(const TPPair& p) {
  const std::size_t n = p.dim();
  std::vector<std::string> labels = p.labels();
  for (const auto& l : p.labels()) labels.push_back(l + "·x̄");
  AlgebraBuilder b(2 * n, labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : p.product().product(i, j)) {
        b.add(i, j, k, c);
        b.add(i, n + j, n + k, c);
        b.add(n + i, j, n + k, c);
      }
      for (const auto& [k, c] : p.bracket().product(i, j)) b.add(n + i, n + j, k, c);
    }
  std::vector<int> parity(2 * n, 0);
  for (std::size_t i = n; i < 2 * n; ++i) parity[i] = 1;
  return SuperAlgebra(b.build(), std::move(parity));
}

/// [x,y,z] := D(x)·[y,z] - D(y)·[x,z] + D(z)·[x,y].
inline NAryAlgebra three_lie_from_tp(const TPPair& p, const LinearMap& d) {
  const std::size_t n = p.dim();
  if (d.dim() != n) throw dimension_error("derivation dimension");
  detail::require(derivation_check(p.product(), d), "map is not a derivation of the product");
  detail::require(detail::check_with("derivation-bracket", nullptr, &p.bracket(), &d),
                  "map is not a derivation of the bracket");
  const Algebra& m = p.product();
  const Algebra& l = p.bracket();
  std::vector<SparseVec> table(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Element v = m.multiply(d.image(x), l.multiply(l.basis(y), l.basis(z))) -
                    m.multiply(d.image(y), l.multiply(l.basis(x), l.basis(z))) +
                    m.multiply(d.image(z), l.multiply(l.basis(x), l.basis(y)));
        table[(x * n + y) * n + z] = v.sparse();
      }
  return NAryAlgebra(n, 3, p.labels(), std::move(table));
}

struct CandidateReport {
  NAryAlgebra table;
  bool antisymmetric = false;
  CheckReport fundamental;
  CheckReport compatibility;
};

/// ⟦x1..x_{n+1}⟧ := sum_i (-1)^{i+1} D(xi)·[x1..x̂i..x_{n+1}]; reports whether
/// the result is an n+1-Lie algebra compatible with the product. Nothing is
/// asserted about the outcome.
inline CandidateReport n_plus_one_lie_candidate(const NTPTuple& t, const LinearMap& d) {
  const std::size_t n = t.dim();
  const std::size_t m = t.arity();
  if (d.dim() != n) throw dimension_error("derivation dimension");
  detail::require(derivation_check(t.product(), d), "map is not a derivation of the product");
  {
    Bindings b;
    b.nary = &t.bracket();
    b.map = &d;
    detail::require(check_identity("nlie-derivation", b), "map is not a derivation of the n-ary bracket");
  }
  const Algebra& prod = t.product();
  std::size_t cells = 1;
  for (std::size_t i = 0; i < m + 1; ++i) cells *= n;
  std::vector<SparseVec> table(cells);
  std::vector<std::size_t> idx(m + 1);
  for (std::size_t flat = 0; flat < cells; ++flat) {
    std::size_t rem = flat;
    for (std::size_t s = m + 1; s-- > 0;) {
      idx[s] = rem % n;
      rem /= n;
    }
    Element v(n);
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t s = 0; s <= m; ++s)
        if (s != i) rest.push_back(idx[s]);
      Element inner = Element::from_sparse(n, t.bracket().entry(rest));
      if (inner.is_zero()) continue;
      Element term = prod.multiply(d.image(idx[i]), inner);
      if (i % 2 == 0) v += term;
      else v -= term;
    }
    table[flat] = v.sparse();
  }
  CandidateReport rep{NAryAlgebra(n, m + 1, prod.labels(), std::move(table)), false, {}, {}};
  rep.antisymmetric = rep.table.is_antisymmetric();
  Bindings b;
  b.product = &prod;
  b.nary = &rep.table;
  rep.fundamental = check_identity("nlie-fundamental", b);
  rep.compatibility = check_identity("tp-nlie", b);
  return rep;
}

/// Span of a list of vectors, as reduced echelon rows.
inline std::vector<Vector> span_of(const std::vector<Element>& vs, std::size_t dim) {
  std::vector<Vector> raw;
  for (const auto& v : vs) raw.push_back(v.coords());
  return RowEchelon::normalize_basis(raw, dim);
}

inline bool in_span(const std::vector<Vector>& span, const Element& v) {
  RowEchelon ech(v.size());
  for (const auto& s : span) ech.insert(to_sparse_row(s));
  return !ech.insert(to_sparse_row(v.coords()));
}

/// L^2: span of all bracket values on basis tuples.
inline std::vector<Vector> derived_span(const NAryAlgebra& l) {
  std::vector<Element> outs;
  for (const auto& e : l.table())
    if (!e.empty()) outs.push_back(Element::from_sparse(l.dim(), e));
  return span_of(outs, l.dim());
}

/// Basis vector e_k annihilates: every bracket with e_k in some slot is zero.
inline bool is_annihilator(const NAryAlgebra& l, std::size_t k) {
  std::vector<std::size_t> idx(l.arity());
  for (std::size_t flat = 0; flat < l.tuple_count(); ++flat) {
    std::size_t rem = flat;
    bool hit = false;
    for (std::size_t s = l.arity(); s-- > 0;) {
      idx[s] = rem % l.dim();
      rem /= l.dim();
      hit = hit || idx[s] == k;
    }
    if (hit && !l.table()[flat].empty()) return false;
  }
  return true;
}

/// Lower central series L, [L,..,L], [[L,..,L],L,..,L], ... reaches zero.
inline bool is_nilpotent(const NAryAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Vector> cur;
  for (std::size_t i = 0; i < n; ++i) cur.push_back(Element::basis(n, i).coords());
  for (std::size_t step = 0; step <= n; ++step) {
    std::vector<Element> next;
    std::vector<Element> args(l.arity(), Element(n));
    for (const auto& v : cur) {
      args[0] = Element(v);
      std::vector<std::size_t> pos(l.arity() - 1, 0);
      while (true) {
        for (std::size_t s = 1; s < l.arity(); ++s) args[s] = Element::basis(n, pos[s - 1]);
        Element out = l.apply(args);
        if (!out.is_zero()) next.push_back(std::move(out));
        std::size_t s = pos.size();
        bool done = true;
        while (s > 0) {
          --s;
          if (++pos[s] < n) {
            done = false;
            break;
          }
          pos[s] = 0;
        }
        if (done) break;
      }
    }
    auto span = span_of(next, n);
    if (span.empty()) return true;
    if (span.size() == cur.size()) return false;
    cur = std::move(span);
  }
  return false;
}

inline bool is_nilpotent(const Algebra& a) { return is_nilpotent(NAryAlgebra::from_binary(a)); }

/// e_i·e_j = e_k for generators i, j; every other product zero.
inline NTPTuple nilpotent_nlie_tp(const NAryAlgebra& l, const std::vector<std::size_t>& generators, std::size_t k) {
  const std::size_t n = l.dim();
  if (generators.size() != l.arity())
    throw Error(ErrorKind::invalid_argument, "witness needs exactly one generator per bracket slot");
  if (l.arity() >= n) throw precondition_error("arity must be smaller than the dimension");
  if (k >= n) throw dimension_error("annihilator index out of range");
  if (!l.is_antisymmetric()) throw precondition_error("bracket is not antisymmetric");
  if (!is_nilpotent(l)) throw precondition_error("algebra is not nilpotent");
  auto square = derived_span(l);
  for (std::size_t g : generators) {
    if (g >= n) throw dimension_error("generator index out of range");
    if (in_span(square, Element::basis(n, g)))
      throw precondition_error("generator " + l.labels()[g] + " lies in the derived algebra");
  }
  if (!is_annihilator(l, k)) throw precondition_error(l.labels()[k] + " is not in the annihilator");
  std::vector<bool> is_gen(n, false);
  for (std::size_t g : generators) is_gen[g] = true;
  AlgebraBuilder b(n, l.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (is_gen[i] && is_gen[j]) b.add(i, j, k, Scalar(1));
  return NTPTuple(b.build(), l);
}

/// Quasi-Poisson identity with D(x) = [x,1].
inline CheckReport quasi_poisson_check(const TPPair& p) {
  if (!p.is_unital()) throw Error(ErrorKind::invalid_argument, "quasi-Poisson check needs a unit");
  LinearMap d = unit_derivation(p);
  return detail::check_with("quasi-poisson", &p.product(), &p.bracket(), &d);
}

struct EquivalenceReport {
  CheckReport poisson;
  CheckReport product_kills_bracket;   // x·[y1..yn] = 0
  CheckReport bracket_kills_product;   // [x·y1, y2..yn] = 0

  bool annihilation() const { return product_kills_bracket.holds && bracket_kills_product.holds; }
  bool consistent() const { return poisson.holds == annihilation(); }
};

/// For a transposed Poisson n-Lie tuple: Poisson n-Lie holds iff products and
/// brackets annihilate each other.
inline EquivalenceReport both_poisson_and_tp_check(const NTPTuple& t) {
  const std::size_t n = t.arity();
  Bindings b;
  b.product = &t.product();
  b.nary = &t.bracket();
  EquivalenceReport rep;
  rep.poisson = check_identity("poisson-nlie", b);

  std::vector<Term> ys;
  std::vector<std::string> names = {"x"};
  for (std::size_t i = 0; i < n; ++i) {
    ys.push_back(Term::arg(i + 1));
    names.push_back("y" + std::to_string(i + 1));
  }
  IdentitySpec left;
  left.id = "product-kills-bracket";
  left.arity = n + 1;
  left.arg_names = names;
  left.defect = prod(Term::arg(0), nary(ys));
  left.slots = left.defect.slots();
  rep.product_kills_bracket = check_identity(left, b);

  IdentitySpec right = left;
  right.id = "bracket-kills-product";
  auto shifted = ys;
  shifted[0] = prod(Term::arg(0), ys[0]);
  right.defect = nary(shifted);
  right.slots = right.defect.slots();
  rep.bracket_kills_product = check_identity(right, b);
  return rep;
}

/// Transports a product through an invertible map: x ·' y = φ(φ⁻¹x · φ⁻¹y).
inline Algebra transport(const Algebra& a, const LinearMap& phi, const LinearMap& inv) {
  const std::size_t n = a.dim();
  AlgebraBuilder b(n, a.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add_element(i, j, phi.apply(a.multiply(inv.image(i), inv.image(j))));
  if (a.unit()) b.unit(phi.apply(*a.unit()));
  return b.build();
}

inline TPPair apply_basis_change(const TPPair& p, const LinearMap& phi) {
  if (phi.dim() != p.dim()) throw dimension_error("basis change dimension");
  if (!phi.is_invertible()) throw Error(ErrorKind::invalid_argument, "basis change is singular");
  LinearMap inv = phi.inverse();
  return TPPair(transport(p.product(), phi, inv), transport(p.bracket(), phi, inv));
}

}  // namespace tpa
