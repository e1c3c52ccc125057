#pragma once

// Ready-made algebras: oscillator Lie algebras with their 1/2-derivations,
// TP products, automorphisms and canonical families; Witt-type graded pairs;
// small named models.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/constructions.hpp"
#include "tpa/error.hpp"
#include "tpa/graded.hpp"
#include "tpa/identity.hpp"
#include "tpa/scalar.hpp"

namespace tpa {

struct OscillatorParams {
  std::vector<Scalar> lambda;
  bool generic = false;

  std::size_t n() const { return lambda.size(); }
};

struct HalfDerParams {
  Scalar gamma;
  Scalar mu;
  std::vector<Scalar> alpha;
  std::vector<Scalar> beta;
};

struct AutomorphismParams {
  int sign = 1;
  Scalar nu;
  std::vector<Scalar> mu;
  std::vector<Scalar> mu_check;
  std::vector<Scalar> nu_i;
  std::vector<Scalar> nu_check;
};

enum class Family { A, Ba, Bb };

struct ClassificationFamily {
  Family tag = Family::A;
  Scalar gamma;               // family A
  std::vector<Scalar> beta;   // families B
};

namespace osc {

// Basis order e-1, e0, e1..en, ě1..ěn.
inline std::size_t em1() { return 0; }
inline std::size_t e0() { return 1; }
inline std::size_t e(std::size_t j) { return 1 + j; }
inline std::size_t ec(std::size_t n, std::size_t j) { return 1 + n + j; }

inline std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out = {"e-1", "e0"};
  for (std::size_t j = 1; j <= n; ++j) out.push_back("e" + std::to_string(j));
  for (std::size_t j = 1; j <= n; ++j) out.push_back("ě" + std::to_string(j));
  return out;
}

}  // namespace osc

inline void validate(const OscillatorParams& p) {
  if (p.lambda.empty()) throw Error(ErrorKind::invalid_argument, "oscillator needs n >= 1");
  for (std::size_t i = 0; i < p.n(); ++i) {
    if (!p.lambda[i].is_rational() || sgn(p.lambda[i].re()) <= 0)
      throw Error(ErrorKind::invalid_argument, "lambda must be positive rationals");
    if (i > 0 && p.lambda[i].re() < p.lambda[i - 1].re())
      throw Error(ErrorKind::invalid_argument, "lambda must be ascending");
  }
  if (!p.generic) return;
  if (!p.lambda[0].is_one()) throw Error(ErrorKind::invalid_argument, "generic oscillator needs lambda_1 = 1");
  for (std::size_t i = 1; i < p.n(); ++i)
    if (p.lambda[i] == p.lambda[i - 1])
      throw Error(ErrorKind::invalid_argument, "generic oscillator needs strictly increasing lambda");
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j)
      for (std::size_t k = j + 1; k < p.n(); ++k)
        if (p.lambda[i] + p.lambda[j] == p.lambda[k])
          throw Error(ErrorKind::invalid_argument, "generic oscillator needs lambda_i + lambda_j != lambda_k");
}

/// [e-1,ej] = λj ěj, [e-1,ěj] = -λj ej, [ej,ěj] = e0.
inline Algebra oscillator(const OscillatorParams& p) {
  validate(p);
  const std::size_t n = p.n();
  AlgebraBuilder b(2 * n + 2, osc::labels(n));
  for (std::size_t j = 1; j <= n; ++j) {
    const Scalar& l = p.lambda[j - 1];
    b.add_symmetric(osc::em1(), osc::e(j), osc::ec(n, j), l, -1);
    b.add_symmetric(osc::em1(), osc::ec(n, j), osc::e(j), -l, -1);
    b.add_symmetric(osc::e(j), osc::ec(n, j), osc::e0(), Scalar(1), -1);
  }
  return b.build();
}

namespace detail {

inline void check_lengths(const OscillatorParams& p, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != p.n() || b.size() != p.n()) throw dimension_error("parameter vectors must have length n");
}

}  // namespace detail

inline LinearMap oscillator_half_derivation(const OscillatorParams& p, const HalfDerParams& h) {
  validate(p);
  detail::check_lengths(p, h.alpha, h.beta);
  const std::size_t n = p.n(), dim = 2 * n + 2;
  LinearMap f(dim);
  f.at(osc::em1(), osc::em1()) = h.gamma;
  f.at(osc::e0(), osc::em1()) = h.mu;
  f.at(osc::e0(), osc::e0()) = h.gamma;
  for (std::size_t j = 1; j <= n; ++j) {
    const Scalar two_l = Scalar(2) * p.lambda[j - 1];
    f.at(osc::e(j), osc::em1()) = -(two_l * h.alpha[j - 1]);
    f.at(osc::ec(n, j), osc::em1()) = -(two_l * h.beta[j - 1]);
    f.at(osc::e0(), osc::e(j)) = h.alpha[j - 1];
    f.at(osc::e(j), osc::e(j)) = h.gamma;
    f.at(osc::e0(), osc::ec(n, j)) = h.beta[j - 1];
    f.at(osc::ec(n, j), osc::ec(n, j)) = h.gamma;
  }
  return f;
}

inline Algebra oscillator_tp_product(const OscillatorParams& p, const HalfDerParams& h) {
  validate(p);
  detail::check_lengths(p, h.alpha, h.beta);
  const std::size_t n = p.n();
  AlgebraBuilder b(2 * n + 2, osc::labels(n));
  b.add(osc::em1(), osc::em1(), osc::em1(), h.gamma);
  b.add(osc::em1(), osc::em1(), osc::e0(), h.mu);
  b.add_symmetric(osc::em1(), osc::e0(), osc::e0(), h.gamma);
  for (std::size_t j = 1; j <= n; ++j) {
    const Scalar& l = p.lambda[j - 1];
    b.add(osc::em1(), osc::em1(), osc::e(j), -(Scalar(2) * l * h.alpha[j - 1]));
    b.add(osc::em1(), osc::em1(), osc::ec(n, j), -(Scalar(2) * l * h.beta[j - 1]));
    b.add_symmetric(osc::em1(), osc::e(j), osc::e0(), h.alpha[j - 1]);
    b.add_symmetric(osc::em1(), osc::e(j), osc::e(j), h.gamma);
    b.add_symmetric(osc::em1(), osc::ec(n, j), osc::e0(), h.beta[j - 1]);
    b.add_symmetric(osc::em1(), osc::ec(n, j), osc::ec(n, j), h.gamma);
    const Scalar sq = -(h.gamma / (Scalar(2) * l));
    b.add(osc::e(j), osc::e(j), osc::e0(), sq);
    b.add(osc::ec(n, j), osc::ec(n, j), osc::e0(), sq);
  }
  return b.build();
}

/// Bracket preservation φ[x,y] = [φx,φy] on all basis pairs.
inline bool is_automorphism(const Algebra& l, const LinearMap& phi) {
  if (phi.dim() != l.dim() || !phi.is_invertible()) return false;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (phi.apply(Element::from_sparse(l.dim(), l.product(i, j))) != l.multiply(phi.image(i), phi.image(j)))
        return false;
  return true;
}

/// φ(e-1) = s e-1 + ν e0 + Σ νi ei + Σ ν̌i ěi, φ(e0) = s ξ e0,
/// φ(ei) = ((ν̌i μ̌i - s νi μi)/λi) e0 + μi ei - s μ̌i ěi,
/// φ(ěi) = ((-ν̌i μi - s νi μ̌i)/λi) e0 + μ̌i ei + s μi ěi, ξ = μi² + μ̌i².
inline LinearMap oscillator_automorphism(const OscillatorParams& p, const AutomorphismParams& a) {
  validate(p);
  const std::size_t n = p.n();
  if (a.sign != 1 && a.sign != -1) throw Error(ErrorKind::invalid_argument, "sign must be +1 or -1");
  if (a.mu.size() != n || a.mu_check.size() != n || a.nu_i.size() != n || a.nu_check.size() != n)
    throw dimension_error("automorphism parameter vectors must have length n");
  const Scalar s(a.sign);
  const Scalar xi = a.mu[0] * a.mu[0] + a.mu_check[0] * a.mu_check[0];
  if (xi.is_zero()) throw Error(ErrorKind::invalid_argument, "xi = mu^2 + mu_check^2 must be nonzero");
  for (std::size_t i = 1; i < n; ++i)
    if (a.mu[i] * a.mu[i] + a.mu_check[i] * a.mu_check[i] != xi)
      throw Error(ErrorKind::invalid_argument, "xi = mu_i^2 + mu_check_i^2 must not depend on i");
  LinearMap f(2 * n + 2);
  f.at(osc::em1(), osc::em1()) = s;
  f.at(osc::e0(), osc::em1()) = a.nu;
  f.at(osc::e0(), osc::e0()) = s * xi;
  for (std::size_t i = 1; i <= n; ++i) {
    const Scalar& l = p.lambda[i - 1];
    const Scalar &m = a.mu[i - 1], &mc = a.mu_check[i - 1], &v = a.nu_i[i - 1], &vc = a.nu_check[i - 1];
    f.at(osc::e(i), osc::em1()) = v;
    f.at(osc::ec(n, i), osc::em1()) = vc;
    f.at(osc::e0(), osc::e(i)) = (vc * mc - s * v * m) / l;
    f.at(osc::e(i), osc::e(i)) = m;
    f.at(osc::ec(n, i), osc::e(i)) = -(s * mc);
    f.at(osc::e0(), osc::ec(n, i)) = (-(vc * m) - s * v * mc) / l;
    f.at(osc::e(i), osc::ec(n, i)) = mc;
    f.at(osc::ec(n, i), osc::ec(n, i)) = s * m;
  }
  if (!is_automorphism(oscillator(p), f)) throw precondition_error("automorphism law fails for these parameters");
  return f;
}

/// The automorphism with s = -1, μi = 1 and all other parameters zero.
inline LinearMap negative_automorphism(const OscillatorParams& p) {
  AutomorphismParams a;
  a.sign = -1;
  a.mu.assign(p.n(), Scalar(1));
  a.mu_check.assign(p.n(), Scalar(0));
  a.nu_i.assign(p.n(), Scalar(0));
  a.nu_check.assign(p.n(), Scalar(0));
  return oscillator_automorphism(p, a);
}

inline void validate(const ClassificationFamily& f, std::size_t n) {
  if (f.tag == Family::A) {
    if (f.gamma.is_zero()) throw Error(ErrorKind::invalid_argument, "family A needs gamma != 0");
    return;
  }
  if (f.beta.size() != n) throw dimension_error("beta must have length n");
  bool seen_nonzero = false;
  for (const auto& b : f.beta) {
    if (!in_right_half_plane(b)) throw Error(ErrorKind::invalid_argument, "beta entries must lie in C>0");
    if (!seen_nonzero && !b.is_zero()) {
      if (!b.is_one()) throw Error(ErrorKind::invalid_argument, "first nonzero beta must be 1");
      seen_nonzero = true;
    }
  }
}

/// Canonical products A, B.a, B.b on a generic oscillator algebra. The B
/// families put e-1·ěj = βj e0, the value the general product formula gives at
/// γ = 0.
inline Algebra canonical_tp_product(const OscillatorParams& p, const ClassificationFamily& f) {
  if (!p.generic) throw Error(ErrorKind::invalid_argument, "canonical families need a generic oscillator");
  validate(p);
  validate(f, p.n());
  const std::size_t n = p.n();
  HalfDerParams h;
  h.alpha.assign(n, Scalar(0));
  if (f.tag == Family::A) {
    h.gamma = f.gamma;
    h.beta.assign(n, Scalar(0));
  } else {
    h.mu = f.tag == Family::Ba ? Scalar(1) : Scalar(0);
    h.beta = f.beta;
  }
  return oscillator_tp_product(p, h);
}

/// e_i·e_j = Σ α_t e_{i+j+t} with the Witt bracket [e_i,e_j] = (i-j)e_{i+j}.
struct WittTPPair {
  std::map<std::int64_t, Scalar> alpha;
  std::optional<std::int64_t> floor;
  GradedAlgebra product;
  GradedAlgebra bracket;
};

inline WittTPPair witt_tp_pair(std::map<std::int64_t, Scalar> alpha, std::optional<std::int64_t> floor) {
  for (auto it = alpha.begin(); it != alpha.end();) {
    if (it->second.is_zero()) it = alpha.erase(it);
    else ++it;
  }
  if (floor)
    for (const auto& [t, c] : alpha)
      if (t <= 0) throw Error(ErrorKind::invalid_argument, "W(1) products need offsets t > 0");
  auto rule = [alpha](std::int64_t i, std::int64_t j) {
    GradedElement out;
    for (const auto& [t, c] : alpha) out.add_term(i + j + t, c);
    return out;
  };
  return WittTPPair{alpha, floor, GradedAlgebra(floor ? "W(1) product" : "W product", rule, floor),
                    GradedAlgebra::witt(floor)};
}

/// Checks comm, assoc and tp-compat on all basis triples of e_lo..e_hi.
inline std::vector<CheckReport> check_witt_window(const WittTPPair& w, std::int64_t lo, std::int64_t hi) {
  if (w.floor && lo < *w.floor) throw Error(ErrorKind::invalid_argument, "window starts below the index floor");
  return {check_identity_graded("comm", &w.product, nullptr, lo, hi),
          check_identity_graded("assoc", &w.product, nullptr, lo, hi),
          check_identity_graded("tp-compat", &w.product, &w.bracket, lo, hi)};
}

/// Quotient of the positive part of W by degrees > N, with e_i·e_j = Σ α_t
/// e_{i+j+t} (t >= 0); basis e1..eN.
inline TPPair witt_window_pair(std::size_t top, const std::map<std::int64_t, Scalar>& alpha) {
  if (top == 0) throw Error(ErrorKind::invalid_argument, "window needs at least one basis element");
  for (const auto& [t, c] : alpha)
    if (t < 0) throw Error(ErrorKind::invalid_argument, "window products need offsets t >= 0");
  const auto N = static_cast<std::int64_t>(top);
  std::vector<std::string> labels;
  for (std::int64_t i = 1; i <= N; ++i) labels.push_back("e" + std::to_string(i));
  AlgebraBuilder prod(top, labels), br(top, labels);
  for (std::int64_t i = 1; i <= N; ++i)
    for (std::int64_t j = 1; j <= N; ++j) {
      if (i + j <= N && i != j) br.add(i - 1, j - 1, i + j - 1, Scalar(static_cast<long>(i - j)));
      for (const auto& [t, c] : alpha)
        if (i + j + t <= N) prod.add(i - 1, j - 1, i + j + t - 1, c);
    }
  return TPPair(prod.build(), br.build());
}

/// e_i ↦ i e_i on the window basis.
inline LinearMap degree_derivation(std::size_t top) {
  LinearMap d(top);
  for (std::size_t i = 0; i < top; ++i) d.at(i, i) = Scalar(static_cast<long>(i + 1));
  return d;
}

/// Q[t]/(t^N) on the basis 1, t, .., t^{N-1}.
inline Algebra truncated_polynomials(std::size_t top) {
  if (top == 0) throw Error(ErrorKind::invalid_argument, "truncation degree must be positive");
  std::vector<std::string> labels = {"1"};
  for (std::size_t i = 1; i < top; ++i) labels.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
  AlgebraBuilder b(top, labels);
  for (std::size_t i = 0; i < top; ++i)
    for (std::size_t j = 0; j + i < top; ++j) b.add(i, j, i + j, Scalar(1));
  b.unit(Element::basis(top, 0));
  return b.build();
}

/// The map t^i ↦ i c t^{i-1+a} (that is, c t^a d/dt) on Q[t]/(t^N). It is a
/// derivation exactly when a >= 1 or N = 1.
inline LinearMap truncated_derivation(std::size_t top, std::size_t a, const Scalar& c = Scalar(1)) {
  LinearMap d(top);
  for (std::size_t i = 1; i < top; ++i)
    if (i - 1 + a < top) d.at(i - 1 + a, i) = Scalar(static_cast<long>(i)) * c;
  return d;
}

struct NamedModel {
  Algebra algebra;
  std::optional<LinearMap> map;
  std::string description;
};

/// sl2, heis3, abelian-N, poly-trunc-N, unit-1.
inline NamedModel named_algebra(std::string_view id) {
  auto suffix = [&](std::string_view stem) -> std::optional<std::size_t> {
    if (id.substr(0, stem.size()) != stem) return std::nullopt;
    std::string rest(id.substr(stem.size()));
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    return std::stoul(rest);
  };
  if (id == "sl2") {
    AlgebraBuilder b(3, {"e", "f", "h"});
    b.add_symmetric(0, 1, 2, Scalar(1), -1);
    b.add_symmetric(2, 0, 0, Scalar(2), -1);
    b.add_symmetric(2, 1, 1, Scalar(-2), -1);
    return {b.build(), std::nullopt, "sl2: [e,f]=h, [h,e]=2e, [h,f]=-2f"};
  }
  if (id == "heis3") {
    AlgebraBuilder b(3);
    b.add_symmetric(0, 1, 2, Scalar(1), -1);
    return {b.build(), std::nullopt, "Heisenberg: [e1,e2]=e3"};
  }
  if (auto n = suffix("abelian-"); n && *n > 0) {
    return {Algebra::zero(*n), std::nullopt, "abelian Lie algebra of dimension " + std::to_string(*n)};
  }
  if (auto n = suffix("poly-trunc-"); n && *n > 0) {
    return {truncated_polynomials(*n), truncated_derivation(*n, 1),
            "Q[t]/(t^" + std::to_string(*n) + ") with the Euler derivation t d/dt"};
  }
  if (id == "unit-1") {
    AlgebraBuilder b(1, {"1"});
    b.add(0, 0, 0, Scalar(1));
    b.unit(Element::basis(1, 0));
    return {b.build(), LinearMap(1), "one-dimensional unital algebra"};
  }
  throw Error(ErrorKind::invalid_argument, "unknown algebra id '" + std::string(id) + "'");
}

/// 3-lie-4: [e1,e2,e3] = e4; 3-lie-3: [e1,e2,e3] = e1.
inline NAryAlgebra named_nary(std::string_view id) {
  if (id == "3-lie-4") {
    std::vector<SparseVec> t(4 * 4 * 4);
    NAryAlgebra::set_antisymmetric(t, 4, {0, 1, 2}, {{3, Scalar(1)}});
    return NAryAlgebra(4, 3, {}, std::move(t));
  }
  if (id == "3-lie-3") {
    std::vector<SparseVec> t(3 * 3 * 3);
    NAryAlgebra::set_antisymmetric(t, 3, {0, 1, 2}, {{0, Scalar(1)}});
    return NAryAlgebra(3, 3, {}, std::move(t));
  }
  throw Error(ErrorKind::invalid_argument, "unknown n-ary algebra id '" + std::string(id) + "'");
}

}  // namespace tpa
