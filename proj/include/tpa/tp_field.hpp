#pragma once

// The bracket ⟦a/b, c/d⟧ = ([a,b]cd - ab[c,d]) / (b²d²) on fractions of
// polynomials, where [p,q] = D(p)q - pD(q), and a sampled exact verifier for
// antisymmetry, Jacobi and the transposed Poisson compatibility.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tpa/error.hpp"
#include "tpa/polynomial.hpp"

namespace tpa {

class FieldContext {
 public:
  explicit FieldContext(DerivationSpec d) : d_(std::move(d)) {
    for (const auto& img : d_.images)
      if (img.nvars() != d_.nvars()) throw dimension_error("derivation image lives in a different ring");
  }

  std::size_t nvars() const { return d_.nvars(); }
  const DerivationSpec& derivation() const { return d_; }

  Polynomial bracket(const Polynomial& p, const Polynomial& q) const {
    return poly_derive(p, d_) * q - p * poly_derive(q, d_);
  }

  /// With `flip_sign` the second term enters with + (a deliberately wrong bracket).
  Fraction field_bracket(const Fraction& x, const Fraction& y, bool flip_sign = false) const {
    const Polynomial &a = x.num, &b = x.den, &c = y.num, &d = y.den;
    Polynomial first = bracket(a, b) * c * d;
    Polynomial second = a * b * bracket(c, d);
    Polynomial den = b * b * d * d;
    return Fraction(flip_sign ? first + second : first - second, den);
  }

 private:
  DerivationSpec d_;
};

inline Fraction field_bracket(const FieldContext& ctx, const Fraction& x, const Fraction& y) {
  return ctx.field_bracket(x, y);
}

struct SamplerConfig {
  std::size_t vars = 2;
  unsigned degree = 3;
  int coeff_bound = 3;
  std::size_t samples = 100;
  std::uint64_t seed = 7;
  bool flip_sign = false;
};

struct FieldFailure {
  std::size_t sample = 0;
  std::string axiom;
  std::vector<std::string> inputs;
};

struct FieldReport {
  SamplerConfig config;
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::map<std::string, std::size_t> failures_by_axiom;
  std::optional<FieldFailure> first_failure;
  std::map<std::string, FieldFailure> first_by_axiom;

  bool holds() const { return failures == 0; }
};

/// Deterministic polynomial sampler (explicit modular reduction so results do
/// not depend on the standard library's distributions).
class PolySampler {
 public:
  PolySampler(std::size_t vars, unsigned degree, int bound, std::uint64_t seed)
      : vars_(vars), bound_(bound), rng_(seed) {
    if (vars == 0 || vars > kMaxVars) throw Error(ErrorKind::invalid_argument, "sampler needs 1..4 variables");
    if (bound <= 0) throw Error(ErrorKind::invalid_argument, "coefficient bound must be positive");
    std::vector<unsigned> e(vars, 0);
    enumerate(0, degree, e);
  }

  Polynomial next() {
    std::vector<std::pair<std::vector<unsigned>, mpq_class>> terms;
    const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
    for (const auto& m : monomials_) {
      long c = static_cast<long>(rng_() % span) - bound_;
      if (c != 0) terms.emplace_back(m, mpq_class(c));
    }
    return Polynomial::from_terms(vars_, terms);
  }

  Polynomial next_nonzero() {
    for (;;) {
      Polynomial p = next();
      if (!p.is_zero()) return p;
    }
  }

 private:
  void enumerate(std::size_t v, unsigned left, std::vector<unsigned>& e) {
    if (v == vars_) {
      monomials_.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[v] = k;
      enumerate(v + 1, left - k, e);
    }
    e[v] = 0;
  }

  std::size_t vars_;
  int bound_;
  std::mt19937_64 rng_;
  std::vector<std::vector<unsigned>> monomials_;
};

namespace detail {

/// Fraction whose denominator is kept as a product of powers of distinct
/// polynomials; sums use the least common multiple of the factor lists.
struct FactoredFraction {
  Polynomial num;
  std::vector<std::pair<Polynomial, unsigned>> den;

  static FactoredFraction of(const Fraction& f) {
    FactoredFraction r{f.num, {}};
    r.den.emplace_back(f.den, 1);
    return r;
  }

  std::size_t nvars() const { return num.nvars(); }

  Polynomial product(const std::vector<std::pair<Polynomial, unsigned>>& fs) const {
    Polynomial out = Polynomial::constant(nvars(), 1);
    for (const auto& [p, e] : fs)
      for (unsigned k = 0; k < e; ++k) out = out * p;
    return out;
  }
  Polynomial expanded_den() const { return product(den); }
  Fraction to_fraction() const { return Fraction(num, expanded_den()); }
};

inline void merge_factor(std::vector<std::pair<Polynomial, unsigned>>& fs, const Polynomial& p, unsigned e, bool take_max) {
  for (auto& [q, k] : fs)
    if (q == p) {
      k = take_max ? std::max(k, e) : k + e;
      return;
    }
  fs.emplace_back(p, e);
}

inline FactoredFraction mul(const FactoredFraction& a, const FactoredFraction& b) {
  FactoredFraction r{a.num * b.num, a.den};
  for (const auto& [p, e] : b.den) merge_factor(r.den, p, e, false);
  return r;
}

inline FactoredFraction scale(const mpq_class& c, FactoredFraction a) {
  a.num = c * a.num;
  return a;
}

/// Σ sign_i x_i over the common denominator.
inline FactoredFraction combine(const std::vector<std::pair<int, const FactoredFraction*>>& parts) {
  FactoredFraction r{Polynomial(parts.front().second->nvars()), {}};
  for (const auto& [sign, x] : parts)
    for (const auto& [p, e] : x->den) merge_factor(r.den, p, e, true);
  for (const auto& [sign, x] : parts) {
    std::vector<std::pair<Polynomial, unsigned>> missing;
    for (const auto& [p, e] : r.den) {
      unsigned have = 0;
      for (const auto& [q, k] : x->den)
        if (q == p) have = k;
      if (e > have) missing.emplace_back(p, e - have);
    }
    Polynomial term = x->num * r.product(missing);
    r.num = sign > 0 ? r.num + term : r.num - term;
  }
  return r;
}

inline FactoredFraction bracket(const FieldContext& ctx, const FactoredFraction& x, const FactoredFraction& y,
                                bool flip_sign) {
  const Polynomial b = x.expanded_den(), d = y.expanded_den();
  Polynomial first = ctx.bracket(x.num, b) * y.num * d;
  Polynomial second = x.num * b * ctx.bracket(y.num, d);
  FactoredFraction r{flip_sign ? first + second : first - second, {}};
  for (const auto& [p, e] : x.den) merge_factor(r.den, p, 2 * e, false);
  for (const auto& [p, e] : y.den) merge_factor(r.den, p, 2 * e, false);
  return r;
}

}  // namespace detail

/// Samples triples F, G, H of fractions and checks
///   ⟦F,G⟧ + ⟦G,F⟧ = 0,
///   ⟦F,⟦G,H⟧⟧ + ⟦G,⟦H,F⟧⟧ + ⟦H,⟦F,G⟧⟧ = 0,
///   2F⟦G,H⟧ - ⟦FG,H⟧ - ⟦G,FH⟧ = 0.
/// Zero denominators are resampled.
inline FieldReport verify_field_axioms(const FieldContext& ctx, const SamplerConfig& cfg) {
  if (cfg.vars != ctx.nvars()) throw dimension_error("sampler and derivation variable counts differ");
  if (cfg.vars > 3 || cfg.degree > 3)
    throw Error(ErrorKind::invalid_argument, "sampler is limited to 3 variables and degree 3");
  PolySampler sampler(cfg.vars, cfg.degree, cfg.coeff_bound, cfg.seed);
  FieldReport rep;
  rep.config = cfg;
  for (const char* a : {"antisymmetry", "jacobi", "tp-compat"}) rep.failures_by_axiom[a] = 0;
  const bool flip = cfg.flip_sign;
  auto br = [&](const detail::FactoredFraction& x, const detail::FactoredFraction& y) {
    return detail::bracket(ctx, x, y, flip);
  };
  auto fail = [&](std::size_t s, const char* axiom, const std::vector<Fraction>& in) {
    ++rep.failures;
    if (rep.failures_by_axiom[axiom]++ > 0) return;
    FieldFailure f;
    f.sample = s;
    f.axiom = axiom;
    for (const auto& x : in) f.inputs.push_back(x.str());
    rep.first_by_axiom[axiom] = f;
    if (!rep.first_failure) rep.first_failure = std::move(f);
  };
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    std::vector<Fraction> in;
    for (int k = 0; k < 3; ++k) {
      Polynomial num = sampler.next();
      Polynomial den = sampler.next_nonzero();
      in.emplace_back(std::move(num), std::move(den));
    }
    const auto F = detail::FactoredFraction::of(in[0]), G = detail::FactoredFraction::of(in[1]),
               H = detail::FactoredFraction::of(in[2]);
    ++rep.samples;

    ++rep.checks;
    auto fg = br(F, G), gf = br(G, F);
    if (!detail::combine({{1, &fg}, {1, &gf}}).num.is_zero()) fail(s, "antisymmetry", in);

    ++rep.checks;
    auto gh = br(G, H), hf = br(H, F);
    auto j1 = br(F, gh), j2 = br(G, hf), j3 = br(H, fg);
    if (!detail::combine({{1, &j1}, {1, &j2}, {1, &j3}}).num.is_zero()) fail(s, "jacobi", in);

    ++rep.checks;
    auto lhs = detail::scale(2, detail::mul(F, gh));
    auto c1 = br(detail::mul(F, G), H), c2 = br(G, detail::mul(F, H));
    if (!detail::combine({{1, &lhs}, {-1, &c1}, {-1, &c2}}).num.is_zero()) fail(s, "tp-compat", in);
  }
  return rep;
}

}  // namespace tpa
