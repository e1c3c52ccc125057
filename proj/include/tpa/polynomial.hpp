#pragma once

// Multivariate polynomials over Q, derivations given on generators, and
// unreduced fractions compared by cross-multiplication.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tpa/error.hpp"

namespace tpa {

inline constexpr std::size_t kMaxVars = 4;

/// Exponent vector packed 16 bits per variable, variable 0 in the high bits,
/// so integer order on the packed word is lexicographic order on exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::vector<unsigned>& exps) {
    if (exps.size() > kMaxVars) throw Error(ErrorKind::invalid_argument, "too many variables");
    for (std::size_t v = 0; v < exps.size(); ++v) set(v, exps[v]);
  }

  static Monomial var(std::size_t v, unsigned power = 1) {
    Monomial m;
    m.set(v, power);
    return m;
  }

  unsigned exponent(std::size_t v) const { return static_cast<unsigned>((packed_ >> shift(v)) & 0xffffu); }
  void set(std::size_t v, unsigned e) {
    if (v >= kMaxVars) throw Error(ErrorKind::invalid_argument, "variable index out of range");
    if (e > 0xffffu) throw Error(ErrorKind::capacity, "exponent overflow");
    packed_ &= ~(std::uint64_t{0xffff} << shift(v));
    packed_ |= std::uint64_t{e} << shift(v);
  }
  unsigned degree() const {
    unsigned d = 0;
    for (std::size_t v = 0; v < kMaxVars; ++v) d += exponent(v);
    return d;
  }
  std::uint64_t packed() const { return packed_; }

  friend Monomial operator*(Monomial a, Monomial b) {
    Monomial r;
    for (std::size_t v = 0; v < kMaxVars; ++v) r.set(v, a.exponent(v) + b.exponent(v));
    return r;
  }
  friend bool operator==(Monomial a, Monomial b) { return a.packed_ == b.packed_; }
  friend bool operator<(Monomial a, Monomial b) { return a.packed_ < b.packed_; }

 private:
  static unsigned shift(std::size_t v) { return static_cast<unsigned>(16 * (kMaxVars - 1 - v)); }
  std::uint64_t packed_ = 0;
};

class Polynomial {
 public:
  using TermList = std::vector<std::pair<Monomial, mpq_class>>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) { check_vars(nvars); }

  static Polynomial constant(std::size_t nvars, const mpq_class& c) {
    Polynomial p(nvars);
    if (sgn(c) != 0) p.terms_.emplace_back(Monomial{}, c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t v) {
    if (v >= nvars) throw dimension_error("variable index out of range");
    Polynomial p(nvars);
    p.terms_.emplace_back(Monomial::var(v), mpq_class(1));
    return p;
  }
  /// Builds from (exponents, coefficient) pairs; duplicates are summed.
  static Polynomial from_terms(std::size_t nvars, const std::vector<std::pair<std::vector<unsigned>, mpq_class>>& raw) {
    Polynomial p(nvars);
    std::unordered_map<std::uint64_t, mpq_class> acc;
    for (const auto& [exps, c] : raw) {
      if (exps.size() != nvars) throw dimension_error("exponent vector length");
      acc[Monomial(exps).packed()] += c;
    }
    p.assign(acc);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermList& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Polynomial r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    std::unordered_map<std::uint64_t, mpq_class> acc;
    acc.reserve(a.size() * b.size());
    mpq_class prod;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
        acc[(ma * mb).packed()] += prod;
      }
    }
    r.assign(acc);
    return r;
  }

  friend Polynomial operator*(const mpq_class& c, const Polynomial& p) {
    Polynomial r(p.nvars_);
    if (sgn(c) == 0) return r;
    r.terms_ = p.terms_;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Partial derivative with respect to variable v.
  Polynomial partial(std::size_t v) const {
    if (v >= nvars_) throw dimension_error("variable index out of range");
    std::unordered_map<std::uint64_t, mpq_class> acc;
    for (const auto& [m, c] : terms_) {
      unsigned e = m.exponent(v);
      if (e == 0) continue;
      Monomial d = m;
      d.set(v, e - 1);
      acc[d.packed()] += c * e;
    }
    Polynomial r(nvars_);
    r.assign(acc);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      mpq_class mag = abs(c);
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      first = false;
      bool constant = m.degree() == 0;
      if (constant || mag != 1) os << mag.get_str();
      for (std::size_t v = 0; v < nvars_; ++v) {
        unsigned e = m.exponent(v);
        if (e == 0) continue;
        os << "x" << (v + 1);
        if (e > 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  static void check_vars(std::size_t n) {
    if (n > kMaxVars) throw Error(ErrorKind::invalid_argument, "at most 4 variables are supported");
  }
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw dimension_error("polynomial variable counts differ");
  }

  void assign(const std::unordered_map<std::uint64_t, mpq_class>& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (const auto& [key, c] : acc) {
      if (sgn(c) == 0) continue;
      Monomial m;
      for (std::size_t v = 0; v < kMaxVars; ++v)
        m.set(v, static_cast<unsigned>((key >> (16 * (kMaxVars - 1 - v))) & 0xffffu));
      terms_.emplace_back(m, c);
    }
    std::sort(terms_.begin(), terms_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same(a, b);
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.size() + b.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.emplace_back(ib->first, subtract ? mpq_class(-ib->second) : ib->second);
        ++ib;
      } else {
        mpq_class c = subtract ? mpq_class(ia->second - ib->second) : mpq_class(ia->second + ib->second);
        if (sgn(c) != 0) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  std::size_t nvars_ = 0;
  TermList terms_;
};

/// A derivation of Q[x_1..x_n] given by the images of the generators.
struct DerivationSpec {
  std::vector<Polynomial> images;

  std::size_t nvars() const { return images.size(); }

  /// sum_v c_v x^{m_v} d/dx_v style constructors are built from images directly.
  static DerivationSpec partial(std::size_t nvars, std::size_t v) {
    DerivationSpec d;
    for (std::size_t k = 0; k < nvars; ++k)
      d.images.push_back(k == v ? Polynomial::constant(nvars, 1) : Polynomial(nvars));
    return d;
  }
  static DerivationSpec zero(std::size_t nvars) {
    DerivationSpec d;
    for (std::size_t k = 0; k < nvars; ++k) d.images.emplace_back(nvars);
    return d;
  }
};

/// D(p) extended from generator images by linearity and the Leibniz rule.
inline Polynomial poly_derive(const Polynomial& p, const DerivationSpec& d) {
  if (d.nvars() != p.nvars()) throw dimension_error("derivation and polynomial variable counts differ");
  for (const auto& img : d.images)
    if (img.nvars() != p.nvars()) throw dimension_error("derivation image lives in a different ring");
  Polynomial out(p.nvars());
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    if (d.images[v].is_zero()) continue;
    Polynomial dp = p.partial(v);
    if (dp.is_zero()) continue;
    out = out + dp * d.images[v];
  }
  return out;
}

/// num/den, never reduced.
struct Fraction {
  Polynomial num;
  Polynomial den;

  Fraction() = default;
  Fraction(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Error(ErrorKind::invalid_argument, "invalid fraction: zero denominator");
    if (num.nvars() != den.nvars()) throw dimension_error("fraction numerator/denominator rings differ");
  }
  static Fraction of(const Polynomial& p) { return Fraction(p, Polynomial::constant(p.nvars(), 1)); }

  std::size_t nvars() const { return num.nvars(); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.den == b.den) return Fraction(a.num + b.num, a.den);
    return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    if (a.den == b.den) return Fraction(a.num - b.num, a.den);
    return Fraction(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) { return Fraction(a.num * b.num, a.den * b.den); }
  friend Fraction operator*(const mpq_class& c, const Fraction& a) { return Fraction(c * a.num, a.den); }

  std::string str() const { return "(" + num.str() + ")/(" + den.str() + ")"; }
};

/// True iff num(a) den(b) - num(b) den(a) vanishes.
inline bool frac_eq(const Fraction& a, const Fraction& b) {
  if (a.den.is_zero() || b.den.is_zero()) throw Error(ErrorKind::invalid_argument, "invalid fraction: zero denominator");
  if (a.num.is_zero() || b.num.is_zero()) return a.num.is_zero() && b.num.is_zero();
  return (a.num * b.den - b.num * a.den).is_zero();
}

inline bool frac_is_zero(const Fraction& a) { return a.num.is_zero(); }

}  // namespace tpa
