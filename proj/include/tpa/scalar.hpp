#pragma once

// Exact scalars: rationals and Gaussian rationals p + q i over GMP.

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

#include "tpa/error.hpp"

namespace tpa {

namespace detail {

inline mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw Error(ErrorKind::parse, "empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  std::size_t i = (!s.empty() && s.front() == '-') ? 1 : 0;
  bool seen_slash = false;
  bool digit_since_slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' && !seen_slash && digit_since_slash) {
      seen_slash = true;
      digit_since_slash = false;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_since_slash = true;
    } else {
      throw Error(ErrorKind::parse, "bad rational literal '" + std::string(text) + "'");
    }
  }
  if (!digit_since_slash) throw Error(ErrorKind::parse, "bad rational literal '" + std::string(text) + "'");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::parse, "bad rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline std::string rational_str(const mpq_class& q) {
  return q.get_str(10);
}

}  // namespace detail

/// An element of Q or Q(i). The imaginary part is zero for plain rationals,
/// and both parts are kept canonical (positive denominator, reduced).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar ratio(long num, long den) {
    if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
    return Scalar(mpq_class(num, den));
  }
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Accepts "p", "p/q", "i", "qi", "p+qi", "p-q/ri" with rational parts.
  static Scalar parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorKind::parse, "empty scalar literal");
    if (s.back() != 'i') return Scalar(detail::parse_rational(s));
    s.pop_back();
    // split at the last sign that is not the leading one
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if (s[k] == '+' || s[k] == '-') {
        split = k;
        break;
      }
    }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    mpq_class re = re_part.empty() ? mpq_class(0) : detail::parse_rational(re_part);
    return Scalar(re, detail::parse_rational(im_part));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_rational() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar norm() const { return Scalar(re_ * re_ + im_ * im_); }

  Scalar inverse() const {
    if (is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero");
    if (is_rational()) return Scalar(1 / re_);
    mpq_class n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
  }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero");
    if (is_rational() && o.is_rational()) {
      re_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "p/q" for rationals; "a+bi" style otherwise (parseable by `parse`).
  std::string str() const {
    if (is_rational()) return detail::rational_str(re_);
    std::string out = sgn(re_) == 0 ? "" : detail::rational_str(re_);
    std::string im = detail::rational_str(im_);
    if (!out.empty() && sgn(im_) > 0) out += "+";
    return out + im + "i";
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Membership in {a + bi : a > 0} U {bi : b >= 0}.
inline bool in_right_half_plane(const Scalar& s) {
  return sgn(s.re()) > 0 || (sgn(s.re()) == 0 && sgn(s.im()) >= 0);
}

}  // namespace tpa
