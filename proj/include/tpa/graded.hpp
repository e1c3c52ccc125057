#pragma once

// Integer-graded algebras evaluated lazily from a closed-form rule on basis
// pairs. Elements are finitely supported.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpa/error.hpp"
#include "tpa/scalar.hpp"

namespace tpa {

class GradedElement {
 public:
  GradedElement() = default;

  static GradedElement basis(std::int64_t i, Scalar c = Scalar(1)) {
    GradedElement e;
    if (!c.is_zero()) e.c_.emplace(i, std::move(c));
    return e;
  }

  const std::map<std::int64_t, Scalar>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(std::int64_t i) const {
    auto it = c_.find(i);
    return it == c_.end() ? Scalar(0) : it->second;
  }

  void add_term(std::int64_t i, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = c_.emplace(i, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  GradedElement& operator+=(const GradedElement& o) {
    for (const auto& [i, c] : o.c_) add_term(i, c);
    return *this;
  }
  GradedElement& operator-=(const GradedElement& o) {
    for (const auto& [i, c] : o.c_) add_term(i, -c);
    return *this;
  }
  GradedElement& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& [i, c] : c_) c *= s;
    return *this;
  }
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const Scalar& s, GradedElement a) { return a *= s; }
  friend bool operator==(const GradedElement& a, const GradedElement& b) { return a.c_ == b.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : c_) {
      if (!out.empty()) out += " + ";
      if (!c.is_one()) out += "(" + c.str() + ")*";
      out += "e" + std::to_string(i);
    }
    return out;
  }

 private:
  std::map<std::int64_t, Scalar> c_;
};

/// Rule-based product on the basis {e_i : i >= floor} (or all of Z).
class GradedAlgebra {
 public:
  using Rule = std::function<GradedElement(std::int64_t, std::int64_t)>;

  GradedAlgebra(std::string name, Rule rule, std::optional<std::int64_t> floor)
      : name_(std::move(name)), rule_(std::move(rule)), floor_(floor) {}

  /// [e_i, e_j] = (i - j) e_{i+j}; with floor -1 this is W(1).
  static GradedAlgebra witt(std::optional<std::int64_t> floor = std::nullopt) {
    return GradedAlgebra(floor ? "W(1)" : "W",
                         [](std::int64_t i, std::int64_t j) { return GradedElement::basis(i + j, Scalar(static_cast<long>(i - j))); },
                         floor);
  }

  const std::string& name() const { return name_; }
  const std::optional<std::int64_t>& floor() const { return floor_; }
  bool valid(std::int64_t i) const { return !floor_ || i >= *floor_; }

  GradedElement on_basis(std::int64_t i, std::int64_t j) const {
    if (!valid(i) || !valid(j)) throw Error(ErrorKind::invalid_argument, "basis index below the floor of " + name_);
    GradedElement out = rule_(i, j);
    for (const auto& [k, c] : out.terms())
      if (!valid(k)) throw Error(ErrorKind::invalid_argument, "rule of " + name_ + " left the index range");
    return out;
  }

  GradedElement multiply(const GradedElement& x, const GradedElement& y) const {
    GradedElement out;
    for (const auto& [i, a] : x.terms())
      for (const auto& [j, b] : y.terms()) {
        Scalar ab = a * b;
        GradedElement ij = on_basis(i, j);
        for (const auto& [k, c] : ij.terms()) out.add_term(k, ab * c);
      }
    return out;
  }

 private:
  std::string name_;
  Rule rule_;
  std::optional<std::int64_t> floor_;
};

}  // namespace tpa
