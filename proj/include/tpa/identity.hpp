#pragma once

// Polynomial identities as data: a small term language over operation slots,
// a catalog of defects, and a checker that evaluates a defect on every basis
// tuple.
//
// Every catalog defect is multilinear in its arguments once the slots are
// bound, and scalars live in Q or Q(i) (characteristic 0), so vanishing on
// all basis tuples is equivalent to vanishing identically.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/error.hpp"
#include "tpa/graded.hpp"
#include "tpa/scalar.hpp"

namespace tpa {

enum Slot : unsigned {
  kProduct = 1u << 0,
  kBracket = 1u << 1,
  kUnit = 1u << 2,
  kMap = 1u << 3,
  kFixed = 1u << 4,
  kNAry = 1u << 5,
};

inline std::vector<std::string> slot_names(unsigned slots) {
  std::vector<std::string> out;
  if (slots & kProduct) out.emplace_back("product");
  if (slots & kBracket) out.emplace_back("bracket");
  if (slots & kUnit) out.emplace_back("unit");
  if (slots & kMap) out.emplace_back("map");
  if (slots & kFixed) out.emplace_back("fixed");
  if (slots & kNAry) out.emplace_back("nary");
  return out;
}

struct TermNode {
  enum class Kind { arg, unit, fixed, product, bracket, map, nary, sum };
  Kind kind = Kind::arg;
  std::size_t index = 0;
  std::vector<std::shared_ptr<const TermNode>> kids;
  std::vector<Scalar> coefs;  // sum only
};

/// Immutable expression over the argument variables and operation slots.
class Term {
 public:
  using Node = TermNode;
  using Kind = TermNode::Kind;

  static Term arg(std::size_t i) { return leaf(Kind::arg, i); }
  static Term unit() { return leaf(Kind::unit, 0); }
  static Term fixed() { return leaf(Kind::fixed, 0); }

  friend Term prod(const Term& a, const Term& b) { return node(Kind::product, {a, b}); }
  friend Term br(const Term& a, const Term& b) { return node(Kind::bracket, {a, b}); }
  friend Term apply_map(const Term& a) { return node(Kind::map, {a}); }
  friend Term nary(const std::vector<Term>& args) { return node(Kind::nary, args); }

  friend Term operator+(const Term& a, const Term& b) { return sum(a, Scalar(1), b, Scalar(1)); }
  friend Term operator-(const Term& a, const Term& b) { return sum(a, Scalar(1), b, Scalar(-1)); }
  friend Term operator*(const Scalar& s, const Term& a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::sum;
    if (a.n_->kind == Kind::sum) {
      n->kids = a.n_->kids;
      for (const auto& c : a.n_->coefs) n->coefs.push_back(s * c);
    } else {
      n->kids = {a.n_};
      n->coefs = {s};
    }
    return Term(n);
  }
  Term operator-() const { return Scalar(-1) * *this; }

  const Node& root() const { return *n_; }

  /// Slots referenced anywhere in the expression.
  unsigned slots() const { return collect(*n_); }

  std::string str(const std::vector<std::string>& names) const { return render(*n_, names, false); }

 private:
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  static Term leaf(Kind k, std::size_t i) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->index = i;
    return Term(n);
  }
  static Term node(Kind k, const std::vector<Term>& kids) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    for (const auto& t : kids) n->kids.push_back(t.n_);
    return Term(n);
  }
  static Term sum(const Term& a, const Scalar& ca, const Term& b, const Scalar& cb) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::sum;
    for (const auto& [t, c] : {std::pair<const Term*, Scalar>{&a, ca}, {&b, cb}}) {
      if (t->n_->kind == Kind::sum) {
        for (std::size_t i = 0; i < t->n_->kids.size(); ++i) {
          n->kids.push_back(t->n_->kids[i]);
          n->coefs.push_back(c * t->n_->coefs[i]);
        }
      } else {
        n->kids.push_back(t->n_);
        n->coefs.push_back(c);
      }
    }
    return Term(n);
  }

  static unsigned collect(const Node& n) {
    unsigned s = 0;
    switch (n.kind) {
      case Kind::unit: s = kUnit; break;
      case Kind::fixed: s = kFixed; break;
      case Kind::product: s = kProduct; break;
      case Kind::bracket: s = kBracket; break;
      case Kind::map: s = kMap; break;
      case Kind::nary: s = kNAry; break;
      default: break;
    }
    for (const auto& k : n.kids) s |= collect(*k);
    return s;
  }

  static std::string render(const Node& n, const std::vector<std::string>& names, bool in_product) {
    switch (n.kind) {
      case Kind::arg: return n.index < names.size() ? names[n.index] : "x" + std::to_string(n.index);
      case Kind::unit: return "1";
      case Kind::fixed: return "h";
      case Kind::map: return "D(" + render(*n.kids[0], names, false) + ")";
      case Kind::bracket: return "[" + render(*n.kids[0], names, false) + "," + render(*n.kids[1], names, false) + "]";
      case Kind::nary: {
        std::string s = "[";
        for (std::size_t i = 0; i < n.kids.size(); ++i) s += (i ? "," : "") + render(*n.kids[i], names, false);
        return s + "]";
      }
      case Kind::product: {
        std::string s = render(*n.kids[0], names, true) + "·" + render(*n.kids[1], names, true);
        return in_product ? "(" + s + ")" : s;
      }
      case Kind::sum: {
        std::string s;
        for (std::size_t i = 0; i < n.kids.size(); ++i) {
          const Scalar& c = n.coefs[i];
          bool neg = c.is_rational() && sgn(c.re()) < 0;
          Scalar mag = neg ? -c : c;
          if (i == 0) s += neg ? "-" : "";
          else s += neg ? " - " : " + ";
          if (!mag.is_one()) s += mag.str() + "*";
          s += render(*n.kids[i], names, !mag.is_one());
        }
        return in_product ? "(" + s + ")" : s;
      }
    }
    return "?";
  }

  std::shared_ptr<const Node> n_;
};

struct IdentitySpec {
  std::string id;
  std::size_t arity = 0;
  unsigned slots = 0;
  Term defect = Term::arg(0);
  std::vector<std::string> arg_names;
  std::string source;
  std::string note;

  std::string formula() const { return defect.str(arg_names); }
};

namespace catalog {

namespace detail {

inline IdentitySpec make(std::string id, std::vector<std::string> names, Term defect, std::string source,
                         std::string note = {}) {
  IdentitySpec s;
  s.id = std::move(id);
  s.arity = names.size();
  s.arg_names = std::move(names);
  s.slots = defect.slots();
  s.defect = std::move(defect);
  s.source = std::move(source);
  s.note = std::move(note);
  return s;
}

inline std::vector<std::string> indexed(const std::string& stem, std::size_t n, std::size_t first = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + first));
  return out;
}

}  // namespace detail

inline const std::vector<std::string>& fixed_ids() {
  static const std::vector<std::string> ids = {
      "comm", "assoc", "anticomm", "jacobi", "tp-compat", "poisson-leibniz", "gen-poisson",
      "jordan-bracket-unital", "jordan-bracket-1", "jordan-bracket-2", "jordan-bracket-3", "gd", "f-manifold",
      "quasi-poisson", "hom-lie", "farkas-relation", "quasi-auto", "half-derivation", "derivation-product",
      "derivation-bracket"};
  return ids;
}

inline const std::vector<std::string>& nary_ids() {
  static const std::vector<std::string> ids = {"tp-nlie", "poisson-nlie", "nlie-fundamental", "nlie-derivation"};
  return ids;
}

inline bool is_nary(std::string_view id) {
  for (const auto& s : nary_ids())
    if (s == id) return true;
  return false;
}

/// Catalog entry. `n` is the bracket arity for the n-ary entries and ignored
/// otherwise.
inline IdentitySpec get(std::string_view id, std::size_t n = 2) {
  using detail::make;
  const Term x = Term::arg(0), y = Term::arg(1), z = Term::arg(2), t = Term::arg(3);
  const Term one = Term::unit();
  const Scalar half = Scalar::ratio(1, 2);
  auto D = [](const Term& a) { return apply_map(a); };

  if (id == "comm") return make("comm", {"x", "y"}, prod(x, y) - prod(y, x), "commutativity of the product");
  if (id == "assoc")
    return make("assoc", {"x", "y", "z"}, prod(prod(x, y), z) - prod(x, prod(y, z)), "associativity of the product");
  if (id == "anticomm")
    return make("anticomm", {"x", "y"}, br(x, y) + br(y, x), "anticommutativity of the bracket (linearized)");
  if (id == "jacobi")
    return make("jacobi", {"x", "y", "z"}, br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y), "Jacobi identity");
  if (id == "tp-compat")
    return make("tp-compat", {"x", "y", "z"}, Scalar(2) * prod(z, br(x, y)) - br(prod(z, x), y) - br(x, prod(z, y)),
                "transposed Poisson compatibility 2z·[x,y] = [z·x,y] + [x,z·y]");
  if (id == "poisson-leibniz")
    return make("poisson-leibniz", {"x", "y", "z"}, br(prod(x, y), z) - prod(x, br(y, z)) - prod(br(x, z), y),
                "Poisson (Leibniz) compatibility");
  if (id == "gen-poisson")
    return make("gen-poisson", {"x", "y", "z"},
                br(x, prod(y, z)) - prod(br(x, y), z) - prod(y, br(x, z)) + prod(prod(br(x, one), y), z),
                "generalized Poisson (contact) bracket");
  if (id == "jordan-bracket-unital")
    return make("jordan-bracket-unital", {"x", "y", "z"},
                br(x, br(y, z)) - br(br(x, y), z) - br(y, br(x, z)) - prod(br(x, one), br(y, z)) -
                    prod(br(y, one), br(z, x)) - prod(br(z, one), br(x, y)),
                "Jordan bracket identity over a unital algebra");
  if (id == "jordan-bracket-1")
    return make("jordan-bracket-1", {"x", "y", "z", "t"},
                br(prod(br(x, y), z), t) + br(prod(br(y, t), z), x) + br(prod(br(t, x), z), y) -
                    prod(br(x, y), br(z, t)) - prod(br(y, t), br(z, x)) - prod(br(t, x), br(z, y)),
                "Jordan bracket identities without unit, first relation");
  if (id == "jordan-bracket-2")
    return make("jordan-bracket-2", {"x", "y", "z", "t"},
                prod(br(prod(y, t), z), x) + prod(prod(br(x, z), y), t) - prod(br(prod(t, x), z), y) -
                    prod(prod(br(y, z), t), x),
                "Jordan bracket identities without unit, second relation");
  if (id == "jordan-bracket-3")
    return make("jordan-bracket-3", {"x", "y", "z", "t"},
                br(prod(t, x), prod(y, z)) + br(prod(t, y), prod(x, z)) + br(prod(prod(x, y), z), t) -
                    prod(br(prod(t, y), z), x) - prod(br(prod(t, x), z), y) - prod(prod(x, y), br(z, t)),
                "Jordan bracket identities without unit, third relation");
  if (id == "gd")
    return make("gd", {"x", "y", "z"},
                br(x, prod(y, z)) - br(z, prod(y, x)) + prod(br(y, x), z) - prod(br(y, z), x) - prod(y, br(x, z)),
                "Gelfand-Dorfman compatibility");
  if (id == "f-manifold")
    return make("f-manifold", {"x", "y", "z", "t"},
                br(prod(x, y), prod(z, t)) - prod(br(prod(x, y), z), t) - prod(br(prod(x, y), t), z) -
                    prod(x, br(y, prod(z, t))) - prod(y, br(x, prod(z, t))) + prod(prod(x, z), br(y, t)) +
                    prod(prod(y, z), br(x, t)) + prod(prod(y, t), br(x, z)) + prod(prod(x, t), br(y, z)),
                "F-manifold algebra identity");
  if (id == "quasi-poisson") {
    const Term a = x, b = y, c = z;
    return make("quasi-poisson", {"a", "b", "c"},
                prod(a, D(br(b, c)) + br(b, c)) - br(prod(a, D(b) + b), c) - br(b, prod(a, D(c) + c)) -
                    prod(br(a, b), D(c) + c) + prod(D(b) + b, br(a, c)),
                "quasi-Poisson identity with auxiliary derivation D");
  }
  if (id == "hom-lie")
    return make("hom-lie", {"x", "y", "z"}, br(D(x), br(y, z)) + br(D(y), br(z, x)) + br(D(z), br(x, y)),
                "Hom-Lie condition for the map D",
                "cyclic form [D(x),[y,z]] + [D(y),[z,x]] + [D(z),[x,y]]");
  if (id == "farkas-relation")
    return make("farkas-relation", {"x", "y", "z"},
                prod(prod(D(x), y), z) - half * (br(prod(x, y), z) + br(prod(x, z), y)),
                "D(x)·y·z = (1/2)([x·y,z] + [x·z,y]) for D(x) = [x,1]",
                "holds with a plus sign when D(x) = [x,1]");
  if (id == "quasi-auto")
    return make("quasi-auto", {"x", "y"}, prod(Term::fixed(), prod(Term::fixed(), br(x, y))) -
                                              br(prod(Term::fixed(), x), prod(Term::fixed(), y)),
                "h·(h·[x,y]) = [h·x,h·y] for a fixed element h",
                "quadratic in h: h is a fixed slot, only x and y are enumerated");
  if (id == "half-derivation")
    return make("half-derivation", {"x", "y"}, D(br(x, y)) - half * (br(D(x), y) + br(x, D(y))),
                "1/2-derivation law for D");
  if (id == "derivation-product")
    return make("derivation-product", {"x", "y"}, D(prod(x, y)) - prod(D(x), y) - prod(x, D(y)),
                "Leibniz rule of D for the product");
  if (id == "derivation-bracket")
    return make("derivation-bracket", {"x", "y"}, D(br(x, y)) - br(D(x), y) - br(x, D(y)),
                "Leibniz rule of D for the bracket");

  if (n < 2) throw Error(ErrorKind::invalid_argument, "n-ary identities need arity >= 2");
  if (id == "tp-nlie") {
    // args: z, x1..xn
    std::vector<std::string> names = {"z"};
    for (const auto& s : detail::indexed("x", n)) names.push_back(s);
    std::vector<Term> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(Term::arg(i + 1));
    const Term zz = Term::arg(0);
    Term defect = Scalar(static_cast<long>(n)) * prod(zz, nary(xs));
    for (std::size_t i = 0; i < n; ++i) {
      auto ys = xs;
      ys[i] = prod(zz, xs[i]);
      defect = defect - nary(ys);
    }
    return make("tp-nlie", names, defect, "transposed Poisson n-Lie compatibility n z·[x1..xn] = sum [..,z·xi,..]");
  }
  if (id == "poisson-nlie") {
    std::vector<std::string> names = {"x", "y"};
    for (const auto& s : detail::indexed("z", n - 1, 2)) names.push_back(s);
    std::vector<Term> rest;
    for (std::size_t i = 0; i < n - 1; ++i) rest.push_back(Term::arg(i + 2));
    auto with_first = [&](const Term& f) {
      std::vector<Term> v = {f};
      v.insert(v.end(), rest.begin(), rest.end());
      return nary(v);
    };
    return make("poisson-nlie", names,
                with_first(prod(x, y)) - prod(x, with_first(y)) - prod(with_first(x), y),
                "Poisson n-Lie compatibility [x·y,z2..zn] = x·[y,z2..zn] + [x,z2..zn]·y");
  }
  if (id == "nlie-fundamental") {
    auto names = detail::indexed("x", n - 1);
    for (const auto& s : detail::indexed("y", n)) names.push_back(s);
    std::vector<Term> xs, ys;
    for (std::size_t i = 0; i < n - 1; ++i) xs.push_back(Term::arg(i));
    for (std::size_t i = 0; i < n; ++i) ys.push_back(Term::arg(n - 1 + i));
    auto inner = [&](const Term& last) {
      auto v = xs;
      v.push_back(last);
      return nary(v);
    };
    Term defect = inner(nary(ys));
    for (std::size_t i = 0; i < n; ++i) {
      auto v = ys;
      v[i] = inner(ys[i]);
      defect = defect - nary(v);
    }
    return make("nlie-fundamental", names, defect, "fundamental (Filippov) identity of n-Lie algebras");
  }
  if (id == "nlie-derivation") {
    auto names = detail::indexed("x", n);
    std::vector<Term> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(Term::arg(i));
    Term defect = D(nary(xs));
    for (std::size_t i = 0; i < n; ++i) {
      auto v = xs;
      v[i] = D(xs[i]);
      defect = defect - nary(v);
    }
    return make("nlie-derivation", names, defect, "Leibniz rule of D for the n-ary bracket");
  }
  throw Error(ErrorKind::invalid_argument, "unknown identity '" + std::string(id) + "'");
}

}  // namespace catalog

/// Operation slots bound to concrete callables over an element type.
template <class Elem>
struct Operations {
  std::function<Elem(const Elem&, const Elem&)> product;
  std::function<Elem(const Elem&, const Elem&)> bracket;
  std::function<Elem(const Elem&)> map;
  std::function<Elem(std::span<const Elem>)> nary;
  std::optional<Elem> unit;
  std::optional<Elem> fixed;

  unsigned bound() const {
    unsigned s = 0;
    if (product) s |= kProduct;
    if (bracket) s |= kBracket;
    if (map) s |= kMap;
    if (nary) s |= kNAry;
    if (unit) s |= kUnit;
    if (fixed) s |= kFixed;
    return s;
  }
};

template <class Elem>
Elem evaluate(const TermNode& n, std::span<const Elem> args, const Operations<Elem>& ops) {
  using Kind = TermNode::Kind;
  switch (n.kind) {
    case Kind::arg: return args[n.index];
    case Kind::unit: return *ops.unit;
    case Kind::fixed: return *ops.fixed;
    case Kind::product: return ops.product(evaluate(*n.kids[0], args, ops), evaluate(*n.kids[1], args, ops));
    case Kind::bracket: return ops.bracket(evaluate(*n.kids[0], args, ops), evaluate(*n.kids[1], args, ops));
    case Kind::map: return ops.map(evaluate(*n.kids[0], args, ops));
    case Kind::nary: {
      std::vector<Elem> vals;
      vals.reserve(n.kids.size());
      for (const auto& k : n.kids) vals.push_back(evaluate(*k, args, ops));
      return ops.nary(std::span<const Elem>(vals));
    }
    case Kind::sum: {
      Elem acc = n.coefs[0] * evaluate(*n.kids[0], args, ops);
      for (std::size_t i = 1; i < n.kids.size(); ++i) acc += n.coefs[i] * evaluate(*n.kids[i], args, ops);
      return acc;
    }
  }
  throw Error(ErrorKind::invalid_argument, "malformed term");
}

template <class Elem>
Elem evaluate_defect(const IdentitySpec& spec, std::span<const Elem> args, const Operations<Elem>& ops) {
  if (args.size() != spec.arity) throw dimension_error("identity arity");
  return evaluate(spec.defect.root(), args, ops);
}

struct Witness {
  std::vector<std::size_t> tuple;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, Scalar>> defect;

  std::string defect_str() const {
    if (defect.empty()) return "0";
    std::string s;
    for (const auto& [l, c] : defect) {
      if (!s.empty()) s += " + ";
      s += (c.is_one() ? "" : "(" + c.str() + ")*") + l;
    }
    return s;
  }
};

struct CheckReport {
  std::string id;
  bool holds = true;
  std::optional<Witness> witness;
  std::uint64_t checked = 0;
  std::uint64_t total = 0;
  std::string note;

  std::string verdict() const { return holds ? "holds" : "fails"; }
  std::string summary() const {
    std::string s = id + ": " + verdict() + " (" + std::to_string(checked) + "/" + std::to_string(total) + " tuples)";
    if (witness) {
      s += " witness (";
      for (std::size_t i = 0; i < witness->labels.size(); ++i) s += (i ? "," : "") + witness->labels[i];
      s += ") defect " + witness->defect_str();
    }
    return s;
  }
};

inline std::vector<std::pair<std::string, Scalar>> describe(const Element& e, const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, Scalar>> out;
  for (const auto& [k, c] : e.sparse()) out.emplace_back(labels[k], c);
  return out;
}

inline std::vector<std::pair<std::string, Scalar>> describe(const GradedElement& e, const std::vector<std::string>&) {
  std::vector<std::pair<std::string, Scalar>> out;
  for (const auto& [k, c] : e.terms()) out.emplace_back("e" + std::to_string(k), c);
  return out;
}

/// Evaluates `spec` on every tuple of `basis` in lexicographic order and stops
/// at the first nonzero defect.
template <class Elem>
CheckReport check_on_basis(const IdentitySpec& spec, const Operations<Elem>& ops, const std::vector<Elem>& basis,
                           const std::vector<std::string>& labels) {
  unsigned missing = spec.slots & ~ops.bound();
  if (missing) {
    std::string names;
    for (const auto& s : slot_names(missing)) names += (names.empty() ? "" : ", ") + s;
    throw Error(ErrorKind::invalid_argument, "identity '" + spec.id + "' needs unbound slot(s): " + names);
  }
  CheckReport rep;
  rep.id = spec.id;
  rep.note = spec.note;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < spec.arity; ++i) total *= basis.size();
  rep.total = basis.empty() ? 0 : total;
  if (basis.empty()) return rep;
  std::vector<std::size_t> idx(spec.arity, 0);
  std::vector<Elem> args(spec.arity, basis[0]);
  while (true) {
    for (std::size_t s = 0; s < spec.arity; ++s) args[s] = basis[idx[s]];
    Elem d = evaluate_defect(spec, std::span<const Elem>(args), ops);
    ++rep.checked;
    if (!d.is_zero()) {
      rep.holds = false;
      Witness w;
      w.tuple = idx;
      for (std::size_t i : idx) w.labels.push_back(labels[i]);
      w.defect = describe(d, labels);
      rep.witness = std::move(w);
      return rep;
    }
    std::size_t s = spec.arity;
    while (s > 0) {
      --s;
      if (++idx[s] < basis.size()) break;
      idx[s] = 0;
      if (s == 0) return rep;
    }
    if (spec.arity == 0) return rep;
  }
}

/// Slot bindings for finite-dimensional algebras sharing one basis.
struct Bindings {
  const Algebra* product = nullptr;
  const Algebra* bracket = nullptr;
  const LinearMap* map = nullptr;
  const NAryAlgebra* nary = nullptr;
  std::optional<Element> unit;   // defaults to the product's unit
  std::optional<Element> fixed;
};

inline Operations<Element> operations(const Bindings& b) {
  Operations<Element> ops;
  if (b.product) ops.product = [a = b.product](const Element& x, const Element& y) { return a->multiply(x, y); };
  if (b.bracket) ops.bracket = [a = b.bracket](const Element& x, const Element& y) { return a->multiply(x, y); };
  if (b.map) ops.map = [m = b.map](const Element& x) { return m->apply(x); };
  if (b.nary) ops.nary = [a = b.nary](std::span<const Element> xs) { return a->apply(xs); };
  if (b.unit) ops.unit = b.unit;
  else if (b.product && b.product->unit()) ops.unit = b.product->unit();
  if (b.fixed) ops.fixed = b.fixed;
  return ops;
}

inline std::size_t bound_dimension(const Bindings& b, std::vector<std::string>* labels) {
  std::optional<std::size_t> dim;
  auto take = [&](std::size_t d, const std::vector<std::string>* l, const char* what) {
    if (dim && *dim != d) throw dimension_error(std::string("slot '") + what + "' has a different dimension");
    if (!dim && labels && l) *labels = *l;
    dim = d;
  };
  if (b.product) take(b.product->dim(), &b.product->labels(), "product");
  if (b.bracket) take(b.bracket->dim(), &b.bracket->labels(), "bracket");
  if (b.nary) take(b.nary->dim(), &b.nary->labels(), "nary");
  if (b.map) take(b.map->dim(), nullptr, "map");
  if (b.unit) take(b.unit->size(), nullptr, "unit");
  if (b.fixed) take(b.fixed->size(), nullptr, "fixed");
  if (!dim) throw Error(ErrorKind::invalid_argument, "no slots bound");
  if (labels && labels->empty()) *labels = default_labels(*dim);
  return *dim;
}

inline CheckReport check_identity(const IdentitySpec& spec, const Bindings& b) {
  std::vector<std::string> labels;
  std::size_t dim = bound_dimension(b, &labels);
  if ((spec.slots & kUnit) && !b.unit && !(b.product && b.product->unit()))
    throw Error(ErrorKind::invalid_argument, "identity '" + spec.id + "' requires a unit but none is present");
  std::vector<Element> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(Element::basis(dim, i));
  return check_on_basis(spec, operations(b), basis, labels);
}

/// Looks the identity up in the catalog; n-ary entries take their arity from
/// the bound n-ary bracket.
inline CheckReport check_identity(std::string_view id, const Bindings& b) {
  std::size_t n = 2;
  if (catalog::is_nary(id)) {
    if (!b.nary) throw Error(ErrorKind::invalid_argument, "identity '" + std::string(id) + "' needs an n-ary bracket");
    n = b.nary->arity();
  }
  return check_identity(catalog::get(id, n), b);
}

/// Graded (infinite-dimensional) variant: tuples range over e_lo..e_hi.
inline CheckReport check_identity_graded(std::string_view id, const GradedAlgebra* product,
                                         const GradedAlgebra* bracket, std::int64_t lo, std::int64_t hi) {
  IdentitySpec spec = catalog::get(id);
  Operations<GradedElement> ops;
  if (product)
    ops.product = [product](const GradedElement& x, const GradedElement& y) { return product->multiply(x, y); };
  if (bracket)
    ops.bracket = [bracket](const GradedElement& x, const GradedElement& y) { return bracket->multiply(x, y); };
  std::vector<GradedElement> basis;
  std::vector<std::string> labels;
  for (std::int64_t i = lo; i <= hi; ++i) {
    basis.push_back(GradedElement::basis(i));
    labels.push_back("e" + std::to_string(i));
  }
  return check_on_basis(spec, ops, basis, labels);
}

/// Super-commutativity x∘y = (-1)^{|x||y|} y∘x on basis pairs, then the
/// operator form of the super-Jordan identity
///   sum over cyclic (x,y,z) of (-1)^{|x||z|} [L_{x∘y}, L_z]_s
/// applied to every basis vector w.
inline CheckReport check_jordan_super(const SuperAlgebra& s) {
  const Algebra& a = s.algebra();
  const std::size_t n = s.dim();
  const auto& labels = a.labels();
  CheckReport rep;
  rep.id = "jordan-super";
  rep.total = static_cast<std::uint64_t>(n) * n + static_cast<std::uint64_t>(n) * n * n * n;
  auto sign = [](int p) { return p % 2 == 0 ? Scalar(1) : Scalar(-1); };

  auto fail = [&](std::vector<std::size_t> tuple, const Element& d) {
    rep.holds = false;
    Witness w;
    w.tuple = std::move(tuple);
    for (std::size_t i : w.tuple) w.labels.push_back(labels[i]);
    w.defect = describe(d, labels);
    rep.witness = std::move(w);
    return rep;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++rep.checked;
      Element d = a.multiply(a.basis(i), a.basis(j)) -
                  sign(s.parity(i) * s.parity(j)) * a.multiply(a.basis(j), a.basis(i));
      if (!d.is_zero()) {
        rep.note = "graded commutativity";
        return fail({i, j}, d);
      }
    }

  // [L_A, L_B]_s w = A(Bw) - (-1)^{|A||B|} B(Aw)
  auto supercomm = [&](const Element& A, int pa, const Element& B, int pb, const Element& w) {
    return a.multiply(A, a.multiply(B, w)) - sign(pa * pb) * a.multiply(B, a.multiply(A, w));
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const int px = s.parity(x), py = s.parity(y), pz = s.parity(z);
        Element xy = a.multiply(a.basis(x), a.basis(y));
        Element yz = a.multiply(a.basis(y), a.basis(z));
        Element zx = a.multiply(a.basis(z), a.basis(x));
        for (std::size_t w = 0; w < n; ++w) {
          ++rep.checked;
          Element ew = a.basis(w);
          Element d = sign(px * pz) * supercomm(xy, px + py, a.basis(z), pz, ew) +
                      sign(py * px) * supercomm(yz, py + pz, a.basis(x), px, ew) +
                      sign(pz * py) * supercomm(zx, pz + px, a.basis(y), py, ew);
          if (!d.is_zero()) {
            rep.note = "super-Jordan identity";
            return fail({x, y, z, w}, d);
          }
        }
      }
  return rep;
}

}  // namespace tpa
