#pragma once

// JSON encodings of scalars, polynomials, algebras, maps, check reports and
// solution spaces. Object keys are emitted in sorted order, so equal values
// serialize to identical bytes.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tpa/algebra.hpp"
#include "tpa/error.hpp"
#include "tpa/identity.hpp"
#include "tpa/polynomial.hpp"
#include "tpa/scalar.hpp"
#include "tpa/solvers.hpp"
#include "tpa/tp_field.hpp"

namespace tpa::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json to_json(const Scalar& s) {
  if (s.is_rational()) return s.re().get_str();
  return json{{"re", s.re().get_str()}, {"im", s.im().get_str()}};
}

inline Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_object() && j.contains("re") && j.contains("im"))
    return Scalar(scalar_from_json(j.at("re")).re(), scalar_from_json(j.at("im")).re());
  throw Error(ErrorKind::parse, "expected a rational string, integer or {re, im} object");
}

inline json to_json(const SparseVec& v) {
  json out = json::array();
  for (const auto& [k, c] : v) out.push_back(json::array({k, to_json(c)}));
  return out;
}

inline SparseVec sparse_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "expected a list of [index, coefficient] pairs");
  SparseVec v;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::parse, "expected [index, coefficient]");
    auto k = e.at(0).get<std::size_t>();
    if (k >= dim) throw Error(ErrorKind::parse, "coefficient index out of range");
    v.emplace_back(k, scalar_from_json(e.at(1)));
  }
  return make_sparse(std::move(v));
}

inline json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (std::size_t v = 0; v < p.nvars(); ++v) exps.push_back(m.exponent(v));
    out.push_back(json::array({exps, c.get_str()}));
  }
  return out;
}

inline Polynomial polynomial_from_json(const json& j, std::size_t nvars) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "polynomial must be a list of [exponents, coefficient]");
  std::vector<std::pair<std::vector<unsigned>, mpq_class>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw Error(ErrorKind::parse, "expected [exponents, coefficient]");
    auto exps = t.at(0).get<std::vector<unsigned>>();
    Scalar c = scalar_from_json(t.at(1));
    if (!c.is_rational()) throw Error(ErrorKind::parse, "polynomial coefficients must be rational");
    terms.emplace_back(std::move(exps), c.re());
  }
  return Polynomial::from_terms(nvars, terms);
}

/// Structure constants of one product of arity >= 2.
struct Table {
  std::size_t arity = 2;
  std::vector<SparseVec> entries;
};

/// Contents of an algebra file: a basis and one or more named tables.
struct AlgebraFile {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::map<std::string, Table> products;
  std::optional<Element> unit;
  std::optional<std::vector<int>> parity;
  std::optional<json> provenance;

  bool has(const std::string& name) const { return products.count(name) > 0; }

  /// The unit belongs to the table named "product", or to the only table.
  bool unit_applies_to(const std::string& name) const {
    return unit && (name == "product" || products.size() == 1);
  }

  Algebra binary(const std::string& name) const {
    auto it = products.find(name);
    if (it == products.end()) throw Error(ErrorKind::invalid_argument, "file has no product named '" + name + "'");
    if (it->second.arity != 2) throw Error(ErrorKind::invalid_argument, "product '" + name + "' is not binary");
    return Algebra(dim, basis, it->second.entries, unit_applies_to(name) ? unit : std::nullopt);
  }

  NAryAlgebra nary(const std::string& name) const {
    auto it = products.find(name);
    if (it == products.end()) throw Error(ErrorKind::invalid_argument, "file has no product named '" + name + "'");
    return NAryAlgebra(dim, it->second.arity, basis, it->second.entries);
  }

  void add(const std::string& name, const Algebra& a) {
    adopt(a.dim(), a.labels());
    products[name] = Table{2, a.table()};
    if (a.unit()) unit = a.unit();
  }
  void add(const std::string& name, const NAryAlgebra& a) {
    adopt(a.dim(), a.labels());
    products[name] = Table{a.arity(), a.table()};
  }

 private:
  void adopt(std::size_t d, const std::vector<std::string>& labels) {
    if (products.empty() && basis.empty()) {
      dim = d;
      basis = labels;
    } else if (d != dim) {
      throw dimension_error("tables in one file must share a basis");
    }
  }
};

inline json to_json(const AlgebraFile& f) {
  json products = json::object();
  for (const auto& [name, t] : f.products) {
    json rows = json::array();
    std::vector<std::size_t> idx(t.arity);
    for (std::size_t flat = 0; flat < t.entries.size(); ++flat) {
      if (t.entries[flat].empty()) continue;
      std::size_t rem = flat;
      for (std::size_t s = t.arity; s-- > 0;) {
        idx[s] = rem % f.dim;
        rem /= f.dim;
      }
      json row = json::array();
      for (std::size_t i : idx) row.push_back(i);
      row.push_back(to_json(t.entries[flat]));
      rows.push_back(std::move(row));
    }
    products[name] = std::move(rows);
  }
  json out{{"dim", f.dim}, {"basis", f.basis}, {"products", products}, {"unital", f.unit.has_value()}};
  if (f.unit) {
    json u = json::array();
    for (const auto& c : f.unit->coords()) u.push_back(to_json(c));
    out["unit"] = u;
  }
  json arities = json::object();
  for (const auto& [name, t] : f.products)
    if (t.arity != 2) arities[name] = t.arity;
  if (!arities.empty()) out["arities"] = arities;
  if (f.parity) out["parity"] = *f.parity;
  if (f.provenance) out["provenance"] = *f.provenance;
  return out;
}

inline AlgebraFile algebra_file_from_json(const json& j) {
  try {
    AlgebraFile f;
    f.dim = j.at("dim").get<std::size_t>();
    if (j.contains("basis")) f.basis = j.at("basis").get<std::vector<std::string>>();
    else f.basis = default_labels(f.dim);
    if (f.basis.size() != f.dim) throw Error(ErrorKind::parse, "basis length does not match dim");
    for (const auto& [name, rows] : j.at("products").items()) {
      Table t;
      t.arity = 0;
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() < 3) throw Error(ErrorKind::parse, "table rows are [i, j, ..., coefficients]");
        std::size_t arity = row.size() - 1;
        if (t.arity == 0) {
          t.arity = arity;
          std::size_t cells = 1;
          for (std::size_t s = 0; s < arity; ++s) cells *= f.dim;
          t.entries.assign(cells, {});
        } else if (arity != t.arity) {
          throw Error(ErrorKind::parse, "rows of '" + name + "' have different arities");
        }
        std::size_t flat = 0;
        for (std::size_t s = 0; s < arity; ++s) {
          auto i = row.at(s).get<std::size_t>();
          if (i >= f.dim) throw Error(ErrorKind::invalid_argument, "index out of range in '" + name + "'");
          flat = flat * f.dim + i;
        }
        SparseVec v = t.entries[flat];
        for (auto& e : sparse_from_json(row.at(arity), f.dim)) v.push_back(std::move(e));
        t.entries[flat] = make_sparse(std::move(v));
      }
      if (t.arity == 0) {
        std::size_t arity = 2;
        if (j.contains("arities") && j.at("arities").contains(name)) arity = j.at("arities").at(name).get<std::size_t>();
        t.arity = arity;
        std::size_t cells = 1;
        for (std::size_t s = 0; s < arity; ++s) cells *= f.dim;
        t.entries.assign(cells, {});
      }
      f.products[name] = std::move(t);
    }
    bool unital = j.value("unital", false);
    if (unital) {
      const auto& u = j.at("unit");
      if (!u.is_array() || u.size() != f.dim) throw Error(ErrorKind::parse, "unit must list dim coordinates");
      Element e(f.dim);
      for (std::size_t i = 0; i < f.dim; ++i) e[i] = scalar_from_json(u.at(i));
      f.unit = e;
    }
    if (j.contains("parity")) f.parity = j.at("parity").get<std::vector<int>>();
    if (j.contains("provenance")) f.provenance = j.at("provenance");
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed algebra file: ") + e.what());
  }
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write '" + path + "'");
  out << text;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline AlgebraFile load_algebra(const std::string& path) { return algebra_file_from_json(parse_text(read_file(path))); }

inline json to_json(const LinearMap& f, const std::vector<std::string>& labels = {}) {
  json cols = json::array();
  for (std::size_t j = 0; j < f.dim(); ++j) {
    SparseVec v = f.image(j).sparse();
    if (!v.empty()) cols.push_back(json::array({j, to_json(v)}));
  }
  json out{{"kind", "linear-map"}, {"dim", f.dim()}, {"columns", cols}};
  if (!labels.empty()) out["basis"] = labels;
  return out;
}

inline LinearMap linear_map_from_json(const json& j) {
  try {
    auto dim = j.at("dim").get<std::size_t>();
    LinearMap f(dim);
    for (const auto& col : j.at("columns")) {
      auto c = col.at(0).get<std::size_t>();
      if (c >= dim) throw Error(ErrorKind::invalid_argument, "column index out of range");
      f.set_image(c, Element::from_sparse(dim, sparse_from_json(col.at(1), dim)));
    }
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed linear map: ") + e.what());
  }
}

inline json to_json(const BilinearMap& b) {
  json rows = json::array();
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec v;
      for (std::size_t k = 0; k < n; ++k)
        if (!b.at(i, j, k).is_zero()) v.emplace_back(k, b.at(i, j, k));
      if (!v.empty()) rows.push_back(json::array({i, j, to_json(v)}));
    }
  return rows;
}

inline json to_json(const DerivationSpec& d) {
  json imgs = json::array();
  for (const auto& p : d.images) imgs.push_back(to_json(p));
  return json{{"kind", "derivation"}, {"vars", d.nvars()}, {"images", imgs}};
}

inline DerivationSpec derivation_from_json(const json& j) {
  try {
    auto vars = j.at("vars").get<std::size_t>();
    DerivationSpec d;
    const auto& imgs = j.at("images");
    if (imgs.size() != vars) throw dimension_error("derivation needs one image per variable");
    for (const auto& p : imgs) d.images.push_back(polynomial_from_json(p, vars));
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed derivation: ") + e.what());
  }
}

inline json to_json(const CheckReport& r) {
  json out{{"id", r.id},
           {"verdict", r.verdict()},
           {"tuples_checked", r.checked},
           {"tuples_total", r.total}};
  if (!r.note.empty()) out["note"] = r.note;
  if (r.witness) {
    json defect = json::array();
    for (const auto& [l, c] : r.witness->defect) defect.push_back(json::array({l, to_json(c)}));
    out["witness"] = json{{"indices", r.witness->tuple}, {"labels", r.witness->labels}, {"defect", defect}};
  }
  return out;
}

inline json to_json(const SolutionSpace& s) {
  json basis = json::array();
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    if (s.shape == Shape::linear_map) basis.push_back(to_json(s.linear(i)).at("columns"));
    else basis.push_back(to_json(s.bilinear(i)));
  }
  json out{{"kind", s.kind},
           {"shape", s.shape == Shape::linear_map ? "linear-map" : "bilinear-map"},
           {"algebra_dim", s.algebra_dim},
           {"dimension", s.dimension()},
           {"basis_labels", s.labels},
           {"basis", basis}};
  if (s.delta) out["delta"] = to_json(*s.delta);
  if (!s.mode.empty()) out["mode"] = s.mode;
  return out;
}

inline json to_json(const FieldReport& r) {
  json out{{"vars", r.config.vars},
           {"degree", r.config.degree},
           {"coeff_bound", r.config.coeff_bound},
           {"samples", r.samples},
           {"seed", r.config.seed},
           {"checks", r.checks},
           {"failures", r.failures},
           {"failures_by_axiom", r.failures_by_axiom},
           {"verdict", r.holds() ? "holds" : "fails"}};
  if (r.config.flip_sign) out["sign_corrupted"] = true;
  auto failure = [](const FieldFailure& f) {
    return json{{"sample", f.sample}, {"axiom", f.axiom}, {"inputs", f.inputs}};
  };
  if (r.first_failure) out["first_failure"] = failure(*r.first_failure);
  if (!r.first_by_axiom.empty()) {
    json per = json::object();
    for (const auto& [axiom, f] : r.first_by_axiom) per[axiom] = failure(f);
    out["first_failure_by_axiom"] = per;
  }
  return out;
}

}  // namespace tpa::io
