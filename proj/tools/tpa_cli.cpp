// tpa_cli: load algebra files, run identity checks, solvers and constructions,
// and print deterministic reports.
//
// Exit codes: 0 all verdicts hold, 1 a check failed, 2 usage or input error,
// 3 capacity exceeded.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tpa/tpa.hpp"

using namespace tpa;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

struct RunConfig {
  std::string command;
  std::string format = "human";
  std::string out;
  std::uint64_t seed = 7;
};

struct Input {
  std::string path;
  std::string sha256;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::invalid_argument, "sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

class Report {
 public:
  explicit Report(const RunConfig& cfg) : cfg_(cfg) {}

  std::string read(const std::string& path) {
    std::string bytes = io::read_file(path);
    inputs_.push_back({path, sha256_hex(bytes)});
    return bytes;
  }
  io::AlgebraFile load_algebra(const std::string& path) {
    return io::algebra_file_from_json(io::parse_text(read(path)));
  }

  void line(const std::string& s) { lines_.push_back(s); }
  void set(const std::string& key, json value) { result_[key] = std::move(value); }
  void artifact(json a) { artifact_ = std::move(a); }

  void check(const CheckReport& r) {
    checks_.push_back(io::to_json(r));
    line(r.summary());
    if (!r.holds) failed_ = true;
  }
  void fail() { failed_ = true; }

  int finish() const {
    const int code = failed_ ? kCheckFailed : kOk;
    json doc{{"schema_version", io::kSchemaVersion}, {"command", cfg_.command}, {"seed", cfg_.seed}};
    json inputs = json::array();
    for (const auto& in : inputs_) inputs.push_back(json{{"path", in.path}, {"sha256", in.sha256}});
    doc["inputs"] = inputs;
    json result = result_.is_null() ? json::object() : result_;
    if (!checks_.empty()) result["checks"] = checks_;
    doc["result"] = result;
    doc["exit_code"] = code;

    if (!cfg_.out.empty()) io::write_file(cfg_.out, io::dump(artifact_ ? *artifact_ : doc));
    if (cfg_.format == "machine") {
      std::cout << io::dump(doc);
    } else {
      std::cout << "command: " << cfg_.command << "\n";
      std::cout << "seed: " << cfg_.seed << "\n";
      for (const auto& in : inputs_) std::cout << "input: " << in.path << " sha256 " << in.sha256 << "\n";
      for (const auto& l : lines_) std::cout << l << "\n";
      std::cout << "result: " << (failed_ ? "FAIL" : "OK") << "\n";
    }
    return code;
  }

 private:
  const RunConfig& cfg_;
  std::vector<Input> inputs_;
  std::vector<std::string> lines_;
  json result_;
  json checks_ = json::array();
  std::optional<json> artifact_;
  bool failed_ = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<Scalar> scalars(const std::string& s) {
  std::vector<Scalar> out;
  for (const auto& x : split(s, ',')) out.push_back(Scalar::parse(x));
  return out;
}

std::map<std::int64_t, Scalar> offsets(const std::string& s) {
  std::map<std::int64_t, Scalar> out;
  for (const auto& item : split(s, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::invalid_argument, "offsets are written t:coefficient");
    out[std::stoll(item.substr(0, colon))] = Scalar::parse(item.substr(colon + 1));
  }
  return out;
}

LinearMap load_map(Report& rep, const std::string& path) {
  return io::linear_map_from_json(io::parse_text(rep.read(path)));
}

/// The binary table to use from a file: the named one, or the only one.
Algebra pick_binary(const io::AlgebraFile& f, const std::string& table) {
  if (!table.empty()) return f.binary(table);
  std::vector<std::string> binary;
  for (const auto& [name, t] : f.products)
    if (t.arity == 2) binary.push_back(name);
  if (binary.size() != 1) throw Error(ErrorKind::invalid_argument, "file holds several tables; choose one with --table");
  return f.binary(binary.front());
}

std::optional<std::string> pick_nary(const io::AlgebraFile& f, const std::string& table) {
  if (!table.empty()) {
    if (f.has(table) && f.products.at(table).arity > 2) return table;
    return std::nullopt;
  }
  for (const auto& [name, t] : f.products)
    if (t.arity > 2) return name;
  return std::nullopt;
}

TPPair load_pair(Report& rep, const std::string& path) {
  io::AlgebraFile f = rep.load_algebra(path);
  return TPPair(f.binary("product"), f.binary("bracket"));
}

json pair_file(const TPPair& p, const std::string& note) {
  io::AlgebraFile f;
  f.add("product", p.product());
  f.add("bracket", p.bracket());
  f.provenance = json{{"construction", note}};
  return io::to_json(f);
}

// check

struct CheckArgs {
  std::string id;
  std::string algebra, algebra2, map;
};

int run_check(const RunConfig& cfg, const CheckArgs& a) {
  Report rep(cfg);
  std::vector<io::AlgebraFile> files{rep.load_algebra(a.algebra)};
  if (!a.algebra2.empty()) files.push_back(rep.load_algebra(a.algebra2));

  if (a.id == "jordan-super") {
    const auto& f = files.front();
    if (!f.parity) throw Error(ErrorKind::invalid_argument, "jordan-super needs a file with a parity vector");
    rep.check(check_jordan_super(SuperAlgebra(pick_binary(f, ""), *f.parity)));
    return rep.finish();
  }

  std::optional<Algebra> product, bracket;
  std::optional<NAryAlgebra> nary;
  std::vector<std::pair<std::size_t, std::string>> unnamed;
  for (std::size_t i = 0; i < files.size(); ++i)
    for (const auto& [name, t] : files[i].products) {
      if (t.arity > 2) {
        if (!nary) nary = files[i].nary(name);
      } else if (name == "product") {
        product = files[i].binary(name);
      } else if (name == "bracket") {
        bracket = files[i].binary(name);
      } else {
        unnamed.emplace_back(i, name);
      }
    }
  const bool nary_id = catalog::is_nary(a.id);
  IdentitySpec spec = catalog::get(a.id, nary_id && nary ? nary->arity() : 2);
  auto next_unnamed = [&]() -> std::optional<Algebra> {
    if (unnamed.empty()) return std::nullopt;
    auto [i, name] = unnamed.front();
    unnamed.erase(unnamed.begin());
    return files[i].binary(name);
  };
  if ((spec.slots & kProduct) && !product) product = next_unnamed();
  if ((spec.slots & kBracket) && !bracket) bracket = next_unnamed();

  Bindings b;
  std::optional<LinearMap> map;
  if (spec.slots & kProduct) {
    if (!product) throw Error(ErrorKind::invalid_argument, "identity '" + a.id + "' needs a product table");
    b.product = &*product;
  }
  if (spec.slots & kBracket) {
    if (!bracket) throw Error(ErrorKind::invalid_argument, "identity '" + a.id + "' needs a bracket table");
    b.bracket = &*bracket;
  }
  if (spec.slots & kNAry) {
    if (!nary) throw Error(ErrorKind::invalid_argument, "identity '" + a.id + "' needs an n-ary table");
    b.nary = &*nary;
  }
  if (spec.slots & kMap) {
    if (a.map.empty()) throw Error(ErrorKind::invalid_argument, "identity '" + a.id + "' needs --map");
    map = load_map(rep, a.map);
    b.map = &*map;
  }
  if ((spec.slots & kUnit) && product && !product->unit() && files.front().unit) b.unit = files.front().unit;
  rep.set("identity", json{{"id", spec.id}, {"formula", spec.formula()}});
  rep.line(spec.id + ": " + spec.formula());
  rep.check(check_identity(spec, b));
  return rep.finish();
}

// solvers

struct SolveArgs {
  std::string algebra;
  std::string table;
  std::string delta = "1/2";
  std::size_t arity = 0;
  bool symmetric = false;
};

int finish_space(Report& rep, const SolutionSpace& s) {
  json j = io::to_json(s);
  rep.set("space", j);
  rep.artifact(j);
  std::ostringstream head;
  head << s.kind << ": dimension " << s.dimension() << " (" << s.unknowns() << " unknowns)";
  rep.line(head.str());
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    std::ostringstream row;
    row << "  basis " << i << ":";
    for (std::size_t k = 0; k < s.basis[i].size(); ++k)
      if (!s.basis[i][k].is_zero()) row << " [" << k << "]=" << s.basis[i][k];
    rep.line(row.str());
  }
  return rep.finish();
}

int run_derive(const RunConfig& cfg, const SolveArgs& a) {
  Report rep(cfg);
  io::AlgebraFile f = rep.load_algebra(a.algebra);
  Scalar delta = Scalar::parse(a.delta);
  auto nary_name = pick_nary(f, a.table);
  if (a.arity > 2 || (a.arity == 0 && nary_name)) {
    if (!nary_name) throw Error(ErrorKind::invalid_argument, "no n-ary table in the file");
    NAryAlgebra l = f.nary(*nary_name);
    if (a.arity && l.arity() != a.arity) throw Error(ErrorKind::invalid_argument, "table arity differs from --arity");
    return finish_space(rep, nary_delta_derivations(l, delta));
  }
  return finish_space(rep, delta_derivations(pick_binary(f, a.table), delta));
}

int run_biderive(const RunConfig& cfg, const SolveArgs& a) {
  Report rep(cfg);
  io::AlgebraFile f = rep.load_algebra(a.algebra);
  auto mode = a.symmetric ? BiderivationMode::symmetric : BiderivationMode::general;
  return finish_space(rep, delta_biderivations(pick_binary(f, a.table), Scalar::parse(a.delta), mode));
}

int run_homlie(const RunConfig& cfg, const SolveArgs& a) {
  Report rep(cfg);
  return finish_space(rep, hom_lie_maps(pick_binary(rep.load_algebra(a.algebra), a.table)));
}

int run_tpspace(const RunConfig& cfg, const SolveArgs& a) {
  Report rep(cfg);
  return finish_space(rep, tp_product_space(pick_binary(rep.load_algebra(a.algebra), a.table)));
}

// construct

struct ConstructArgs {
  std::string kind;
  std::string pair, pair2, algebra, map;
  std::string generators;
  std::size_t k = 0;
};

int run_construct(const RunConfig& cfg, const ConstructArgs& a) {
  Report rep(cfg);
  auto need = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw Error(ErrorKind::invalid_argument, "construct " + a.kind + " needs " + flag);
    return v;
  };
  if (a.kind == "bracket") {
    io::AlgebraFile f = rep.load_algebra(need(a.algebra, "--algebra"));
    Algebra prod = pick_binary(f, "");
    LinearMap d = load_map(rep, need(a.map, "--map"));
    TPPair p(prod, bracket_from_derivation(prod, d));
    for (const auto& r : verify_tp(p.product(), p.bracket())) rep.check(r);
    rep.artifact(pair_file(p, "bracket from derivation"));
  } else if (a.kind == "tensor") {
    TPPair p = tensor_product(load_pair(rep, need(a.pair, "--pair")), load_pair(rep, need(a.pair2, "--pair2")));
    for (const auto& r : verify_tp(p.product(), p.bracket())) rep.check(r);
    rep.artifact(pair_file(p, "tensor product"));
  } else if (a.kind == "kantor") {
    SuperAlgebra s = kantor_double(load_pair(rep, need(a.pair, "--pair")));
    rep.check(check_jordan_super(s));
    io::AlgebraFile f;
    f.add("product", s.algebra());
    std::vector<int> parity;
    for (std::size_t i = 0; i < s.dim(); ++i) parity.push_back(s.parity(i));
    f.parity = parity;
    f.provenance = json{{"construction", "Kantor double"}};
    rep.artifact(io::to_json(f));
  } else if (a.kind == "three-lie") {
    TPPair p = load_pair(rep, need(a.pair, "--pair"));
    NAryAlgebra t = three_lie_from_tp(p, load_map(rep, need(a.map, "--map")));
    Bindings b;
    b.product = &p.product();
    b.nary = &t;
    rep.check(check_identity("nlie-fundamental", b));
    rep.check(check_identity("tp-nlie", b));
    io::AlgebraFile f;
    f.add("product", p.product());
    f.add("bracket", t);
    f.provenance = json{{"construction", "3-Lie bracket from a TP pair and a derivation"}};
    rep.artifact(io::to_json(f));
  } else if (a.kind == "nplus1") {
    io::AlgebraFile f = rep.load_algebra(need(a.pair, "--pair"));
    auto nary_name = pick_nary(f, "");
    NAryAlgebra l = nary_name ? f.nary(*nary_name) : NAryAlgebra::from_binary(f.binary("bracket"));
    NTPTuple t(f.binary("product"), l);
    CandidateReport c = n_plus_one_lie_candidate(t, load_map(rep, need(a.map, "--map")));
    rep.line(std::string("antisymmetric: ") + (c.antisymmetric ? "yes" : "no"));
    rep.line(c.fundamental.summary());
    rep.line(c.compatibility.summary());
    rep.set("candidate", json{{"antisymmetric", c.antisymmetric},
                              {"fundamental", io::to_json(c.fundamental)},
                              {"compatibility", io::to_json(c.compatibility)}});
    io::AlgebraFile out;
    out.add("product", t.product());
    out.add("bracket", c.table);
    out.provenance = json{{"construction", "(n+1)-ary candidate bracket"}};
    rep.artifact(io::to_json(out));
  } else if (a.kind == "nilpotent") {
    io::AlgebraFile f = rep.load_algebra(need(a.algebra, "--algebra"));
    auto nary_name = pick_nary(f, "");
    NAryAlgebra l = nary_name ? f.nary(*nary_name) : NAryAlgebra::from_binary(pick_binary(f, ""));
    std::vector<std::size_t> gens;
    for (const auto& g : split(need(a.generators, "--generators"), ',')) gens.push_back(std::stoul(g));
    NTPTuple t = nilpotent_nlie_tp(l, gens, a.k);
    EquivalenceReport e = both_poisson_and_tp_check(t);
    rep.line("poisson: " + e.poisson.verdict());
    rep.line(std::string("annihilation: ") + (e.annihilation() ? "holds" : "fails"));
    rep.set("equivalence", json{{"poisson", io::to_json(e.poisson)},
                                {"product_kills_bracket", io::to_json(e.product_kills_bracket)},
                                {"bracket_kills_product", io::to_json(e.bracket_kills_product)},
                                {"consistent", e.consistent()}});
    if (!e.consistent()) rep.fail();
    io::AlgebraFile out;
    out.add("product", t.product());
    out.add("bracket", t.bracket());
    out.provenance = json{{"construction", "nilpotent n-Lie transposed Poisson structure"}};
    rep.artifact(io::to_json(out));
  } else if (a.kind == "transport") {
    TPPair p = apply_basis_change(load_pair(rep, need(a.pair, "--pair")), load_map(rep, need(a.map, "--map")));
    for (const auto& r : verify_tp(p.product(), p.bracket())) rep.check(r);
    rep.artifact(pair_file(p, "basis change"));
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown construction '" + a.kind + "'");
  }
  return rep.finish();
}

// catalogs

struct OscillatorArgs {
  std::string lambda = "1";
  bool generic = false;
  std::string gamma, mu, alpha, beta;
  std::string family, fgamma, fbeta;
};

int run_oscillator(const RunConfig& cfg, const OscillatorArgs& a) {
  Report rep(cfg);
  OscillatorParams p{scalars(a.lambda), a.generic};
  Algebra br = oscillator(p);
  io::AlgebraFile f;
  f.add("bracket", br);
  std::optional<Algebra> prod;
  json prov{{"model", "oscillator"}, {"lambda", split(a.lambda, ',')}, {"generic", a.generic}};
  if (!a.family.empty()) {
    ClassificationFamily fam;
    if (a.family == "A") fam.tag = Family::A;
    else if (a.family == "B.a") fam.tag = Family::Ba;
    else if (a.family == "B.b") fam.tag = Family::Bb;
    else throw Error(ErrorKind::invalid_argument, "family is A, B.a or B.b");
    if (!a.fgamma.empty()) fam.gamma = Scalar::parse(a.fgamma);
    fam.beta = scalars(a.fbeta);
    prod = canonical_tp_product(p, fam);
    prov["family"] = a.family;
  } else if (!a.gamma.empty() || !a.mu.empty() || !a.alpha.empty() || !a.beta.empty()) {
    const std::size_t n = p.lambda.size();
    HalfDerParams h{a.gamma.empty() ? Scalar(0) : Scalar::parse(a.gamma), a.mu.empty() ? Scalar(0) : Scalar::parse(a.mu),
                    a.alpha.empty() ? std::vector<Scalar>(n) : scalars(a.alpha),
                    a.beta.empty() ? std::vector<Scalar>(n) : scalars(a.beta)};
    prod = oscillator_tp_product(p, h);
    prov["half_derivation"] = json{{"gamma", h.gamma.str()}, {"mu", h.mu.str()}};
  }
  if (prod) {
    f.add("product", *prod);
    for (const auto& r : verify_tp(*prod, br)) rep.check(r);
    Bindings b;
    b.product = &*prod;
    b.bracket = &br;
    CheckReport pl = check_identity("poisson-leibniz", b);
    rep.line("poisson-leibniz (informational): " + pl.verdict());
    rep.set("poisson", pl.holds);
  } else {
    Bindings b;
    b.bracket = &br;
    rep.check(check_identity("jacobi", b));
  }
  f.provenance = prov;
  rep.artifact(io::to_json(f));
  rep.set("algebra", io::to_json(f));
  return rep.finish();
}

struct WittArgs {
  std::string alpha = "1:1";
  bool full = false;
  std::int64_t lo = -1, hi = 12;
};

int run_witt1(const RunConfig& cfg, const WittArgs& a) {
  Report rep(cfg);
  auto alpha = offsets(a.alpha);
  WittTPPair w = witt_tp_pair(alpha, a.full ? std::nullopt : std::optional<std::int64_t>(-1));
  for (const auto& r : check_witt_window(w, a.lo, a.hi)) rep.check(r);
  json al = json::array();
  for (const auto& [t, c] : w.alpha) al.push_back(json::array({t, io::to_json(c)}));
  json model{{"kind", "graded-tp-pair"},
             {"algebra", a.full ? "W" : "W(1)"},
             {"bracket", "[e_i,e_j] = (i-j) e_{i+j}"},
             {"product", "e_i . e_j = sum_t alpha_t e_{i+j+t}"},
             {"alpha", al},
             {"window", json::array({a.lo, a.hi})}};
  if (w.floor) model["floor"] = *w.floor;
  rep.set("model", model);
  rep.artifact(model);
  return rep.finish();
}

struct FieldArgs {
  std::string derivation;
  std::optional<std::size_t> vars;
  std::size_t samples = 100;
  unsigned degree = 3;
  int bound = 3;
  bool flip = false;
};

int run_field(const RunConfig& cfg, const FieldArgs& a) {
  Report rep(cfg);
  DerivationSpec d = io::derivation_from_json(io::parse_text(rep.read(a.derivation)));
  if (a.vars && *a.vars != d.nvars())
    throw Error(ErrorKind::invalid_argument, "--vars does not match the derivation's variable count");
  SamplerConfig sc;
  sc.vars = d.nvars();
  sc.degree = a.degree;
  sc.coeff_bound = a.bound;
  sc.samples = a.samples;
  sc.seed = cfg.seed;
  sc.flip_sign = a.flip;
  FieldReport r = verify_field_axioms(FieldContext(d), sc);
  rep.set("field", io::to_json(r));
  std::ostringstream s;
  s << "field axioms: " << (r.holds() ? "holds" : "fails") << " (" << r.failures << " failures in " << r.checks
    << " checks over " << r.samples << " samples)";
  rep.line(s.str());
  for (const auto& [axiom, count] : r.failures_by_axiom) rep.line("  " + axiom + ": " + std::to_string(count));
  if (r.first_failure) rep.line("  first failure: sample " + std::to_string(r.first_failure->sample) + " (" +
                                r.first_failure->axiom + ")");
  if (!r.holds()) rep.fail();
  return rep.finish();
}

struct CatalogArgs {
  std::string algebra;
};

int run_catalog(const RunConfig& cfg, const CatalogArgs& a) {
  Report rep(cfg);
  if (!a.algebra.empty()) {
    io::AlgebraFile f;
    std::string desc;
    if (a.algebra.rfind("3-lie-", 0) == 0) {
      f.add("bracket", named_nary(a.algebra));
      desc = a.algebra;
    } else {
      NamedModel m = named_algebra(a.algebra);
      bool lie = !m.algebra.is_unital() && a.algebra.rfind("poly-trunc-", 0) != 0;
      f.add(lie ? "bracket" : "product", m.algebra);
      desc = m.description;
    }
    f.provenance = json{{"model", a.algebra}, {"description", desc}};
    rep.line(a.algebra + ": " + desc);
    rep.set("algebra", io::to_json(f));
    rep.artifact(io::to_json(f));
    return rep.finish();
  }
  json ids = json::array();
  for (const auto& id : catalog::fixed_ids()) {
    IdentitySpec s = catalog::get(id);
    ids.push_back(json{{"id", id}, {"arity", s.arity}, {"formula", s.formula()}});
    rep.line(id + ": " + s.formula());
  }
  for (const auto& id : catalog::nary_ids()) {
    IdentitySpec s = catalog::get(id, 3);
    ids.push_back(json{{"id", id}, {"arity", "n+1"}, {"formula_n3", s.formula()}});
    rep.line(id + " (n=3): " + s.formula());
  }
  rep.line("jordan-super: super-Jordan identity on a file with a parity vector");
  rep.set("identities", ids);
  rep.set("algebras", json::array({"sl2", "heis3", "abelian-N", "poly-trunc-N", "unit-1", "3-lie-3", "3-lie-4"}));
  return rep.finish();
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  sub->add_option("--out", cfg.out, "write the result file here");
  sub->add_option("--seed", cfg.seed, "seed recorded in the report and used by samplers");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transposed Poisson algebra toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::size_t> capacity;
  app.add_option("--capacity", capacity, "largest solver system (overrides TPA_CAPACITY)");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "check a catalog identity on an algebra file");
  c->add_option("id", check.id, "identity id")->required();
  c->add_option("--algebra", check.algebra)->required();
  c->add_option("--algebra2", check.algebra2);
  c->add_option("--map", check.map);
  add_common(c, cfg);

  SolveArgs solve;
  auto* d = app.add_subcommand("derive", "delta-derivations");
  d->add_option("--algebra", solve.algebra)->required();
  d->add_option("--delta", solve.delta);
  d->add_option("--arity", solve.arity);
  d->add_option("--table", solve.table);
  add_common(d, cfg);
  auto* bd = app.add_subcommand("biderive", "delta-biderivations");
  bd->add_option("--algebra", solve.algebra)->required();
  bd->add_option("--delta", solve.delta);
  bd->add_option("--table", solve.table);
  bd->add_flag("--symmetric", solve.symmetric);
  add_common(bd, cfg);
  auto* hl = app.add_subcommand("homlie", "Hom-Lie maps");
  hl->add_option("--algebra", solve.algebra)->required();
  hl->add_option("--table", solve.table);
  add_common(hl, cfg);
  auto* tp = app.add_subcommand("tpspace", "transposed Poisson products on a Lie algebra");
  tp->add_option("--algebra", solve.algebra)->required();
  tp->add_option("--table", solve.table);
  add_common(tp, cfg);

  ConstructArgs cons;
  auto* co = app.add_subcommand("construct", "bracket | tensor | kantor | three-lie | nplus1 | nilpotent | transport");
  co->add_option("kind", cons.kind)->required();
  co->add_option("--pair", cons.pair);
  co->add_option("--pair2", cons.pair2);
  co->add_option("--algebra", cons.algebra);
  co->add_option("--map", cons.map);
  co->add_option("--generators", cons.generators);
  co->add_option("--k", cons.k);
  add_common(co, cfg);

  OscillatorArgs osc;
  auto* os = app.add_subcommand("oscillator", "oscillator algebra and its products");
  os->add_option("--lambda", osc.lambda);
  os->add_flag("--generic", osc.generic);
  os->add_option("--gamma", osc.gamma);
  os->add_option("--mu", osc.mu);
  os->add_option("--alpha", osc.alpha);
  os->add_option("--beta", osc.beta);
  os->add_option("--family", osc.family);
  os->add_option("--family-gamma", osc.fgamma);
  os->add_option("--family-beta", osc.fbeta);
  add_common(os, cfg);

  WittArgs witt;
  auto* w = app.add_subcommand("witt1", "Witt-type product families on an index window");
  w->add_option("--alpha", witt.alpha, "offsets t:coefficient, comma separated");
  w->add_flag("--full", witt.full, "use W instead of W(1)");
  w->add_option("--lo", witt.lo);
  w->add_option("--hi", witt.hi);
  add_common(w, cfg);

  FieldArgs field;
  auto* fc = app.add_subcommand("field-check", "sampled fraction-field axioms");
  fc->add_option("--derivation", field.derivation)->required();
  fc->add_option("--samples", field.samples);
  fc->add_option("--vars", field.vars, "must match the derivation file");
  fc->add_option("--degree,--deg", field.degree);
  fc->add_option("--bound", field.bound);
  fc->add_flag("--flip-sign", field.flip);
  add_common(fc, cfg);

  CatalogArgs cat;
  auto* ca = app.add_subcommand("catalog", "identity catalog, or one named algebra");
  ca->add_option("--algebra", cat.algebra);
  add_common(ca, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (capacity) setenv("TPA_CAPACITY", std::to_string(*capacity).c_str(), 1);

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (cfg.command == "check") return run_check(cfg, check);
    if (cfg.command == "derive") return run_derive(cfg, solve);
    if (cfg.command == "biderive") return run_biderive(cfg, solve);
    if (cfg.command == "homlie") return run_homlie(cfg, solve);
    if (cfg.command == "tpspace") return run_tpspace(cfg, solve);
    if (cfg.command == "construct") return run_construct(cfg, cons);
    if (cfg.command == "oscillator") return run_oscillator(cfg, osc);
    if (cfg.command == "witt1") return run_witt1(cfg, witt);
    if (cfg.command == "field-check") return run_field(cfg, field);
    return run_catalog(cfg, cat);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::capacity ? kCapacity : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
