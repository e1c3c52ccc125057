#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tpa/io.hpp"
#include "tpa/tpa.hpp"

using namespace tpa;
using io::AlgebraFile;
using json = io::json;

namespace {

AlgebraFile round_trip(const AlgebraFile& f) { return io::algebra_file_from_json(io::parse_text(io::dump(io::to_json(f)))); }

}  // namespace

TEST(Scalars, JsonRoundTrip) {
  for (const Scalar& s : {Scalar(0), Scalar(-7), Scalar::ratio(3, -4), Scalar(mpq_class(1, 2), mpq_class(-5, 3)), Scalar::i()})
    EXPECT_EQ(io::scalar_from_json(json::parse(io::to_json(s).dump())), s);
  EXPECT_EQ(io::to_json(Scalar::ratio(6, 4)), json("3/2"));
  EXPECT_EQ(io::scalar_from_json(json(5)), Scalar(5));
  EXPECT_EQ(io::scalar_from_json(json("1+2i")), Scalar(mpq_class(1), mpq_class(2)));
  EXPECT_THROW(io::scalar_from_json(json(1.5)), Error);
  EXPECT_THROW(io::scalar_from_json(json("abc")), Error);
}

TEST(AlgebraFiles, BitExactRoundTrip) {
  AlgebraFile f;
  TPPair p = fixtures::poly_pair(3, 1);
  f.add("product", p.product());
  f.add("bracket", p.bracket());
  std::string first = io::dump(io::to_json(f));
  AlgebraFile g = round_trip(f);
  EXPECT_EQ(io::dump(io::to_json(g)), first);
  EXPECT_EQ(g.binary("product"), p.product());
  EXPECT_EQ(g.binary("bracket"), p.bracket());
  EXPECT_TRUE(g.binary("product").is_unital());
  EXPECT_FALSE(g.binary("bracket").is_unital());
}

TEST(AlgebraFiles, NAryAndGaussianTables) {
  AlgebraFile f;
  f.add("nary", named_nary("3-lie-4"));
  AlgebraFile g = round_trip(f);
  EXPECT_EQ(g.nary("nary").table(), named_nary("3-lie-4").table());
  EXPECT_THROW(g.binary("nary"), Error);

  Algebra c = canonical_tp_product(fixtures::osc_params({Scalar(1), Scalar(3)}, true),
                                   ClassificationFamily{Family::Bb, {}, {Scalar(1), Scalar(mpq_class(0), mpq_class(2))}});
  AlgebraFile h;
  h.add("product", c);
  EXPECT_EQ(round_trip(h).binary("product"), c);
}

TEST(AlgebraFiles, EmptyTablesKeepArity) {
  AlgebraFile f;
  f.add("nary", NAryAlgebra(3, 3, {}, {}));
  AlgebraFile g = round_trip(f);
  EXPECT_EQ(g.products.at("nary").arity, 3u);
  EXPECT_TRUE(g.nary("nary").is_zero_product());
}

TEST(AlgebraFiles, SampleFilesLoad) {
  AlgebraFile h = io::load_algebra(TPA_SAMPLES_DIR "/heis3.json");
  EXPECT_EQ(h.binary(h.products.begin()->first), named_algebra("heis3").algebra);
  AlgebraFile t = io::load_algebra(TPA_SAMPLES_DIR "/three_lie4.json");
  EXPECT_EQ(t.nary(t.products.begin()->first).arity(), 3u);
}

TEST(AlgebraFiles, ParseErrors) {
  EXPECT_THROW(io::parse_text("{"), Error);
  EXPECT_THROW(io::algebra_file_from_json(json::parse(R"({"dim": 2})")), Error);
  EXPECT_THROW(io::algebra_file_from_json(json::parse(R"({"dim": 2, "basis": ["a"], "products": {}})")), Error);
  EXPECT_THROW(io::algebra_file_from_json(json::parse(R"({"dim": 2, "products": {"p": [[0, 2, [[0, "1"]]]]}})")),
               Error);
  EXPECT_THROW(io::algebra_file_from_json(json::parse(R"({"dim": 2, "products": {"p": [[0, 1, [[5, "1"]]]]}})")),
               Error);
  EXPECT_THROW(
      io::algebra_file_from_json(json::parse(R"({"dim": 2, "products": {"p": [[0, 1, [[0, "1"]]], [0, 1, 1, [[0, "1"]]]]}})")),
      Error);
  EXPECT_THROW(io::algebra_file_from_json(json::parse(R"({"dim": 1, "products": {}, "unital": true, "unit": []})")), Error);
  EXPECT_THROW(io::load_algebra("/nonexistent/file.json"), Error);
}

TEST(LinearMaps, RoundTrip) {
  LinearMap f = truncated_derivation(4, 2, Scalar::ratio(-3, 2));
  EXPECT_EQ(io::linear_map_from_json(io::to_json(f)), f);
  LinearMap z(3);
  EXPECT_EQ(io::linear_map_from_json(io::to_json(z)), z);
  EXPECT_THROW(io::linear_map_from_json(json::parse(R"({"dim": 2, "columns": [[3, []]]})")), Error);
  EXPECT_THROW(io::linear_map_from_json(json::parse(R"({"columns": []})")), Error);
}

TEST(Derivations, RoundTrip) {
  DerivationSpec d;
  d.images = {Polynomial::variable(2, 0), Polynomial::constant(2, mpq_class(-1, 3))};
  DerivationSpec e = io::derivation_from_json(io::to_json(d));
  ASSERT_EQ(e.nvars(), 2u);
  EXPECT_EQ(e.images[0], d.images[0]);
  EXPECT_EQ(e.images[1], d.images[1]);
  EXPECT_THROW(io::derivation_from_json(json::parse(R"({"vars": 2, "images": [[]]})")), Error);
  EXPECT_THROW(io::derivation_from_json(json::parse(R"({"vars": 1, "images": [[[[0], "i"]]]})")), Error);
}

TEST(Reports, CheckReportFields) {
  TPPair p = fixtures::oscillator_pair(fixtures::osc_params({Scalar(1)}),
                                       fixtures::hd(Scalar(2), Scalar(0), {Scalar(0)}, {Scalar(0)}));
  Bindings b = p.bindings();
  json ok = io::to_json(check_identity("tp-compat", b));
  EXPECT_EQ(ok.at("verdict"), "holds");
  EXPECT_EQ(ok.at("tuples_checked"), 64);
  EXPECT_FALSE(ok.contains("witness"));
  json bad = io::to_json(check_identity("poisson-leibniz", b));
  EXPECT_EQ(bad.at("verdict"), "fails");
  EXPECT_EQ(bad.at("witness").at("indices").size(), 3u);
  EXPECT_FALSE(bad.at("witness").at("defect").empty());
}

TEST(Reports, SolutionSpaceAndFieldReport) {
  json s = io::to_json(delta_derivations(named_algebra("heis3").algebra, Scalar::ratio(1, 2)));
  EXPECT_EQ(s.at("dimension"), 6);
  EXPECT_EQ(s.at("shape"), "linear-map");
  EXPECT_EQ(s.at("basis").size(), 6u);
  EXPECT_EQ(s.at("delta"), "1/2");

  SamplerConfig cfg;
  cfg.vars = 1;
  cfg.samples = 5;
  cfg.flip_sign = true;
  json r = io::to_json(verify_field_axioms(FieldContext(DerivationSpec::partial(1, 0)), cfg));
  EXPECT_EQ(r.at("verdict"), "fails");
  EXPECT_TRUE(r.at("sign_corrupted").get<bool>());
  EXPECT_TRUE(r.at("first_failure_by_axiom").contains("jacobi"));
}
