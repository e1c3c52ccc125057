#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tpa/tpa.hpp"

using namespace tpa;
using fixtures::hd;
using fixtures::osc_params;

TEST(TPPair, ConstructorVerifies) {
  Algebra p = truncated_polynomials(3);
  Algebra sl2 = named_algebra("sl2").algebra;
  EXPECT_THROW(TPPair(p, sl2.with_labels(p.labels())), Error);
  EXPECT_THROW(TPPair(named_algebra("heis3").algebra, Algebra::zero(3)), Error);
}

TEST(BracketFromDerivation, Examples) {
  Algebra p = truncated_polynomials(3);
  EXPECT_TRUE(bracket_from_derivation(p, LinearMap(3)).is_zero_product());
  Algebra br = bracket_from_derivation(p, truncated_derivation(3, 1));
  // [t^2, t] = D(t^2)·t - t^2·D(t) = 2t^3 - t^3 = 0 in Q[t]/(t^3); [t, 1] = t.
  EXPECT_TRUE(br.multiply(p.basis(2), p.basis(1)).is_zero());
  EXPECT_EQ(br.multiply(p.basis(1), p.basis(0)), p.basis(1));
  Algebra p4 = truncated_polynomials(4);
  Algebra br4 = bracket_from_derivation(p4, truncated_derivation(4, 2));
  // t^2 d/dt: [t, 1] = t^2 and [t^2, t] = 2t^3·t - t^2·t^2 = 0.
  EXPECT_EQ(br4.multiply(p4.basis(1), p4.basis(0)), p4.basis(2));
}

TEST(BracketFromDerivation, PlainDDtIsNotADerivationOfTheTruncation) {
  Algebra p = truncated_polynomials(3);
  LinearMap d(3);
  d.set_image(1, p.basis(0));
  d.set_image(2, Scalar(2) * p.basis(1));
  EXPECT_FALSE(derivation_check(p, d).holds);
  EXPECT_THROW(bracket_from_derivation(p, d), Error);
}

TEST(BracketFromDerivation, OutputIsCompatible) {
  for (std::size_t top = 1; top <= 5; ++top)
    for (std::size_t a = 1; a < top + 1; ++a)
      for (long c : {1L, -2L}) {
        Algebra p = truncated_polynomials(top);
        LinearMap d = truncated_derivation(top, a, Scalar(c));
        Algebra br = bracket_from_derivation(p, d);
        EXPECT_TRUE(all_hold(verify_tp(p, br))) << top << " " << a;
        for (std::size_t i = 0; i < top; ++i) EXPECT_EQ(br.multiply(p.basis(i), p.basis(0)), d.image(i));
      }
}

TEST(UnitalRoundTrip, BracketIsRecovered) {
  for (const TPPair& p : {fixtures::poly_pair(3, 1), fixtures::poly_pair(4, 2), fixtures::unit_pair(),
                          tensor_product(fixtures::poly_pair(2, 1), fixtures::poly_pair(3, 2))}) {
    LinearMap d = unit_derivation(p);
    EXPECT_EQ(bracket_from_derivation(p.product(), d), p.bracket());
    Bindings b = p.bindings();
    b.map = &d;
    EXPECT_TRUE(check_identity("farkas-relation", b).holds);
    EXPECT_TRUE(quasi_poisson_check(p).holds);
  }
}

TEST(QuasiPoisson, CorruptedBracketFails) {
  TPPair p = fixtures::poly_pair(3, 1);
  Algebra br = p.bracket();
  std::vector<SparseVec> table = br.table();
  // [t, t^2] gets an extra t^2 on both sides, keeping antisymmetry.
  table[1 * 3 + 2] = {{2, Scalar(1)}};
  table[2 * 3 + 1] = {{2, Scalar(-1)}};
  Algebra bad(3, br.labels(), table);
  LinearMap d(3);
  for (std::size_t i = 0; i < 3; ++i) d.set_image(i, bad.multiply(bad.basis(i), bad.basis(0)));
  Bindings b;
  b.product = &p.product();
  b.bracket = &bad;
  b.map = &d;
  EXPECT_FALSE(check_identity("quasi-poisson", b).holds);
  EXPECT_THROW(quasi_poisson_check(witt_window_pair(3, {{0, Scalar(1)}})), Error);
}

TEST(Kantor, LabelsAndParity) {
  SuperAlgebra s = kantor_double(fixtures::poly_pair(3, 1));
  EXPECT_EQ(s.dim(), 6u);
  EXPECT_EQ(s.algebra().labels()[4], "t·x̄");
  EXPECT_EQ(s.parity(0), 0);
  EXPECT_EQ(s.parity(5), 1);
}

TEST(Kantor, DoublesAreJordan) {
  for (const TPPair& p : {fixtures::poly_pair(4, 1), fixtures::poly_pair(4, 3), fixtures::unit_pair(),
                          witt_window_pair(4, {{0, Scalar(1)}, {2, Scalar(-1)}}),
                          fixtures::oscillator_pair(osc_params({Scalar(1)}), hd(Scalar(1), Scalar(0), {Scalar(1)}, {Scalar(0)}))})
    EXPECT_TRUE(check_jordan_super(kantor_double(p)).holds);
}

TEST(ThreeLie, Examples) {
  TPPair w = witt_window_pair(5, {{0, Scalar(1)}});
  EXPECT_TRUE(three_lie_from_tp(w, LinearMap(5)).is_zero_product());
  Algebra p = truncated_polynomials(3);
  TPPair flat(p, Algebra::zero(3, p.labels()));
  EXPECT_TRUE(three_lie_from_tp(flat, truncated_derivation(3, 1)).is_zero_product());

  for (const TPPair& q : {w, fixtures::poly_pair(4, 1), fixtures::poly_pair(5, 2)}) {
    LinearMap d = q.product().is_unital() ? unit_derivation(q) : degree_derivation(q.dim());
    NAryAlgebra t = three_lie_from_tp(q, d);
    EXPECT_TRUE(t.is_antisymmetric());
    Bindings b;
    b.product = &q.product();
    b.nary = &t;
    EXPECT_TRUE(check_identity("tp-nlie", b).holds);
    EXPECT_TRUE(check_identity("nlie-fundamental", b).holds);
  }
}

TEST(ThreeLie, RejectsNonDerivations) {
  TPPair q = fixtures::poly_pair(3, 1);
  LinearMap id = LinearMap::identity(3);
  EXPECT_THROW(three_lie_from_tp(q, id), Error);
}

TEST(NPlusOne, BinaryInputReproducesThreeLie) {
  TPPair q = fixtures::poly_pair(4, 1);
  LinearMap d = unit_derivation(q);
  CandidateReport c = n_plus_one_lie_candidate(as_ntp(q), d);
  EXPECT_EQ(c.table.table(), three_lie_from_tp(q, d).table());
  EXPECT_TRUE(c.antisymmetric);

  CandidateReport zero = n_plus_one_lie_candidate(as_ntp(q), LinearMap(4));
  EXPECT_TRUE(zero.table.is_zero_product());
  EXPECT_TRUE(zero.fundamental.holds && zero.compatibility.holds);
}

TEST(NPlusOne, ThreeLieProbeReports) {
  TPPair q = fixtures::poly_pair(4, 1);
  LinearMap d = unit_derivation(q);
  NTPTuple t(q.product(), three_lie_from_tp(q, d));
  CandidateReport c = n_plus_one_lie_candidate(t, d);
  EXPECT_EQ(c.table.arity(), 4u);
  EXPECT_EQ(c.fundamental.id, "nlie-fundamental");
  EXPECT_GT(c.compatibility.checked, 0u);
}

TEST(Nilpotent, HeisenbergProduct) {
  NTPTuple t = nilpotent_nlie_tp(fixtures::heis3_nary(), {0, 1}, 2);
  const Algebra& p = t.product();
  for (std::size_t i : {0, 1})
    for (std::size_t j : {0, 1}) EXPECT_EQ(p.multiply(p.basis(i), p.basis(j)), p.basis(2));
  EXPECT_TRUE(p.multiply(p.basis(2), p.basis(0)).is_zero());
}

TEST(Nilpotent, WitnessIsVerified) {
  EXPECT_THROW(nilpotent_nlie_tp(fixtures::heis3_nary(), {0, 2}, 1), Error);
  EXPECT_THROW(nilpotent_nlie_tp(fixtures::heis3_nary(), {0, 1}, 0), Error);
  EXPECT_THROW(nilpotent_nlie_tp(named_nary("3-lie-3"), {0, 1, 2}, 0), Error);
  NAryAlgebra zero(4, 3, {}, {});
  EXPECT_NO_THROW(nilpotent_nlie_tp(zero, {0, 1, 2}, 3));
}

TEST(Equivalence, Examples) {
  Algebra h = named_algebra("heis3").algebra;
  EquivalenceReport zero = both_poisson_and_tp_check(NTPTuple(Algebra::zero(3), NAryAlgebra::from_binary(h)));
  EXPECT_TRUE(zero.poisson.holds && zero.annihilation());

  EquivalenceReport nil = both_poisson_and_tp_check(nilpotent_nlie_tp(fixtures::heis3_nary(), {0, 1}, 2));
  EXPECT_TRUE(nil.poisson.holds && nil.annihilation());

  EquivalenceReport w = both_poisson_and_tp_check(as_ntp(witt_window_pair(4, {{0, Scalar(1)}})));
  EXPECT_FALSE(w.poisson.holds);
  EXPECT_FALSE(w.annihilation());
  EXPECT_TRUE(w.consistent());
}

TEST(Nilpotency, Spans) {
  EXPECT_TRUE(is_nilpotent(named_algebra("heis3").algebra));
  EXPECT_FALSE(is_nilpotent(named_algebra("sl2").algebra));
  EXPECT_TRUE(is_annihilator(fixtures::heis3_nary(), 2));
  EXPECT_FALSE(is_annihilator(fixtures::heis3_nary(), 0));
}

TEST(BasisChange, IdentityAndPermutation) {
  TPPair p = fixtures::poly_pair(3, 1);
  TPPair same = apply_basis_change(p, LinearMap::identity(3));
  EXPECT_EQ(same.product(), p.product());
  EXPECT_EQ(same.bracket(), p.bracket());

  NTPTuple t = nilpotent_nlie_tp(fixtures::heis3_nary(), {0, 1}, 2);
  TPPair h(t.product(), named_algebra("heis3").algebra);
  LinearMap swap(3);
  swap.set_image(0, Element::basis(3, 1));
  swap.set_image(1, Element::basis(3, 0));
  swap.set_image(2, Element::basis(3, 2));
  TPPair moved = apply_basis_change(h, swap);
  EXPECT_TRUE(all_hold(verify_tp(moved.product(), moved.bracket())));
  EXPECT_THROW(apply_basis_change(p, LinearMap(3)), Error);
}
