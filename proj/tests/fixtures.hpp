#pragma once

#include <map>
#include <vector>

#include "tpa/tpa.hpp"

namespace fixtures {

using namespace tpa;

inline Scalar half() { return Scalar::ratio(1, 2); }

inline OscillatorParams osc_params(std::vector<Scalar> lambda, bool generic = false) {
  return OscillatorParams{std::move(lambda), generic};
}

inline HalfDerParams hd(Scalar gamma, Scalar mu, std::vector<Scalar> alpha, std::vector<Scalar> beta) {
  return HalfDerParams{std::move(gamma), std::move(mu), std::move(alpha), std::move(beta)};
}

/// Q[t]/(t^N) with the bracket of the derivation t^a d/dt.
inline TPPair poly_pair(std::size_t top, std::size_t a = 1) {
  Algebra p = truncated_polynomials(top);
  return TPPair(p, bracket_from_derivation(p, truncated_derivation(top, a)));
}

inline TPPair unit_pair() {
  Algebra u = named_algebra("unit-1").algebra;
  return TPPair(u, Algebra::zero(1, u.labels()));
}

inline TPPair oscillator_pair(const OscillatorParams& p, const HalfDerParams& h) {
  return TPPair(oscillator_tp_product(p, h), oscillator(p));
}

inline NAryAlgebra heis3_nary() { return NAryAlgebra::from_binary(named_algebra("heis3").algebra); }

/// Small algebras used for the solver/oracle comparison.
inline std::vector<std::pair<std::string, Algebra>> small_catalog() {
  std::vector<std::pair<std::string, Algebra>> out;
  for (const char* id : {"sl2", "heis3", "abelian-1", "abelian-2", "abelian-3", "abelian-4", "unit-1"})
    out.emplace_back(id, named_algebra(id).algebra);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto m = named_algebra("poly-trunc-" + std::to_string(n));
    out.emplace_back("poly-trunc-" + std::to_string(n), m.algebra);
    out.emplace_back("poly-trunc-" + std::to_string(n) + " bracket", bracket_from_derivation(m.algebra, *m.map));
  }
  out.emplace_back("oscillator n=1", oscillator(osc_params({Scalar(1)})));
  out.emplace_back("theodot product n=1",
                   oscillator_tp_product(osc_params({Scalar(1)}), hd(Scalar(2), Scalar(1), {Scalar(1)}, {Scalar(-1)})));
  out.emplace_back("family A n=1",
                   canonical_tp_product(osc_params({Scalar(1)}, true), ClassificationFamily{Family::A, Scalar(1), {}}));
  out.emplace_back("family B.a n=1",
                   canonical_tp_product(osc_params({Scalar(1)}, true), ClassificationFamily{Family::Ba, {}, {Scalar(1)}}));
  for (std::size_t n = 2; n <= 4; ++n) {
    auto w = witt_window_pair(n, {{0, Scalar(1)}});
    out.emplace_back("witt window " + std::to_string(n) + " bracket", w.bracket());
    out.emplace_back("witt window " + std::to_string(n) + " product", w.product());
  }
  return out;
}

inline bool is_lie(const Algebra& a) {
  Bindings b;
  b.bracket = &a;
  return check_identity("anticomm", b).holds && check_identity("jacobi", b).holds;
}

}  // namespace fixtures
