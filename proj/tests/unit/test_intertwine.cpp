#include <doctest.h>

#include "drazinkit/classify.hpp"
#include "drazinkit/drazin.hpp"
#include "drazinkit/intertwine.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace drazinkit;
using namespace testing_support;

namespace {

ErrorCode code_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Schema;
}

}  // namespace

TEST_SUITE("intertwine") {
  TEST_CASE("the rotation-plus-shift counterexample without a second hypothesis") {
    const ExactMatrix t = rotation_shift_t(), a = rotation_shift_a(), b = rotation_shift_b();
    const ExactMatrix td = drazin_inverse(t).dinv;
    CHECK(commutator(td, adjoint(t)).is_zero());
    CHECK(t * a == b * t);
    CHECK(adjoint(t) * a != b * adjoint(t));
    CHECK(adjoint(td) * a != b * adjoint(td));

    const IntertwiningInstance<Gaussian> inst{t, a, b};
    const Report r = extended_commutativity(inst, Hypothesis::None, Tolerance::verdict_default(), Orientation::TA_eq_BT);
    CHECK(r.verdict("base"));
    CHECK_FALSE(r.verdict("conclusion"));
  }

  TEST_CASE("a violated hypothesis is reported as such") {
    const IntertwiningInstance<Gaussian> inst{rotation_shift_t(), rotation_shift_a(), rotation_shift_b()};
    CHECK(code_of([&] { extended_commutativity(inst, Hypothesis::Reverse, Tolerance::verdict_default(), Orientation::TA_eq_BT); }) ==
          ErrorCode::HypothesisViolated);
    CHECK(code_of([&] { extended_commutativity(inst, Hypothesis::None); }) == ErrorCode::HypothesisViolated);
  }

  TEST_CASE("operators outside (1,1) are rejected") {
    const IntertwiningInstance<Gaussian> inst{order_six_t(), ExactMatrix::identity(2), ExactMatrix::identity(2)};
    CHECK(code_of([&] { extended_commutativity(inst, Hypothesis::Reverse); }) == ErrorCode::NotInClass);
    CHECK(code_of([&] { fuglede_drazin(order_six_t(), ExactMatrix::identity(2), ClassQuery(1, 1)); }) == ErrorCode::NotInClass);
  }

  TEST_CASE("the (2,3) example: T_d commutes with T, T_d* does not") {
    const ExactMatrix t = order_six_t(), td = order_six_td();
    CHECK(commutator(td, t).is_zero());
    CHECK_FALSE(commutator(adjoint(td), t).is_zero());
  }

  TEST_CASE("property: both hypotheses give all four transfers, exactly") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      for (Hypothesis h : {Hypothesis::Reverse, Hypothesis::DrazinSkew}) {
        const auto inst = gen_intertwining<Gaussian>(exact_spec(seed, 2 + seed % 5, 3), h);
        const Report r = extended_commutativity(inst, h);
        CAPTURE(seed);
        CHECK(r.verdict("base"));
        CHECK(r.verdict("hypothesis"));
        CHECK(r.verdict("conclusion"));
      }
    }
  }

  TEST_CASE("property: the float kernel meets the same conclusion") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      for (Hypothesis h : {Hypothesis::Reverse, Hypothesis::DrazinSkew}) {
        const auto inst = gen_intertwining<Complex>(float_spec(seed, 2 + seed % 7, 3), h);
        CHECK(extended_commutativity(inst, h).verdict("conclusion"));
      }
    }
  }

  TEST_CASE("property: Fuglede transfer for commuting X") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const GenSpec spec = exact_spec(seed, 2 + seed % 5, 3);
      const ExactMatrix t = gen_dn_rotated<Gaussian>(spec, ClassQuery(1, 1));
      const ExactMatrix x = gen_commuting_with(t, spec.child(7));
      REQUIRE(commutator(t, x).is_zero());
      const Report r = fuglede_drazin(t, x, ClassQuery(1, 1));
      CHECK(r.verdict("transfer"));
      CHECK(commutator(adjoint(drazin_inverse(t).dinv), x).is_zero());
    }
  }

  TEST_CASE("Fuglede transfer needs a commuting X") {
    const ExactMatrix t = rotation_shift_t();
    const ExactMatrix x = ExactMatrix{{g(1), g(0), g(0), g(0)}, {g(0), g(0), g(0), g(0)}, {g(0), g(0), g(0), g(0)}, {g(0), g(0), g(0), g(0)}};
    CHECK(code_of([&] { fuglede_drazin(t, x, ClassQuery(1, 1)); }) == ErrorCode::NotCommuting);
  }

  TEST_CASE("property: quasiaffinity similarity, both kernels") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const ClassQuery cq(1 + seed % 3, 1 + (seed / 3) % 3);
      const auto ex = gen_quasiaffinity<Gaussian>(exact_spec(seed, 2 + seed % 4, 3), cq);
      const Report re = quasiaffinity_similarity(ex.s, ex.t, ex.x, cq);
      CAPTURE(seed);
      CHECK(re.all());
      const auto fl = gen_quasiaffinity<Complex>(float_spec(seed, 2 + seed % 6, 3), cq);
      CHECK(quasiaffinity_similarity(fl.s, fl.t, fl.x, cq).all());
    }
  }

  TEST_CASE("quasiaffinity preconditions") {
    const ExactMatrix t = rotation_shift_t();
    CHECK(code_of([&] { quasiaffinity_similarity(t, t, ExactMatrix(4, 4), ClassQuery(1, 1)); }) == ErrorCode::NotInvertible);
    ExactMatrix x = ExactMatrix::identity(4);
    x(0, 3) = g(1);
    CHECK(code_of([&] { quasiaffinity_similarity(t, t, x, ClassQuery(1, 1)); }) == ErrorCode::NotIntertwining);
    CHECK(code_of([&] { quasiaffinity_similarity(order_six_t(), order_six_t(), ExactMatrix::identity(2), ClassQuery(1, 1)); }) ==
          ErrorCode::NotInClass);
  }

  TEST_CASE("eigenvalue pairing matches brute force over permutations") {
    SplitMix64 rng(72);
    for (int it = 0; it < 200; ++it) {
      const auto n = static_cast<std::size_t>(rng.uniform_int(1, 6));
      std::vector<Complex> x(n), y(n);
      for (auto& v : x) v = random_scalar<Complex>(rng, 2.0);
      for (std::size_t i = 0; i < n; ++i) y[i] = x[(i + 1) % n] + random_scalar<Complex>(rng, 0.01);
      CHECK(max_paired_eigenvalue_distance(x, y) == doctest::Approx(oracle::brute_force_pairing(x, y)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(max_paired_eigenvalue_distance({1.0}, {}), Error);
  }
}
