#include <doctest.h>

#include "drazinkit/blockops.hpp"
#include "drazinkit/classify.hpp"
#include "drazinkit/drazin.hpp"
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

TEST_SUITE("blockops") {
  TEST_CASE("invertible diagonal blocks: X = -T^{-1} C S^{-1}") {
    const auto bd = block_drazin_inverse(forbidden_coupling_triple());
    CHECK(bd.index_t == 0);
    CHECK(bd.index_s == 0);
    CHECK(bd.x == ExactMatrix{{g(0), g(0)}, {g(-1), g(0)}});
    CHECK(bd.dinv == oracle::drazin_inverse(assemble(forbidden_coupling_triple())));
  }

  TEST_CASE("zero coupling gives the direct sum") {
    const BlockTriple<Gaussian> bt{rotation_shift_t(), ExactMatrix(4, 2), order_six_t()};
    const auto bd = block_drazin_inverse(bt);
    CHECK(bd.x.is_zero());
    CHECK(bd.dinv == direct_sum(drazin_inverse(rotation_shift_t()).dinv, order_six_td()));
  }

  TEST_CASE("assemble and validate") {
    const ExactMatrix a = assemble(forbidden_coupling_triple());
    CHECK(a.block(0, 0, 2, 2) == order_six_t());
    CHECK(a.block(2, 0, 2, 2).is_zero());
    CHECK_THROWS_AS(validate(BlockTriple<Gaussian>{order_six_t(), ExactMatrix(3, 2), order_six_t()}), Error);
    CHECK_THROWS_AS(validate(BlockTriple<Gaussian>{ExactMatrix(2, 3), ExactMatrix(2, 2), order_six_t()}), Error);
  }

  TEST_CASE("property: the block formula matches the polynomial-route Drazin inverse") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      const auto bt = gen_random_triple<Gaussian>(exact_spec(seed, 1 + seed % 4, 3));
      CAPTURE(seed);
      CHECK(block_drazin_inverse(bt).dinv == oracle::drazin_inverse(assemble(bt)));
    }
  }

  TEST_CASE("property: float block formula within 1e-9 of the generic route") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      const auto bt = gen_random_triple<Complex>(float_spec(seed, 1 + seed % 6, 3));
      CAPTURE(seed);
      CHECK(relative_distance(block_drazin_inverse(bt).dinv, drazin_inverse(assemble(bt)).dinv) <= 1e-9);
    }
  }

  TEST_CASE("property: adapted coupling reassembles C exactly") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto bt = gen_random_triple<Gaussian>(exact_spec(seed + 50, 1 + seed % 4, 2));
      const auto ac = adapt_coupling(bt);
      CHECK(ac.reassemble() == bt.c);
      CHECK(ac.c11.rows() == ac.row_core_dim);
      CHECK(ac.c11.cols() == ac.col_core_dim);
    }
  }

  TEST_CASE("simple-pole equivalence: fixtures by hand") {
    // T = 1 (+) i (+) 0, S = 2 (+) 0: C only touches the nil/nil corner
    const ExactMatrix t = ExactMatrix::diagonal({g(1), g(0, 1), g(0)});
    const ExactMatrix s = ExactMatrix::diagonal({g(2), g(0)});
    ExactMatrix c(3, 2);
    c(2, 1) = g(3);
    const Report ok = simple_pole_equivalence(BlockTriple<Gaussian>{t, c, s});
    CHECK(ok.verdict("lhs"));
    CHECK(ok.verdict("rhs"));
    CHECK(ok.verdict("equivalent"));
    CHECK(ok.verdict("strict_simple_pole"));

    c(0, 0) = g(1);
    const Report bad = simple_pole_equivalence(BlockTriple<Gaussian>{t, c, s});
    CHECK_FALSE(bad.verdict("lhs"));
    CHECK_FALSE(bad.verdict("rhs"));
    CHECK(bad.verdict("equivalent"));
  }

  TEST_CASE("property: simple-pole equivalence in both directions") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const bool admissible = seed % 2 == 0;
      const auto bt = gen_block_triple<Gaussian>(exact_spec(seed, 4, 1), ClassQuery(1, 1), admissible);
      const Report r = simple_pole_equivalence(bt);
      CAPTURE(seed);
      CHECK(r.verdict("equivalent"));
      CHECK(r.verdict("rhs") == admissible);
      CHECK(r.verdict("lhs") == admissible);
    }
  }

  TEST_CASE("simple-pole equivalence preconditions") {
    const ExactMatrix shift{{g(0), g(1)}, {g(0), g(0)}};
    CHECK(code_of([&] { simple_pole_equivalence(BlockTriple<Gaussian>{shift, ExactMatrix(2, 1), ExactMatrix{{g(1)}}}); }) ==
          ErrorCode::IndexTooHigh);
    CHECK(code_of([&] { simple_pole_equivalence(forbidden_coupling_triple()); }) == ErrorCode::NotInClass);
  }

  TEST_CASE("power-class sufficiency: admissible coupling keeps the class and X = 0") {
    for (std::uint64_t seed = 0; seed < 45; ++seed) {
      const ClassQuery cq(1 + seed % 3, 1 + (seed / 3) % 3);
      const auto bt = gen_block_triple<Gaussian>(exact_spec(seed, 4, 3), cq, true);
      const Report r = coupling_sufficiency(bt, cq);
      CAPTURE(seed);
      CHECK(r.all());
      CHECK(block_drazin_inverse(bt).x.is_zero());
    }
  }

  TEST_CASE("the (2,3) triple has a forbidden coupling and leaves the class") {
    const auto bt = forbidden_coupling_triple();
    CHECK(code_of([&] { coupling_sufficiency(bt, ClassQuery(2, 3)); }) == ErrorCode::CouplingNotAdmissible);
    CHECK_FALSE(is_dn(assemble(bt), ClassQuery(2, 3)).verdict("dn"));
    CHECK(is_dn(bt.t, ClassQuery(2, 3)).verdict("dn"));
  }
}
