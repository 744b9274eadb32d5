#include <doctest.h>

#include "drazinkit/classify.hpp"
#include "drazinkit/drazin.hpp"
#include "drazinkit/linalg.hpp"
#include "drazinkit/testgen.hpp"
#include "helpers.hpp"

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

const std::vector<std::pair<unsigned, unsigned>> kClasses = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2},
                                                              {2, 3}, {3, 1}, {3, 2}, {3, 3}};

}  // namespace

TEST_SUITE("testgen") {
  TEST_CASE("SplitMix64 reproduces the reference stream") {
    SplitMix64 rng(0);
    CHECK(rng() == 0xE220A8397B1DCDAFULL);
    CHECK(rng() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng() == 0x06C45D188009454FULL);
    CHECK(SplitMix64::algorithm == "splitmix64");
  }

  TEST_CASE("bounded draws stay in range and hit both ends") {
    SplitMix64 rng(5);
    bool lo = false, hi = false;
    for (int k = 0; k < 2000; ++k) {
      const auto v = rng.uniform_int(-3, 3);
      REQUIRE(v >= -3);
      REQUIRE(v <= 3);
      lo |= v == -3;
      hi |= v == 3;
      const double u = rng.uniform01();
      REQUIRE(u >= 0.0);
      REQUIRE(u < 1.0);
    }
    CHECK(lo);
    CHECK(hi);
    CHECK_THROWS_AS(rng.uniform_int(2, 1), Error);
  }

  TEST_CASE("generation is a pure function of the GenSpec") {
    const GenSpec spec = exact_spec(99, 5, 3);
    CHECK(gen_drazin_matrix<Gaussian>(spec) == gen_drazin_matrix<Gaussian>(spec));
    CHECK(gen_dn_rotated<Gaussian>(spec, ClassQuery(2, 3)) == gen_dn_rotated<Gaussian>(spec, ClassQuery(2, 3)));
    CHECK(gen_drazin_matrix<Gaussian>(spec) != gen_drazin_matrix<Gaussian>(exact_spec(100, 5, 3)));
    const GenSpec fs = float_spec(7, 6);
    CHECK(gen_dn_rotated<Complex>(fs, ClassQuery(1, 1)) == gen_dn_rotated<Complex>(fs, ClassQuery(1, 1)));
    CHECK(spec.child(1).seed == spec.child(1).seed);
    CHECK(spec.child(1).seed != spec.child(2).seed);
  }

  TEST_CASE("spec validation and kernel checks") {
    GenSpec bad = exact_spec(1, 0);
    CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidArgument);
    bad = exact_spec(1, 3, 4);
    CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { gen_drazin_matrix<Complex>(exact_spec(1, 3)); }) == ErrorCode::KernelMismatch);
    CHECK(code_of([&] { gen_intertwining<Gaussian>(exact_spec(1, 3), Hypothesis::None); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("property: every generated class member passes the class check") {
    for (std::uint64_t seed = 0; seed < 90; ++seed) {
      const auto [n, m] = kClasses[seed % kClasses.size()];
      const ClassQuery cq(n, m);
      const GenSpec spec = exact_spec(seed, 1 + seed % 6, 3);
      const auto inst = gen_dn_instance<Gaussian>(spec, cq);
      CAPTURE(seed);
      CHECK(inst.op.rows() == spec.size);
      CHECK(is_dn(inst.op, cq).verdict("dn"));
      CHECK(is_dn(gen_dn_rotated<Gaussian>(spec, cq), cq).verdict("dn"));
      CHECK(nilpotency_order(inst.nil) == inst.index);
      CHECK(inst.index <= spec.index_cap);
      CHECK(rank(inst.core) == inst.core.rows());
      CHECK(is_dn(gen_dn_rotated<Complex>(float_spec(seed, 1 + seed % 8, 3), cq), cq).verdict("dn"));
    }
  }

  TEST_CASE("root-of-normal cores are not normal and not in (1,1)") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const ClassQuery cq(2 + seed % 2, 1 + seed % 3);
      const auto inst = gen_dn_instance<Gaussian>(exact_spec(seed, 2 + seed % 4, 2), cq, CoreVariant::RootOfNormal);
      CAPTURE(seed);
      CHECK(is_dn(inst.op, cq).verdict("dn"));
      CHECK_FALSE(is_normal(inst.core).verdict("normal"));
      CHECK_FALSE(is_dn(inst.op, ClassQuery(1, 1)).verdict("dn"));
    }
  }

  TEST_CASE("a non-normal core is impossible for (1,1)") {
    CHECK(code_of([&] { gen_dn<Gaussian>(exact_spec(1, 4), ClassQuery(1, 1), CoreVariant::RootOfNormal); }) ==
          ErrorCode::UnsatisfiableSpec);
    CHECK(code_of([&] { gen_dn<Gaussian>(exact_spec(1, 1), ClassQuery(2, 2), CoreVariant::RootOfNormal); }) ==
          ErrorCode::UnsatisfiableSpec);
  }

  TEST_CASE("random Drazin matrices respect the index cap") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const GenSpec spec = exact_spec(seed, 1 + seed % 7, seed % 4);
      CHECK(drazin_index(gen_drazin_matrix<Gaussian>(spec)) <= spec.index_cap);
    }
  }

  TEST_CASE("commuting partners commute exactly") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const GenSpec spec = exact_spec(seed, 1 + seed % 5, 2);
      const ExactMatrix t = gen_drazin_matrix<Gaussian>(spec);
      CHECK(commutator(t, gen_commuting_with(t, spec.child(3))).is_zero());
    }
  }

  TEST_CASE("block triples honour the admissibility request") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const ClassQuery cq(1 + seed % 3, 1 + (seed / 3) % 3);
      const bool want = seed % 2 == 0;
      const auto bt = gen_block_triple<Gaussian>(exact_spec(seed, 4, 2), cq, want);
      CHECK(adapt_coupling(bt).admissible() == want);
      CHECK(is_dn(bt.t, cq).verdict("dn"));
      CHECK(is_dn(bt.s, cq).verdict("dn"));
    }
  }

  TEST_CASE("partial isometry generator output") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const ExactMatrix a = gen_partial_isometry_contraction<Gaussian>(exact_spec(seed, 1 + seed % 6, 3));
      CHECK(is_m_partial_isometry(a, 1).verdict("m_partial_isometry"));
      CHECK(is_contraction(a).verdict("contraction"));
    }
  }
}
