#include <doctest.h>

#include "drazinkit/drazin.hpp"
#include "drazinkit/linalg.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace drazinkit;
using namespace testing_support;

TEST_SUITE("drazin") {
  TEST_CASE("rotation plus shift: index 2 and T_d = M^{-1} (+) 0") {
    const ExactMatrix t = rotation_shift_t();
    const auto d = drazin_inverse(t);
    CHECK(d.index == 2);
    const ExactMatrix expected = direct_sum(ExactMatrix{{g(0), g(-1)}, {g(1), g(0)}}, ExactMatrix(2, 2));
    CHECK(d.dinv == expected);
    CHECK(d.idempotent == direct_sum(ExactMatrix(2, 2), ExactMatrix::identity(2)));
    CHECK(verify_drazin_axioms(t, d).all());
  }

  TEST_CASE("invertible, zero and nilpotent matrices") {
    const auto inv = drazin_inverse(order_six_t());
    CHECK(inv.index == 0);
    CHECK(inv.dinv == order_six_td());

    const auto zero = drazin_inverse(ExactMatrix(2, 2));
    CHECK(zero.index == 1);
    CHECK(zero.dinv.is_zero());

    const ExactMatrix shift{{g(0), g(1), g(0)}, {g(0), g(0), g(1)}, {g(0), g(0), g(0)}};
    const auto nil = drazin_inverse(shift);
    CHECK(nil.index == 3);
    CHECK(nil.dinv.is_zero());
    CHECK(nilpotency_order(shift) == 3);
    CHECK(drazin_index(to_float(shift)) == 3);
  }

  TEST_CASE("the core-nilpotent route agrees with the polynomial route") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
      const GenSpec spec = exact_spec(seed, 1 + seed % 6, 3);
      const ExactMatrix a = gen_drazin_matrix<Gaussian>(spec);
      CAPTURE(seed);
      CHECK(drazin_inverse(a).dinv == oracle::drazin_inverse(a));
    }
  }

  TEST_CASE("property: float Drazin inverse stays within 1e-9 of the exact one") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      const ExactMatrix a = gen_drazin_matrix<Gaussian>(exact_spec(seed + 1000, 1 + seed % 6, 3));
      const auto exact = drazin_inverse(a);
      const auto fl = drazin_inverse(to_float(a));
      CAPTURE(seed);
      CHECK(fl.index == exact.index);
      CHECK(relative_distance(fl.dinv, to_float(exact.dinv)) <= 1e-9);
    }
  }

  TEST_CASE("property: uniqueness across adapted bases") {
    SplitMix64 rng(41);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const ExactMatrix a = gen_drazin_matrix<Gaussian>(exact_spec(seed + 2000, 2 + seed % 5, 2));
      const auto dec = core_nilpotent(a);
      // mix columns within each invariant subspace
      const std::size_t r = dec.core_dim;
      const std::size_t n = a.rows();
      ExactMatrix mix = ExactMatrix::identity(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if ((i < r) == (j < r)) mix(i, j) = random_scalar<Gaussian>(rng, 3.0);
      const ExactMatrix other = dec.basis * mix;
      CHECK(drazin_from_basis(a, other, r) == drazin_inverse(a).dinv);
    }
  }

  TEST_CASE("property: (A^k)_d = (A_d)^k and the spectral idempotent is a projection") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const ExactMatrix a = gen_drazin_matrix<Gaussian>(exact_spec(seed + 3000, 1 + seed % 6, 3));
      const auto d = drazin_inverse(a);
      const ExactMatrix e = d.idempotent;
      const std::size_t n = a.rows();
      CAPTURE(seed);
      for (unsigned k = 1; k <= 3; ++k) CHECK(drazin_inverse(power(a, k)).dinv == power(d.dinv, k));
      CHECK(e * e == e);
      CHECK(e == ExactMatrix::identity(n) - a * d.dinv);
      CHECK(commutator(e, a).is_zero());
      CHECK(power(a * e, static_cast<unsigned>(n)).is_zero());
      CHECK(rank(e) == n - rank(power(a, static_cast<unsigned>(n))));
      CHECK(verify_drazin_axioms(a, d).all());
    }
  }

  TEST_CASE("axioms reject a wrong candidate") {
    DrazinData<Gaussian> wrong = drazin_inverse(rotation_shift_t());
    wrong.dinv = ExactMatrix::identity(4);
    const Report r = verify_drazin_axioms(rotation_shift_t(), wrong);
    CHECK_FALSE(r.all());
  }

  TEST_CASE("[[1,1],[0,0]]: idempotent, index 1, oblique splitting") {
    const ExactMatrix a{{g(1), g(1)}, {g(0), g(0)}};
    const auto d = drazin_inverse(a);
    CHECK(d.index == 1);
    CHECK(d.dinv == a);
    CHECK_FALSE(check_orthogonal_splitting(core_nilpotent(a)).verdict("orthogonal_splitting"));
    CHECK(check_orthogonal_splitting(core_nilpotent(rotation_shift_t())).verdict("orthogonal_splitting"));
  }

  TEST_CASE("nearly parallel core and nil subspaces are ill-conditioned") {
    // oblique projector: range spanned by e1, kernel spanned by (1, 1e-13)
    const FloatMatrix a{{1.0, -1e13}, {0.0, 0.0}};
    try {
      (void)drazin_inverse(a);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IllConditionedBasis);
    }
  }

  TEST_CASE("non-square input") {
    CHECK_THROWS_AS(drazin_inverse(ExactMatrix(2, 3)), Error);
  }
}
