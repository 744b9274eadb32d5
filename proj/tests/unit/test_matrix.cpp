#include <doctest.h>

#include "drazinkit/linalg.hpp"
#include "helpers.hpp"

using namespace drazinkit;
using namespace testing_support;

TEST_SUITE("matrix") {
  TEST_CASE("the (2,3) example: T_d^2 T*^3 = T*^3 T_d^2 and T T_d = I") {
    const ExactMatrix t = order_six_t();
    const ExactMatrix td = order_six_td();
    CHECK(t * td == ExactMatrix::identity(2));
    CHECK(commutator(power(td, 2), power(adjoint(t), 3)).is_zero());
    CHECK(power(adjoint(td), 3) == -ExactMatrix::identity(2));
  }

  TEST_CASE("direct sum and blocks") {
    const ExactMatrix m{{g(0), g(1)}, {g(-1), g(0)}};
    const ExactMatrix n{{g(0), g(1)}, {g(0), g(0)}};
    const ExactMatrix t = direct_sum(m, n);
    CHECK(t == rotation_shift_t());
    CHECK(t.block(0, 0, 2, 2) == m);
    CHECK(t.block(2, 2, 2, 2) == n);
    CHECK(t.block(0, 2, 2, 2).is_zero());
    CHECK(hcat(m, n).cols() == 4);
  }

  TEST_CASE("shape errors") {
    const ExactMatrix a(2, 3);
    CHECK_THROWS_AS(a * a, Error);
    CHECK_THROWS_AS(a + ExactMatrix(3, 2), Error);
    CHECK_THROWS_AS(a.block(1, 1, 2, 2), Error);
    CHECK_THROWS_AS(ExactMatrix(2, 2, std::vector<Gaussian>(3)), Error);
  }

  TEST_CASE("power and trace") {
    const ExactMatrix t = order_six_t();
    CHECK(power(t, 0) == ExactMatrix::identity(2));
    CHECK(power(t, 3) == -ExactMatrix::identity(2));
    CHECK(power(t, 6) == ExactMatrix::identity(2));
    CHECK(trace(t) == g(1));
  }

  TEST_CASE("property: adjoint reverses products") {
    SplitMix64 rng(21);
    for (int k = 0; k < 50; ++k) {
      const auto n = static_cast<std::size_t>(rng.uniform_int(1, 5));
      const auto p = static_cast<std::size_t>(rng.uniform_int(1, 5));
      const ExactMatrix a = random_matrix<Gaussian>(rng, n, p, 4.0);
      const ExactMatrix b = random_matrix<Gaussian>(rng, p, n, 4.0);
      CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
      CHECK(adjoint(adjoint(a)) == a);
    }
  }

  TEST_CASE("property: kron mixed product") {
    SplitMix64 rng(22);
    for (int k = 0; k < 25; ++k) {
      const ExactMatrix a = random_matrix<Gaussian>(rng, 2, 2, 3.0);
      const ExactMatrix b = random_matrix<Gaussian>(rng, 3, 3, 3.0);
      const ExactMatrix c = random_matrix<Gaussian>(rng, 2, 2, 3.0);
      const ExactMatrix d = random_matrix<Gaussian>(rng, 3, 3, 3.0);
      CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
      CHECK(adjoint(kron(a, b)) == kron(adjoint(a), adjoint(b)));
    }
  }

  TEST_CASE("property: float arithmetic tracks exact arithmetic") {
    SplitMix64 rng(23);
    for (int k = 0; k < 50; ++k) {
      const ExactMatrix a = random_matrix<Gaussian>(rng, 4, 4, 4.0);
      const ExactMatrix b = random_matrix<Gaussian>(rng, 4, 4, 4.0);
      CHECK(relative_distance(to_float(a) * to_float(b), to_float(a * b)) <= 1e-12);
      CHECK(relative_distance(commutator(to_float(a), to_float(b)), to_float(commutator(a, b))) <= 1e-12);
    }
  }
}
