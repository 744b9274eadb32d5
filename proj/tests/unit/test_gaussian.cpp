#include <doctest.h>

#include <sstream>

#include "drazinkit/errors.hpp"
#include "drazinkit/testgen.hpp"
#include "helpers.hpp"

using namespace drazinkit;
using testing_support::g;
using testing_support::q;

TEST_SUITE("gaussian") {
  TEST_CASE("field arithmetic on Gaussian rationals") {
    const Gaussian a = g(1, 2);
    const Gaussian b = g(3, -1);
    CHECK(a + b == g(4, 1));
    CHECK(a - b == g(-2, 3));
    CHECK(a * b == g(5, 5));
    CHECK((a / b) * b == a);
    CHECK(Gaussian::i() * Gaussian::i() == g(-1));
    CHECK(a.conj() == g(1, -2));
    CHECK(a.norm() == 5);
  }

  TEST_CASE("equality is canonical") {
    CHECK(Gaussian(mpq_class(2, 4)) == q(1, 2));
    CHECK(Gaussian(mpq_class(-3, 6), mpq_class(4, 2)) == Gaussian(mpq_class(-1, 2), mpq_class(2)));
  }

  TEST_CASE("division by zero is a singular operation") {
    try {
      (void)(g(1) / g(0));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SingularMatrix);
    }
  }

  TEST_CASE("rational text round trip") {
    CHECK(rational_string(parse_rational("6/4")) == "3/2");
    CHECK(rational_string(parse_rational("-7")) == "-7/1");
    CHECK(rational_string(parse_rational("+2/6")) == "1/3");
    CHECK(rational_string(mpq_class(0)) == "0/1");
    for (const char* bad : {"", "1/0", "x", "1/-2", "1.5", "/3", "2/"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_rational(bad), Error);
    }
  }

  TEST_CASE("printing") {
    std::ostringstream s;
    s << g(1, -2) << " " << q(1, 2) << " " << Gaussian(0, mpq_class(3));
    CHECK(s.str() == "1-2i 1/2 3i");
  }

  TEST_CASE("property: multiplication distributes and conjugation is multiplicative") {
    SplitMix64 rng(11);
    for (int k = 0; k < 200; ++k) {
      const Gaussian a = random_scalar<Gaussian>(rng, 5.0);
      const Gaussian b = random_scalar<Gaussian>(rng, 5.0);
      const Gaussian c = random_scalar<Gaussian>(rng, 5.0);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a * b).norm() == a.norm() * b.norm());
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}
