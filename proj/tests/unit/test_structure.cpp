#include <doctest.h>

#include "drazinkit/classify.hpp"
#include "drazinkit/drazin.hpp"
#include "drazinkit/linalg.hpp"
#include "drazinkit/structure.hpp"
#include "helpers.hpp"

using namespace drazinkit;
using namespace testing_support;

TEST_SUITE("structure") {
  TEST_CASE("adjoint inside an orthonormal basis is the plain adjoint") {
    SplitMix64 rng(61);
    const ExactMatrix u = random_unitary<Gaussian>(rng, 3);
    const ExactMatrix x = random_matrix<Gaussian>(rng, 3, 3, 3.0);
    CHECK(adjoint_in_basis(x, u) == adjoint(x));
  }

  TEST_CASE("adjoint in a basis satisfies <Xu, v>_G = <u, X# v>_G") {
    SplitMix64 rng(62);
    const ExactMatrix b = random_matrix<Gaussian>(rng, 4, 2, 3.0);
    const ExactMatrix x = random_matrix<Gaussian>(rng, 2, 2, 3.0);
    const ExactMatrix gram = adjoint(b) * b;
    const ExactMatrix xs = adjoint_in_basis(x, b);
    CHECK(adjoint(x) * gram == gram * xs);
  }

  TEST_CASE("[[1,1],[0,0]]: core restriction is normal but the splitting is oblique") {
    const ExactMatrix a{{g(1), g(1)}, {g(0), g(0)}};
    const Report r = core_restriction_equivalence(a, ClassQuery(1, 1));
    CHECK_FALSE(r.verdict("operator_dn"));
    CHECK(r.verdict("core_dn"));
    CHECK_FALSE(r.verdict("orthogonal_splitting"));
    CHECK(r.verdict("equivalent"));
  }

  TEST_CASE("property: core restriction equivalence on members and non-members") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const ClassQuery cq(1 + seed % 3, 1 + (seed / 3) % 3);
      const ExactMatrix member = gen_dn_rotated<Gaussian>(exact_spec(seed, 2 + seed % 4), cq);
      const Report rm = core_restriction_equivalence(member, cq);
      CHECK(rm.verdict("operator_dn"));
      CHECK(rm.verdict("equivalent"));

      const ExactMatrix other = gen_drazin_matrix<Gaussian>(exact_spec(seed + 100, 2 + seed % 4));
      CHECK(core_restriction_equivalence(other, cq).verdict("equivalent"));
      CHECK(core_restriction_equivalence(to_float(member), cq).verdict("equivalent"));
    }
  }

  TEST_CASE("similarity certificate for the (2,3) example in the float kernel") {
    const FloatMatrix t = to_float(order_six_t());
    const auto cert = similarity_to_normal(t, ClassQuery(2, 3));
    const FloatMatrix td = drazin_inverse(t).dinv;
    const Report r = verify_certificate(td, cert, Tolerance{0.0, 1e-8});
    CHECK(r.verdict("equation"));
    CHECK(r.verdict("normal"));
    CHECK(cert.residual <= 1e-8);
  }

  TEST_CASE("property: similarity certificates on rotated class members") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const ClassQuery cq(1 + seed % 3, 1 + (seed / 3) % 3);
      const FloatMatrix a = gen_dn_rotated<Complex>(float_spec(seed, 2 + seed % 6), cq);
      const auto cert = similarity_to_normal(a, cq);
      const Report r = verify_certificate(drazin_inverse(a).dinv, cert, Tolerance{0.0, 1e-8});
      CAPTURE(seed);
      CHECK(r.all());
    }
  }

  TEST_CASE("exact certificates: identity when A_d is normal, refused otherwise") {
    const auto cert = similarity_to_normal(rotation_shift_t(), ClassQuery(1, 1));
    CHECK(cert.S == ExactMatrix::identity(4));
    CHECK(verify_certificate(drazin_inverse(rotation_shift_t()).dinv, cert, Tolerance::verdict_default()).all());
    try {
      (void)similarity_to_normal(order_six_t(), ClassQuery(2, 3));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ExactKernelUnsupported);
    }
    CHECK_THROWS_AS(similarity_to_normal(order_six_t(), ClassQuery(1, 1)), Error);
  }

  TEST_CASE("property: contractive m-partial isometries in the class") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const ClassQuery cq(1 + seed % 3, 1 + (seed / 3) % 3);
      const ExactMatrix a = gen_partial_isometry_contraction<Gaussian>(exact_spec(seed, 2 + seed % 5, 3));
      const Report r = partial_isometry_structure(a, cq);
      CAPTURE(seed);
      CHECK(r.verdict("core_unitary"));
      CHECK(r.verdict("orthogonal_splitting"));
      CHECK(r.verdict("dn_1_1"));
      CHECK(r.verdict("shift"));
    }
  }

  TEST_CASE("partial isometry structure preconditions") {
    try {
      (void)partial_isometry_structure(ExactMatrix{{g(2)}}, ClassQuery(1, 1));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotInClass);
    }
  }
}
