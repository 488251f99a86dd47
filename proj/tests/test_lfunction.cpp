#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bondzeta/error.hpp"
#include "bondzeta/instance.hpp"
#include "bondzeta/lfunction.hpp"
#include "bondzeta/scattering.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace bondzeta;

namespace {

constexpr double kPi = std::numbers::pi;

Graph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

EdgeWeightSystem triangle_weights(const Graph& g, double a, double b, double alpha) {
  return EdgeWeightSystem::from_edges(g, {b, b, b}, {alpha, alpha, -alpha}, {a, a, a});
}

Instance s3_fixture() { return load_instance(BONDZETA_TEST_DATA "/s3_fixture.json"); }

}  // namespace

TEST_SUITE("lfunction") {

TEST_CASE("trivial representation gives the secular determinant") {
  testgen::Rng rng(71);
  const Instance s3 = s3_fixture();
  const UnitaryRep triv = trivial_rep(*s3.group);
  for (int t = 0; t < 5; ++t) {
    const cplx lambda = rng.in_disk(3.0);
    CHECK(relative_error(l_function_reciprocal(s3.graph, s3.weights, *s3.voltages, triv, lambda),
                         secular_det(s3.graph, s3.weights, lambda)) < 1e-12);
  }
  const auto c = testgen::random_case_in(rng, 2, 6, 9);
  const auto [one, chars] = cyclic_group(1);
  const auto alpha = VoltageAssignment::trivial(c.graph, one);
  const cplx lambda = rng.in_disk(3.0);
  CHECK(relative_error(theorem7_rhs(c.graph, c.weights, alpha, chars.reps[0], lambda),
                       theorem4_rhs(c.graph, c.weights, lambda)) < 1e-12);
}

TEST_CASE("triangle characters match the closed forms") {
  testgen::Rng rng(72);
  const Graph g = triangle();
  const auto [z3, chars] = cyclic_group(3);
  const auto volt = VoltageAssignment::from_edges(g, z3, {1, 0, 0});
  for (auto [a, b, alpha] : {std::tuple{0.0, 1.0, 0.0}, {1.0, 2.0, 0.3}, {-1.0, 0.5, -0.7}}) {
    const auto w = triangle_weights(g, a, b, alpha);
    for (int t = 0; t < 6; ++t) {
      const cplx lambda = rng.in_disk(4.0);
      for (int k = 0; k < 3; ++k) {
        const cplx want = oracle::triangle_factor(a, b, alpha + k * kPi / 3, lambda);
        CHECK(relative_error(l_function_reciprocal(g, w, volt, chars.reps[k], lambda), want) <
              1e-11);
        CHECK(relative_error(theorem7_rhs(g, w, volt, chars.reps[k], lambda), want) < 1e-11);
      }
    }
  }
  // a = 0, b = 1, alpha = 0, lambda = 0: (-8/(-2i)^3)(-2 cos(2 pi/3)) = i
  const auto w0 = triangle_weights(g, 0.0, 1.0, 0.0);
  CHECK(std::abs(theorem7_rhs(g, w0, volt, chars.reps[1], 0.0) - kI) < 1e-14);
  const LFunctionValue v = l_function(g, w0, volt, chars.reps[1], 0.0);
  CHECK(std::abs(v.value() + kI) < 1e-14);
  CHECK(v.rep == "chi1");
}

TEST_CASE("L-function determinant formula on random instances") {
  testgen::Rng rng(73);
  const Instance s3 = s3_fixture();
  std::vector<cplx> samples;
  for (int s = 0; s < 16; ++s) samples.push_back(rng.in_disk(3.0));
  for (const auto& rho : s3.irreps().reps)
    CHECK(verify_theorem7(s3.graph, s3.weights, *s3.group, *s3.voltages, rho, samples).pass());

  for (std::size_t order : {3, 4}) {
    const auto [grp, chars] = cyclic_group(order);
    for (int t = 0; t < 4; ++t) {
      const auto c = testgen::random_case_in(rng, 2, 6, 9);
      std::vector<GroupElement> v(c.graph.num_edges());
      for (auto& x : v) x = rng.index(0, order - 1);
      const auto alpha = VoltageAssignment::from_edges(c.graph, grp, v);
      for (const auto& rho : chars.reps)
        CHECK(verify_theorem7(c.graph, c.weights, grp, alpha, rho, samples).pass());
    }
  }
}

TEST_CASE("cover determinant is the product of L-functions") {
  testgen::Rng rng(74);
  const Graph g = triangle();
  const auto [z3, chars] = cyclic_group(3);
  const auto volt = VoltageAssignment::from_edges(g, z3, {1, 0, 0});
  const auto w = triangle_weights(g, 1.0, 2.0, 0.3);
  const Report rep = verify_corollary1(g, w, z3, volt, chars, rng.in_disk(4.0));
  CHECK(rep.pass());

  const auto c = testgen::random_case_in(rng, 2, 6, 9);
  const auto [one, triv] = cyclic_group(1);
  const cplx lambda = rng.in_disk(3.0);
  const Report single =
      verify_corollary1(c.graph, c.weights, one, VoltageAssignment::trivial(c.graph, one), triv, lambda);
  CHECK(single.pass());
  CHECK(relative_error(single.records[0].lhs, theorem4_rhs(c.graph, c.weights, lambda)) < 1e-9);

  const Instance s3 = s3_fixture();
  for (int t = 0; t < 4; ++t)
    CHECK(verify_corollary1(s3.graph, s3.weights, *s3.group, *s3.voltages, s3.irreps(),
                            rng.in_disk(3.0))
              .pass());
  std::size_t total = 0;
  for (const auto& rho : s3.irreps().reps) total += rho.degree * 2 * s3.graph.num_edges() * rho.degree;
  CHECK(total == 2 * s3.graph.num_edges() * s3.group->order());

  IrrepSet partial{{s3.irreps().reps[0], s3.irreps().reps[2]}};
  CHECK_THROWS_AS(verify_corollary1(s3.graph, s3.weights, *s3.group, *s3.voltages, partial, 0.3),
                  RepresentationError);
  const auto [z2, c2] = cyclic_group(2);
  CHECK_THROWS_AS(verify_corollary1(g, w, z2, VoltageAssignment::trivial(g, z2), c2, 0.3),
                  CoveringError);
}

TEST_CASE("twisted proof identities") {
  testgen::Rng rng(75);
  const Instance s3 = s3_fixture();
  for (const auto& rho : s3.irreps().reps)
    CHECK(verify_twisted_identities(s3.graph, s3.weights, *s3.voltages, rho, rng.in_disk(3.0))
              .pass());
}

TEST_CASE("(1+u^2) factorization of the twisted determinant") {
  testgen::Rng rng(76);
  const Instance s3 = s3_fixture();
  const std::size_t n = s3.graph.num_vertices();
  const std::size_t m = s3.graph.num_edges();
  for (const auto& rho : s3.irreps().reps) {
    const std::size_t d = rho.degree;
    const cplx lambda(rng.uniform(-2, 2), rng.uniform(0.2, 2));
    const TwistedProofMatrices t = twisted_proof_matrices(s3.graph, s3.weights, *s3.voltages, rho, lambda);
    const PolyCoeffs core = det_poly(t.u_rho, 2 * m * d);
    const auto lhs = oracle::poly_mul(
        std::vector<cplx>(core.coefficients().begin(), core.coefficients().end()),
        oracle::one_plus_u2_pow(n * d));
    const ComplexMatrix xh = t.x_d * t.h_rho;
    const ComplexMatrix xd = t.x_d * t.d_gamma;
    const auto inner = oracle::interpolate(
        [&](cplx z) {
          return lu_det((1.0 + z * z) * ComplexMatrix::identity(n * d) + z * xh +
                        kI * z * z * xd);
        },
        2 * n * d + 1);
    const auto rhs = oracle::poly_mul(oracle::one_plus_u2_pow(m * d), inner);
    REQUIRE(lhs.size() == rhs.size());
    for (std::size_t k = 0; k < lhs.size(); ++k)
      CHECK(std::abs(lhs[k] - rhs[k]) < 1e-8 * std::max(1.0, std::abs(rhs[k])));
  }
}

}
