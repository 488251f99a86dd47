#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "bondzeta/covering.hpp"
#include "bondzeta/error.hpp"
#include "bondzeta/instance.hpp"
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

FiniteGroup trivial_group() { return cyclic_group(1).first; }

bool is_cycle_graph(const Graph& g) {
  if (!g.connected() || g.num_edges() != g.num_vertices()) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

// Voltages on random edges with a spanning tree left at the identity would
// make connectivity depend on the generator; keep drawing until connected.
VoltageAssignment connected_voltages(testgen::Rng& rng, const Graph& g, const FiniteGroup& grp) {
  for (;;) {
    std::vector<GroupElement> v(g.num_edges());
    for (auto& x : v) x = rng.index(0, grp.order() - 1);
    VoltageAssignment alpha = VoltageAssignment::from_edges(g, grp, v);
    if (derived_graph(g, grp, alpha).connected()) return alpha;
  }
}

}  // namespace

TEST_SUITE("covering") {

TEST_CASE("group validation") {
  CHECK_THROWS_AS(FiniteGroup({"1", "a"}, {{0, 1}, {1, 1}}), GroupError);
  CHECK_THROWS_AS(FiniteGroup({"a", "1"}, {{1, 0}, {0, 1}}), GroupError);
  CHECK_THROWS_AS(FiniteGroup({"1", "1"}, {{0, 1}, {1, 0}}), GroupError);
  CHECK_THROWS_AS(FiniteGroup({"1", "a", "b", "c", "d"}, {{0, 1, 2, 3, 4},
                                                          {1, 0, 3, 4, 2},
                                                          {2, 4, 0, 1, 3},
                                                          {3, 2, 4, 0, 1},
                                                          {4, 3, 1, 2, 0}}),
                  GroupError);
  const FiniteGroup z4 = cyclic_group(4).first;
  CHECK(z4.inverse(1) == 3);
  CHECK(z4.find("t^2") == 2);
  CHECK_THROWS_AS(z4.find("s"), GroupError);
}

TEST_CASE("cyclic characters") {
  const auto [z3, chars3] = cyclic_group(3);
  const cplx xi(-0.5, std::sqrt(3.0) / 2.0);
  CHECK(std::abs(chars3.reps[1].character(1) - xi) < 1e-15);
  CHECK(std::abs(chars3.reps[2].character(1) - xi * xi) < 1e-15);

  const auto [z1, chars1] = cyclic_group(1);
  CHECK(z1.order() == 1);
  REQUIRE(chars1.reps.size() == 1);
  CHECK(chars1.reps[0].is_trivial());

  const auto [z4, chars4] = cyclic_group(4);
  CHECK(chars4.reps.size() == 4);
  for (const auto& a : chars4.reps)
    for (const auto& b : chars4.reps) {
      cplx s{};
      for (GroupElement g = 0; g < 4; ++g) s += a.character(g) * std::conj(b.character(g));
      CHECK(std::abs(s / 4.0 - (a.name == b.name ? 1.0 : 0.0)) < 1e-12);
    }
  CHECK_NOTHROW(chars4.validate(z4));
}

TEST_CASE("representation validation") {
  const auto [z2, chars] = cyclic_group(2);
  UnitaryRep bad{"bad", 1, {ComplexMatrix{{1.0}}, ComplexMatrix{{2.0}}}};
  CHECK_THROWS_AS(bad.validate(z2), RepresentationError);
  UnitaryRep not_hom{"nh", 1, {ComplexMatrix{{1.0}}, ComplexMatrix{{kI}}}};
  CHECK_THROWS_AS(not_hom.validate(z2), RepresentationError);
  CHECK_THROWS_AS((IrrepSet{{chars.reps[0]}}.validate(z2)), RepresentationError);
  CHECK_THROWS_AS((IrrepSet{{chars.reps[0], chars.reps[0]}}.validate(z2)), RepresentationError);
}

TEST_CASE("voltage assignments respect inverses") {
  const Graph g = triangle();
  const FiniteGroup z3 = cyclic_group(3).first;
  CHECK_THROWS_AS(VoltageAssignment(g, z3, {1, 0, 0, 1, 0, 0}), GroupError);
  const auto alpha = VoltageAssignment::from_edges(g, z3, {1, 0, 0});
  CHECK(alpha(3) == 2);
  CHECK_THROWS_AS(VoltageAssignment::from_edges(g, z3, {5, 0, 0}), GroupError);
}

TEST_CASE("derived graphs") {
  const Graph g = triangle();
  const FiniteGroup z3 = cyclic_group(3).first;
  const DerivedGraph k9 = derived_graph(g, z3, VoltageAssignment::from_edges(g, z3, {1, 0, 0}));
  CHECK(k9.graph.num_vertices() == 9);
  CHECK(is_cycle_graph(k9.graph));

  const FiniteGroup one = trivial_group();
  const DerivedGraph same = derived_graph(g, one, VoltageAssignment::trivial(g, one));
  CHECK(same.graph.edges() == g.edges());

  const FiniteGroup z2 = cyclic_group(2).first;
  const DerivedGraph six = derived_graph(g, z2, VoltageAssignment::from_edges(g, z2, {1, 0, 0}));
  CHECK(six.graph.num_vertices() == 6);
  CHECK(six.connected());

  const DerivedGraph split = derived_graph(g, z2, VoltageAssignment::trivial(g, z2));
  CHECK_FALSE(split.connected());
}

TEST_CASE("lifted arcs follow the voltage action") {
  testgen::Rng rng(61);
  const auto [s3, irr] = [] {
    const Instance inst = load_instance(BONDZETA_TEST_DATA "/s3_fixture.json");
    return std::pair{*inst.group, inst.irreps()};
  }();
  for (int t = 0; t < 6; ++t) {
    const auto c = testgen::random_case_in(rng, 2, 5, 7);
    const Graph& g = c.graph;
    std::vector<GroupElement> v(g.num_edges());
    for (auto& x : v) x = rng.index(0, s3.order() - 1);
    const auto alpha = VoltageAssignment::from_edges(g, s3, v);
    const DerivedGraph cov = derived_graph(g, s3, alpha);
    for (ArcId e = 0; e < g.num_arcs(); ++e)
      for (GroupElement h = 0; h < s3.order(); ++h) {
        const ArcId a = cov.lift_arc(e, h);
        CHECK(cov.graph.origin(a) == cov.lift_vertex(g.origin(e), h));
        CHECK(cov.graph.terminus(a) ==
              cov.lift_vertex(g.terminus(e), s3.multiply(h, alpha(e))));
        CHECK(cov.graph.inverse(a) == cov.lift_arc(g.inverse(e), s3.multiply(h, alpha(e))));
        CHECK(cov.arc_label(a) == std::pair{e, h});
      }
    for (VertexId u = 0; u < g.num_vertices(); ++u)
      for (GroupElement h = 0; h < s3.order(); ++h)
        CHECK(cov.graph.degree(cov.lift_vertex(u, h)) == g.degree(u));
  }
}

TEST_CASE("H_g matrices of the triangle example") {
  const double a = 0.5, b = 1.2, alpha = 0.35;
  const Graph g = triangle();
  const auto w = triangle_weights(g, a, b, alpha);
  const FiniteGroup z3 = cyclic_group(3).first;
  const auto volt = VoltageAssignment::from_edges(g, z3, {1, 0, 0});
  const cplx z = b * std::polar(1.0, 2 * alpha);
  const cplx zc = std::conj(z);
  const ComplexMatrix h1{{0.0, 0.0, z}, {0.0, 0.0, z}, {zc, zc, 0.0}};
  const ComplexMatrix ht{{0.0, z, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
  const ComplexMatrix ht2{{0.0, 0.0, 0.0}, {zc, 0.0, 0.0}, {0.0, 0.0, 0.0}};
  CHECK(max_abs_difference(h_g_matrix(g, w, volt, 0), h1) < 1e-15);
  CHECK(max_abs_difference(h_g_matrix(g, w, volt, 1), ht) < 1e-15);
  CHECK(max_abs_difference(h_g_matrix(g, w, volt, 2), ht2) < 1e-15);
  CHECK_THROWS_AS(h_g_matrix(g, w, volt, 3), InputError);
  CHECK_THROWS_AS(u_g_matrix(g, w, volt, 0.0, 7), InputError);

  const FiniteGroup z4 = cyclic_group(4).first;
  const auto v4 = VoltageAssignment::from_edges(g, z4, {1, 0, 0});
  CHECK(h_g_matrix(g, w, v4, 2).max_abs() == 0.0);
}

TEST_CASE("H_g and U_g partition H and U") {
  testgen::Rng rng(62);
  const FiniteGroup z4 = cyclic_group(4).first;
  for (int t = 0; t < 10; ++t) {
    const auto c = testgen::random_case_in(rng, 2, 6, 9);
    std::vector<GroupElement> v(c.graph.num_edges());
    for (auto& x : v) x = rng.index(0, 3);
    const auto alpha = VoltageAssignment::from_edges(c.graph, z4, v);
    const cplx lambda = rng.in_disk(3.0);
    ComplexMatrix hs = diag_H(c.weights);
    ComplexMatrix us(2 * c.graph.num_edges(), 2 * c.graph.num_edges());
    for (GroupElement h = 0; h < 4; ++h) {
      hs += h_g_matrix(c.graph, c.weights, alpha, h);
      us += u_g_matrix(c.graph, c.weights, alpha, lambda, h);
    }
    CHECK(max_abs_difference(hs, assemble_H(c.graph, c.weights)) < 1e-14);
    CHECK(max_abs_difference(us, bond_scattering_matrix(c.graph, c.weights, lambda).u) < 1e-14);
  }
}

TEST_CASE("permutation matrices") {
  const FiniteGroup z3 = cyclic_group(3).first;
  CHECK(permutation_matrix(z3, 0) == ComplexMatrix::identity(3));
  const ComplexMatrix shift{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}};
  CHECK(permutation_matrix(z3, 1) == shift);

  const Instance s3i = load_instance(BONDZETA_TEST_DATA "/s3_fixture.json");
  const FiniteGroup& s3 = *s3i.group;
  for (GroupElement h = 0; h < 6; ++h) {
    CHECK(permutation_matrix(s3, h) * permutation_matrix(s3, s3.inverse(h)) ==
          ComplexMatrix::identity(6));
    for (GroupElement k = 0; k < 6; ++k)
      CHECK(permutation_matrix(s3, h) * permutation_matrix(s3, k) ==
            permutation_matrix(s3, s3.multiply(h, k)));
  }
  CHECK_THROWS_AS(permutation_matrix(s3, 6), GroupError);
}

TEST_CASE("lifted Hermitian matrices") {
  testgen::Rng rng(63);
  const auto c = testgen::random_case_in(rng, 3, 6, 9);
  const FiniteGroup one = trivial_group();
  CHECK(max_abs_difference(
            lift_hermitian(c.graph, c.weights, one, VoltageAssignment::trivial(c.graph, one)),
            assemble_H(c.graph, c.weights)) == 0.0);

  // Triangle example: 9 eigenvalues are the roots of the three cubics.
  for (auto [a, b, alpha] : {std::tuple{0.0, 1.0, 0.0}, {1.0, 2.0, 0.3}, {-1.0, 0.5, -0.7}}) {
    const Graph g = triangle();
    const auto w = triangle_weights(g, a, b, alpha);
    const FiniteGroup z3 = cyclic_group(3).first;
    const auto volt = VoltageAssignment::from_edges(g, z3, {1, 0, 0});
    const ComplexMatrix ht = lift_hermitian(g, w, z3, volt);
    CHECK(max_abs_difference(ht, ht.adjoint()) < 1e-14);
    std::vector<double> want;
    for (int k = 0; k < 3; ++k)
      for (double r : oracle::triangle_eigenvalues(a, b, alpha + k * kPi / 3)) want.push_back(r);
    std::sort(want.begin(), want.end());
    const auto got = hermitian_eigenvalues(ht);
    for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-9);
  }
}

TEST_CASE("covering determinant factors on the triangle example") {
  testgen::Rng rng(64);
  const Graph g = triangle();
  const auto [z3, chars] = cyclic_group(3);
  const auto volt = VoltageAssignment::from_edges(g, z3, {1, 0, 0});
  for (auto [a, b, alpha] : {std::tuple{0.0, 1.0, 0.0}, {1.0, 2.0, 0.3}, {-1.0, 0.5, -0.7}}) {
    const auto w = triangle_weights(g, a, b, alpha);
    for (int t = 0; t < 4; ++t) {
      const cplx lambda = rng.in_disk(4.0);
      CHECK(verify_theorem6(g, w, z3, volt, chars, lambda).pass());
      cplx closed = -512.0 / int_pow(a - lambda - cplx(0, 2 * b), 9);
      for (int k = 0; k < 3; ++k)
        closed *= oracle::triangle_factor(a, b, alpha + k * kPi / 3, lambda) /
                  (-8.0 / int_pow(a - lambda - cplx(0, 2 * b), 3));
      const DerivedGraph cov = derived_graph(g, z3, volt);
      CHECK(relative_error(secular_det(cov.graph, lift_weights(cov, w), lambda), closed) < 1e-10);
    }
  }
}

TEST_CASE("covering determinant factors on random graphs and the S3 fixture") {
  testgen::Rng rng(65);
  for (std::size_t order : {1, 2, 4}) {
    const auto [grp, chars] = cyclic_group(order);
    for (int t = 0; t < 4; ++t) {
      const auto c = testgen::random_case_in(rng, 3, 5, 7);
      if (c.graph.num_edges() < c.graph.num_vertices() && order > 1) continue;  // trees split
      const auto alpha = connected_voltages(rng, c.graph, grp);
      const Report rep = verify_theorem6(c.graph, c.weights, grp, alpha, chars, rng.in_disk(3.0));
      CHECK(rep.pass());
      CHECK(verify_spectrum_union(c.graph, c.weights, grp, alpha, chars).pass());
    }
  }
  const Instance s3 = load_instance(BONDZETA_TEST_DATA "/s3_fixture.json");
  for (int t = 0; t < 4; ++t) {
    CHECK(verify_theorem6(s3.graph, s3.weights, *s3.group, *s3.voltages, s3.irreps(),
                          rng.in_disk(3.0))
              .pass());
  }
  CHECK(verify_spectrum_union(s3.graph, s3.weights, *s3.group, *s3.voltages, s3.irreps()).pass());
}

TEST_CASE("covering factorization refuses disconnected covers and bad irreps") {
  const Graph g = triangle();
  const auto w = triangle_weights(g, 0.0, 1.0, 0.0);
  const auto [z2, chars] = cyclic_group(2);
  CHECK_THROWS_AS(verify_theorem6(g, w, z2, VoltageAssignment::trivial(g, z2), chars, 0.5),
                  CoveringError);
  const auto volt = VoltageAssignment::from_edges(g, z2, {1, 0, 0});
  CHECK_THROWS_AS(verify_theorem6(g, w, z2, volt, IrrepSet{{chars.reps[1]}}, 0.5),
                  RepresentationError);
}

TEST_CASE("covering U in block order is the sum of P_h (x) U_h") {
  testgen::Rng rng(66);
  const Instance s3 = load_instance(BONDZETA_TEST_DATA "/s3_fixture.json");
  const FiniteGroup& grp = *s3.group;
  const cplx lambda = rng.in_disk(2.0);
  const DerivedGraph cov = derived_graph(s3.graph, grp, *s3.voltages);
  const ComplexMatrix direct = covering_u_block_order(cov, s3.weights, lambda);
  ComplexMatrix sum(direct.rows(), direct.cols());
  for (GroupElement h = 0; h < grp.order(); ++h)
    sum += kron(permutation_matrix(grp, h),
                u_g_matrix(s3.graph, s3.weights, *s3.voltages, lambda, h));
  CHECK(max_abs_difference(direct, sum) < 1e-14);
}

}
