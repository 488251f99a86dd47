#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bondzeta/error.hpp"
#include "bondzeta/hermitian.hpp"
#include "support/generators.hpp"

using namespace bondzeta;

namespace {

constexpr double kPi = std::numbers::pi;

Graph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_SUITE("hermitian") {

TEST_CASE("triangle matrix") {
  const double a = 0.4, b = 1.5, alpha = 0.3;
  const Graph g = triangle();
  const auto w = EdgeWeightSystem::from_edges(g, {b, b, b}, {alpha, alpha, -alpha}, {a, a, a});
  const ComplexMatrix h = assemble_H(g, w);
  const cplx z = b * std::polar(1.0, 2.0 * alpha);
  const ComplexMatrix want{{a, z, z}, {std::conj(z), a, z}, {std::conj(z), std::conj(z), a}};
  CHECK(max_abs_difference(h, want) < 1e-15);
  CHECK(max_abs_difference(h, h.adjoint()) == 0.0);
}

TEST_CASE("zero phases give a real symmetric matrix") {
  testgen::Rng rng(31);
  auto c = testgen::random_case_in(rng, 2, 6, 9);
  const auto& g = c.graph;
  std::vector<double> h;
  for (std::size_t j = 0; j < g.num_edges(); ++j) h.push_back(c.weights.h(j));
  const auto w = EdgeWeightSystem::from_edges(g, h, std::vector<double>(g.num_edges(), 0.0),
                                              c.weights.diag_values());
  const ComplexMatrix m = assemble_H(g, w);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      CHECK(m(i, j).imag() == 0.0);
      CHECK(m(i, j) == m(j, i));
    }
}

TEST_CASE("assembled matrices are exactly Hermitian and parallel edges add") {
  testgen::Rng rng(32);
  for (int t = 0; t < 25; ++t) {
    const auto c = testgen::random_case_in(rng, 2, 8, 16);
    const ComplexMatrix h = assemble_H(c.graph, c.weights);
    CHECK(max_abs_difference(h, h.adjoint()) == 0.0);
  }
  const Graph g = build_graph(2, {{0, 1}, {0, 1}});
  const auto w = EdgeWeightSystem::from_edges(g, {1.0, 2.0}, {0.0, kPi / 4}, {0.0, 0.0});
  CHECK(std::abs(assemble_H(g, w)(0, 1) - cplx(1.0, 2.0)) < 1e-15);
}

TEST_CASE("construction rejects invalid weights") {
  const Graph g = build_graph(2, {{0, 1}});
  CHECK_THROWS_AS(EdgeWeightSystem(g, {1.0, 2.0}, {0.1, -0.1}, {0.0, 0.0}), StructureError);
  CHECK_THROWS_AS(EdgeWeightSystem(g, {1.0, 1.0}, {0.1, 0.1}, {0.0, 0.0}), StructureError);
  CHECK_THROWS_AS(EdgeWeightSystem(g, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}), PositivityError);
  CHECK_THROWS_AS(EdgeWeightSystem(g, {1.0, 1.0}, {2.0, -2.0}, {0.0, 0.0}), StructureError);
  CHECK_THROWS_AS(EdgeWeightSystem(g, {1.0}, {0.0}, {0.0, 0.0}), IncompleteDataError);
  CHECK_THROWS_AS(EdgeWeightSystem(g, {1.0, 1.0}, {0.0, 0.0}, {0.0}), IncompleteDataError);
  CHECK_THROWS_AS(EdgeWeightSystem(g, {1.0, 1.0}, {0.0, 0.0}, {NAN, 0.0}), IncompleteDataError);
  CHECK_NOTHROW(EdgeWeightSystem(g, {1.0, 1.0}, {kPi / 2, -kPi / 2}, {0.0, 0.0}));
}

TEST_CASE("decompose examples") {
  const Graph g = build_graph(2, {{0, 1}});
  const auto wi = decompose_H(ComplexMatrix{{0.0, cplx(0, 1)}, {cplx(0, -1), 0.0}}, g);
  CHECK(wi.h(0) == doctest::Approx(1.0));
  CHECK(wi.gamma(0) == doctest::Approx(kPi / 4));

  // -1 above the diagonal (u < v) takes -pi/2; the reverse arc (u > v) takes +pi/2.
  const auto wn = decompose_H(ComplexMatrix{{0.5, -1.0}, {-1.0, 0.5}}, g);
  CHECK(wn.h(0) == doctest::Approx(1.0));
  CHECK(wn.gamma(0) == doctest::Approx(-kPi / 2));
  CHECK(wn.gamma(1) == doctest::Approx(kPi / 2));
  CHECK(wn.diag(0) == 0.5);
}

TEST_CASE("decompose errors") {
  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(decompose_H(ComplexMatrix{{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}}, path),
                  StructureError);
  CHECK_THROWS_AS(decompose_H(ComplexMatrix{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 1.0, 0.0}}, path),
                  PositivityError);
  CHECK_THROWS_AS(decompose_H(ComplexMatrix{{0.0, 1.0, 0.0}, {2.0, 0.0, 1.0}, {0.0, 1.0, 0.0}}, path),
                  SymmetryError);
  CHECK_THROWS_AS(decompose_H(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}, path), StructureError);
  const Graph doubled = build_graph(2, {{0, 1}, {0, 1}});
  CHECK_THROWS_AS(decompose_H(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}, doubled), StructureError);
}

TEST_CASE("assemble and decompose are mutually inverse on simple graphs") {
  testgen::Rng rng(33);
  for (int t = 0; t < 30; ++t) {
    const auto c = testgen::random_case_in(rng, 2, 7, 12, /*simple=*/true);
    const ComplexMatrix h = assemble_H(c.graph, c.weights);
    const EdgeWeightSystem back = decompose_H(h, c.graph);
    CHECK(max_abs_difference(assemble_H(c.graph, back), h) < 1e-12);
    for (ArcId a = 0; a < c.graph.num_arcs(); ++a) {
      CHECK(std::abs(back.h(a) - c.weights.h(a)) < 1e-12);
      // gamma is recovered exactly away from the +-pi/2 tie
      if (std::abs(std::abs(c.weights.gamma(a)) - kPi / 2) > 1e-9)
        CHECK(std::abs(back.gamma(a) - c.weights.gamma(a)) < 1e-12);
    }
  }
}

TEST_CASE("vertex gammas and x values") {
  const double b = 0.8;
  const Graph g = triangle();
  const auto w = EdgeWeightSystem::from_edges(g, {b, b, b}, {0.1, 0.2, 0.3}, {0.0, 0.0, 0.0});
  for (double gam : vertex_gammas(g, w).gamma) CHECK(gam == doctest::Approx(2 * b));

  const auto one = EdgeWeightSystem::from_edges(triangle(), {1, 1, 1}, {0, 0, 0}, {0, 0, 0});
  for (const cplx& x : x_values(g, one, 0.0).x) CHECK(std::abs(x - cplx(0, 1)) < 1e-15);

  const Graph edge = build_graph(2, {{0, 1}});
  const auto we = EdgeWeightSystem::from_edges(edge, {1.0}, {0.0}, {0.0, 0.0});
  CHECK(vertex_gammas(edge, we).gamma[0] == 1.0);

  // x_0 has its pole at H_00 - i Gamma_0 = -2i.
  CHECK_THROWS_AS(x_values(g, one, cplx(0, -2)), PoleError);
  try {
    x_values(edge, we, cplx(0, -1));
  } catch (const PoleError& e) {
    CHECK(e.vertex() == 0);
  }
}

TEST_CASE("Gamma is the absolute row sum of H on simple graphs; real lambda is never a pole") {
  testgen::Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    const auto c = testgen::random_case_in(rng, 2, 7, 12, true);
    const ComplexMatrix h = assemble_H(c.graph, c.weights);
    const auto vg = vertex_gammas(c.graph, c.weights);
    for (VertexId u = 0; u < c.graph.num_vertices(); ++u) {
      double row = 0.0;
      for (VertexId v = 0; v < c.graph.num_vertices(); ++v)
        if (v != u) row += std::abs(h(u, v));
      CHECK(std::abs(row - vg.gamma[u]) < 1e-12);
      CHECK(vg.gamma[u] > 0.0);
    }
    const double lambda = rng.uniform(-5.0, 5.0);
    for (const cplx& p : pole_factors(c.graph, c.weights, lambda)) CHECK(p.imag() < 0.0);
  }
}

}
