#include "bondzeta/hermitian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bondzeta/error.hpp"

namespace bondzeta {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::string arc_name(const Graph& g, ArcId a) {
  return "(" + g.vertex_names()[g.origin(a)] + "," + g.vertex_names()[g.terminus(a)] + ")";
}

}  // namespace

EdgeWeightSystem::EdgeWeightSystem(const Graph& g, std::vector<double> h,
                                   std::vector<double> gamma, std::vector<double> diag)
    : h_(std::move(h)), gamma_(std::move(gamma)), diag_(std::move(diag)) {
  if (h_.size() != g.num_arcs() || gamma_.size() != g.num_arcs()) {
    throw IncompleteDataError("expected " + std::to_string(g.num_arcs()) +
                              " arc weights, got h=" + std::to_string(h_.size()) +
                              " gamma=" + std::to_string(gamma_.size()));
  }
  if (diag_.size() != g.num_vertices()) {
    throw IncompleteDataError("expected " + std::to_string(g.num_vertices()) +
                              " diagonal values, got " + std::to_string(diag_.size()));
  }
  for (double d : diag_) {
    if (!std::isfinite(d)) throw IncompleteDataError("diagonal value is not finite");
  }
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    const ArcId b = g.inverse(a);
    if (!std::isfinite(h_[a]) || !std::isfinite(gamma_[a])) {
      throw IncompleteDataError("weight on arc " + arc_name(g, a) + " is not finite");
    }
    if (!(h_[a] > 0.0)) {
      throw PositivityError("h must be strictly positive on arc " + arc_name(g, a));
    }
    if (h_[a] != h_[b]) {
      throw StructureError("h differs between arc " + arc_name(g, a) + " and its inverse");
    }
    if (gamma_[a] != -gamma_[b]) {
      throw StructureError("gamma is not antisymmetric on arc " + arc_name(g, a));
    }
    if (gamma_[a] < -kHalfPi || gamma_[a] > kHalfPi) {
      throw StructureError("gamma outside [-pi/2, pi/2] on arc " + arc_name(g, a));
    }
  }
}

EdgeWeightSystem EdgeWeightSystem::from_edges(const Graph& g,
                                              const std::vector<double>& h,
                                              const std::vector<double>& gamma,
                                              std::vector<double> diag) {
  const std::size_t m = g.num_edges();
  if (h.size() != m || gamma.size() != m) {
    throw IncompleteDataError("expected " + std::to_string(m) + " edge weights");
  }
  std::vector<double> ha(2 * m);
  std::vector<double> ga(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    ha[j] = ha[j + m] = h[j];
    ga[j] = gamma[j];
    ga[j + m] = -gamma[j];
  }
  return EdgeWeightSystem(g, std::move(ha), std::move(ga), std::move(diag));
}

cplx EdgeWeightSystem::arc_weight(ArcId a) const {
  return std::sqrt(h_[a]) * std::polar(1.0, gamma_[a]);
}

cplx EdgeWeightSystem::entry(ArcId a) const { return h_[a] * std::polar(1.0, 2.0 * gamma_[a]); }

ComplexMatrix VertexGamma::x_matrix() const {
  if (x.empty()) throw IncompleteDataError("x values were not evaluated");
  return ComplexMatrix::diagonal(std::span<const cplx>(x));
}

ComplexMatrix assemble_H(const Graph& g, const EdgeWeightSystem& w) {
  const std::size_t n = g.num_vertices();
  ComplexMatrix h(n, n);
  for (VertexId v = 0; v < n; ++v) h(v, v) = w.diag(v);
  const std::size_t m = g.num_edges();
  for (std::size_t j = 0; j < m; ++j) {
    // mirror so the result is Hermitian bit for bit
    const cplx z = w.entry(j);
    h(g.origin(j), g.terminus(j)) += z;
    h(g.terminus(j), g.origin(j)) += std::conj(z);
  }
  return h;
}

EdgeWeightSystem decompose_H(const ComplexMatrix& h, const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (h.rows() != n || h.cols() != n) {
    throw StructureError("matrix shape does not match the vertex count");
  }
  if (g.has_parallel_edges()) {
    throw StructureError("decomposition is ambiguous on graphs with parallel edges");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(h(i, j) - std::conj(h(j, i))) > 1e-12) {
        throw SymmetryError("matrix is not Hermitian");
      }

  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) adjacent[u][v] = adjacent[v][u] = true;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && !adjacent[u][v] && h(u, v) != cplx{}) {
        throw StructureError("nonzero entry (" + g.vertex_names()[u] + "," +
                             g.vertex_names()[v] + ") off the edge set");
      }

  const std::size_t m = g.num_edges();
  std::vector<double> hv(m);
  std::vector<double> gv(m);
  for (std::size_t j = 0; j < m; ++j) {
    const VertexId u = g.origin(j);
    const VertexId v = g.terminus(j);
    const cplx z = h(u, v);
    if (z == cplx{}) {
      throw PositivityError("zero entry on edge (" + g.vertex_names()[u] + "," +
                            g.vertex_names()[v] + ")");
    }
    hv[j] = std::abs(z);
    if (z.imag() == 0.0 && z.real() < 0.0) {
      gv[j] = u >= v ? kHalfPi : -kHalfPi;
    } else {
      gv[j] = std::arg(z) / 2.0;
    }
  }
  std::vector<double> diag(n);
  for (std::size_t u = 0; u < n; ++u) diag[u] = h(u, u).real();
  return EdgeWeightSystem::from_edges(g, hv, gv, std::move(diag));
}

VertexGamma vertex_gammas(const Graph& g, const EdgeWeightSystem& w) {
  VertexGamma out;
  out.gamma.assign(g.num_vertices(), 0.0);
  for (ArcId a = 0; a < g.num_arcs(); ++a) out.gamma[g.origin(a)] += w.h(a);
  return out;
}

std::vector<cplx> pole_factors(const Graph& g, const EdgeWeightSystem& w, cplx lambda) {
  const VertexGamma vg = vertex_gammas(g, w);
  std::vector<cplx> f(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    f[v] = w.diag(v) - lambda - kI * vg.gamma[v];
    if (std::abs(f[v]) < kPoleGuard) {
      throw PoleError(v, "lambda hits the pole of vertex " + g.vertex_names()[v]);
    }
  }
  return f;
}

VertexGamma x_values(const Graph& g, const EdgeWeightSystem& w, cplx lambda) {
  VertexGamma out = vertex_gammas(g, w);
  const auto f = pole_factors(g, w, lambda);
  out.x.resize(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) out.x[v] = 2.0 / f[v];
  out.lambda = lambda;
  return out;
}

}  // namespace bondzeta
