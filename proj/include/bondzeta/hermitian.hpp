#pragma once

#include <optional>
#include <vector>

#include "bondzeta/graph.hpp"
#include "bondzeta/linalg.hpp"

namespace bondzeta {

/// Per-arc (h_f, gamma_f) plus the real diagonal H_uu. Generates
/// H_uv = sum over arcs f = (u, v) of h_f e^{2 i gamma_f}.
///
/// Invariants, checked on construction: h_f > 0, h_f = h_{f^-1},
/// gamma_f = -gamma_{f^-1}, gamma_f in [-pi/2, pi/2], everything finite.
class EdgeWeightSystem {
 public:
  /// Per-arc vectors of length 2m; diag of length n.
  EdgeWeightSystem(const Graph& g, std::vector<double> h, std::vector<double> gamma,
                   std::vector<double> diag);

  /// Per-edge values; gamma refers to the edge in its listed orientation and
  /// the inverse arc receives -gamma.
  static EdgeWeightSystem from_edges(const Graph& g, const std::vector<double>& h,
                                     const std::vector<double>& gamma,
                                     std::vector<double> diag);

  double h(ArcId a) const { return h_[a]; }
  double gamma(ArcId a) const { return gamma_[a]; }
  double diag(VertexId v) const { return diag_[v]; }
  const std::vector<double>& h_values() const noexcept { return h_; }
  const std::vector<double>& gamma_values() const noexcept { return gamma_; }
  const std::vector<double>& diag_values() const noexcept { return diag_; }

  /// w(e) = sqrt(h_e) e^{i gamma_e}, so that w(e)^2 = h_e e^{2 i gamma_e}.
  cplx arc_weight(ArcId a) const;
  /// h_f e^{2 i gamma_f}
  cplx entry(ArcId a) const;

  bool operator==(const EdgeWeightSystem&) const = default;

 private:
  std::vector<double> h_;
  std::vector<double> gamma_;
  std::vector<double> diag_;
};

/// Gamma_u = sum of h over arcs leaving u, and optionally the diagonal
/// x_j = 2 / (H_jj - lambda - i Gamma_j) at one lambda.
struct VertexGamma {
  std::vector<double> gamma;
  std::vector<cplx> x;  // empty unless produced by x_values
  std::optional<cplx> lambda;

  ComplexMatrix d_l() const { return ComplexMatrix::diagonal(std::span<const double>(gamma)); }
  ComplexMatrix x_matrix() const;
};

ComplexMatrix assemble_H(const Graph& g, const EdgeWeightSystem& w);

/// Inverse of assemble_H on simple graphs. gamma = arg(H_uv)/2; real negative
/// entries take gamma = pi/2 when u >= v and -pi/2 when u < v.
EdgeWeightSystem decompose_H(const ComplexMatrix& h, const Graph& g);

VertexGamma vertex_gammas(const Graph& g, const EdgeWeightSystem& w);

/// Throws PoleError when |H_jj - lambda - i Gamma_j| < 1e-12.
VertexGamma x_values(const Graph& g, const EdgeWeightSystem& w, cplx lambda);

/// H_uu - lambda - i Gamma_u for every vertex, with the same pole guard.
std::vector<cplx> pole_factors(const Graph& g, const EdgeWeightSystem& w, cplx lambda);

inline constexpr double kPoleGuard = 1e-12;

}  // namespace bondzeta
