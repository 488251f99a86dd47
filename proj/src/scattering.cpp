#include "bondzeta/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bondzeta/error.hpp"

namespace bondzeta {

ComplexMatrix vertex_sigma(const Graph& g, const EdgeWeightSystem& w, VertexId u,
                           cplx lambda) {
  const VertexGamma vg = x_values(g, w, lambda);
  const auto in = g.in_arcs(u);
  const auto out = g.out_arcs(u);
  ComplexMatrix s(in.size(), out.size());
  for (std::size_t r = 0; r < in.size(); ++r) {
    for (std::size_t c = 0; c < out.size(); ++c) {
      const ArcId e = in[r];
      const ArcId f = out[c];
      s(r, c) = -vg.x[u] * w.arc_weight(e) * w.arc_weight(f);
      if (g.inverse(e) == f) s(r, c) += kI;
    }
  }
  return s;
}

BondMatrix bond_scattering_matrix(const Graph& g, const EdgeWeightSystem& w, cplx lambda) {
  const VertexGamma vg = x_values(g, w, lambda);
  const std::size_t arcs = g.num_arcs();
  ComplexMatrix u(arcs, arcs);
  for (ArcId e = 0; e < arcs; ++e) {
    const VertexId v = g.terminus(e);
    for (ArcId f : g.out_arcs(v)) {
      u(e, f) = -vg.x[v] * w.arc_weight(e) * w.arc_weight(f);
      if (g.inverse(e) == f) u(e, f) += kI;
    }
  }
  return BondMatrix{std::move(u), lambda};
}

cplx secular_det(const Graph& g, const EdgeWeightSystem& w, cplx lambda) {
  const auto bm = bond_scattering_matrix(g, w, lambda);
  return lu_det(ComplexMatrix::identity(g.num_arcs()) - bm.u);
}

cplx theorem4_rhs(const Graph& g, const EdgeWeightSystem& w, cplx lambda) {
  const auto poles = pole_factors(g, w, lambda);
  const std::size_t n = g.num_vertices();
  const ComplexMatrix shifted = lambda * ComplexMatrix::identity(n) - assemble_H(g, w);
  cplx value = lu_det(shifted) * std::pow(2.0, static_cast<double>(g.num_edges()));
  if (n % 2 == 1) value = -value;
  for (const auto& p : poles) value /= p;
  return value;
}

Report verify_theorem4(const Graph& g, const EdgeWeightSystem& w,
                       std::span<const cplx> samples, double tol) {
  Report rep("theorem4", tol);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const cplx lambda = samples[s];
    try {
      rep.add_relative("sample " + std::to_string(s), secular_det(g, w, lambda),
                       theorem4_rhs(g, w, lambda));
    } catch (const PoleError& e) {
      rep.warnings.push_back("sample " + std::to_string(s) + " skipped: " + e.what());
    }
  }
  return rep;
}

double unitarity_defect(const ComplexMatrix& u) {
  return max_abs_difference(u * u.adjoint(), ComplexMatrix::identity(u.rows()));
}

Report verify_unitarity(const Graph& g, const EdgeWeightSystem& w,
                        std::span<const double> real_samples, double tol) {
  Report rep("unitarity", tol);
  for (double lambda : real_samples) {
    const auto bm = bond_scattering_matrix(g, w, lambda);
    rep.add("lambda=" + std::to_string(lambda), lambda, lambda, unitarity_defect(bm.u),
            "error is max |U U^dagger - I|");
  }
  return rep;
}

std::vector<double> spectrum_via_secular(const Graph& g, const EdgeWeightSystem& w,
                                         const SpectrumScan& scan) {
  double lo = 0.0;
  double hi = 0.0;
  if (scan.range) {
    std::tie(lo, hi) = *scan.range;
  } else {
    const auto vg = vertex_gammas(g, w);
    const double max_gamma = *std::max_element(vg.gamma.begin(), vg.gamma.end());
    const auto& d = w.diag_values();
    lo = *std::min_element(d.begin(), d.end()) - 2.0 * max_gamma;
    hi = *std::max_element(d.begin(), d.end()) + 2.0 * max_gamma;
  }
  const std::size_t n = std::max<std::size_t>(scan.grid, 3);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  auto modulus = [&](double x) { return std::abs(secular_det(g, w, x)); };

  std::vector<double> xs(n);
  std::vector<double> fs(n);
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = lo + step * static_cast<double>(i);
    fs[i] = modulus(xs[i]);
    scale = std::max(scale, fs[i]);
  }

  constexpr double kInvPhi = 0.6180339887498949;
  std::vector<double> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || fs[i] <= fs[i - 1];
    const bool right_ok = i + 1 == n || fs[i] < fs[i + 1];
    if (!left_ok || !right_ok) continue;
    double a = xs[i == 0 ? 0 : i - 1];
    double b = xs[i + 1 == n ? n - 1 : i + 1];
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = modulus(c);
    double fd = modulus(d);
    // Past 1e-8 the bracket keeps shrinking so |det| at the estimate sits
    // at rounding level for simple roots.
    while (b - a > 1e-12 * std::max(1.0, std::abs(a))) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = modulus(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = modulus(d);
      }
    }
    const double x = 0.5 * (a + b);
    if (modulus(x) <= 1e-8 * scale) roots.push_back(x);
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || r - unique.back() > 1e-6) unique.push_back(r);
  }
  return unique;
}

SpectrumComparison compare_spectra(const Graph& g, const EdgeWeightSystem& w, double tol,
                                   const SpectrumScan& scan) {
  SpectrumComparison out{hermitian_eigenvalues(assemble_H(g, w)), {},
                         spectrum_via_secular(g, w, scan), 0.0, Report("spectrum", tol)};
  for (std::size_t k = 0; k < out.jacobi.size(); ++k) {
    const double x = out.jacobi[k];
    if (!out.distinct.empty() && x - out.distinct.back() <= 1e-6) {
      out.report.warnings.push_back("eigenvalue " + std::to_string(x) +
                                    " is repeated; the secular scan reports it once");
      continue;
    }
    out.distinct.push_back(x);
  }
  for (double x : out.distinct) {
    double best = std::numeric_limits<double>::infinity();
    double nearest = 0.0;
    for (double r : out.secular) {
      if (std::abs(r - x) < best) {
        best = std::abs(r - x);
        nearest = r;
      }
    }
    out.max_deviation = std::max(out.max_deviation, best);
    out.report.add("eigenvalue " + std::to_string(x), x, nearest, best, "absolute deviation");
  }
  if (out.secular.size() != out.distinct.size()) {
    out.report.add("root count", static_cast<double>(out.distinct.size()),
                   static_cast<double>(out.secular.size()),
                   std::numeric_limits<double>::infinity(), "distinct eigenvalues vs roots");
  }
  return out;
}

ProofMatrices proof_matrices(const Graph& g, const EdgeWeightSystem& w, cplx lambda) {
  const VertexGamma vg = x_values(g, w, lambda);
  const std::size_t n = g.num_vertices();
  const std::size_t arcs = g.num_arcs();
  ProofMatrices pm{ComplexMatrix(arcs, arcs), ComplexMatrix(arcs, arcs),
                   ComplexMatrix(arcs, n),    ComplexMatrix(arcs, n),
                   ComplexMatrix(arcs, n),    vg.x_matrix(),
                   vg.d_l(),                  assemble_H(g, w)};
  for (VertexId v = 0; v < n; ++v) pm.h_offdiag(v, v) = 0.0;
  for (ArcId e = 0; e < arcs; ++e) {
    const cplx we = w.arc_weight(e);
    for (ArcId f : g.out_arcs(g.terminus(e))) {
      pm.b(e, f) = vg.x[g.origin(f)] * we * w.arc_weight(f);
    }
    pm.j0(e, g.inverse(e)) = 1.0;
    pm.k(e, g.origin(e)) = vg.x[g.origin(e)] * we;
    pm.l(e, g.terminus(e)) = we;
    pm.m(e, g.origin(e)) = we;
  }
  return pm;
}

Report verify_proof_identities(const Graph& g, const EdgeWeightSystem& w, cplx lambda,
                               double tol) {
  const ProofMatrices pm = proof_matrices(g, w, lambda);
  const ComplexMatrix u = bond_scattering_matrix(g, w, lambda).u;
  const ComplexMatrix mt = pm.m.transpose();
  Report rep("proof-identities", tol);
  auto add = [&](const char* name, const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    rep.add(name, lhs.frobenius_norm(), rhs.frobenius_norm(), max_relative_error(lhs, rhs),
            "error is the max entrywise relative difference");
  };
  add("K = M X", pm.k, pm.m * pm.x);
  add("L K^T = B", pm.l * pm.k.transpose(), pm.b);
  add("M^T L = H (off-diagonal)", mt * pm.l, pm.h_offdiag);
  add("M^T J0 L = D_L", mt * pm.j0 * pm.l, pm.d_l);
  add("U = i J0 - B", u, kI * pm.j0 - pm.b);
  return rep;
}

}  // namespace bondzeta
