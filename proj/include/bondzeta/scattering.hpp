#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bondzeta/graph.hpp"
#include "bondzeta/hermitian.hpp"
#include "bondzeta/linalg.hpp"
#include "bondzeta/report.hpp"

namespace bondzeta {

/// U(lambda) on the canonical arc order, with U_ef = sigma^{(t(e))}_{ef}
/// when t(e) = o(f) and zero otherwise.
struct BondMatrix {
  ComplexMatrix u;
  cplx lambda;
};

/// Matrices from the determinant proof. Every one is evaluated at a single
/// lambda; h_offdiag is H with its diagonal removed.
struct ProofMatrices {
  ComplexMatrix b;    // 2m x 2m, B_ef = x_{o(f)} w(e) w(f) when t(e) = o(f)
  ComplexMatrix j0;   // 2m x 2m, J_{e, e^-1} = 1
  ComplexMatrix k;    // 2m x n, x_j w(b_i) when o(b_i) = j
  ComplexMatrix l;    // 2m x n, w(b_i) when t(b_i) = j
  ComplexMatrix m;    // 2m x n, w(b_i) when o(b_i) = j
  ComplexMatrix x;    // n x n diagonal
  ComplexMatrix d_l;  // n x n diagonal of Gamma_u
  ComplexMatrix h_offdiag;
};

/// Local scattering block at vertex u: rows are arcs into u, columns arcs out
/// of u, both ascending.
ComplexMatrix vertex_sigma(const Graph& g, const EdgeWeightSystem& w, VertexId u,
                           cplx lambda);

BondMatrix bond_scattering_matrix(const Graph& g, const EdgeWeightSystem& w, cplx lambda);

/// det(I_2m - U(lambda))
cplx secular_det(const Graph& g, const EdgeWeightSystem& w, cplx lambda);

/// (-1)^n 2^m det(lambda I_n - H) / prod_j (H_jj - lambda - i Gamma_j)
cplx theorem4_rhs(const Graph& g, const EdgeWeightSystem& w, cplx lambda);

Report verify_theorem4(const Graph& g, const EdgeWeightSystem& w,
                       std::span<const cplx> samples, double tol = 1e-9);

/// max |U U^dagger - I|
double unitarity_defect(const ComplexMatrix& u);

Report verify_unitarity(const Graph& g, const EdgeWeightSystem& w,
                        std::span<const double> real_samples, double tol = 1e-10);

struct SpectrumScan {
  std::optional<std::pair<double, double>> range;  // default: diag -/+ 2 max Gamma
  std::size_t grid = 4000;
};

/// Real roots of lambda -> det(I - U(lambda)) from a grid scan of |det| minima
/// refined by golden-section search, deduplicated within 1e-6. A double
/// eigenvalue shows up once.
std::vector<double> spectrum_via_secular(const Graph& g, const EdgeWeightSystem& w,
                                         const SpectrumScan& scan = {});

/// Jacobi eigenvalues of H (merged within 1e-6) against the secular roots.
struct SpectrumComparison {
  std::vector<double> jacobi;       // all n, ascending
  std::vector<double> distinct;     // jacobi merged within 1e-6
  std::vector<double> secular;
  double max_deviation = 0.0;
  Report report;
};

/// One record per distinct eigenvalue, absolute deviation from the nearest
/// secular root. A count mismatch adds a failing record.
SpectrumComparison compare_spectra(const Graph& g, const EdgeWeightSystem& w,
                                   double tol = 1e-6, const SpectrumScan& scan = {});

ProofMatrices proof_matrices(const Graph& g, const EdgeWeightSystem& w, cplx lambda);

/// K = MX, L K^T = B, M^T L = H_offdiag, M^T J0 L = D_L and U = i J0 - B,
/// each as a max entrywise relative error.
Report verify_proof_identities(const Graph& g, const EdgeWeightSystem& w, cplx lambda,
                               double tol = 1e-10);

}  // namespace bondzeta
