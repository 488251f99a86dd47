#pragma once

#include <string>

#include "bondzeta/covering.hpp"
#include "bondzeta/graph.hpp"
#include "bondzeta/hermitian.hpp"
#include "bondzeta/linalg.hpp"
#include "bondzeta/report.hpp"

namespace bondzeta {

/// The L-function is reported through its reciprocal, a finite determinant.
struct LFunctionValue {
  cplx reciprocal;  // det(I_2md - sum_h rho(h) (x) U_h)
  cplx lambda;
  std::string rep;

  /// 1 / reciprocal; throws Error when the reciprocal vanishes.
  cplx value() const;
};

/// det(I_2md - sum_h rho(h) (x) U_h)
cplx l_function_reciprocal(const Graph& g, const EdgeWeightSystem& w,
                           const VoltageAssignment& alpha, const UnitaryRep& rho,
                           cplx lambda);

LFunctionValue l_function(const Graph& g, const EdgeWeightSystem& w,
                          const VoltageAssignment& alpha, const UnitaryRep& rho, cplx lambda);

/// 2^{md} (-1)^{nd} / prod_u (H_uu - lambda - i Gamma_u)^d
///   * det(lambda I_nd - sum_g rho(g) (x) H_g - I_d (x) diag(H))
cplx theorem7_rhs(const Graph& g, const EdgeWeightSystem& w, const VoltageAssignment& alpha,
                  const UnitaryRep& rho, cplx lambda);

Report verify_theorem7(const Graph& g, const EdgeWeightSystem& w, const FiniteGroup& group,
                       const VoltageAssignment& alpha, const UnitaryRep& rho,
                       std::span<const cplx> samples, double tol = 1e-9);

/// det(I_2mp - U~(lambda)) against prod_rho reciprocal(rho)^{deg rho}.
/// Throws CoveringError for a disconnected cover and RepresentationError
/// when the irreps are incomplete or invalid.
Report verify_corollary1(const Graph& g, const EdgeWeightSystem& w, const FiniteGroup& group,
                         const VoltageAssignment& alpha, const IrrepSet& irreps, cplx lambda,
                         double tol = 1e-8);

/// Matrices of the twisted determinant proof at one lambda, in the same
/// rep-major order as twisted_u (index (a, e) sits at a * 2m + e).
struct TwistedProofMatrices {
  ComplexMatrix j_rho;    // (a,e),(b,f): rho(alpha(e))_ab when f = e^-1
  ComplexMatrix b_rho;    // sum_h rho(h) (x) B_h
  ComplexMatrix k;        // I_d (x) K
  ComplexMatrix l;        // (a,e),(b,v): rho(alpha(e))_ab w(e) when t(e) = v
  ComplexMatrix m;        // I_d (x) M
  ComplexMatrix x_d;      // I_d (x) X
  ComplexMatrix d_gamma;  // I_d (x) D_Gamma
  ComplexMatrix h_rho;    // sum_h rho(h) (x) H_h, no diagonal
  ComplexMatrix u_rho;    // twisted_u
};

TwistedProofMatrices twisted_proof_matrices(const Graph& g, const EdgeWeightSystem& w,
                                            const VoltageAssignment& alpha,
                                            const UnitaryRep& rho, cplx lambda);

/// U_rho = i J_rho - B_rho, J_rho^2 = I, K = M X_d, L K^T = B_rho,
/// M^T L = H_rho and M^T J_rho L = I_d (x) D_Gamma.
Report verify_twisted_identities(const Graph& g, const EdgeWeightSystem& w,
                                 const VoltageAssignment& alpha, const UnitaryRep& rho,
                                 cplx lambda, double tol = 1e-10);

}  // namespace bondzeta
