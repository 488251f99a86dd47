#include "bondzeta/lfunction.hpp"

#include <algorithm>
#include <cmath>

#include "bondzeta/error.hpp"
#include "bondzeta/scattering.hpp"

namespace bondzeta {

namespace {

// Rows of a 2m-row matrix whose arc carries voltage h, lifted through rho.
ComplexMatrix twist_rows(const ComplexMatrix& base, const VoltageAssignment& alpha,
                         const UnitaryRep& rho) {
  const std::size_t rows = base.rows();
  const std::size_t cols = base.cols();
  const std::size_t d = rho.degree;
  ComplexMatrix out(d * rows, d * cols);
  for (std::size_t e = 0; e < rows; ++e) {
    const ComplexMatrix& r = rho(alpha(e));
    for (std::size_t c = 0; c < cols; ++c) {
      const cplx z = base(e, c);
      if (z == cplx{}) continue;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) out(a * rows + e, b * cols + c) += r(a, b) * z;
    }
  }
  return out;
}

}  // namespace

cplx LFunctionValue::value() const {
  if (std::abs(reciprocal) == 0.0) throw Error("L-function has a pole at this lambda");
  return 1.0 / reciprocal;
}

cplx l_function_reciprocal(const Graph& g, const EdgeWeightSystem& w,
                           const VoltageAssignment& alpha, const UnitaryRep& rho,
                           cplx lambda) {
  const ComplexMatrix u = twisted_u(g, w, alpha, rho, lambda);
  return lu_det(ComplexMatrix::identity(u.rows()) - u);
}

LFunctionValue l_function(const Graph& g, const EdgeWeightSystem& w,
                          const VoltageAssignment& alpha, const UnitaryRep& rho, cplx lambda) {
  return {l_function_reciprocal(g, w, alpha, rho, lambda), lambda, rho.name};
}

cplx theorem7_rhs(const Graph& g, const EdgeWeightSystem& w, const VoltageAssignment& alpha,
                  const UnitaryRep& rho, cplx lambda) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const std::size_t d = rho.degree;
  cplx out = lu_det(lambda * ComplexMatrix::identity(n * d) - twisted_h(g, w, alpha, rho));
  out *= std::pow(2.0, static_cast<double>(m * d));
  if ((n * d) % 2 == 1) out = -out;
  for (const cplx& f : pole_factors(g, w, lambda)) out /= int_pow(f, d);
  return out;
}

Report verify_theorem7(const Graph& g, const EdgeWeightSystem& w, const FiniteGroup& group,
                       const VoltageAssignment& alpha, const UnitaryRep& rho,
                       std::span<const cplx> samples, double tol) {
  rho.validate(group);
  Report rep("theorem7", tol);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const cplx lambda = samples[s];
    try {
      rep.add_relative("sample " + std::to_string(s),
                       l_function_reciprocal(g, w, alpha, rho, lambda),
                       theorem7_rhs(g, w, alpha, rho, lambda));
    } catch (const PoleError& e) {
      rep.warnings.push_back("sample " + std::to_string(s) + " skipped: " + e.what());
    }
  }
  return rep;
}

Report verify_corollary1(const Graph& g, const EdgeWeightSystem& w, const FiniteGroup& group,
                         const VoltageAssignment& alpha, const IrrepSet& irreps, cplx lambda,
                         double tol) {
  const DerivedGraph cover = derived_graph(g, group, alpha);
  if (!cover.connected()) {
    throw CoveringError("the derived graph is disconnected; the factorization needs a "
                        "connected covering");
  }
  irreps.validate(group);
  const cplx direct = secular_det(cover.graph, lift_weights(cover, w), lambda);
  cplx product{1.0, 0.0};
  for (const auto& rho : irreps.reps) {
    product *= int_pow(l_function_reciprocal(g, w, alpha, rho, lambda), rho.degree);
  }
  Report rep("corollary1", tol);
  rep.add_relative("det(I - U~) = prod det(I - U_rho)^deg", direct, product);
  return rep;
}

TwistedProofMatrices twisted_proof_matrices(const Graph& g, const EdgeWeightSystem& w,
                                            const VoltageAssignment& alpha,
                                            const UnitaryRep& rho, cplx lambda) {
  const ProofMatrices pm = proof_matrices(g, w, lambda);
  const ComplexMatrix id = ComplexMatrix::identity(rho.degree);
  ComplexMatrix h_rho = twisted_h(g, w, alpha, rho);
  h_rho -= kron(id, diag_H(w));
  return {.j_rho = twist_rows(pm.j0, alpha, rho),
          .b_rho = twist_rows(pm.b, alpha, rho),
          .k = kron(id, pm.k),
          .l = twist_rows(pm.l, alpha, rho),
          .m = kron(id, pm.m),
          .x_d = kron(id, pm.x),
          .d_gamma = kron(id, pm.d_l),
          .h_rho = std::move(h_rho),
          .u_rho = twisted_u(g, w, alpha, rho, lambda)};
}

Report verify_twisted_identities(const Graph& g, const EdgeWeightSystem& w,
                                 const VoltageAssignment& alpha, const UnitaryRep& rho,
                                 cplx lambda, double tol) {
  const TwistedProofMatrices t = twisted_proof_matrices(g, w, alpha, rho, lambda);
  Report rep("twisted-identities", tol);
  auto check = [&](const std::string& name, const ComplexMatrix& a, const ComplexMatrix& b) {
    rep.add(name, a.frobenius_norm(), b.frobenius_norm(), max_relative_error(a, b),
            "max entrywise relative error");
  };
  const ComplexMatrix mt = t.m.transpose();
  check("J^2 = I", t.j_rho * t.j_rho, ComplexMatrix::identity(t.j_rho.rows()));
  check("K = M X", t.k, t.m * t.x_d);
  check("L K^T = B", t.l * t.k.transpose(), t.b_rho);
  check("M^T L = H_rho", mt * t.l, t.h_rho);
  check("M^T J L = D", mt * t.j_rho * t.l, t.d_gamma);
  check("U = iJ - B", t.u_rho, kI * t.j_rho - t.b_rho);
  return rep;
}

}  // namespace bondzeta
