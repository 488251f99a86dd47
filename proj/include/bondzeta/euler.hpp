#pragma once

#include <vector>

#include "bondzeta/graph.hpp"
#include "bondzeta/hermitian.hpp"
#include "bondzeta/linalg.hpp"
#include "bondzeta/report.hpp"
#include "bondzeta/scattering.hpp"

namespace bondzeta {

/// Longest cycle length the enumerating checks accept.
inline constexpr std::size_t kMaxCycleLength = 12;

struct WeightedCycleClass {
  CycleClass cycle_class;
  cplx weight;
};

/// w_C = prod_k sigma^{(t(b_k))}_{b_k b_{k+1}}, indices cyclic; equals
/// prod_k U(b_k, b_{k+1}).
cplx cycle_weight(const Graph& g, const EdgeWeightSystem& w, cplx lambda, const Cycle& c);
cplx cycle_weight(const BondMatrix& u, std::span<const ArcId> arcs);

std::vector<WeightedCycleClass> weighted_prime_classes(const Graph& g,
                                                       const EdgeWeightSystem& w,
                                                       cplx lambda, std::size_t max_len);

/// Coefficients of det(I_2m - u U(lambda)) through u^N.
PolyCoeffs secular_poly(const Graph& g, const EdgeWeightSystem& w, cplx lambda,
                        std::size_t n);

/// prod over prime classes of length <= N of (1 - w_C u^{|C|}), truncated at u^N.
PolyCoeffs truncated_euler_product(const Graph& g, const EdgeWeightSystem& w, cplx lambda,
                                   std::size_t n);

/// Coefficientwise comparison for k = 0..N; absolute error per coefficient.
/// N above 12 raises SizeError.
Report verify_theorem5(const Graph& g, const EdgeWeightSystem& w, cplx lambda,
                       std::size_t n, double tol = 1e-8);

/// Tr(U^k) against the sum of w_C over all closed arc sequences of length k.
Report trace_identity_check(const Graph& g, const EdgeWeightSystem& w, cplx lambda,
                            std::size_t k, double tol = 1e-9);

}  // namespace bondzeta
