#include "bondzeta/euler.hpp"

#include <string>

#include "bondzeta/error.hpp"

namespace bondzeta {

namespace {

void require_budget(std::size_t len) {
  if (len > kMaxCycleLength) {
    throw SizeError("cycle length " + std::to_string(len) + " exceeds the budget of " +
                    std::to_string(kMaxCycleLength));
  }
}

}  // namespace

cplx cycle_weight(const BondMatrix& u, std::span<const ArcId> arcs) {
  cplx prod{1.0, 0.0};
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    prod *= u.u(arcs[i], arcs[(i + 1) % arcs.size()]);
  }
  return prod;
}

cplx cycle_weight(const Graph& g, const EdgeWeightSystem& w, cplx lambda, const Cycle& c) {
  validate_cycle(g, c);
  return cycle_weight(bond_scattering_matrix(g, w, lambda), c.arcs);
}

std::vector<WeightedCycleClass> weighted_prime_classes(const Graph& g,
                                                       const EdgeWeightSystem& w,
                                                       cplx lambda, std::size_t max_len) {
  require_budget(max_len);
  const auto u = bond_scattering_matrix(g, w, lambda);
  std::vector<WeightedCycleClass> out;
  for (auto& cls : prime_cycle_classes(g, max_len)) {
    const cplx wc = cycle_weight(u, cls.representative.arcs);
    out.push_back({std::move(cls), wc});
  }
  return out;
}

PolyCoeffs secular_poly(const Graph& g, const EdgeWeightSystem& w, cplx lambda,
                        std::size_t n) {
  return det_poly(bond_scattering_matrix(g, w, lambda).u, n);
}

PolyCoeffs truncated_euler_product(const Graph& g, const EdgeWeightSystem& w, cplx lambda,
                                   std::size_t n) {
  PolyCoeffs acc(n);
  acc[0] = 1.0;
  for (const auto& wc : weighted_prime_classes(g, w, lambda, n)) {
    const std::size_t len = wc.cycle_class.length();
    // multiply by (1 - w u^len) in place, high degrees first
    for (std::size_t k = n; k >= len; --k) {
      acc[k] -= wc.weight * acc[k - len];
      if (k == len) break;
    }
  }
  return acc;
}

Report verify_theorem5(const Graph& g, const EdgeWeightSystem& w, cplx lambda,
                       std::size_t n, double tol) {
  require_budget(n);
  const PolyCoeffs lhs = secular_poly(g, w, lambda, n);
  const PolyCoeffs rhs = truncated_euler_product(g, w, lambda, n);
  Report rep("theorem5", tol);
  for (std::size_t k = 0; k <= n; ++k) {
    rep.add("u^" + std::to_string(k), lhs[k], rhs[k], std::abs(lhs[k] - rhs[k]),
            "absolute error");
  }
  return rep;
}

Report trace_identity_check(const Graph& g, const EdgeWeightSystem& w, cplx lambda,
                            std::size_t k, double tol) {
  require_budget(k);
  const auto u = bond_scattering_matrix(g, w, lambda);
  ComplexMatrix power = ComplexMatrix::identity(g.num_arcs());
  for (std::size_t i = 0; i < k; ++i) power = power * u.u;
  cplx cycle_sum{};
  std::size_t count = 0;
  for_each_cycle(g, k, [&](std::span<const ArcId> arcs) {
    cycle_sum += cycle_weight(u, arcs);
    ++count;
  });
  Report rep("trace", tol);
  rep.add_relative("k=" + std::to_string(k), power.trace(), cycle_sum,
                   std::to_string(count) + " cycles");
  return rep;
}

}  // namespace bondzeta
