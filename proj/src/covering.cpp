#include "bondzeta/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "bondzeta/error.hpp"
#include "bondzeta/scattering.hpp"

namespace bondzeta {

FiniteGroup::FiniteGroup(std::vector<std::string> names,
                         std::vector<std::vector<GroupElement>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t p = names_.size();
  if (p == 0) throw GroupError("group needs at least one element");
  if (table_.size() != p) throw GroupError("multiplication table has the wrong row count");
  for (const auto& row : table_) {
    if (row.size() != p) throw GroupError("multiplication table is not square");
    for (GroupElement x : row)
      if (x >= p) throw GroupError("multiplication table entry out of range");
  }
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<bool> row_seen(p, false);
    std::vector<bool> col_seen(p, false);
    for (std::size_t j = 0; j < p; ++j) {
      if (row_seen[table_[i][j]] || col_seen[table_[j][i]]) {
        throw GroupError("multiplication table is not a Latin square");
      }
      row_seen[table_[i][j]] = true;
      col_seen[table_[j][i]] = true;
    }
    if (table_[0][i] != i || table_[i][0] != i) {
      throw GroupError("element 0 (" + names_[0] + ") is not the identity");
    }
  }
  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
      throw GroupError("multiplication is not associative on (" + names_[a] + ", " +
                       names_[b] + ", " + names_[c] + ")");
    }
  };
  if (p <= 24) {
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b)
        for (std::size_t c = 0; c < p; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, p - 1);
    for (int s = 0; s < 20000; ++s) check_triple(pick(rng), pick(rng), pick(rng));
  }
  inverse_.resize(p);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;

  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GroupError("group element names must be unique");
  }
}

GroupElement FiniteGroup::find(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw GroupError("unknown group element '" + name + "'");
  return static_cast<GroupElement>(it - names_.begin());
}

VoltageAssignment::VoltageAssignment(const Graph& g, const FiniteGroup& group,
                                     std::vector<GroupElement> per_arc)
    : per_arc_(std::move(per_arc)), group_order_(group.order()) {
  if (per_arc_.size() != g.num_arcs()) {
    throw IncompleteDataError("voltage assignment needs one element per arc");
  }
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (per_arc_[a] >= group.order()) throw GroupError("voltage outside the group");
    if (per_arc_[g.inverse(a)] != group.inverse(per_arc_[a])) {
      throw GroupError("voltage on the inverse of arc " + std::to_string(a) +
                       " is not the inverse element");
    }
  }
}

VoltageAssignment VoltageAssignment::from_edges(const Graph& g, const FiniteGroup& group,
                                                const std::vector<GroupElement>& per_edge) {
  const std::size_t m = g.num_edges();
  if (per_edge.size() != m) {
    throw IncompleteDataError("voltage assignment needs one element per edge");
  }
  std::vector<GroupElement> arcs(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    if (per_edge[j] >= group.order()) throw GroupError("voltage outside the group");
    arcs[j] = per_edge[j];
    arcs[j + m] = group.inverse(per_edge[j]);
  }
  return VoltageAssignment(g, group, std::move(arcs));
}

VoltageAssignment VoltageAssignment::trivial(const Graph& g, const FiniteGroup& group) {
  return VoltageAssignment(g, group, std::vector<GroupElement>(g.num_arcs(), 0));
}

void UnitaryRep::validate(const FiniteGroup& group) const {
  const std::size_t p = group.order();
  if (degree == 0) throw RepresentationError(name + ": degree must be positive");
  if (matrices.size() != p) {
    throw RepresentationError(name + ": expected one matrix per group element");
  }
  for (const auto& m : matrices) {
    if (m.rows() != degree || m.cols() != degree) {
      throw RepresentationError(name + ": matrix shape does not match the degree");
    }
  }
  const ComplexMatrix id = ComplexMatrix::identity(degree);
  if (max_abs_difference(matrices[0], id) > 1e-10) {
    throw RepresentationError(name + ": rho(1) is not the identity");
  }
  for (std::size_t a = 0; a < p; ++a) {
    if (max_abs_difference(matrices[a] * matrices[a].adjoint(), id) > 1e-10) {
      throw RepresentationError(name + ": rho(" + group.names()[a] + ") is not unitary");
    }
    for (std::size_t b = 0; b < p; ++b) {
      if (max_abs_difference(matrices[a] * matrices[b], matrices[group.multiply(a, b)]) >
          1e-10) {
        throw RepresentationError(name + ": not a homomorphism at (" + group.names()[a] +
                                  ", " + group.names()[b] + ")");
      }
    }
  }
}

bool UnitaryRep::is_trivial() const {
  if (degree != 1) return false;
  return std::all_of(matrices.begin(), matrices.end(), [](const ComplexMatrix& m) {
    return std::abs(m(0, 0) - 1.0) <= 1e-12;
  });
}

UnitaryRep trivial_rep(const FiniteGroup& group) {
  return UnitaryRep{"trivial", 1,
                    std::vector<ComplexMatrix>(group.order(), ComplexMatrix::identity(1))};
}

void IrrepSet::validate(const FiniteGroup& group) const {
  const std::size_t p = group.order();
  std::size_t dims = 0;
  for (const auto& r : reps) {
    r.validate(group);
    dims += r.degree * r.degree;
  }
  if (dims != p) {
    throw RepresentationError("sum of squared degrees is " + std::to_string(dims) +
                              ", group order is " + std::to_string(p));
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      cplx inner{};
      for (GroupElement g = 0; g < p; ++g) {
        inner += reps[i].character(g) * std::conj(reps[j].character(g));
      }
      inner /= static_cast<double>(p);
      if (std::abs(inner - (i == j ? 1.0 : 0.0)) > 1e-9) {
        throw RepresentationError("characters of " + reps[i].name + " and " + reps[j].name +
                                  " are not orthonormal");
      }
    }
  }
}

const UnitaryRep& IrrepSet::find(const std::string& name) const {
  for (const auto& r : reps)
    if (r.name == name) return r;
  throw RepresentationError("unknown representation '" + name + "'");
}

std::pair<FiniteGroup, IrrepSet> cyclic_group(std::size_t n) {
  if (n == 0) throw GroupError("cyclic group order must be positive");
  std::vector<std::string> names(n);
  std::vector<std::vector<GroupElement>> table(n, std::vector<GroupElement>(n));
  for (std::size_t j = 0; j < n; ++j) {
    names[j] = j == 0 ? "1" : j == 1 ? "t" : "t^" + std::to_string(j);
    for (std::size_t k = 0; k < n; ++k) table[j][k] = (j + k) % n;
  }
  IrrepSet irreps;
  for (std::size_t i = 0; i < n; ++i) {
    UnitaryRep chi{"chi" + std::to_string(i), 1, {}};
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((i * j) % n) /
                           static_cast<double>(n);
      chi.matrices.push_back(ComplexMatrix{{std::polar(1.0, angle)}});
    }
    irreps.reps.push_back(std::move(chi));
  }
  return {FiniteGroup(std::move(names), std::move(table)), std::move(irreps)};
}

ArcId DerivedGraph::lift_arc(ArcId e, GroupElement g) const {
  const std::size_t m = base_edges;
  const std::size_t p = sheets();
  if (e < m) return g * m + e;
  // e = e_j^-1 on sheet g is the inverse of e_j on sheet g alpha(e)
  return group.multiply(g, alpha(e)) * m + (e - m) + m * p;
}

std::pair<ArcId, GroupElement> DerivedGraph::arc_label(ArcId a) const {
  const std::size_t m = base_edges;
  const std::size_t mp = m * sheets();
  if (a < mp) return {a % m, a / m};
  const std::size_t b = a - mp;
  const std::size_t j = b % m;
  return {j + m, group.multiply(b / m, alpha(j))};
}

DerivedGraph derived_graph(const Graph& g, const FiniteGroup& group,
                           const VoltageAssignment& alpha) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const std::size_t p = group.order();
  std::vector<std::string> names;
  names.reserve(n * p);
  for (GroupElement s = 0; s < p; ++s)
    for (VertexId u = 0; u < n; ++u)
      names.push_back(g.vertex_names()[u] + "@" + group.names()[s]);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m * p);
  for (GroupElement s = 0; s < p; ++s) {
    for (std::size_t j = 0; j < m; ++j) {
      edges.emplace_back(s * n + g.origin(j), group.multiply(s, alpha(j)) * n + g.terminus(j));
    }
  }
  return DerivedGraph{
      Graph::build(std::move(names), std::move(edges), Graph::Connectivity::allow_disconnected),
      group, alpha, n, m};
}

EdgeWeightSystem lift_weights(const DerivedGraph& cover, const EdgeWeightSystem& w) {
  const Graph& cg = cover.graph;
  std::vector<double> h(cg.num_arcs());
  std::vector<double> gamma(cg.num_arcs());
  for (ArcId a = 0; a < cg.num_arcs(); ++a) {
    const ArcId base = cover.arc_label(a).first;
    h[a] = w.h(base);
    gamma[a] = w.gamma(base);
  }
  std::vector<double> diag(cg.num_vertices());
  for (VertexId v = 0; v < cg.num_vertices(); ++v) diag[v] = w.diag(v % cover.base_vertices);
  return EdgeWeightSystem(cg, std::move(h), std::move(gamma), std::move(diag));
}

ComplexMatrix lift_hermitian(const Graph& g, const EdgeWeightSystem& w,
                             const FiniteGroup& group, const VoltageAssignment& alpha) {
  const std::size_t n = g.num_vertices();
  const std::size_t p = group.order();
  ComplexMatrix h(n * p, n * p);
  for (GroupElement s = 0; s < p; ++s) {
    for (VertexId u = 0; u < n; ++u) h(s * n + u, s * n + u) = w.diag(u);
    for (std::size_t j = 0; j < g.num_edges(); ++j) {
      const VertexId from = s * n + g.origin(j);
      const VertexId to = group.multiply(s, alpha(j)) * n + g.terminus(j);
      const cplx z = w.entry(j);
      h(from, to) += z;
      h(to, from) += std::conj(z);
    }
  }
  return h;
}

ComplexMatrix h_g_matrix(const Graph& g, const EdgeWeightSystem& w,
                         const VoltageAssignment& alpha, GroupElement element) {
  if (element >= alpha.group_order()) throw InputError("unknown group element index");
  const std::size_t n = g.num_vertices();
  ComplexMatrix h(n, n);
  const std::size_t m = g.num_edges();
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (alpha(a) != element) continue;
    // inverse arcs take the conjugate of their edge entry so H stays exact
    h(g.origin(a), g.terminus(a)) += a < m ? w.entry(a) : std::conj(w.entry(a - m));
  }
  return h;
}

ComplexMatrix u_g_matrix(const Graph& g, const EdgeWeightSystem& w,
                         const VoltageAssignment& alpha, cplx lambda, GroupElement element) {
  if (element >= alpha.group_order()) throw InputError("unknown group element index");
  ComplexMatrix u = bond_scattering_matrix(g, w, lambda).u;
  for (ArcId e = 0; e < g.num_arcs(); ++e) {
    if (alpha(e) == element) continue;
    for (ArcId f = 0; f < g.num_arcs(); ++f) u(e, f) = 0.0;
  }
  return u;
}

ComplexMatrix diag_H(const EdgeWeightSystem& w) {
  return ComplexMatrix::diagonal(std::span<const double>(w.diag_values()));
}

ComplexMatrix permutation_matrix(const FiniteGroup& group, GroupElement h) {
  if (h >= group.order()) throw GroupError("unknown group element index");
  const std::size_t p = group.order();
  ComplexMatrix m(p, p);
  for (GroupElement i = 0; i < p; ++i) m(i, group.multiply(i, h)) = 1.0;
  return m;
}

ComplexMatrix twisted_u(const Graph& g, const EdgeWeightSystem& w,
                        const VoltageAssignment& alpha, const UnitaryRep& rho, cplx lambda) {
  const ComplexMatrix u = bond_scattering_matrix(g, w, lambda).u;
  const std::size_t arcs = g.num_arcs();
  const std::size_t d = rho.degree;
  // (a, e), (b, f) entry is rho(alpha(e))_ab U_ef
  ComplexMatrix out(d * arcs, d * arcs);
  for (ArcId e = 0; e < arcs; ++e) {
    const ComplexMatrix& r = rho(alpha(e));
    for (ArcId f : g.out_arcs(g.terminus(e))) {
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) out(a * arcs + e, b * arcs + f) = r(a, b) * u(e, f);
    }
  }
  return out;
}

ComplexMatrix twisted_h(const Graph& g, const EdgeWeightSystem& w,
                        const VoltageAssignment& alpha, const UnitaryRep& rho) {
  const std::size_t n = g.num_vertices();
  const std::size_t d = rho.degree;
  const std::size_t m = g.num_edges();
  ComplexMatrix out(d * n, d * n);
  for (std::size_t a = 0; a < d; ++a)
    for (VertexId u = 0; u < n; ++u) out(a * n + u, a * n + u) = w.diag(u);
  for (ArcId f = 0; f < g.num_arcs(); ++f) {
    const ComplexMatrix& r = rho(alpha(f));
    const cplx z = f < m ? w.entry(f) : std::conj(w.entry(f - m));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        out(a * n + g.origin(f), b * n + g.terminus(f)) += r(a, b) * z;
  }
  return out;
}

ComplexMatrix covering_u_block_order(const DerivedGraph& cover, const EdgeWeightSystem& w,
                                     cplx lambda) {
  const EdgeWeightSystem lifted = lift_weights(cover, w);
  const ComplexMatrix u = bond_scattering_matrix(cover.graph, lifted, lambda).u;
  const std::size_t arcs = cover.graph.num_arcs();
  std::vector<std::size_t> pos(arcs);
  for (ArcId a = 0; a < arcs; ++a) {
    const auto [base, sheet] = cover.arc_label(a);
    pos[a] = cover.block_index(base, sheet);
  }
  ComplexMatrix out(arcs, arcs);
  for (ArcId a = 0; a < arcs; ++a)
    for (ArcId b = 0; b < arcs; ++b) out(pos[a], pos[b]) = u(a, b);
  return out;
}

Report verify_theorem6(const Graph& g, const EdgeWeightSystem& w, const FiniteGroup& group,
                       const VoltageAssignment& alpha, const IrrepSet& irreps, cplx lambda,
                       double tol) {
  const DerivedGraph cover = derived_graph(g, group, alpha);
  if (!cover.connected()) {
    throw CoveringError("the derived graph is disconnected; the factorization needs a "
                        "connected covering");
  }
  irreps.validate(group);
  if (std::none_of(irreps.reps.begin(), irreps.reps.end(),
                   [](const UnitaryRep& r) { return r.is_trivial(); })) {
    throw RepresentationError("irreducible set lacks the trivial representation");
  }

  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const std::size_t p = group.order();
  const EdgeWeightSystem lifted = lift_weights(cover, w);
  const cplx direct = secular_det(cover.graph, lifted, lambda);

  cplx factorized{1.0, 0.0};
  cplx hermitian_form{1.0, 0.0};
  for (const auto& rho : irreps.reps) {
    const std::size_t d = rho.degree;
    const cplx fu =
        lu_det(ComplexMatrix::identity(2 * m * d) - twisted_u(g, w, alpha, rho, lambda));
    const cplx fh =
        lu_det(lambda * ComplexMatrix::identity(n * d) - twisted_h(g, w, alpha, rho));
    factorized *= int_pow(fu, d);
    hermitian_form *= int_pow(fh, d);
  }
  hermitian_form *= std::pow(2.0, static_cast<double>(m * p));
  if ((n * p) % 2 == 1) hermitian_form = -hermitian_form;
  for (const cplx& f : pole_factors(g, w, lambda)) {
    hermitian_form /= int_pow(f, p);
  }

  Report rep("theorem6", tol);
  rep.add_relative("direct = product over irreps", direct, factorized);
  rep.add_relative("direct = Hermitian form", direct, hermitian_form);

  ComplexMatrix u_sum(2 * m * p, 2 * m * p);
  ComplexMatrix h_sum = kron(ComplexMatrix::identity(p), diag_H(w));
  for (GroupElement s = 0; s < p; ++s) {
    const ComplexMatrix ps = permutation_matrix(group, s);
    u_sum += kron(ps, u_g_matrix(g, w, alpha, lambda, s));
    h_sum += kron(ps, h_g_matrix(g, w, alpha, s));
  }
  const ComplexMatrix u_cover = covering_u_block_order(cover, w, lambda);
  const ComplexMatrix h_cover = lift_hermitian(g, w, group, alpha);
  rep.add("U~ = sum P_h (x) U_h", u_cover.frobenius_norm(), u_sum.frobenius_norm(),
          max_relative_error(u_cover, u_sum), "max entrywise relative error");
  rep.add("H~ = sum P_h (x) H_h + I (x) diag H", h_cover.frobenius_norm(),
          h_sum.frobenius_norm(), max_relative_error(h_cover, h_sum),
          "max entrywise relative error");
  return rep;
}

Report verify_spectrum_union(const Graph& g, const EdgeWeightSystem& w,
                             const FiniteGroup& group, const VoltageAssignment& alpha,
                             const IrrepSet& irreps, double tol) {
  irreps.validate(group);
  const std::vector<double> cover = hermitian_eigenvalues(lift_hermitian(g, w, group, alpha));
  std::vector<double> pooled;
  for (const auto& rho : irreps.reps) {
    const std::vector<double> ev = hermitian_eigenvalues(twisted_h(g, w, alpha, rho));
    for (std::size_t k = 0; k < rho.degree; ++k) pooled.insert(pooled.end(), ev.begin(), ev.end());
  }
  std::sort(pooled.begin(), pooled.end());
  Report rep("spectrum-union", tol);
  if (pooled.size() != cover.size()) {
    rep.add("eigenvalue count", static_cast<double>(cover.size()),
            static_cast<double>(pooled.size()), std::numeric_limits<double>::infinity());
    return rep;
  }
  for (std::size_t k = 0; k < cover.size(); ++k)
    rep.add_relative("eigenvalue " + std::to_string(k), cover[k], pooled[k]);
  return rep;
}

}  // namespace bondzeta
