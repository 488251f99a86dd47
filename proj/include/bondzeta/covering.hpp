#pragma once

// Regular coverings from ordinary voltage assignments into a finite group,
// and the block decomposition of the covering's scattering matrix.

#include <string>
#include <utility>
#include <vector>

#include "bondzeta/graph.hpp"
#include "bondzeta/hermitian.hpp"
#include "bondzeta/linalg.hpp"
#include "bondzeta/report.hpp"

namespace bondzeta {

using GroupElement = std::size_t;

/// Group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  /// Validates the Latin-square property, the identity at index 0 and
  /// associativity (every triple up to order 24, a fixed sample above).
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<GroupElement>> table);

  std::size_t order() const noexcept { return names_.size(); }
  GroupElement identity() const noexcept { return 0; }
  GroupElement multiply(GroupElement a, GroupElement b) const { return table_[a][b]; }
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::vector<GroupElement>>& table() const noexcept { return table_; }
  /// Throws GroupError for unknown names.
  GroupElement find(const std::string& name) const;

  bool operator==(const FiniteGroup&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<GroupElement>> table_;
  std::vector<GroupElement> inverse_;
};

/// alpha: arc -> group with alpha(e^-1) = alpha(e)^-1.
class VoltageAssignment {
 public:
  VoltageAssignment(const Graph& g, const FiniteGroup& group,
                    std::vector<GroupElement> per_arc);
  /// Voltages for the listed edge orientations; inverses are filled in.
  static VoltageAssignment from_edges(const Graph& g, const FiniteGroup& group,
                                      const std::vector<GroupElement>& per_edge);
  /// All arcs carry the identity.
  static VoltageAssignment trivial(const Graph& g, const FiniteGroup& group);

  GroupElement operator()(ArcId a) const { return per_arc_[a]; }
  const std::vector<GroupElement>& values() const noexcept { return per_arc_; }
  std::size_t group_order() const noexcept { return group_order_; }

  bool operator==(const VoltageAssignment&) const = default;

 private:
  std::vector<GroupElement> per_arc_;
  std::size_t group_order_ = 1;
};

/// Matrices rho(g) for every group element, indexed like the group.
struct UnitaryRep {
  std::string name;
  std::size_t degree = 1;
  std::vector<ComplexMatrix> matrices;

  const ComplexMatrix& operator()(GroupElement g) const { return matrices[g]; }
  cplx character(GroupElement g) const { return matrices[g].trace(); }
  /// rho(1) = I, rho(g) rho(h) = rho(gh) and unitarity, all to 1e-10.
  void validate(const FiniteGroup& group) const;
  bool is_trivial() const;

  bool operator==(const UnitaryRep&) const = default;
};

UnitaryRep trivial_rep(const FiniteGroup& group);

/// A complete list of inequivalent irreducible representations.
struct IrrepSet {
  std::vector<UnitaryRep> reps;

  /// Each rep valid, sum of squared degrees equals |group|, characters
  /// orthonormal to 1e-9. Throws RepresentationError.
  void validate(const FiniteGroup& group) const;
  /// Throws RepresentationError for unknown names.
  const UnitaryRep& find(const std::string& name) const;
};

/// Z_n with generator "t": elements "1", "t", "t^2", ... and characters
/// chi_i(t^j) = omega^{ij}, omega = e^{2 pi i / n}.
std::pair<FiniteGroup, IrrepSet> cyclic_group(std::size_t n);

/// Derived graph G^alpha. Vertex (u, g) has index g * n + u. Edge j of G and
/// element g give edge g * m + j of the cover, oriented as the arc e_j
/// lifted to sheet g, so e_g runs from u_g to v_{g alpha(e)}.
struct DerivedGraph {
  Graph graph;
  FiniteGroup group;
  VoltageAssignment alpha;
  std::size_t base_vertices;
  std::size_t base_edges;

  std::size_t sheets() const noexcept { return group.order(); }
  VertexId lift_vertex(VertexId u, GroupElement g) const { return g * base_vertices + u; }
  /// Arc of the cover that is e_g for the base arc e.
  ArcId lift_arc(ArcId e, GroupElement g) const;
  /// (base arc, sheet of its origin) for an arc of the cover.
  std::pair<ArcId, GroupElement> arc_label(ArcId a) const;
  /// Position of e_g in the block order (e_1..e_2m on sheet g_1, then g_2, ...).
  std::size_t block_index(ArcId e, GroupElement g) const {
    return g * 2 * base_edges + e;
  }
  bool connected() const { return graph.connected(); }
};

DerivedGraph derived_graph(const Graph& g, const FiniteGroup& group,
                           const VoltageAssignment& alpha);

/// Edge weights of the cover: every lifted arc inherits (h, gamma) of its
/// base arc and every fiber vertex the base diagonal.
EdgeWeightSystem lift_weights(const DerivedGraph& cover, const EdgeWeightSystem& w);

/// H of the cover, np x np in the sheet-block vertex order.
ComplexMatrix lift_hermitian(const Graph& g, const EdgeWeightSystem& w,
                             const FiniteGroup& group, const VoltageAssignment& alpha);

/// H restricted to arcs with voltage g (zero diagonal). Both throw InputError
/// for an element outside the group.
ComplexMatrix h_g_matrix(const Graph& g, const EdgeWeightSystem& w,
                         const VoltageAssignment& alpha, GroupElement element);
/// U(lambda) restricted to rows whose arc e has alpha(e) = g.
ComplexMatrix u_g_matrix(const Graph& g, const EdgeWeightSystem& w,
                         const VoltageAssignment& alpha, cplx lambda, GroupElement element);

/// diag(H_11, ..., H_nn)
ComplexMatrix diag_H(const EdgeWeightSystem& w);

/// P_h with (i, j) entry 1 iff g_i h = g_j.
ComplexMatrix permutation_matrix(const FiniteGroup& group, GroupElement h);

/// sum_h rho(h) (x) U_h, the twisted scattering matrix.
ComplexMatrix twisted_u(const Graph& g, const EdgeWeightSystem& w,
                        const VoltageAssignment& alpha, const UnitaryRep& rho, cplx lambda);
/// sum_h rho(h) (x) H_h + I_d (x) diag(H)
ComplexMatrix twisted_h(const Graph& g, const EdgeWeightSystem& w,
                        const VoltageAssignment& alpha, const UnitaryRep& rho);

/// U of the cover, built on the derived graph and permuted into block order.
ComplexMatrix covering_u_block_order(const DerivedGraph& cover, const EdgeWeightSystem& w,
                                     cplx lambda);

/// Checks both factorizations of det(I_2mp - U~(lambda)) over the irreps
/// plus U~ = sum_h P_h (x) U_h. Throws CoveringError when G^alpha is
/// disconnected and RepresentationError for an invalid irrep set.
Report verify_theorem6(const Graph& g, const EdgeWeightSystem& w, const FiniteGroup& group,
                       const VoltageAssignment& alpha, const IrrepSet& irreps, cplx lambda,
                       double tol = 1e-8);

/// Jacobi eigenvalues of H~ against the union over irreps of the eigenvalues
/// of sum_h rho(h) (x) H_h + I (x) diag(H), each taken deg rho times.
Report verify_spectrum_union(const Graph& g, const EdgeWeightSystem& w,
                             const FiniteGroup& group, const VoltageAssignment& alpha,
                             const IrrepSet& irreps, double tol = 1e-8);

}  // namespace bondzeta
