#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bondzeta {

using ArcId = std::size_t;
using VertexId = std::size_t;

/// Finite loop-free multigraph with an explicit arc set. Edge j (0-based) as
/// listed yields arc j = (u, v); arc j + m is its inverse (v, u).
class Graph {
 public:
  enum class Connectivity { require, allow_disconnected };

  /// Throws LoopRejectedError for (v, v) edges and ConnectivityError when the
  /// graph is disconnected or has no edges (unless allow_disconnected).
  static Graph build(std::vector<std::string> vertex_names,
                     std::vector<std::pair<VertexId, VertexId>> edges,
                     Connectivity mode = Connectivity::require);

  std::size_t num_vertices() const noexcept { return names_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_arcs() const noexcept { return 2 * edges_.size(); }

  VertexId origin(ArcId a) const { return origin_[a]; }
  VertexId terminus(ArcId a) const { return terminus_[a]; }
  ArcId inverse(ArcId a) const {
    const std::size_t m = edges_.size();
    return a < m ? a + m : a - m;
  }
  std::size_t degree(VertexId v) const { return out_arcs_[v].size(); }

  /// Arcs with o(f) = v, ascending arc index.
  std::span<const ArcId> out_arcs(VertexId v) const { return out_arcs_[v]; }
  /// Arcs with t(e) = v, ascending arc index.
  std::span<const ArcId> in_arcs(VertexId v) const { return in_arcs_[v]; }

  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept {
    return edges_;
  }
  bool connected() const noexcept { return connected_; }
  bool has_parallel_edges() const;

  bool operator==(const Graph&) const = default;

 private:
  Graph() = default;

  std::vector<std::string> names_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<VertexId> origin_;
  std::vector<VertexId> terminus_;
  std::vector<std::vector<ArcId>> out_arcs_;
  std::vector<std::vector<ArcId>> in_arcs_;
  bool connected_ = false;
};

/// Shorthand for Graph::build with 0-based vertices named "1".."n".
Graph build_graph(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges);

/// Closed arc sequence (b_1, ..., b_k) with t(b_i) = o(b_{i+1}) cyclically.
struct Cycle {
  std::vector<ArcId> arcs;

  std::size_t length() const noexcept { return arcs.size(); }
  Cycle rotated(std::size_t shift) const;
  bool operator==(const Cycle&) const = default;
};

/// Throws CycleError unless the arcs form a closed walk in g.
void validate_cycle(const Graph& g, const Cycle& c);

/// Equivalence class under cyclic rotation of a prime cycle. The
/// representative is the lexicographically least rotation; since the cycle
/// is prime, the class holds exactly length() distinct rotations.
struct CycleClass {
  Cycle representative;

  std::size_t length() const noexcept { return representative.length(); }
  std::size_t rotations() const noexcept { return representative.length(); }
};

/// Calls visit on every closed arc sequence of length k; rotations count as
/// distinct cycles.
void for_each_cycle(const Graph& g, std::size_t k,
                    const std::function<void(std::span<const ArcId>)>& visit);

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t k);

/// One entry per rotation class of prime cycles with length <= max_len.
/// Inverse cycles form separate classes and backtracking is not filtered.
std::vector<CycleClass> prime_cycle_classes(const Graph& g, std::size_t max_len);

/// True iff every proper rotation of arcs is lexicographically larger.
bool is_canonical_prime(std::span<const ArcId> arcs);

}  // namespace bondzeta
