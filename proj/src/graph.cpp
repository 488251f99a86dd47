#include "bondzeta/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bondzeta/error.hpp"

namespace bondzeta {

Graph Graph::build(std::vector<std::string> vertex_names,
                   std::vector<std::pair<VertexId, VertexId>> edges,
                   Connectivity mode) {
  const std::size_t n = vertex_names.size();
  if (n == 0) throw ConnectivityError("graph needs at least one vertex");
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const auto [u, v] = edges[j];
    if (u >= n || v >= n) {
      throw StructureError("edge " + std::to_string(j) + " has an endpoint out of range");
    }
    if (u == v) {
      throw LoopRejectedError("edge " + std::to_string(j) + " is a loop at vertex " +
                              vertex_names[u]);
    }
  }

  Graph g;
  g.names_ = std::move(vertex_names);
  g.edges_ = std::move(edges);
  const std::size_t m = g.edges_.size();
  g.origin_.resize(2 * m);
  g.terminus_.resize(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    g.origin_[j] = g.edges_[j].first;
    g.terminus_[j] = g.edges_[j].second;
    g.origin_[j + m] = g.edges_[j].second;
    g.terminus_[j + m] = g.edges_[j].first;
  }
  g.out_arcs_.assign(n, {});
  g.in_arcs_.assign(n, {});
  for (ArcId a = 0; a < 2 * m; ++a) {
    g.out_arcs_[g.origin_[a]].push_back(a);
    g.in_arcs_[g.terminus_[a]].push_back(a);
  }

  // Union-find over the edge list.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& [u, v] : g.edges_) {
    const auto ru = find(u);
    const auto rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  g.connected_ = components == 1 && m > 0;
  if (mode == Connectivity::require && !g.connected_) {
    throw ConnectivityError(m == 0 ? "graph has no edges"
                                   : "graph is disconnected (" +
                                         std::to_string(components) + " components)");
  }
  return g;
}

bool Graph::has_parallel_edges() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) return true;
  }
  return false;
}

Graph build_graph(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i + 1);
  return Graph::build(std::move(names), std::move(edges));
}

Cycle Cycle::rotated(std::size_t shift) const {
  Cycle c = *this;
  if (!c.arcs.empty()) {
    std::rotate(c.arcs.begin(), c.arcs.begin() + shift % c.arcs.size(), c.arcs.end());
  }
  return c;
}

void validate_cycle(const Graph& g, const Cycle& c) {
  if (c.arcs.empty()) throw CycleError("cycle is empty");
  for (std::size_t i = 0; i < c.arcs.size(); ++i) {
    const ArcId a = c.arcs[i];
    const ArcId b = c.arcs[(i + 1) % c.arcs.size()];
    if (a >= g.num_arcs() || b >= g.num_arcs()) {
      throw CycleError("cycle references an unknown arc");
    }
    if (g.terminus(a) != g.origin(b)) {
      throw CycleError("arcs " + std::to_string(a) + " and " + std::to_string(b) +
                       " are not consecutive");
    }
  }
}

namespace {

// Depth-first extension of a partial walk. Only arcs >= floor may be used,
// which lets the prime-class search start each word at its least letter.
template <typename Visit>
void extend(const Graph& g, std::vector<ArcId>& walk, std::size_t k, ArcId floor,
            Visit& visit) {
  const ArcId last = walk.back();
  if (walk.size() == k) {
    if (g.terminus(last) == g.origin(walk.front())) visit(walk);
    return;
  }
  for (ArcId next : g.out_arcs(g.terminus(last))) {
    if (next < floor) continue;
    walk.push_back(next);
    extend(g, walk, k, floor, visit);
    walk.pop_back();
  }
}

}  // namespace

void for_each_cycle(const Graph& g, std::size_t k,
                    const std::function<void(std::span<const ArcId>)>& visit) {
  if (k == 0) return;
  std::vector<ArcId> walk;
  walk.reserve(k);
  auto cb = [&](const std::vector<ArcId>& w) { visit(w); };
  for (ArcId s = 0; s < g.num_arcs(); ++s) {
    walk.assign(1, s);
    extend(g, walk, k, 0, cb);
  }
}

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t k) {
  std::vector<Cycle> out;
  for_each_cycle(g, k, [&](std::span<const ArcId> w) {
    out.push_back(Cycle{{w.begin(), w.end()}});
  });
  return out;
}

bool is_canonical_prime(std::span<const ArcId> arcs) {
  const std::size_t k = arcs.size();
  // -1, 0, 1 as rotation r compares against the word itself
  auto compare_rotation = [&](std::size_t r) {
    for (std::size_t i = 0; i < k; ++i) {
      const ArcId rot = arcs[(i + r) % k];
      if (rot != arcs[i]) return rot < arcs[i] ? -1 : 1;
    }
    return 0;
  };
  for (std::size_t r = 1; r < k; ++r) {
    // an equal rotation means the word is a proper power
    if (compare_rotation(r) <= 0) return false;
  }
  return true;
}

std::vector<CycleClass> prime_cycle_classes(const Graph& g, std::size_t max_len) {
  std::vector<CycleClass> out;
  std::vector<ArcId> walk;
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto keep = [&](const std::vector<ArcId>& w) {
      if (is_canonical_prime(w)) out.push_back(CycleClass{Cycle{w}});
    };
    for (ArcId s = 0; s < g.num_arcs(); ++s) {
      walk.assign(1, s);
      walk.reserve(len);
      extend(g, walk, len, s, keep);
    }
  }
  return out;
}

}  // namespace bondzeta
