#pragma once

// Instance files: a graph with edge weights, optionally a group, voltages and
// representations. JSON in and out; complex entries are [re, im] pairs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bondzeta/covering.hpp"
#include "bondzeta/graph.hpp"
#include "bondzeta/hermitian.hpp"

namespace bondzeta {

struct Instance {
  Graph graph;
  EdgeWeightSystem weights;
  std::vector<std::string> edge_ids;           // one per listed edge
  std::optional<FiniteGroup> group;
  std::optional<std::size_t> cyclic_order;     // set when the group was {"cyclic": n}
  std::optional<VoltageAssignment> voltages;   // requires group
  std::vector<UnitaryRep> reps;

  bool has_covering() const { return group.has_value() && voltages.has_value(); }
  /// Explicit reps when given, else the characters of a cyclic group.
  /// Throws InputError when neither is available.
  IrrepSet irreps() const;

  bool operator==(const Instance&) const = default;
};

/// Throws InputError naming the offending field (or the parse position) and
/// lets library errors from graph or weight validation propagate.
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);

/// Canonical JSON (sorted keys, two-space indent).
std::string emit_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

/// 64-bit FNV-1a of the canonical JSON, as 16 hex digits.
std::string instance_digest(const Instance& inst);
std::uint64_t fnv1a64(const std::string& bytes);

/// "a+bi", "a-bi", "a", "bi", "-i"; throws InputError otherwise.
cplx parse_complex(const std::string& text);

/// Radius 2 max_u(|H_uu| + Gamma_u) of the default sampling disk.
double sampling_radius(const Graph& g, const EdgeWeightSystem& w);

enum class SampleRegion { disk, upper_half_disk, real_segment };

/// count points uniform in the region (disk of sampling_radius or its
/// diameter), from a deterministic 64-bit Mersenne Twister.
std::vector<cplx> sample_lambdas(const Graph& g, const EdgeWeightSystem& w, std::size_t count,
                                 std::uint64_t seed, SampleRegion region = SampleRegion::disk);

/// Triangle with vertices 1, 2, 3, edges (1,2), (2,3), (3,1), h = b on each,
/// gamma = alpha, alpha, -alpha and diagonal a. Z_3 voltages put t on the
/// first edge and the identity elsewhere.
Instance k3_instance(double a, double b, double alpha);

/// Instance of the derived graph (no group data).
Instance cover_instance(const Instance& base);

}  // namespace bondzeta
