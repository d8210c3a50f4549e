#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tempoflow/cli/instance_io.hpp"

namespace tempoflow {

struct ExtractOptions {
  std::size_t max_hops = 3;  // 2..4
  std::size_t min_interactions = 0;
  std::size_t max_interactions = 10'000;
  // When set, seeds are connected to this vertex by simple paths instead of
  // being closed into cycles.
  std::optional<VertexId> sink{};
};

/// Seed-based subgraph extraction. For every vertex v in id order, all simple
/// cycles through v with at most `max_hops` edges are merged into one
/// subgraph, v is split into `v:out` (source) and `v:in` (sink), and the
/// result is kept when its interaction count lies within the bounds. Instances
/// are named after their seed. Returning false from `emit` stops the scan.
/// Throws std::invalid_argument when max_hops is outside 2..4.
std::size_t extract_subgraphs(const TemporalGraph& graph, const ExtractOptions& options,
                              const std::function<bool(NamedInstance&&)>& emit);

std::vector<NamedInstance> extract_subgraphs(const TemporalGraph& graph,
                                             const ExtractOptions& options);

}  // namespace tempoflow
