#pragma once

#include <span>
#include <string>

#include "tempoflow/core/graph.hpp"

namespace tempoflow {

/// A connected temporal graph with one source (no incoming edges) and one sink
/// (no outgoing edges). When the declared sources cannot reach the declared
/// sinks the instance is `disconnected`: it holds only source and sink and its
/// flow is zero.
struct FlowInstance {
  TemporalGraph graph;
  VertexId source{};
  VertexId sink{};
  bool disconnected = false;

  std::size_t interaction_count() const { return graph.interaction_count(); }
};

/// Reduces a multi-source/multi-sink request to a FlowInstance.
///
/// A vertex declared as both source and sink is split into `name:out`
/// (keeping the outgoing edges) and `name:in` (keeping the incoming edges).
/// Unless exactly one source without incoming edges and one sink without
/// outgoing edges remain, a synthetic source `S*` feeds every declared source
/// with (T_min - 1, INFINITE) and every declared sink drains into a synthetic
/// sink `T*` with (T_max + 1, INFINITE). Finally vertices that are not on a
/// directed source-to-sink path are dropped.
///
/// Throws std::invalid_argument on empty source or sink sets.
FlowInstance normalize(const TemporalGraph& graph, std::span<const VertexId> sources,
                       std::span<const VertexId> sinks);

/// Keeps only vertices on a directed source-to-sink path (ids are compacted,
/// relative order preserved). Sets `disconnected` when the sink is unreachable.
FlowInstance prune_to_flow_paths(const TemporalGraph& graph, VertexId source, VertexId sink);

/// Checks every FlowInstance invariant; returns an empty string when valid.
std::string check_instance(const FlowInstance& instance);

}  // namespace tempoflow
