#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "tempoflow/core/normalize.hpp"

namespace tempoflow {

enum class FlowMethod { kGreedy, kMaxflowExpanded, kMaxflowLp, kPathBoundaries };

std::string_view to_string(FlowMethod m);

/// Flow value plus the realized transfer x_i of every interaction, indexed by
/// the instance graph's flat interaction index. `transfers` may be empty when
/// the value was assembled from precomputed path boundaries.
struct FlowResult {
  Quantity value;
  std::vector<Quantity> transfers;
  FlowMethod method = FlowMethod::kGreedy;
  // Set when some interaction spent quantity that arrived at the same timestamp.
  bool same_time_relay = false;
};

/// How interactions sharing a timestamp see each other.
///   kSequential: processed one at a time in (t, seq) order; an interaction
///                may spend what an equal-timestamp predecessor delivered.
///   kStrict:     arrivals at time t become spendable only after t, matching
///                the strict t_j < t_i prefix constraints of exact max flow.
enum class TieMode { kSequential, kStrict };

struct GreedyTraceRow {
  EdgeIndex edge = 0;
  Interaction interaction;
  Quantity moved;
  std::vector<Quantity> buffers;  // per vertex, after this interaction
};

/// One pass over all interactions in time order; each moves min(q, B_src).
/// The source buffer is pinned to INFINITE. Linear in the interaction count
/// after sorting.
FlowResult greedy_flow(const FlowInstance& instance, TieMode mode = TieMode::kSequential,
                       std::vector<GreedyTraceRow>* trace = nullptr);

/// Strict greedy step across one vertex: given the time-sorted arrivals into a
/// vertex and its outgoing interactions, returns (t, moved, seq) for every
/// outgoing interaction that moved a positive amount.
std::vector<Interaction> boundary_step(std::span<const Interaction> arrivals,
                                       std::span<const Interaction> outgoing);

/// Interactions that raise the terminal buffer when strict greedy runs along
/// `chain` with its first vertex as an infinite source. Each entry carries the
/// timestamp and seq of the last-edge interaction that produced it. Throws
/// std::invalid_argument when the edges do not form a path.
std::vector<Interaction> greedy_chain_boundary(std::span<const EdgeSeries> chain);

Quantity total_quantity(std::span<const Interaction> xs);

}  // namespace tempoflow
