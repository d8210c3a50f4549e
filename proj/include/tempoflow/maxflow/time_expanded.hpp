#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "tempoflow/core/normalize.hpp"
#include "tempoflow/greedy/greedy.hpp"

namespace tempoflow {

enum class ArcKind : std::uint8_t { kInteraction, kHoldover, kSuper };

struct ExpandedArc {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  Quantity capacity;
  ArcKind kind = ArcKind::kSuper;
  // Flat interaction index for kInteraction arcs (and source arcs, which are kSuper).
  std::size_t interaction = kNoInteraction;

  static constexpr std::size_t kNoInteraction = std::numeric_limits<std::size_t>::max();
};

/// Static flow network whose max flow equals the maximum temporal flow of the
/// instance it was built from. Node 0 is the super-source, node 1 the super-sink;
/// every other node is a (vertex, timestamp) slot.
struct TimeExpandedNetwork {
  static constexpr std::uint32_t kSuperSource = 0;
  static constexpr std::uint32_t kSuperSink = 1;

  struct Slot {
    VertexId vertex{};
    Timestamp t = 0;
  };

  std::vector<Slot> slots;  // slots[i] describes node i + 2
  std::vector<ExpandedArc> arcs;
  std::size_t interaction_count = 0;  // of the source instance
  // Flat indices of interactions arriving at the sink, used to report the value.
  std::vector<std::size_t> sink_interactions;
  // Interactions drawn directly from the source: their transfer is fixed to q.
  std::vector<std::size_t> source_interactions;

  std::size_t node_count() const { return slots.size() + 2; }
};

/// Slot construction: each non-source vertex gets one node per distinct
/// timestamp of its incident interactions, chained by INFINITE holdover arcs.
/// An interaction at time t on (v, u) leaves v's latest slot strictly before t
/// and enters u's slot at t. An interaction with no earlier slot at its tail
/// can never carry flow and gets no arc.
TimeExpandedNetwork build_time_expanded(const FlowInstance& instance);

/// Exact integral max flow (Dinic). INFINITE capacities are replaced by one
/// more than the sum of all finite capacities. Transfers are recovered per
/// interaction; source interactions report their full quantity.
FlowResult max_flow_static(const TimeExpandedNetwork& net);

}  // namespace tempoflow
