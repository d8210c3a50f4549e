#include "tempoflow/maxflow/time_expanded.hpp"

#include <algorithm>

namespace tempoflow {

TimeExpandedNetwork build_time_expanded(const FlowInstance& instance) {
  const auto& g = instance.graph;
  TimeExpandedNetwork net;
  net.interaction_count = g.interaction_count();
  if (instance.disconnected) return net;

  // Distinct incident timestamps per vertex, sorted.
  std::vector<std::vector<Timestamp>> times(g.vertex_count());
  for (const auto& e : g.edges()) {
    for (const auto& x : e.interactions) {
      if (e.src != instance.source) times[index(e.src)].push_back(x.t);
      times[index(e.dst)].push_back(x.t);
    }
  }
  std::vector<std::uint32_t> first_node(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto& ts = times[v];
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    first_node[v] = static_cast<std::uint32_t>(net.slots.size() + 2);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      net.slots.push_back({vertex_id(v), ts[k]});
      if (k > 0) {
        net.arcs.push_back({first_node[v] + static_cast<std::uint32_t>(k) - 1,
                            first_node[v] + static_cast<std::uint32_t>(k), Quantity::infinite(),
                            ArcKind::kHoldover});
      }
    }
  }

  auto slot_at = [&](VertexId v, Timestamp t) {
    const auto& ts = times[index(v)];
    const auto k = std::lower_bound(ts.begin(), ts.end(), t) - ts.begin();
    return first_node[index(v)] + static_cast<std::uint32_t>(k);
  };

  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    const auto& tail_times = times[index(edge.src)];
    for (std::size_t p = 0; p < edge.interactions.size(); ++p) {
      const auto& x = edge.interactions[p];
      const std::size_t flat = g.interaction_offset(e) + p;
      if (edge.dst == instance.sink) net.sink_interactions.push_back(flat);
      const auto head = slot_at(edge.dst, x.t);
      if (edge.src == instance.source) {
        net.source_interactions.push_back(flat);
        net.arcs.push_back({TimeExpandedNetwork::kSuperSource, head, x.q, ArcKind::kSuper, flat});
        continue;
      }
      const auto k = std::lower_bound(tail_times.begin(), tail_times.end(), x.t) -
                     tail_times.begin();
      if (k == 0) continue;
      net.arcs.push_back({first_node[index(edge.src)] + static_cast<std::uint32_t>(k) - 1, head,
                          x.q, ArcKind::kInteraction, flat});
    }
  }

  const auto& sink_times = times[index(instance.sink)];
  for (std::size_t k = 0; k < sink_times.size(); ++k) {
    net.arcs.push_back({first_node[index(instance.sink)] + static_cast<std::uint32_t>(k),
                        TimeExpandedNetwork::kSuperSink, Quantity::infinite(), ArcKind::kSuper});
  }
  return net;
}

}  // namespace tempoflow
