#include "tempoflow/maxflow/validate.hpp"

#include <algorithm>
#include <vector>

namespace tempoflow {

std::string validate_transfers(const FlowInstance& instance, std::span<const Quantity> transfers,
                               Quantity value, TieMode mode) {
  const auto& g = instance.graph;
  if (transfers.size() != g.interaction_count()) return "transfer vector has the wrong size";

  struct Event {
    Timestamp t;
    std::uint64_t seq;
    Quantity x;
    bool outgoing;
  };
  std::vector<std::vector<Event>> at(g.vertex_count());
  Quantity sink_inflow;
  std::size_t flat = 0;
  for (const auto& e : g.edges()) {
    for (const auto& i : e.interactions) {
      const Quantity x = transfers[flat++];
      if (x > i.q) {
        return "transfer " + x.to_string() + " exceeds quantity " + i.q.to_string() + " on " +
               g.name(e.src) + "->" + g.name(e.dst) + " at t=" + std::to_string(i.t);
      }
      at[index(e.src)].push_back({i.t, i.seq, x, true});
      at[index(e.dst)].push_back({i.t, i.seq, x, false});
      if (e.dst == instance.sink) sink_inflow += x;
    }
  }
  if (sink_inflow != value) {
    return "reported value " + value.to_string() + " differs from sink inflow " +
           sink_inflow.to_string();
  }

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (vertex_id(v) == instance.source) continue;
    auto& evs = at[v];
    std::sort(evs.begin(), evs.end(), [](const Event& a, const Event& b) {
      return a.t != b.t ? a.t < b.t : a.seq < b.seq;
    });
    Quantity received;
    Quantity sent;
    std::size_t i = 0;
    while (i < evs.size()) {
      if (mode == TieMode::kSequential) {
        if (evs[i].outgoing) {
          sent += evs[i].x;
          if (sent > received) {
            return "vertex " + g.name(vertex_id(v)) + " overspends at t=" +
                   std::to_string(evs[i].t);
          }
        } else {
          received += evs[i].x;
        }
        ++i;
        continue;
      }
      std::size_t j = i;
      Quantity arriving;
      while (j < evs.size() && evs[j].t == evs[i].t) {
        if (evs[j].outgoing) {
          sent += evs[j].x;
        } else {
          arriving += evs[j].x;
        }
        ++j;
      }
      if (sent > received) {
        return "vertex " + g.name(vertex_id(v)) + " overspends at t=" + std::to_string(evs[i].t);
      }
      received += arriving;
      i = j;
    }
  }
  return {};
}

}  // namespace tempoflow
