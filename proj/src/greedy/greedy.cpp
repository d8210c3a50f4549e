#include "tempoflow/greedy/greedy.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace tempoflow {

std::string_view to_string(FlowMethod m) {
  switch (m) {
    case FlowMethod::kGreedy: return "greedy";
    case FlowMethod::kMaxflowExpanded: return "maxflow-expanded";
    case FlowMethod::kMaxflowLp: return "maxflow-lp";
    case FlowMethod::kPathBoundaries: return "path-boundaries";
  }
  return "unknown";
}

namespace {

struct Event {
  Timestamp t;
  std::uint64_t seq;
  EdgeIndex edge;
  std::uint32_t pos;
};

std::vector<Event> time_ordered_events(const TemporalGraph& g) {
  std::vector<Event> events;
  events.reserve(g.interaction_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& xs = g.edge(e).interactions;
    for (std::uint32_t p = 0; p < xs.size(); ++p) events.push_back({xs[p].t, xs[p].seq, e, p});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.t != b.t ? a.t < b.t : a.seq < b.seq;
  });
  return events;
}

}  // namespace

FlowResult greedy_flow(const FlowInstance& instance, TieMode mode,
                       std::vector<GreedyTraceRow>* trace) {
  const auto& g = instance.graph;
  FlowResult result;
  result.method = FlowMethod::kGreedy;
  result.transfers.assign(g.interaction_count(), Quantity::zero());
  if (instance.disconnected) return result;

  const std::size_t n = g.vertex_count();
  std::vector<Quantity> buffer(n);
  buffer[index(instance.source)] = Quantity::infinite();
  // Strict mode: arrivals of the current timestamp, credited when it ends.
  std::vector<Quantity> pending(n);
  std::vector<VertexId> touched;
  // Sequential mode: how much of each buffer predates the current timestamp.
  std::vector<Quantity> settled(n);
  std::vector<std::size_t> group_of(n, SIZE_MAX);
  std::size_t group = 0;

  auto flush = [&] {
    for (auto v : touched) {
      buffer[index(v)] += pending[index(v)];
      pending[index(v)] = Quantity::zero();
    }
    touched.clear();
  };
  auto settle = [&](VertexId v) {
    if (group_of[index(v)] != group) {
      group_of[index(v)] = group;
      settled[index(v)] = buffer[index(v)];
    }
  };

  const auto events = time_ordered_events(g);
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& ev = events[i];
    if (i > 0 && events[i - 1].t != ev.t) {
      flush();
      ++group;
    }

    const auto& edge = g.edge(ev.edge);
    const auto& x = edge.interactions[ev.pos];
    auto& from = buffer[index(edge.src)];
    const Quantity moved = std::min(x.q, from);

    if (mode == TieMode::kSequential) {
      settle(edge.src);
      settle(edge.dst);
      auto& old = settled[index(edge.src)];
      if (moved > old) result.same_time_relay = true;
      if (!old.is_infinite()) old -= std::min(moved, old);
    }
    // An infinite buffer stays infinite whatever it sends.
    if (!from.is_infinite()) from -= moved;
    if (mode == TieMode::kSequential) {
      buffer[index(edge.dst)] += moved;
    } else if (!moved.is_zero()) {
      if (pending[index(edge.dst)].is_zero()) touched.push_back(edge.dst);
      pending[index(edge.dst)] += moved;
    }

    result.transfers[g.interaction_offset(ev.edge) + ev.pos] = moved;

    if (trace) {
      GreedyTraceRow row{ev.edge, x, moved, buffer};
      for (auto v : touched) row.buffers[index(v)] += pending[index(v)];
      trace->push_back(std::move(row));
    }
  }
  flush();
  result.value = buffer[index(instance.sink)];
  return result;
}

std::vector<Interaction> boundary_step(std::span<const Interaction> arrivals,
                                       std::span<const Interaction> outgoing) {
  std::vector<Interaction> delivered;
  Quantity held;
  std::size_t next = 0;
  for (const auto& out : outgoing) {
    while (next < arrivals.size() && arrivals[next].t < out.t) held += arrivals[next++].q;
    const Quantity moved = std::min(out.q, held);
    if (moved.is_zero()) continue;
    if (!held.is_infinite()) held -= moved;
    delivered.push_back(Interaction{out.t, moved, out.seq});
  }
  return delivered;
}

std::vector<Interaction> greedy_chain_boundary(std::span<const EdgeSeries> chain) {
  if (chain.empty()) throw std::invalid_argument("greedy_chain_boundary: empty chain");
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i - 1].dst != chain[i].src) {
      throw std::invalid_argument("greedy_chain_boundary: edges do not form a path");
    }
  }
  std::vector<Interaction> arrivals;
  for (const auto& x : chain.front().interactions) {
    if (!x.q.is_zero()) arrivals.push_back(x);
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    arrivals = boundary_step(arrivals, chain[i].interactions);
  }
  return arrivals;
}

Quantity total_quantity(std::span<const Interaction> xs) {
  Quantity sum;
  for (const auto& x : xs) sum += x.q;
  return sum;
}

}  // namespace tempoflow
