#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "tempoflow/core/error.hpp"
#include "tempoflow/maxflow/time_expanded.hpp"

namespace tempoflow {
namespace {

class Dinic {
 public:
  explicit Dinic(std::size_t n) : head_(n, -1), level_(n), cursor_(n) {}

  // Returns the index of the forward arc.
  std::size_t add_arc(std::uint32_t from, std::uint32_t to, std::uint64_t cap) {
    const std::size_t id = to_.size();
    push(from, to, cap);
    push(to, from, 0);
    return id;
  }

  std::uint64_t run(std::uint32_t s, std::uint32_t t) {
    std::uint64_t total = 0;
    while (bfs(s, t)) {
      for (std::size_t v = 0; v < head_.size(); ++v) cursor_[v] = head_[v];
      while (const auto pushed = dfs(s, t, std::numeric_limits<std::uint64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  std::uint64_t flow_on(std::size_t arc) const { return cap_[arc ^ 1]; }

 private:
  void push(std::uint32_t from, std::uint32_t to, std::uint64_t cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<std::int64_t>(to_.size() - 1);
  }

  bool bfs(std::uint32_t s, std::uint32_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::uint32_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (auto a = head_[v]; a >= 0; a = next_[a]) {
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[v] + 1;
          q.push(to_[a]);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::uint64_t dfs(std::uint32_t v, std::uint32_t t, std::uint64_t limit) {
    if (v == t) return limit;
    for (auto& a = cursor_[v]; a >= 0; a = next_[a]) {
      const auto w = to_[a];
      if (cap_[a] == 0 || level_[w] != level_[v] + 1) continue;
      if (const auto got = dfs(w, t, std::min(limit, cap_[a]))) {
        cap_[a] -= got;
        cap_[a ^ 1] += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::int64_t> head_;
  std::vector<std::int64_t> next_;
  std::vector<std::uint32_t> to_;
  std::vector<std::uint64_t> cap_;
  std::vector<int> level_;
  std::vector<std::int64_t> cursor_;
};

}  // namespace

FlowResult max_flow_static(const TimeExpandedNetwork& net) {
  FlowResult result;
  result.method = FlowMethod::kMaxflowExpanded;
  result.transfers.assign(net.interaction_count, Quantity::zero());

  Quantity finite_total;
  for (const auto& arc : net.arcs) {
    if (!arc.capacity.is_infinite()) finite_total += arc.capacity;
  }
  const Quantity big = finite_total + Quantity(1);
  if (big.is_infinite()) throw DataError("time-expanded network capacities overflow");

  Dinic solver(net.node_count());
  std::vector<std::size_t> arc_ids(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& arc = net.arcs[i];
    const auto cap = arc.capacity.is_infinite() ? big.value() : arc.capacity.value();
    arc_ids[i] = solver.add_arc(arc.from, arc.to, cap);
  }
  const std::uint64_t flow =
      solver.run(TimeExpandedNetwork::kSuperSource, TimeExpandedNetwork::kSuperSink);
  if (flow >= big.value()) {
    throw InvariantViolation("time-expanded max flow is unbounded");
  }

  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& arc = net.arcs[i];
    if (arc.kind == ArcKind::kInteraction) {
      result.transfers[arc.interaction] = Quantity(solver.flow_on(arc_ids[i]));
    } else if (arc.interaction != ExpandedArc::kNoInteraction) {
      result.transfers[arc.interaction] = arc.capacity;
    }
  }
  Quantity value;
  for (auto flat : net.sink_interactions) value += result.transfers[flat];
  if (value != Quantity(flow)) {
    throw InvariantViolation("sink inflow " + value.to_string() + " differs from static flow " +
                             std::to_string(flow));
  }
  result.value = value;
  return result;
}

}  // namespace tempoflow
