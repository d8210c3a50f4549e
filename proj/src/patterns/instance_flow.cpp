#include "tempoflow/maxflow/strategy.hpp"
#include "tempoflow/patterns/enumerate.hpp"

namespace tempoflow {

Quantity instance_flow(const TemporalGraph& graph, const Pattern& pattern,
                       const PatternInstance& instance) {
  const auto sub = instance_subgraph(graph, pattern, instance);
  return max_flow(sub, Strategy::kPreSim).result.value;
}

}  // namespace tempoflow
