#include "tempoflow/analysis/analysis.hpp"

namespace tempoflow {

ReductionReport& ReductionReport::operator+=(const ReductionReport& other) {
  interactions_removed += other.interactions_removed;
  edges_removed += other.edges_removed;
  vertices_removed += other.vertices_removed;
  chains_reduced += other.chains_reduced;
  edges_merged += other.edges_merged;
  became_trivial = became_trivial || other.became_trivial;
  return *this;
}

ReductionReport size_difference(const FlowInstance& before, const FlowInstance& after) {
  auto diff = [](std::size_t a, std::size_t b) { return a > b ? a - b : 0; };
  ReductionReport r;
  r.interactions_removed = diff(before.interaction_count(), after.interaction_count());
  r.edges_removed = diff(before.graph.edge_count(), after.graph.edge_count());
  r.vertices_removed = diff(before.graph.vertex_count(), after.graph.vertex_count());
  return r;
}

bool greedy_soluble(const FlowInstance& instance) {
  const auto& g = instance.graph;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto id = vertex_id(v);
    if (id == instance.source || id == instance.sink) continue;
    if (g.out_degree(id) != 1) return false;
  }
  return topological_order(g).has_value();
}

}  // namespace tempoflow
