#include <algorithm>

#include "tempoflow/patterns/enumerate.hpp"

namespace tempoflow {

std::vector<NonrigidGroup> enumerate_nonrigid(const TemporalGraph& graph,
                                              const RelaxedPattern& pattern,
                                              const PathTableSet& tables) {
  const auto it = tables.find({pattern.hops, true});
  if (it == tables.end()) {
    throw TableMissing("relaxed pattern needs the " + std::to_string(pattern.hops) +
                       "-hop cyclic path table");
  }
  const auto& table = it->second;
  std::vector<NonrigidGroup> out;
  std::vector<char> taken(graph.vertex_count(), 0);
  std::size_t r = 0;
  while (r < table.row_count()) {
    const auto anchor = table.vertices(r)[0];
    const auto [lo, hi] = table.rows_from(anchor);
    NonrigidGroup group{anchor, 0, Quantity::zero(), {}};
    std::vector<VertexId> marked;
    for (std::size_t row = lo; row < hi; ++row) {
      const auto path = table.vertices(row);
      const auto interior = path.subspan(1, path.size() - 2);
      if (std::any_of(interior.begin(), interior.end(),
                      [&](VertexId v) { return taken[index(v)] != 0; })) {
        continue;
      }
      for (auto v : interior) {
        taken[index(v)] = 1;
        marked.push_back(v);
      }
      group.rows.push_back(row);
      ++group.path_count;
      group.total_flow += table.boundary_total(row);
    }
    for (auto v : marked) taken[index(v)] = 0;
    if (group.path_count >= pattern.min_paths) out.push_back(std::move(group));
    r = hi;
  }
  return out;
}

}  // namespace tempoflow
