#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tempoflow/core/error.hpp"
#include "tempoflow/patterns/path_table.hpp"
#include "tempoflow/patterns/pattern.hpp"

namespace tempoflow {

// kNone: graph browsing, where coverage does not apply. kFull: every pattern
// edge came from precomputed paths. kPartial: some edges were looked up in the graph.
enum class Coverage { kNone, kFull, kPartial };

struct FoundInstance {
  PatternInstance instance;
  Quantity flow;
  Coverage coverage = Coverage::kNone;
};

/// Receives each instance; returning false stops the enumeration.
using InstanceSink = std::function<bool(const FoundInstance&)>;

struct EnumerateOptions {
  bool compute_flow = true;
  std::size_t limit = 0;  // 0 means no limit
};

/// Backtracking over pattern vertices in topological order. Instances are
/// produced in ascending order of their canonical key. Chain patterns carry
/// their greedy boundary along the search; other patterns get an exact max
/// flow per instance. Returns the number of instances emitted.
std::size_t enumerate_gb(const TemporalGraph& graph, const Pattern& pattern,
                         const InstanceSink& sink, const EnumerateOptions& options = {});

/// No table in the set can serve any path of the pattern.
class TableMissing : public DataError {
 public:
  using DataError::DataError;
};

/// Enumeration driven by precomputed path tables. Pattern paths that match an
/// available table are joined on their shared vertices; remaining pattern
/// edges are checked or expanded against the graph. Produces the same
/// instances and flows as enumerate_gb, in unspecified order.
std::size_t enumerate_pb(const TemporalGraph& graph, const Pattern& pattern,
                         const PathTableSet& tables, const InstanceSink& sink,
                         const EnumerateOptions& options = {});

/// Exact max flow of an instance's subgraph (pre-and-simplify strategy).
Quantity instance_flow(const TemporalGraph& graph, const Pattern& pattern,
                       const PatternInstance& instance);

struct NonrigidGroup {
  VertexId anchor{};
  std::size_t path_count = 0;
  Quantity total_flow;
  std::vector<std::size_t> rows;  // selected rows of the cyclic table
};

/// Groups the cyclic table of `pattern.hops` hops by anchor. Scanning each
/// group in row order, a cycle is kept when its interior vertices are disjoint
/// from every cycle kept so far. Anchors keeping at least `min_paths` cycles
/// are reported with the summed boundary quantities.
/// Throws TableMissing when the table is not in the set.
std::vector<NonrigidGroup> enumerate_nonrigid(const TemporalGraph& graph,
                                              const RelaxedPattern& pattern,
                                              const PathTableSet& tables);

}  // namespace tempoflow
