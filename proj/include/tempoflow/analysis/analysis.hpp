#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "tempoflow/core/normalize.hpp"

namespace tempoflow {

/// What a reduction pass removed. Counts are differences between the input
/// and output instance sizes.
struct ReductionReport {
  std::size_t interactions_removed = 0;
  std::size_t edges_removed = 0;
  std::size_t vertices_removed = 0;
  std::size_t chains_reduced = 0;
  std::size_t edges_merged = 0;
  // Source or sink lost all its edges, so the flow is zero.
  bool became_trivial = false;

  ReductionReport& operator+=(const ReductionReport& other);
  friend bool operator==(const ReductionReport&, const ReductionReport&) = default;
};

/// Size differences between two instances (chains and merges left at zero).
ReductionReport size_difference(const FlowInstance& before, const FlowInstance& after);

/// True iff the instance is a DAG and every vertex other than source and sink
/// has exactly one outgoing edge. Greedy computes the maximum flow on such
/// instances. O(|V| + |E|).
bool greedy_soluble(const FlowInstance& instance);

struct PreprocessOptions {
  // Also prune interactions with t == mintime (they can never carry flow
  // under strict prefix semantics).
  bool strict_prune = false;
};

struct Reduced {
  FlowInstance instance;
  ReductionReport report;
};

/// Single topological pass: drop every outgoing interaction of a vertex that
/// precedes the earliest interaction it can receive, remove emptied edges,
/// vertices left without incoming edges, and, cascading upstream, vertices
/// left without outgoing edges. Preserves the maximum flow.
/// Throws CycleDetected on cyclic instances.
Reduced preprocess(const FlowInstance& instance, const PreprocessOptions& options = {});

/// One source-anchored chain reduction, recorded for witness reconstruction.
struct ChainStep {
  std::vector<EdgeSeries> chain;  // edges of the chain as they were reduced
};

struct SimplifyTrace {
  std::vector<ChainStep> steps;
};

struct ChainReduced {
  FlowInstance instance;
  bool merged = false;
  std::vector<Interaction> boundary;
};

/// Replaces the path `chain` (source = chain[0], every interior vertex with
/// in- and out-degree 1) by one edge (source, last) carrying the chain's
/// greedy boundary, merging into an existing (source, last) edge.
/// Throws std::invalid_argument if the premise does not hold.
ChainReduced chain_reduce(const FlowInstance& instance, const std::vector<VertexId>& chain);

struct Simplified {
  FlowInstance instance;
  ReductionReport report;
  SimplifyTrace trace;
};

/// Repeats chain reduction on the lowest-destination source edge that starts a
/// chain of two or more edges until none exists. Preserves the maximum flow.
Simplified simplify(const FlowInstance& instance);

/// Extends a transfer assignment of the simplified instance (keyed by seq) to
/// the edges removed by the recorded chain reductions.
/// Interactions absent from the map are treated as carrying zero.
void unwind_simplify(const SimplifyTrace& trace,
                     std::unordered_map<std::uint64_t, Quantity>& transfer_by_seq);

}  // namespace tempoflow
