#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tempoflow/core/normalize.hpp"

namespace tempoflow::testing {

struct EdgeSpec {
  std::string src;
  std::string dst;
  std::vector<std::pair<Timestamp, std::uint64_t>> xs;
};

// Vertices are created in `order`; seqs follow the listing order of `edges`.
TemporalGraph make_graph(const std::vector<std::string>& order, const std::vector<EdgeSpec>& edges);
FlowInstance make_instance(const std::vector<std::string>& order,
                           const std::vector<EdgeSpec>& edges, const std::string& source,
                           const std::string& sink);

// Interactions of one edge as (t, q) pairs, for compact assertions.
std::vector<std::pair<Timestamp, std::uint64_t>> pairs_of(const FlowInstance& inst,
                                                          const std::string& src,
                                                          const std::string& dst);
std::vector<std::pair<Timestamp, std::uint64_t>> pairs_of(const std::vector<Interaction>& xs);

// Small worked instances.
FlowInstance greedy_gap_instance();   // greedy 1, max 5
FlowInstance chain_instance();        // s->y->z->t, boundary [(6,3),(8,4)]
FlowInstance single_out_instance();   // every interior vertex has one out-edge, flow 14
FlowInstance late_inflow_instance();  // preprocessing drops four interactions only
FlowInstance dead_branch_instance();  // preprocessing deletes two vertices
FlowInstance two_chain_instance();    // simplification reduces twice, merges once
TemporalGraph triangle_graph();       // u1->u2->u3->u1 plus u3->u4
TemporalGraph two_by_two_graph();     // a,b -> c -> d,e

struct RandomSpec {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 7;
  std::size_t max_interactions = 30;
  Timestamp max_time = 20;
  std::uint64_t max_quantity = 9;
  bool allow_cycles = false;
  bool distinct_times = false;
  bool allow_zero = false;
};

// Random instance with source "s" and sink "t"; vertices off every s-t path are
// pruned. May be disconnected.
FlowInstance random_instance(std::mt19937_64& rng, const RandomSpec& spec);

// Random instance in which every vertex other than source and sink has exactly
// one outgoing edge (to a higher-numbered vertex), with distinct timestamps.
FlowInstance random_single_out_instance(std::mt19937_64& rng, std::size_t max_interactions);

// Random plain graph with vertices v0..v{n-1} and up to `max_edges` distinct
// edges carrying 1 to 3 interactions each.
TemporalGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges);

// Pattern texts covering chains, cycles, parallel cycles and chorded cycles.
struct NamedPattern {
  std::string name;
  std::string text;
};
const std::vector<NamedPattern>& pattern_suite();

// Exhaustive maximum over all integral transfer vectors satisfying the strict
// prefix constraints. Feasible only for a handful of small interactions.
std::uint64_t brute_force_max_flow(const FlowInstance& inst);

}  // namespace tempoflow::testing
