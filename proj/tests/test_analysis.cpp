#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "fixtures.hpp"
#include "tempoflow/analysis/analysis.hpp"
#include "tempoflow/core/error.hpp"
#include "tempoflow/maxflow/lp.hpp"
#include "tempoflow/maxflow/time_expanded.hpp"

using namespace tempoflow;
using namespace tempoflow::testing;

namespace {

using Pairs = std::vector<std::pair<Timestamp, std::uint64_t>>;

Quantity exact(const FlowInstance& inst) { return max_flow_static(build_time_expanded(inst)).value; }

}  // namespace

TEST(Soluble, Examples) {
  EXPECT_TRUE(greedy_soluble(chain_instance()));
  EXPECT_TRUE(greedy_soluble(single_out_instance()));
  EXPECT_FALSE(greedy_soluble(greedy_gap_instance()));
}

TEST(Preprocess, LateInflowDropsFourInteractions) {
  const auto inst = late_inflow_instance();
  const auto r = preprocess(inst);
  EXPECT_EQ(r.report.interactions_removed, 4u);
  EXPECT_EQ(r.report.edges_removed, 0u);
  EXPECT_EQ(r.report.vertices_removed, 0u);
  EXPECT_FALSE(r.report.became_trivial);
  EXPECT_EQ(pairs_of(r.instance, "x", "y"), (Pairs{{9, 4}}));
  EXPECT_EQ(pairs_of(r.instance, "x", "z"), (Pairs{{10, 5}}));
  EXPECT_EQ(pairs_of(r.instance, "y", "t"), (Pairs{{12, 3}}));
  EXPECT_EQ(pairs_of(r.instance, "z", "t"), (Pairs{{13, 6}}));
}

TEST(Preprocess, DeadBranchRemovesVertices) {
  const auto inst = dead_branch_instance();
  EXPECT_FALSE(greedy_soluble(inst));
  const auto r = preprocess(inst);
  EXPECT_FALSE(r.instance.graph.find_vertex("x").has_value());
  EXPECT_FALSE(r.instance.graph.find_vertex("y").has_value());
  EXPECT_EQ(r.report.vertices_removed, 2u);
  EXPECT_EQ(pairs_of(r.instance, "z", "t"), (Pairs{{9, 6}}));
  EXPECT_TRUE(greedy_soluble(r.instance));
}

TEST(Preprocess, MinimalInstanceIsFixpoint) {
  const auto inst = chain_instance();
  const auto once = preprocess(inst);
  // (2,1) on z->t predates z's first inflow at 3.
  EXPECT_EQ(once.report.interactions_removed, 1u);
  const auto twice = preprocess(once.instance);
  EXPECT_EQ(twice.report, ReductionReport{});
  EXPECT_EQ(twice.instance.graph, once.instance.graph);
}

TEST(Preprocess, StrictPruneAlsoDropsEqualTimes) {
  const auto inst = make_instance({"s", "a", "t"}, {{"s", "a", {{4, 9}}}, {"a", "t", {{4, 9}, {5, 1}}}},
                                  "s", "t");
  EXPECT_EQ(preprocess(inst).report.interactions_removed, 0u);
  const auto strict = preprocess(inst, {.strict_prune = true});
  EXPECT_EQ(strict.report.interactions_removed, 1u);
  EXPECT_EQ(exact(strict.instance), exact(inst));
}

TEST(Preprocess, TrivialWhenSinkLosesInflow) {
  const auto inst =
      make_instance({"s", "a", "t"}, {{"s", "a", {{5, 3}}}, {"a", "t", {{1, 3}, {2, 3}}}}, "s", "t");
  const auto r = preprocess(inst);
  EXPECT_TRUE(r.report.became_trivial);
  EXPECT_TRUE(r.instance.disconnected);
  EXPECT_EQ(exact(inst), Quantity(0));
}

TEST(Preprocess, CyclicThrows) {
  const auto g = triangle_graph();
  FlowInstance inst;
  inst.graph = g;
  inst.source = *g.find_vertex("u1");
  inst.sink = *g.find_vertex("u4");
  EXPECT_THROW(preprocess(inst), CycleDetected);
}

TEST(ChainReduce, MergesIntoExistingSourceEdge) {
  const auto inst = two_chain_instance();
  const auto& g = inst.graph;
  const auto r = chain_reduce(inst, {inst.source, *g.find_vertex("y"), *g.find_vertex("z")});
  EXPECT_TRUE(r.merged);
  EXPECT_EQ(pairs_of(r.boundary), (Pairs{{3, 2}, {7, 1}}));
  EXPECT_EQ(pairs_of(r.instance, "s", "z"), (Pairs{{2, 5}, {3, 2}, {7, 1}, {11, 2}}));
  EXPECT_FALSE(r.instance.graph.find_vertex("y").has_value());
}

TEST(ChainReduce, SingleEdgeIsIdentity) {
  const auto inst = two_chain_instance();
  const auto r = chain_reduce(inst, {inst.source, *inst.graph.find_vertex("y")});
  EXPECT_EQ(r.instance.graph, inst.graph);
  EXPECT_FALSE(r.merged);
}

TEST(ChainReduce, WholeChainBecomesOneEdge) {
  const auto inst = chain_instance();
  const auto& g = inst.graph;
  const auto r = chain_reduce(inst, {inst.source, *g.find_vertex("y"), *g.find_vertex("z"), inst.sink});
  EXPECT_EQ(r.instance.graph.edge_count(), 1u);
  EXPECT_EQ(pairs_of(r.instance, "s", "t"), (Pairs{{6, 3}, {8, 4}}));
}

TEST(ChainReduce, RejectsBrokenPremise) {
  const auto inst = greedy_gap_instance();
  const auto& g = inst.graph;
  EXPECT_THROW(chain_reduce(inst, {inst.source, *g.find_vertex("y"), *g.find_vertex("z")}),
               std::invalid_argument);
  EXPECT_THROW(chain_reduce(inst, {*g.find_vertex("y"), *g.find_vertex("z")}),
               std::invalid_argument);
}

TEST(Simplify, TwoReductionsOneMerge) {
  const auto inst = two_chain_instance();
  EXPECT_EQ(build_lp(inst).variable_count(), 9u);
  const auto r = simplify(inst);
  EXPECT_EQ(r.report.chains_reduced, 2u);
  EXPECT_EQ(r.report.edges_merged, 1u);
  EXPECT_EQ(pairs_of(r.instance, "s", "w"), (Pairs{{4, 6}, {12, 4}}));
  EXPECT_EQ(build_lp(r.instance).variable_count(), 3u);
  EXPECT_EQ(exact(r.instance), exact(inst));
}

TEST(Simplify, PureChainCollapses) {
  const auto r = simplify(chain_instance());
  EXPECT_EQ(r.instance.graph.edge_count(), 1u);
  EXPECT_EQ(build_lp(r.instance).variable_count(), 0u);
}

TEST(Simplify, DiamondIsFixpoint) {
  const auto inst = make_instance({"s", "a", "b", "t"},
                                  {{"s", "a", {{1, 2}}},
                                   {"s", "b", {{2, 3}}},
                                   {"a", "b", {{3, 1}}},
                                   {"a", "t", {{4, 2}}},
                                   {"b", "t", {{5, 3}}}},
                                  "s", "t");
  const auto r = simplify(inst);
  EXPECT_EQ(r.report, ReductionReport{});
  EXPECT_EQ(r.instance.graph, inst.graph);
}

TEST(Simplify, EmptyBoundaryPrunesDownstream) {
  const auto inst = make_instance({"s", "a", "b", "t"},
                                  {{"s", "a", {{5, 2}}},
                                   {"a", "b", {{1, 2}}},
                                   {"b", "t", {{6, 2}}},
                                   {"s", "t", {{7, 1}}}},
                                  "s", "t");
  const auto r = simplify(inst);
  EXPECT_EQ(exact(r.instance), Quantity(1));
  EXPECT_EQ(r.instance.graph.vertex_count(), 2u);
}

// Randomized reduction invariance with the time-expanded solver as referee.
TEST(ReductionProperty, PreprocessAndSimplifyPreserveMaxFlow) {
  std::mt19937_64 rng(11);
  RandomSpec spec;
  spec.max_interactions = 40;
  for (int i = 0; i < 300; ++i) {
    const auto inst = random_instance(rng, spec);
    const auto want = exact(inst);
    const auto pre = preprocess(inst);
    EXPECT_EQ(exact(pre.instance), want) << "seed index " << i;
    if (pre.report.became_trivial) {
      EXPECT_EQ(want, Quantity(0));
    }
    EXPECT_LE(pre.instance.interaction_count(), inst.interaction_count());
    EXPECT_EQ(preprocess(pre.instance).report.interactions_removed, 0u);
    const auto sim = simplify(inst);
    EXPECT_EQ(exact(sim.instance), want) << "seed index " << i;
    EXPECT_LE(sim.instance.interaction_count(), inst.interaction_count());
    EXPECT_TRUE(check_instance(pre.instance).empty()) << check_instance(pre.instance);
    EXPECT_TRUE(check_instance(sim.instance).empty()) << check_instance(sim.instance);
  }
}

// Every interaction preprocess drops can be forced to zero without losing flow.
TEST(ReductionProperty, DroppedInteractionsAreZeroInSomeOptimum) {
  std::mt19937_64 rng(13);
  RandomSpec spec;
  spec.max_interactions = 16;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const auto inst = random_instance(rng, spec);
    if (inst.disconnected) continue;
    const auto pre = preprocess(inst);
    const auto want = solve_lp(build_lp(inst)).value;
    std::unordered_set<std::uint64_t> kept;
    for (const auto& e : pre.instance.graph.edges()) {
      for (const auto& x : e.interactions) kept.insert(x.seq);
    }
    // Pin every dropped variable to zero at once through its upper bound.
    auto model = build_lp(inst);
    std::vector<std::uint64_t> seq_of(inst.interaction_count());
    std::size_t flat = 0;
    for (const auto& e : inst.graph.edges()) {
      for (const auto& x : e.interactions) seq_of[flat++] = x.seq;
    }
    for (std::size_t v = 0; v < model.variable_count(); ++v) {
      if (!kept.contains(seq_of[model.var_interaction[v]])) {
        model.upper[v] = Quantity(0);
        ++checked;
      }
    }
    EXPECT_EQ(solve_lp(model).value, want) << "seed index " << i;
  }
  EXPECT_GT(checked, 0);
}
