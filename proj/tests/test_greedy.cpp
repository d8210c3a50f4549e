#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tempoflow/greedy/greedy.hpp"
#include "tempoflow/maxflow/validate.hpp"

using namespace tempoflow;
using namespace tempoflow::testing;

namespace {

using Pairs = std::vector<std::pair<Timestamp, std::uint64_t>>;

std::uint64_t buffer_of(const FlowInstance& inst, const GreedyTraceRow& row, const char* name) {
  return row.buffers[index(*inst.graph.find_vertex(name))].value();
}

}  // namespace

TEST(Greedy, WorkedExampleTrace) {
  const auto inst = greedy_gap_instance();
  std::vector<GreedyTraceRow> trace;
  const auto r = greedy_flow(inst, TieMode::kSequential, &trace);
  EXPECT_EQ(r.value, Quantity(1));
  ASSERT_EQ(trace.size(), 5u);
  const std::uint64_t by[] = {5, 5, 0, 0, 0};
  const std::uint64_t bz[] = {0, 3, 8, 8, 7};
  const std::uint64_t bt[] = {0, 0, 0, 0, 1};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(buffer_of(inst, trace[i], "y"), by[i]) << "row " << i;
    EXPECT_EQ(buffer_of(inst, trace[i], "z"), bz[i]) << "row " << i;
    EXPECT_EQ(buffer_of(inst, trace[i], "t"), bt[i]) << "row " << i;
  }
  EXPECT_FALSE(r.same_time_relay);
}

TEST(Greedy, StrictModeMatchesOnDistinctTimes) {
  const auto inst = greedy_gap_instance();
  const auto a = greedy_flow(inst, TieMode::kSequential);
  const auto b = greedy_flow(inst, TieMode::kStrict);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.transfers, b.transfers);
}

TEST(Greedy, SameTimestampRelay) {
  const auto inst =
      make_instance({"s", "a", "t"}, {{"s", "a", {{4, 9}}}, {"a", "t", {{4, 9}}}}, "s", "t");
  const auto seq = greedy_flow(inst, TieMode::kSequential);
  EXPECT_EQ(seq.value, Quantity(9));
  EXPECT_TRUE(seq.same_time_relay);
  const auto strict = greedy_flow(inst, TieMode::kStrict);
  EXPECT_EQ(strict.value, Quantity(0));
  EXPECT_FALSE(strict.same_time_relay);
}

TEST(Greedy, SourceEdgeInfiniteQuantityDoesNotUnderflow) {
  FlowInstance inst;
  GraphBuilder b;
  const auto s = b.add_vertex("s");
  const auto a = b.add_vertex("a");
  const auto t = b.add_vertex("t");
  b.add_interaction(s, a, 1, Quantity::infinite());
  b.add_interaction(a, t, 2, Quantity(4));
  inst.graph = std::move(b).build();
  inst.source = s;
  inst.sink = t;
  EXPECT_EQ(greedy_flow(inst).value, Quantity(4));
}

TEST(Greedy, DisconnectedIsZero) {
  FlowInstance inst;
  GraphBuilder b;
  inst.source = b.add_vertex("s");
  inst.sink = b.add_vertex("t");
  inst.graph = std::move(b).build();
  inst.disconnected = true;
  EXPECT_EQ(greedy_flow(inst).value, Quantity(0));
}

TEST(ChainBoundary, ThreeEdgeChain) {
  const auto inst = chain_instance();
  const auto& g = inst.graph;
  const std::vector<EdgeSeries> chain(g.edges().begin(), g.edges().end());
  const auto boundary = greedy_chain_boundary(chain);
  EXPECT_EQ(pairs_of(boundary), (Pairs{{6, 3}, {8, 4}}));
  EXPECT_EQ(total_quantity(boundary), Quantity(7));
  EXPECT_EQ(greedy_flow(inst).value, Quantity(7));
}

TEST(ChainBoundary, SingleEdgeIsUnchanged) {
  const EdgeSeries e{vertex_id(0), vertex_id(1),
                     {{1, Quantity(2), 0}, {3, Quantity(0), 1}, {5, Quantity(4), 2}}};
  const std::vector<EdgeSeries> chain{e};
  EXPECT_EQ(pairs_of(greedy_chain_boundary(chain)), (Pairs{{1, 2}, {5, 4}}));
}

TEST(ChainBoundary, KeepsLastEdgeSeq) {
  const auto inst = chain_instance();
  const std::vector<EdgeSeries> chain(inst.graph.edges().begin(), inst.graph.edges().end());
  const auto boundary = greedy_chain_boundary(chain);
  const auto& last = chain.back().interactions;
  EXPECT_EQ(boundary[0].seq, last[1].seq);
  EXPECT_EQ(boundary[1].seq, last[2].seq);
}

TEST(ChainBoundary, RejectsNonPath) {
  const EdgeSeries a{vertex_id(0), vertex_id(1), {{1, Quantity(1), 0}}};
  const EdgeSeries b{vertex_id(2), vertex_id(3), {{2, Quantity(1), 1}}};
  const std::vector<EdgeSeries> chain{a, b};
  EXPECT_THROW(greedy_chain_boundary(chain), std::invalid_argument);
  EXPECT_THROW(greedy_chain_boundary(std::vector<EdgeSeries>{}), std::invalid_argument);
}

TEST(ChainBoundary, CyclicPathIsAllowed) {
  const auto g = triangle_graph();
  const auto u1 = *g.find_vertex("u1");
  const auto u2 = *g.find_vertex("u2");
  const auto u3 = *g.find_vertex("u3");
  const std::vector<EdgeSeries> chain{g.edge(*g.find_edge(u1, u2)), g.edge(*g.find_edge(u2, u3)),
                                      g.edge(*g.find_edge(u3, u1))};
  const auto two = greedy_chain_boundary(std::span(chain).first(2));
  EXPECT_EQ(pairs_of(two), (Pairs{{3, 4}, {5, 2}}));
  EXPECT_EQ(pairs_of(greedy_chain_boundary(chain)), (Pairs{{6, 5}}));
}

// Randomized: greedy transfers always satisfy the constraints of their mode.
TEST(GreedyProperty, WitnessIsFeasible) {
  std::mt19937_64 rng(7);
  RandomSpec spec;
  spec.allow_cycles = true;
  spec.allow_zero = true;
  for (int i = 0; i < 300; ++i) {
    const auto inst = random_instance(rng, spec);
    const auto seq = greedy_flow(inst, TieMode::kSequential);
    EXPECT_EQ(validate_transfers(inst, seq.transfers, seq.value, TieMode::kSequential), "");
    const auto strict = greedy_flow(inst, TieMode::kStrict);
    EXPECT_EQ(validate_transfers(inst, strict.transfers, strict.value, TieMode::kStrict), "");
  }
}
