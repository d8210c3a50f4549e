#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "tempoflow/core/error.hpp"
#include "tempoflow/maxflow/lp.hpp"
#include "tempoflow/maxflow/strategy.hpp"
#include "tempoflow/maxflow/time_expanded.hpp"
#include "tempoflow/maxflow/validate.hpp"

using namespace tempoflow;
using namespace tempoflow::testing;

namespace {

const Strategy kAll[] = {Strategy::kLp, Strategy::kPre, Strategy::kPreSim};

std::uint64_t transfer_of(const FlowInstance& inst, const FlowResult& r, const char* src,
                          const char* dst, Timestamp t) {
  const auto& g = inst.graph;
  const auto e = *g.find_edge(*g.find_vertex(src), *g.find_vertex(dst));
  const auto& xs = g.edge(e).interactions;
  for (std::size_t p = 0; p < xs.size(); ++p) {
    if (xs[p].t == t) return r.transfers[g.interaction_offset(e) + p].value();
  }
  ADD_FAILURE() << "no interaction at t=" << t;
  return 0;
}

}  // namespace

TEST(TimeExpanded, GreedyGapInstance) {
  const auto inst = greedy_gap_instance();
  const auto net = build_time_expanded(inst);
  const auto r = max_flow_static(net);
  EXPECT_EQ(r.value, Quantity(5));
  EXPECT_EQ(validate_transfers(inst, r.transfers, r.value), "");
  // y must keep 4 for t; whether z's single unit came from y is not fixed.
  EXPECT_EQ(transfer_of(inst, r, "y", "t", 4), 4u);
  EXPECT_EQ(transfer_of(inst, r, "z", "t", 5), 1u);
}

TEST(TimeExpanded, SingleEdge) {
  const auto inst = make_instance({"s", "t"}, {{"s", "t", {{1, 5}}}}, "s", "t");
  const auto net = build_time_expanded(inst);
  EXPECT_EQ(net.node_count(), 3u);
  EXPECT_EQ(max_flow_static(net).value, Quantity(5));
}

TEST(TimeExpanded, SameTimeRelayIsBlocked) {
  const auto inst =
      make_instance({"s", "a", "t"}, {{"s", "a", {{4, 9}}}, {"a", "t", {{4, 9}}}}, "s", "t");
  EXPECT_EQ(max_flow_static(build_time_expanded(inst)).value, Quantity(0));
  EXPECT_EQ(solve_lp(build_lp(inst)).value, Quantity(0));
  EXPECT_EQ(brute_force_max_flow(inst), 0u);
}

TEST(TimeExpanded, SizeBounds) {
  std::mt19937_64 rng(3);
  RandomSpec spec;
  spec.allow_cycles = true;
  for (int i = 0; i < 50; ++i) {
    const auto inst = random_instance(rng, spec);
    const auto net = build_time_expanded(inst);
    std::size_t holdovers = 0;
    for (const auto& a : net.arcs) {
      if (a.kind == ArcKind::kHoldover) {
        ++holdovers;
        EXPECT_LT(net.slots[a.from - 2].t, net.slots[a.to - 2].t);
      }
    }
    EXPECT_LE(net.arcs.size(), inst.interaction_count() + holdovers + 2 * net.slots.size());
  }
}

TEST(TimeExpanded, EmptyNetwork) {
  TimeExpandedNetwork net;
  EXPECT_EQ(max_flow_static(net).value, Quantity(0));
}

TEST(Lp, GreedyGapModel) {
  const auto model = build_lp(greedy_gap_instance());
  EXPECT_EQ(model.variable_count(), 3u);
  EXPECT_EQ(solve_lp(model).value, Quantity(5));
}

TEST(Lp, ZeroVariableModel) {
  const auto inst = make_instance({"s", "t"}, {{"s", "t", {{1, 5}, {2, 6}}}}, "s", "t");
  const auto model = build_lp(inst);
  EXPECT_EQ(model.variable_count(), 0u);
  EXPECT_EQ(solve_lp(model).value, Quantity(11));
}

TEST(Lp, EmissionIsStable) {
  const auto model = build_lp(two_chain_instance());
  std::ostringstream a;
  std::ostringstream b;
  write_cplex_lp(a, model);
  write_cplex_lp(b, build_lp(two_chain_instance()));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("Maximize"), std::string::npos);
  EXPECT_NE(a.str().find("Subject To"), std::string::npos);
  EXPECT_NE(a.str().find("End"), std::string::npos);
}

TEST(Lp, SameTimeOutgoingShareTheBuffer) {
  // Two outgoing interactions at t=3 from a buffer of 5 can move 5 in total.
  const auto inst = make_instance({"s", "a", "b", "t"},
                                  {{"s", "a", {{1, 5}}},
                                   {"a", "b", {{3, 5}}},
                                   {"a", "t", {{3, 5}}},
                                   {"b", "t", {{4, 5}}}},
                                  "s", "t");
  EXPECT_EQ(solve_lp(build_lp(inst)).value, Quantity(5));
  EXPECT_EQ(max_flow_static(build_time_expanded(inst)).value, Quantity(5));
  EXPECT_EQ(brute_force_max_flow(inst), 5u);
}

TEST(Lp, IterationCap) {
  const auto model = build_lp(two_chain_instance());
  EXPECT_THROW(solve_lp(model, {.max_iterations = 0}), DataError);
}

TEST(Strategy, AllAgreeOnGreedyGap) {
  for (auto s : kAll) {
    const auto out = max_flow(greedy_gap_instance(), s, {.validate = true});
    EXPECT_EQ(out.result.value, Quantity(5)) << to_string(s);
  }
}

TEST(Strategy, DeadBranchIsClassB) {
  const auto out = max_flow(dead_branch_instance(), Strategy::kPre, {.validate = true});
  ASSERT_TRUE(out.triage.has_value());
  EXPECT_EQ(*out.triage, TriageClass::kB);
  EXPECT_EQ(out.result.method, FlowMethod::kGreedy);
  EXPECT_EQ(out.result.value, max_flow(dead_branch_instance(), Strategy::kLp).result.value);
}

TEST(Strategy, SingleOutIsClassA) {
  const auto out = max_flow(single_out_instance(), Strategy::kPre, {.validate = true});
  EXPECT_EQ(*out.triage, TriageClass::kA);
  EXPECT_EQ(out.result.value, Quantity(14));
  EXPECT_EQ(max_flow(single_out_instance(), Strategy::kLp).result.value, Quantity(14));
}

TEST(Strategy, ParseNames) {
  EXPECT_EQ(parse_strategy("presim"), Strategy::kPreSim);
  EXPECT_FALSE(parse_strategy("simplex").has_value());
}

TEST(Validate, RejectsOverspend) {
  const auto inst = greedy_gap_instance();
  std::vector<Quantity> x(inst.interaction_count(), Quantity(0));
  // Flat order: (s,y) (s,z) (y,z) (y,t) (z,t).
  x[0] = Quantity(5);
  x[1] = Quantity(3);
  x[2] = Quantity(5);
  x[3] = Quantity(4);
  EXPECT_NE(validate_transfers(inst, x, Quantity(4)), "");
  x[3] = Quantity(0);
  EXPECT_EQ(validate_transfers(inst, x, Quantity(0)), "");
  EXPECT_NE(validate_transfers(inst, x, Quantity(3)), "");
}

// Randomized oracle checks.
TEST(MaxFlowProperty, BruteForceAgrees) {
  std::mt19937_64 rng(5);
  RandomSpec spec;
  spec.max_vertices = 5;
  spec.max_interactions = 6;
  spec.max_quantity = 3;
  spec.max_time = 6;
  spec.allow_cycles = true;
  spec.allow_zero = true;
  for (int i = 0; i < 150; ++i) {
    const auto inst = random_instance(rng, spec);
    const auto want = brute_force_max_flow(inst);
    EXPECT_EQ(max_flow_static(build_time_expanded(inst)).value.value(), want) << i;
    EXPECT_EQ(solve_lp(build_lp(inst)).value.value(), want) << i;
  }
}

TEST(MaxFlowProperty, StrategiesAgreeAndWitnessesValidate) {
  std::mt19937_64 rng(17);
  RandomSpec spec;
  spec.allow_cycles = true;
  spec.max_interactions = 40;
  for (int i = 0; i < 300; ++i) {
    spec.allow_cycles = i % 2 == 0;
    const auto inst = random_instance(rng, spec);
    const auto lp = max_flow(inst, Strategy::kLp, {.validate = true});
    const auto greedy = greedy_flow(inst, TieMode::kStrict);
    EXPECT_LE(greedy.value, lp.result.value);
    for (auto s : {Strategy::kPre, Strategy::kPreSim}) {
      const auto out = max_flow(inst, s, {.validate = true});
      EXPECT_EQ(out.result.value, lp.result.value) << to_string(s) << " " << i;
    }
    const auto oracle = solve_lp(build_lp(inst));
    EXPECT_EQ(oracle.value, lp.result.value) << i;
    EXPECT_EQ(validate_transfers(inst, oracle.transfers, oracle.value), "");
  }
}

TEST(MaxFlowProperty, DeletingAnInteractionNeverHelps) {
  std::mt19937_64 rng(19);
  RandomSpec spec;
  spec.max_interactions = 15;
  for (int i = 0; i < 100; ++i) {
    const auto inst = random_instance(rng, spec);
    if (inst.disconnected || inst.interaction_count() == 0) continue;
    const auto full = max_flow_static(build_time_expanded(inst)).value;
    const auto& g = inst.graph;
    GraphBuilder b;
    for (const auto& n : g.names()) b.add_vertex(n);
    std::size_t skip = rng() % inst.interaction_count();
    std::size_t flat = 0;
    for (const auto& e : g.edges()) {
      for (const auto& x : e.interactions) {
        if (flat++ != skip) b.add_interaction(e.src, e.dst, x);
      }
    }
    FlowInstance smaller{std::move(b).build(), inst.source, inst.sink, false};
    EXPECT_LE(max_flow_static(build_time_expanded(smaller)).value, full);
  }
}
