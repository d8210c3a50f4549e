#include "tempoflow/maxflow/strategy.hpp"

#include <unordered_map>

#include "tempoflow/core/error.hpp"
#include "tempoflow/maxflow/time_expanded.hpp"
#include "tempoflow/maxflow/validate.hpp"

namespace tempoflow {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kLp: return "lp";
    case Strategy::kPre: return "pre";
    case Strategy::kPreSim: return "presim";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  if (text == "lp") return Strategy::kLp;
  if (text == "pre") return Strategy::kPre;
  if (text == "presim") return Strategy::kPreSim;
  return std::nullopt;
}

std::string_view to_string(TriageClass c) {
  switch (c) {
    case TriageClass::kA: return "A";
    case TriageClass::kB: return "B";
    case TriageClass::kC: return "C";
  }
  return "?";
}

namespace {

std::unordered_map<std::uint64_t, Quantity> by_seq(const FlowInstance& inst,
                                                    const std::vector<Quantity>& transfers) {
  std::unordered_map<std::uint64_t, Quantity> out;
  out.reserve(transfers.size());
  std::size_t flat = 0;
  for (const auto& e : inst.graph.edges()) {
    for (const auto& x : e.interactions) out.emplace(x.seq, transfers[flat++]);
  }
  return out;
}

// Re-expresses transfers over the original instance; interactions that were
// deleted along the way carry nothing.
FlowResult map_back(const FlowInstance& original, const FlowResult& reduced,
                    const std::unordered_map<std::uint64_t, Quantity>& transfer_by_seq) {
  FlowResult out;
  out.method = reduced.method;
  out.same_time_relay = reduced.same_time_relay;
  out.transfers.assign(original.interaction_count(), Quantity::zero());
  Quantity into_sink;
  std::size_t flat = 0;
  for (const auto& e : original.graph.edges()) {
    for (const auto& x : e.interactions) {
      if (auto it = transfer_by_seq.find(x.seq); it != transfer_by_seq.end()) {
        out.transfers[flat] = it->second;
      }
      if (e.dst == original.sink) into_sink += out.transfers[flat];
      ++flat;
    }
  }
  if (into_sink != reduced.value) {
    throw InvariantViolation("reconstructed witness delivers " + into_sink.to_string() +
                             " but the reduced instance reported " + reduced.value.to_string());
  }
  out.value = into_sink;
  return out;
}

FlowResult exact(const FlowInstance& inst) {
  return max_flow_static(build_time_expanded(inst));
}

FlowResult zero_flow(const FlowInstance& inst, FlowMethod method) {
  FlowResult r;
  r.method = method;
  r.transfers.assign(inst.interaction_count(), Quantity::zero());
  return r;
}

}  // namespace

TriageClass classify(const FlowInstance& instance, const PreprocessOptions& options) {
  if (!topological_order(instance.graph)) return TriageClass::kC;
  if (greedy_soluble(instance)) return TriageClass::kA;
  const auto pre = preprocess(instance, options);
  if (pre.report.became_trivial || greedy_soluble(pre.instance)) return TriageClass::kB;
  return TriageClass::kC;
}

MaxFlowOutcome max_flow(const FlowInstance& instance, Strategy strategy,
                        const MaxFlowOptions& options) {
  MaxFlowOutcome out;
  const bool acyclic = topological_order(instance.graph).has_value();

  if (strategy == Strategy::kLp) {
    out.result = exact(instance);
  } else if (!acyclic) {
    // Preprocessing and the solubility test need a DAG; simplification does not.
    out.triage = TriageClass::kC;
    FlowInstance current = instance;
    SimplifyTrace trace;
    if (strategy == Strategy::kPreSim) {
      auto simp = simplify(instance);
      out.report += simp.report;
      current = std::move(simp.instance);
      trace = std::move(simp.trace);
    }
    auto reduced = exact(current);
    auto x = by_seq(current, reduced.transfers);
    unwind_simplify(trace, x);
    out.result = map_back(instance, reduced, x);
  } else if (greedy_soluble(instance)) {
    out.triage = TriageClass::kA;
    out.result = greedy_flow(instance, TieMode::kStrict);
  } else {
    auto pre = preprocess(instance, {options.strict_prune});
    out.report += pre.report;
    if (pre.report.became_trivial) {
      out.triage = TriageClass::kB;
      out.result = zero_flow(instance, FlowMethod::kGreedy);
    } else if (greedy_soluble(pre.instance)) {
      out.triage = TriageClass::kB;
      auto reduced = greedy_flow(pre.instance, TieMode::kStrict);
      out.result = map_back(instance, reduced, by_seq(pre.instance, reduced.transfers));
    } else {
      out.triage = TriageClass::kC;
      FlowInstance current = std::move(pre.instance);
      SimplifyTrace trace;
      if (strategy == Strategy::kPreSim) {
        auto simp = simplify(current);
        out.report += simp.report;
        current = std::move(simp.instance);
        trace = std::move(simp.trace);
      }
      auto reduced = exact(current);
      auto x = by_seq(current, reduced.transfers);
      unwind_simplify(trace, x);
      out.result = map_back(instance, reduced, x);
    }
  }

  if (options.validate) {
    const auto problem = validate_transfers(instance, out.result.transfers, out.result.value);
    if (!problem.empty()) throw InvariantViolation("invalid max-flow witness: " + problem);
  }
  return out;
}

}  // namespace tempoflow
