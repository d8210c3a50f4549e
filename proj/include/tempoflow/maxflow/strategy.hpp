#pragma once

#include <optional>
#include <string_view>

#include "tempoflow/analysis/analysis.hpp"
#include "tempoflow/greedy/greedy.hpp"

namespace tempoflow {

enum class Strategy { kLp, kPre, kPreSim };

std::string_view to_string(Strategy s);
/// Accepts "lp", "pre", "presim".
std::optional<Strategy> parse_strategy(std::string_view text);

/// Which device settled the instance:
///   A: greedy-soluble as given, B: soluble (or trivial) after preprocessing,
///   C: needed the exact solver (includes every cyclic instance).
enum class TriageClass { kA, kB, kC };

std::string_view to_string(TriageClass c);

struct MaxFlowOptions {
  bool strict_prune = false;
  // Re-check the returned witness with the independent validator.
  bool validate = false;
};

struct MaxFlowOutcome {
  FlowResult result;  // transfers indexed by the input instance's flat interactions
  ReductionReport report;
  // Unset for kLp, which never runs the triage devices.
  std::optional<TriageClass> triage;
};

/// Exact maximum temporal flow. `kLp` solves the time-expanded network
/// directly; `kPre` answers with greedy when the instance is soluble, before
/// or after preprocessing, and otherwise solves the preprocessed instance;
/// `kPreSim` additionally simplifies before the exact solve. All strategies
/// return the same value.
MaxFlowOutcome max_flow(const FlowInstance& instance, Strategy strategy,
                        const MaxFlowOptions& options = {});

/// Triage without solving. Cyclic instances are class C.
TriageClass classify(const FlowInstance& instance, const PreprocessOptions& options = {});

}  // namespace tempoflow
