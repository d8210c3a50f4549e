#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "tempoflow/core/normalize.hpp"
#include "tempoflow/maxflow/strategy.hpp"

namespace tempoflow {

struct SyntheticSpec {
  std::size_t vertices = 8;
  std::size_t edges = 12;
  std::size_t interactions = 30;
  TriageClass class_bias = TriageClass::kC;
  std::uint64_t seed = 1;
  Timestamp max_time = 1000;
  std::uint64_t max_quantity = 20;
};

/// Parses `key=value` pairs separated by commas, for example
/// "class=C,vertices=20,edges=40,interactions=1000,seed=7". Unknown keys and
/// malformed values raise DataError.
SyntheticSpec parse_synthetic_spec(std::string_view text);

/// Deterministic random DAG instance over vertices `v0 .. v{n-1}` with source
/// v0 and sink v{n-1}, classified as `class_bias` by `classify`:
///   A: every interior vertex has one outgoing edge.
///   B: an A-shaped instance plus edges whose interactions all precede any
///      inflow of their tail, so preprocessing removes them.
///   C: a general DAG that stays insoluble after preprocessing; candidates
///      where greedy already reaches the maximum are passed over while the
///      attempt budget allows.
/// Throws DataError when the spec is infeasible for the requested class.
FlowInstance gen_synthetic(const SyntheticSpec& spec);

}  // namespace tempoflow
