#pragma once

#include <span>
#include <string>

#include "tempoflow/core/normalize.hpp"
#include "tempoflow/greedy/greedy.hpp"

namespace tempoflow {

/// Checks a transfer assignment against the flow constraints directly from the
/// instance graph (no shared code with the solvers):
///   0 <= x_i <= q_i, and for every non-source vertex v and timestamp t at
///   which v sends, everything v sent up to and including t is covered by
///   what it received strictly before t (kStrict) or received earlier in
///   (t, seq) order (kSequential). `value` must equal the inflow of the sink.
/// Returns an empty string when the assignment is feasible.
std::string validate_transfers(const FlowInstance& instance, std::span<const Quantity> transfers,
                               Quantity value, TieMode mode = TieMode::kStrict);

}  // namespace tempoflow
