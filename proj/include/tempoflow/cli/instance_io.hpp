#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tempoflow/core/normalize.hpp"

namespace tempoflow {

struct NamedInstance {
  std::string id;
  FlowInstance instance;
};

/// Text stream of flow instances, one block each:
///
///     instance <id> <source-name> <sink-name>
///     <src> <dst> <t> <q>      q is a decimal or "inf"
///     ...
///     end
///
/// Records are written in sequence-number order and read back with sequence
/// numbers following line order, so equal-time tiebreaks survive a round trip.
/// A disconnected instance is a block without records.
void write_instance(std::ostream& out, const NamedInstance& instance);
std::vector<NamedInstance> read_instances(std::istream& in);

/// True when the first non-blank, non-comment line starts an instance block.
bool looks_like_instance_stream(const std::string& text);

}  // namespace tempoflow
