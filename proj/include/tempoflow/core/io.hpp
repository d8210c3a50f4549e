#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "tempoflow/core/graph.hpp"

namespace tempoflow {

enum class RecordFormat { kTsv, kCsv };

RecordFormat parse_record_format(std::string_view name);

struct ParseOptions {
  RecordFormat format = RecordFormat::kTsv;
  // Inclusive window; interactions outside it are skipped at ingestion.
  std::optional<std::pair<Timestamp, Timestamp>> window;
};

/// Reads `src dst timestamp quantity` records, one per line. Lines starting
/// with '#' and blank lines are skipped. TSV accepts any run of blanks or tabs
/// as separator; CSV expects commas. Errors carry the 1-based line number.
TemporalGraph parse_interactions(std::istream& in, const ParseOptions& options = {});

/// Writes one record per interaction in canonical order (edge order, then
/// time order). INFINITE quantities cannot be represented and raise DataError.
void write_interactions(std::ostream& out, const TemporalGraph& g,
                        RecordFormat format = RecordFormat::kTsv);

/// Writes the intern table as `id<TAB>name` lines.
void write_vertex_table(std::ostream& out, const TemporalGraph& g);

}  // namespace tempoflow
