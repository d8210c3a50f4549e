#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tempoflow/cli/instance_io.hpp"
#include "tempoflow/maxflow/strategy.hpp"

namespace tempoflow {

struct BenchRecord {
  std::string id;
  TriageClass triage = TriageClass::kC;
  std::size_t interaction_count = 0;
  // Mean wall-clock per method in microseconds, each including its own
  // preprocessing.
  double greedy_us = 0;
  double lp_us = 0;
  double pre_us = 0;
  double presim_us = 0;
  Quantity greedy_value;
  Quantity max_value;
};

struct BenchOptions {
  std::size_t repetitions = 1;
  std::size_t jobs = 1;
};

/// Runs greedy and the three exact strategies on every instance. Instances
/// are spread over `jobs` worker threads; each worker times its instances
/// one at a time. Records come back in input order. Throws
/// InvariantViolation when the exact strategies disagree, when greedy
/// exceeds the maximum, or when a class A instance has greedy below it.
std::vector<BenchRecord> bench(const std::vector<NamedInstance>& instances,
                               const BenchOptions& options = {});

struct BenchRow {
  std::string label;
  std::size_t count = 0;
  double mean_interactions = 0;
  double greedy_ms = 0;
  double lp_ms = 0;
  double pre_ms = 0;
  double presim_ms = 0;
};

/// Per-class averages (A, B, C, all) and per-size buckets
/// (<100, 100-1000, >1000 interactions). Empty groups are omitted.
std::vector<BenchRow> summarize_by_class(const std::vector<BenchRecord>& records);
std::vector<BenchRow> summarize_by_size(const std::vector<BenchRecord>& records);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<BenchRow>& rows);
void write_summary_text(std::ostream& out, const std::string& title,
                        const std::vector<BenchRow>& rows);

}  // namespace tempoflow
