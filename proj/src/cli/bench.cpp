#include "tempoflow/cli/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "tempoflow/core/error.hpp"

namespace tempoflow {
namespace {

template <typename F>
double time_us(std::size_t reps, F&& f) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  for (std::size_t i = 0; i < reps; ++i) f();
  const std::chrono::duration<double, std::micro> took = clock::now() - start;
  return took.count() / static_cast<double>(reps);
}

BenchRecord run_one(const NamedInstance& named, std::size_t reps) {
  const auto& inst = named.instance;
  BenchRecord r;
  r.id = named.id;
  r.interaction_count = inst.interaction_count();
  r.triage = classify(inst);

  Quantity greedy, lp, pre, presim;
  r.greedy_us = time_us(reps, [&] { greedy = greedy_flow(inst, TieMode::kStrict).value; });
  r.lp_us = time_us(reps, [&] { lp = max_flow(inst, Strategy::kLp).result.value; });
  r.pre_us = time_us(reps, [&] { pre = max_flow(inst, Strategy::kPre).result.value; });
  r.presim_us = time_us(reps, [&] { presim = max_flow(inst, Strategy::kPreSim).result.value; });

  if (lp != pre || lp != presim) {
    throw InvariantViolation("bench: strategies disagree on '" + named.id + "': lp=" +
                             lp.to_string() + " pre=" + pre.to_string() +
                             " presim=" + presim.to_string());
  }
  if (greedy > lp || (r.triage == TriageClass::kA && greedy != lp)) {
    throw InvariantViolation("bench: greedy " + greedy.to_string() + " vs max " + lp.to_string() +
                             " on '" + named.id + "' (class " +
                             std::string(to_string(r.triage)) + ")");
  }
  r.greedy_value = greedy;
  r.max_value = lp;
  return r;
}

BenchRow average(std::string label, const std::vector<const BenchRecord*>& group) {
  BenchRow row;
  row.label = std::move(label);
  row.count = group.size();
  for (const auto* r : group) {
    row.mean_interactions += static_cast<double>(r->interaction_count);
    row.greedy_ms += r->greedy_us / 1000.0;
    row.lp_ms += r->lp_us / 1000.0;
    row.pre_ms += r->pre_us / 1000.0;
    row.presim_ms += r->presim_us / 1000.0;
  }
  const auto n = static_cast<double>(group.size());
  row.mean_interactions /= n;
  row.greedy_ms /= n;
  row.lp_ms /= n;
  row.pre_ms /= n;
  row.presim_ms /= n;
  return row;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::vector<BenchRecord> bench(const std::vector<NamedInstance>& instances,
                               const BenchOptions& options) {
  const std::size_t reps = std::max<std::size_t>(1, options.repetitions);
  const std::size_t jobs =
      std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(1, instances.size()));
  std::vector<BenchRecord> out(instances.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= instances.size()) return;
      try {
        out[i] = run_one(instances[i], reps);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = instances.size();
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<BenchRow> summarize_by_class(const std::vector<BenchRecord>& records) {
  std::vector<BenchRow> rows;
  for (auto c : {TriageClass::kA, TriageClass::kB, TriageClass::kC}) {
    std::vector<const BenchRecord*> group;
    for (const auto& r : records) {
      if (r.triage == c) group.push_back(&r);
    }
    if (!group.empty()) rows.push_back(average(std::string(to_string(c)), group));
  }
  if (!records.empty()) {
    std::vector<const BenchRecord*> all;
    for (const auto& r : records) all.push_back(&r);
    rows.push_back(average("all", all));
  }
  return rows;
}

std::vector<BenchRow> summarize_by_size(const std::vector<BenchRecord>& records) {
  struct Bucket {
    const char* label;
    std::size_t lo, hi;  // inclusive lo, exclusive hi
  };
  const Bucket buckets[] = {{"<100", 0, 100}, {"100-1000", 100, 1001}, {">1000", 1001, SIZE_MAX}};
  std::vector<BenchRow> rows;
  for (const auto& b : buckets) {
    std::vector<const BenchRecord*> group;
    for (const auto& r : records) {
      if (r.interaction_count >= b.lo && r.interaction_count < b.hi) group.push_back(&r);
    }
    if (!group.empty()) rows.push_back(average(b.label, group));
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "id,class,interactions,greedy_us,lp_us,pre_us,presim_us,greedy_value,max_value\n";
  for (const auto& r : records) {
    out << r.id << ',' << to_string(r.triage) << ',' << r.interaction_count << ','
        << fixed(r.greedy_us, 1) << ',' << fixed(r.lp_us, 1) << ',' << fixed(r.pre_us, 1) << ','
        << fixed(r.presim_us, 1) << ',' << r.greedy_value << ',' << r.max_value << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "group,count,mean_interactions,greedy_ms,lp_ms,pre_ms,presim_ms\n";
  for (const auto& r : rows) {
    out << r.label << ',' << r.count << ',' << fixed(r.mean_interactions, 1) << ','
        << fixed(r.greedy_ms, 4) << ',' << fixed(r.lp_ms, 4) << ',' << fixed(r.pre_ms, 4) << ','
        << fixed(r.presim_ms, 4) << '\n';
  }
}

void write_summary_text(std::ostream& out, const std::string& title,
                        const std::vector<BenchRow>& rows) {
  const std::vector<std::string> head{"group", "count", "avg |I|", "greedy ms",
                                      "lp ms", "pre ms", "presim ms"};
  std::vector<std::vector<std::string>> cells{head};
  for (const auto& r : rows) {
    cells.push_back({r.label, std::to_string(r.count), fixed(r.mean_interactions, 1),
                     fixed(r.greedy_ms, 3), fixed(r.lp_ms, 3), fixed(r.pre_ms, 3),
                     fixed(r.presim_ms, 3)});
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  out << title << '\n';
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto pad = std::string(width[c] - row[c].size(), ' ');
      out << (c == 0 ? row[c] + pad : "  " + pad + row[c]);
    }
    out << '\n';
  }
}

}  // namespace tempoflow
