#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tempoflow/cli/bench.hpp"
#include "tempoflow/cli/extract.hpp"
#include "tempoflow/cli/synthetic.hpp"
#include "tempoflow/core/error.hpp"
#include "tempoflow/core/io.hpp"
#include "tempoflow/maxflow/lp.hpp"
#include "tempoflow/maxflow/validate.hpp"
#include "tempoflow/patterns/enumerate.hpp"

using namespace tempoflow;

namespace {

// Bad flag combinations detected after parsing (exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  return out;
}

TemporalGraph load_graph(const std::string& path, const ParseOptions& opts) {
  std::istringstream in(slurp(path));
  return parse_interactions(in, opts);
}

VertexId lookup(const TemporalGraph& g, const std::string& name) {
  auto v = g.find_vertex(name);
  if (!v) throw DataError("unknown vertex '" + name + "'");
  return *v;
}

// Either an instance stream or raw records plus --source/--sink names.
std::vector<NamedInstance> load_instances(const std::string& path, const ParseOptions& opts,
                                          const std::vector<std::string>& sources,
                                          const std::vector<std::string>& sinks) {
  const auto text = slurp(path);
  std::istringstream in(text);
  if (looks_like_instance_stream(text)) {
    if (!sources.empty() || !sinks.empty()) {
      throw UsageError("--source/--sink apply to raw interaction records only");
    }
    return read_instances(in);
  }
  if (sources.empty() || sinks.empty()) {
    throw UsageError("raw interaction records need --source and --sink");
  }
  const auto g = parse_interactions(in, opts);
  std::vector<VertexId> s, t;
  for (const auto& n : sources) s.push_back(lookup(g, n));
  for (const auto& n : sinks) t.push_back(lookup(g, n));
  return {NamedInstance{"input", normalize(g, s, t)}};
}

ParseOptions parse_options(const std::string& format, const std::vector<Timestamp>& window) {
  ParseOptions opts;
  opts.format = parse_record_format(format);
  if (!window.empty()) {
    if (window[0] > window[1]) throw UsageError("--window T0 T1 needs T0 <= T1");
    opts.window = std::pair(window[0], window[1]);
  }
  return opts;
}

void print_trace(std::ostream& out, const FlowInstance& inst,
                 const std::vector<GreedyTraceRow>& trace) {
  const auto& g = inst.graph;
  out << "# t\tedge\tq\tmoved";
  for (auto name : g.names()) out << "\tB[" << name << ']';
  out << '\n';
  for (const auto& row : trace) {
    const auto& e = g.edge(row.edge);
    out << "# " << row.interaction.t << '\t' << g.name(e.src) << "->" << g.name(e.dst) << '\t'
        << row.interaction.q << '\t' << row.moved;
    for (auto b : row.buffers) out << '\t' << b;
    out << '\n';
  }
}

void print_transfers(std::ostream& out, const FlowInstance& inst, const FlowResult& r) {
  const auto& g = inst.graph;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& s = g.edge(e);
    for (std::size_t i = 0; i < s.interactions.size(); ++i) {
      const auto x = r.transfers[g.interaction_offset(e) + i];
      if (x.is_zero()) continue;
      out << "# x\t" << g.name(s.src) << "->" << g.name(s.dst) << '\t' << s.interactions[i].t
          << '\t' << x << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flow computation and pattern search on temporal interaction networks"};
  app.require_subcommand(1);

  std::string format = "tsv";
  std::vector<Timestamp> window;
  std::string input;
  std::string out_path;

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Parse interaction records and report their size");
  ingest->add_option("file", input, "Record file ('-' for stdin)")->required();
  ingest->add_option("--format", format, "tsv or csv")->check(CLI::IsMember({"tsv", "csv"}));
  ingest->add_option("--window", window, "Keep interactions with T0 <= t <= T1")->expected(2);
  ingest->add_option("--out", out_path, "Write canonical records here");

  // extract
  ExtractOptions ex;
  std::string sink_name;
  auto* extract = app.add_subcommand("extract", "Cut seed-centered flow instances from a graph");
  extract->add_option("file", input, "Record file (default stdin)");
  extract->add_option("--format", format)->check(CLI::IsMember({"tsv", "csv"}));
  extract->add_option("--hops", ex.max_hops, "Maximum cycle length")
      ->required()
      ->check(CLI::Range(2, 4));
  extract->add_option("--min-int", ex.min_interactions, "Drop smaller instances");
  extract->add_option("--max-int", ex.max_interactions, "Drop larger instances");
  extract->add_option("--sink", sink_name, "Connect seeds to this vertex instead of cycles");
  extract->add_option("--out", out_path, "Instance stream destination (default stdout)");

  // flow
  std::string method = "pre";
  bool trace = false;
  bool validate = false;
  std::string emit_lp;
  std::vector<std::string> sources, sinks;
  auto* flow = app.add_subcommand("flow", "Compute the flow of each instance");
  flow->add_option("file", input, "Instance stream or raw records (default stdin)");
  flow->add_option("--format", format)->check(CLI::IsMember({"tsv", "csv"}));
  flow->add_option("--method", method)->check(CLI::IsMember({"greedy", "lp", "pre", "presim"}));
  flow->add_option("--source", sources, "Source vertex of raw records (repeatable)");
  flow->add_option("--sink", sinks, "Sink vertex of raw records (repeatable)");
  flow->add_flag("--trace", trace, "Print buffers (greedy) or nonzero transfers");
  flow->add_flag("--validate", validate, "Re-check each witness");
  flow->add_option("--emit-lp", emit_lp, "Write the LP model in CPLEX LP format");

  // precompute
  std::size_t hops = 2;
  bool cyclic = false;
  std::string dir;
  PrecomputeOptions pre_opts;
  auto* precompute = app.add_subcommand("precompute", "Build a k-hop path table");
  precompute->add_option("file", input, "Record file (default stdin)");
  precompute->add_option("--format", format)->check(CLI::IsMember({"tsv", "csv"}));
  precompute->add_option("--hops", hops)->required()->check(CLI::Range(2, 16));
  precompute->add_flag("--cyclic", cyclic, "Closed paths instead of simple paths");
  precompute->add_option("--out", dir, "Table directory")->required();
  precompute->add_option("--row-cap", pre_opts.row_cap, "Warn above this many rows");

  // patterns
  std::string pattern_path, tables_dir, pmethod = "gb";
  std::size_t min_paths = 0;
  EnumerateOptions en;
  bool no_flow = false;
  auto* patterns = app.add_subcommand("patterns", "Enumerate pattern instances with their flows");
  patterns->add_option("file", input, "Record file (default stdin)");
  patterns->add_option("--format", format)->check(CLI::IsMember({"tsv", "csv"}));
  patterns->add_option("--pattern", pattern_path, "Pattern file")->required();
  patterns->add_option("--method", pmethod)->check(CLI::IsMember({"gb", "pb"}));
  patterns->add_option("--tables", tables_dir, "Directory of precomputed path tables");
  patterns->add_option("--min-paths", min_paths, "Override a relaxed pattern's minimum");
  patterns->add_option("--limit", en.limit, "Stop after this many instances");
  patterns->add_flag("--no-flow", no_flow, "Skip flow computation");

  // gen
  std::string spec_text = "class=C";
  std::size_t count = 1;
  auto* gen = app.add_subcommand("gen", "Generate synthetic flow instances");
  gen->add_option("--spec", spec_text, "key=value list: class, vertices, edges, interactions, "
                                       "seed, max_time, max_quantity");
  gen->add_option("--count", count, "Number of instances (seeds spec.seed, spec.seed+1, ...)");
  gen->add_option("--out", out_path, "Instance stream destination (default stdout)");

  // bench
  BenchOptions bo;
  std::optional<std::uint64_t> seed;
  std::string synthetic, csv_path, summary_csv;
  auto* benchc = app.add_subcommand("bench", "Time greedy, lp, pre and presim per instance");
  benchc->add_option("file", input, "Instance stream (default stdin unless --synthetic)");
  benchc->add_option("--jobs", bo.jobs, "Worker threads")->check(CLI::PositiveNumber);
  benchc->add_option("--repetitions", bo.repetitions)->check(CLI::PositiveNumber);
  benchc->add_option("--seed", seed, "First seed for --synthetic");
  benchc->add_option("--synthetic", synthetic, "Generate instances from this spec");
  benchc->add_option("--count", count, "Synthetic instance count");
  benchc->add_option("--csv", csv_path, "Per-instance CSV");
  benchc->add_option("--summary-csv", summary_csv, "Summary tables as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const auto opts = parse_options(format, window);

    if (ingest->parsed()) {
      const auto g = load_graph(input, opts);
      std::cout << "vertices\t" << g.vertex_count() << "\nedges\t" << g.edge_count()
                << "\ninteractions\t" << g.interaction_count() << '\n';
      if (!out_path.empty()) {
        auto out = open_out(out_path);
        write_interactions(out, g, opts.format);
      }
    } else if (extract->parsed()) {
      const auto g = load_graph(input, opts);
      if (!sink_name.empty()) ex.sink = lookup(g, sink_name);
      std::ofstream file;
      if (!out_path.empty()) file = open_out(out_path);
      std::ostream& out = out_path.empty() ? std::cout : file;
      const auto n = extract_subgraphs(g, ex, [&](NamedInstance&& x) {
        write_instance(out, x);
        return true;
      });
      std::cerr << "extracted " << n << " instances\n";
    } else if (flow->parsed()) {
      const auto instances = load_instances(input, opts, sources, sinks);
      std::cout << "id\tmethod\tvalue\tclass\tinteractions\n";
      for (const auto& named : instances) {
        const auto& inst = named.instance;
        if (!emit_lp.empty()) {
          const auto path = instances.size() == 1 ? emit_lp : emit_lp + "." + named.id;
          auto out = open_out(path);
          write_cplex_lp(out, build_lp(inst));
        }
        FlowResult result;
        std::string triage = "-";
        std::vector<GreedyTraceRow> rows;
        if (method == "greedy") {
          result = greedy_flow(inst, TieMode::kSequential, trace ? &rows : nullptr);
          if (result.same_time_relay) {
            std::cerr << "warning: greedy on '" << named.id
                      << "' relayed quantity within one timestamp; exact methods forbid this\n";
          }
        } else {
          auto outcome = max_flow(inst, *parse_strategy(method), {.validate = validate});
          result = std::move(outcome.result);
          if (outcome.triage) triage = std::string(to_string(*outcome.triage));
        }
        if (validate) {
          const auto mode = method == "greedy" ? TieMode::kSequential : TieMode::kStrict;
          if (auto why = validate_transfers(inst, result.transfers, result.value, mode);
              !why.empty()) {
            throw InvariantViolation("witness for '" + named.id + "' rejected: " + why);
          }
        }
        std::cout << named.id << '\t' << method << '\t' << result.value << '\t' << triage << '\t'
                  << inst.interaction_count() << '\n';
        if (trace) {
          if (method == "greedy") {
            print_trace(std::cout, inst, rows);
          } else {
            print_transfers(std::cout, inst, result);
          }
        }
      }
    } else if (precompute->parsed()) {
      const auto g = load_graph(input, opts);
      auto r = precompute_paths(g, hops, cyclic, pre_opts);
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
      std::filesystem::create_directories(dir);
      const auto path = std::filesystem::path(dir) / path_table_filename(hops, cyclic);
      auto out = open_out(path.string());
      write_path_table(out, r.table, g);
      std::cout << "rows\t" << r.table.row_count() << "\nfile\t" << path.string() << '\n';
    } else if (patterns->parsed()) {
      const auto g = load_graph(input, opts);
      std::ifstream pin(pattern_path);
      if (!pin) throw DataError("cannot open '" + pattern_path + "'");
      const auto spec = parse_pattern(pin);
      PathTableSet tables;
      if (!tables_dir.empty()) tables = load_path_tables(tables_dir, g);

      if (const auto* relaxed = std::get_if<RelaxedPattern>(&spec)) {
        auto rp = *relaxed;
        if (patterns->count("--min-paths")) rp.min_paths = min_paths;
        if (!tables.contains({rp.hops, true})) {
          if (pmethod == "pb") throw TableMissing("no cyclic table with " +
                                                  std::to_string(rp.hops) + " hops");
          tables[{rp.hops, true}] = precompute_paths(g, rp.hops, true).table;
        }
        std::cout << "anchor\tpaths\tflow\n";
        std::size_t shown = 0;
        for (const auto& grp : enumerate_nonrigid(g, rp, tables)) {
          if (en.limit != 0 && shown++ == en.limit) break;
          std::cout << g.name(grp.anchor) << '\t' << grp.path_count << '\t' << grp.total_flow
                    << '\n';
        }
      } else {
        if (patterns->count("--min-paths")) {
          throw UsageError("--min-paths applies to relaxed patterns only");
        }
        const auto& p = std::get<Pattern>(spec);
        if (pmethod == "pb" && tables_dir.empty()) throw UsageError("--method pb needs --tables");
        en.compute_flow = !no_flow;
        for (Pattern::Node v = 0; v < p.size(); ++v) std::cout << (v ? "\t" : "") << p.name(v);
        std::cout << "\tflow\tcoverage\n";
        auto print = [&](const FoundInstance& f) {
          for (Pattern::Node v = 0; v < p.size(); ++v) {
            std::cout << (v ? "\t" : "") << g.name(f.instance.binding[v]);
          }
          std::cout << '\t' << (no_flow ? std::string("-") : f.flow.to_string()) << '\t'
                    << (f.coverage == Coverage::kFull      ? "full"
                        : f.coverage == Coverage::kPartial ? "partial"
                                                           : "-")
                    << '\n';
          return true;
        };
        const auto n = pmethod == "pb" ? enumerate_pb(g, p, tables, print, en)
                                       : enumerate_gb(g, p, print, en);
        std::cerr << n << " instances\n";
      }
    } else if (gen->parsed()) {
      const auto base = parse_synthetic_spec(spec_text);
      std::ofstream file;
      if (!out_path.empty()) file = open_out(out_path);
      std::ostream& out = out_path.empty() ? std::cout : file;
      for (std::size_t i = 0; i < count; ++i) {
        auto spec = base;
        spec.seed = base.seed + i;
        write_instance(out, {"syn" + std::to_string(spec.seed), gen_synthetic(spec)});
      }
    } else if (benchc->parsed()) {
      std::vector<NamedInstance> instances;
      if (!synthetic.empty()) {
        if (!input.empty()) throw UsageError("give either an instance file or --synthetic");
        auto base = parse_synthetic_spec(synthetic);
        if (seed) base.seed = *seed;
        for (std::size_t i = 0; i < count; ++i) {
          auto spec = base;
          spec.seed = base.seed + i;
          instances.push_back({"syn" + std::to_string(spec.seed), gen_synthetic(spec)});
        }
      } else {
        std::istringstream in(slurp(input));
        instances = read_instances(in);
      }
      const auto records = bench(instances, bo);
      const auto by_class = summarize_by_class(records);
      const auto by_size = summarize_by_size(records);
      write_summary_text(std::cout, "runtime by class", by_class);
      std::cout << '\n';
      write_summary_text(std::cout, "runtime by size", by_size);
      if (!csv_path.empty()) {
        auto out = open_out(csv_path);
        write_bench_csv(out, records);
      }
      if (!summary_csv.empty()) {
        auto out = open_out(summary_csv);
        write_summary_csv(out, by_class);
        write_summary_csv(out, by_size);
      }
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
