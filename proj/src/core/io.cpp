#include "tempoflow/core/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "tempoflow/core/error.hpp"

namespace tempoflow {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw DataError("line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view line, RecordFormat format) {
  std::vector<std::string_view> fields;
  if (format == RecordFormat::kCsv) {
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      auto field = line.substr(start, comma == std::string_view::npos ? comma : comma - start);
      while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
      while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
      fields.push_back(field);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return fields;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

RecordFormat parse_record_format(std::string_view name) {
  if (name == "tsv") return RecordFormat::kTsv;
  if (name == "csv") return RecordFormat::kCsv;
  throw std::invalid_argument("unknown record format '" + std::string(name) + "'");
}

TemporalGraph parse_interactions(std::istream& in, const ParseOptions& options) {
  GraphBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t seq = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    const auto first = view.find_first_not_of(" \t");
    if (first == std::string_view::npos || view[first] == '#') continue;

    const auto fields = split_fields(view, options.format);
    if (fields.size() != 4) {
      fail(line_no, "expected 4 fields, found " + std::to_string(fields.size()));
    }
    for (const auto& f : fields) {
      if (f.empty()) fail(line_no, "empty field");
    }

    Timestamp t = 0;
    {
      const auto f = fields[2];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), t);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        fail(line_no, "malformed timestamp '" + std::string(f) + "'");
      }
    }

    Quantity::rep raw = 0;
    {
      const auto f = fields[3];
      if (f.front() == '-') fail(line_no, "negative quantity '" + std::string(f) + "'");
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), raw);
      if (ec == std::errc::result_out_of_range) {
        fail(line_no, "quantity out of range '" + std::string(f) + "'");
      }
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        fail(line_no, "malformed quantity '" + std::string(f) + "'");
      }
      if (raw >= Quantity::kInfiniteRep) {
        fail(line_no, "quantity reaches the reserved infinite sentinel");
      }
    }

    if (fields[0] == fields[1]) {
      fail(line_no, "self-loop record on '" + std::string(fields[0]) + "'");
    }

    const std::uint64_t this_seq = seq++;
    if (options.window && (t < options.window->first || t > options.window->second)) {
      continue;
    }
    const auto src = builder.intern(fields[0]);
    const auto dst = builder.intern(fields[1]);
    builder.add_interaction(src, dst, Interaction{t, Quantity(raw), this_seq});
  }
  return std::move(builder).build();
}

void write_interactions(std::ostream& out, const TemporalGraph& g, RecordFormat format) {
  const char sep = format == RecordFormat::kCsv ? ',' : '\t';
  for (const auto& e : g.edges()) {
    for (const auto& x : e.interactions) {
      if (x.q.is_infinite()) {
        throw DataError("cannot serialize an infinite quantity on edge " + g.name(e.src) +
                        " -> " + g.name(e.dst));
      }
      out << g.name(e.src) << sep << g.name(e.dst) << sep << x.t << sep << x.q.value() << '\n';
    }
  }
}

void write_vertex_table(std::ostream& out, const TemporalGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << v << '\t' << g.names()[v] << '\n';
  }
}

}  // namespace tempoflow
