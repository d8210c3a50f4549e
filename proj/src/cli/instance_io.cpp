#include "tempoflow/cli/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "tempoflow/core/error.hpp"

namespace tempoflow {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw DataError("instance stream line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line_no, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(line_no, std::string("malformed ") + what + " '" + text + "'");
  }
  return value;
}

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

void write_instance(std::ostream& out, const NamedInstance& named) {
  const auto& g = named.instance.graph;
  out << "instance " << named.id << ' ' << g.name(named.instance.source) << ' '
      << g.name(named.instance.sink) << '\n';
  struct Row {
    std::uint64_t seq;
    EdgeIndex edge;
    Interaction x;
  };
  std::vector<Row> rows;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    for (const auto& x : g.edge(e).interactions) rows.push_back({x.seq, e, x});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.seq < b.seq; });
  for (const auto& r : rows) {
    const auto& e = g.edge(r.edge);
    out << g.name(e.src) << '\t' << g.name(e.dst) << '\t' << r.x.t << '\t' << r.x.q << '\n';
  }
  out << "end\n";
}

std::vector<NamedInstance> read_instances(std::istream& in) {
  std::vector<NamedInstance> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto head = words(line);
    if (head.size() != 4 || head[0] != "instance") {
      fail(line_no, "expected 'instance <id> <source> <sink>'");
    }
    GraphBuilder b;
    std::uint64_t seq = 0;
    bool closed = false;
    std::size_t records = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (skippable(line)) continue;
      auto f = words(line);
      if (f.size() == 1 && f[0] == "end") {
        closed = true;
        break;
      }
      if (f.size() != 4) fail(line_no, "expected 4 fields");
      const auto t = parse_number<Timestamp>(f[2], line_no, "timestamp");
      Quantity q = Quantity::infinite();
      if (f[3] != "inf") {
        const auto raw = parse_number<Quantity::rep>(f[3], line_no, "quantity");
        if (raw == Quantity::kInfiniteRep) fail(line_no, "quantity reaches the infinite sentinel");
        q = Quantity(raw);
      }
      if (f[0] == f[1]) fail(line_no, "self-loop record");
      const auto src = b.intern(f[0]);
      const auto dst = b.intern(f[1]);
      b.add_interaction(src, dst, Interaction{t, q, seq++});
      ++records;
    }
    if (!closed) fail(line_no, "instance '" + head[1] + "' is missing 'end'");

    const auto source = b.intern(head[2]);
    const auto sink = b.intern(head[3]);
    NamedInstance named;
    named.id = head[1];
    named.instance.graph = std::move(b).build();
    named.instance.source = source;
    named.instance.sink = sink;
    named.instance.disconnected = records == 0;
    if (auto why = check_instance(named.instance); !why.empty()) {
      throw DataError("instance '" + named.id + "': " + why);
    }
    out.push_back(std::move(named));
  }
  return out;
}

bool looks_like_instance_stream(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    const auto w = words(line);
    return !w.empty() && w[0] == "instance";
  }
  return false;
}

}  // namespace tempoflow
