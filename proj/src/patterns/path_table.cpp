#include "tempoflow/patterns/path_table.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "tempoflow/core/error.hpp"
#include "tempoflow/greedy/greedy.hpp"

namespace tempoflow {

Quantity PathTable::boundary_total(std::size_t row) const { return total_quantity(boundary(row)); }

std::pair<std::size_t, std::size_t> PathTable::rows_from(VertexId v) const {
  std::size_t lo = 0;
  std::size_t hi = row_count();
  while (lo < hi) {
    const auto mid = (lo + hi) / 2;
    if (index(vertices(mid)[0]) < index(v)) lo = mid + 1; else hi = mid;
  }
  const auto first = lo;
  hi = row_count();
  while (lo < hi) {
    const auto mid = (lo + hi) / 2;
    if (index(vertices(mid)[0]) <= index(v)) lo = mid + 1; else hi = mid;
  }
  return {first, lo};
}

std::vector<VertexId> PathTable::anchors() const {
  std::vector<VertexId> out;
  for (std::size_t r = 0; r < row_count(); ++r) {
    const auto v = vertices(r)[0];
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

void PathTable::append(std::span<const VertexId> path, std::span<const Interaction> boundary) {
  if (path.size() != hops_ + 1) throw std::invalid_argument("path length does not match table");
  vertices_.insert(vertices_.end(), path.begin(), path.end());
  boundary_.insert(boundary_.end(), boundary.begin(), boundary.end());
  boundary_start_.push_back(boundary_.size());
}

namespace {

class PathSearch {
 public:
  PathSearch(const TemporalGraph& g, std::size_t hops, bool cyclic, PathTable& table)
      : g_(g), hops_(hops), cyclic_(cyclic), table_(table), on_path_(g.vertex_count(), 0) {}

  void from(VertexId start) {
    path_.assign(1, start);
    on_path_[index(start)] = 1;
    extend(start, {});
    on_path_[index(start)] = 0;
  }

 private:
  void extend(VertexId v, const std::vector<Interaction>& arrivals) {
    const std::size_t depth = path_.size() - 1;
    if (depth == hops_) {
      table_.append(path_, arrivals);
      return;
    }
    const bool closing = cyclic_ && depth + 1 == hops_;
    for (EdgeIndex e : g_.out_edges(v)) {
      const auto w = g_.edge(e).dst;
      if (closing ? w != path_.front() : on_path_[index(w)] != 0) continue;
      const auto& xs = g_.edge(e).interactions;
      std::vector<Interaction> next;
      if (depth == 0) {
        for (const auto& x : xs) {
          if (!x.q.is_zero()) next.push_back(x);
        }
      } else {
        next = boundary_step(arrivals, xs);
      }
      path_.push_back(w);
      on_path_[index(w)] = 1;
      extend(w, next);
      if (!closing) on_path_[index(w)] = 0;
      path_.pop_back();
    }
  }

  const TemporalGraph& g_;
  std::size_t hops_;
  bool cyclic_;
  PathTable& table_;
  std::vector<char> on_path_;
  std::vector<VertexId> path_;
};

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

std::uint64_t get_bytes(std::istream& in, int n) {
  unsigned char b[8] = {};
  if (!in.read(reinterpret_cast<char*>(b), n)) throw DataError("path table truncated");
  std::uint64_t v = 0;
  for (int i = n - 1; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

std::uint64_t header_value(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("path table header truncated");
  const auto space = line.find(' ');
  if (space == std::string::npos || line.substr(0, space) != key) {
    throw DataError("path table header: expected '" + key + "', got '" + line + "'");
  }
  try {
    return std::stoull(line.substr(space + 1));
  } catch (const std::exception&) {
    throw DataError("path table header: bad value in '" + line + "'");
  }
}

}  // namespace

PrecomputeResult precompute_paths(const TemporalGraph& graph, std::size_t hops, bool cyclic,
                                  const PrecomputeOptions& options) {
  if (hops < 2) throw std::invalid_argument("path tables need at least 2 hops");
  PrecomputeResult result{PathTable(hops, cyclic), {}};
  PathSearch search(graph, hops, cyclic, result.table);
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) search.from(vertex_id(v));
  if (result.table.row_count() > options.row_cap) {
    result.warnings.push_back(std::to_string(hops) + "-hop " + (cyclic ? "cyclic" : "acyclic") +
                              " path table has " + std::to_string(result.table.row_count()) +
                              " rows, above the cap of " + std::to_string(options.row_cap));
  }
  return result;
}

void write_path_table(std::ostream& out, const PathTable& table, const TemporalGraph& graph) {
  out << "TFPT 1\n"
      << "hops " << table.hops() << "\n"
      << "cyclic " << (table.cyclic() ? 1 : 0) << "\n"
      << "rows " << table.row_count() << "\n"
      << "graph_vertices " << graph.vertex_count() << "\n"
      << "graph_interactions " << graph.interaction_count() << "\n"
      << "---\n";
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    for (auto v : table.vertices(r)) put_u32(out, index(v));
    const auto b = table.boundary(r);
    put_u32(out, static_cast<std::uint32_t>(b.size()));
    for (const auto& x : b) {
      put_u64(out, static_cast<std::uint64_t>(x.t));
      put_u64(out, x.q.value());
      put_u64(out, x.seq);
    }
  }
  if (!out) throw DataError("failed to write path table");
}

PathTable read_path_table(std::istream& in, const TemporalGraph& graph) {
  std::string magic;
  if (!std::getline(in, magic) || magic != "TFPT 1") {
    throw DataError("not a path table (expected 'TFPT 1' header)");
  }
  const auto hops = header_value(in, "hops");
  const auto cyclic = header_value(in, "cyclic");
  const auto rows = header_value(in, "rows");
  const auto vertices = header_value(in, "graph_vertices");
  const auto interactions = header_value(in, "graph_interactions");
  std::string sep;
  if (!std::getline(in, sep) || sep != "---") throw DataError("path table header not terminated");
  if (hops < 2 || cyclic > 1) throw DataError("path table header has invalid hops or cyclic flag");
  if (vertices != graph.vertex_count() || interactions != graph.interaction_count()) {
    throw DataError("path table was built for a different graph");
  }

  PathTable table(hops, cyclic == 1);
  std::vector<VertexId> path(hops + 1);
  std::vector<Interaction> boundary;
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (auto& v : path) {
      const auto id = get_bytes(in, 4);
      if (id >= graph.vertex_count()) throw DataError("path table references an unknown vertex");
      v = vertex_id(id);
    }
    const auto len = get_bytes(in, 4);
    boundary.clear();
    for (std::uint64_t i = 0; i < len; ++i) {
      Interaction x;
      x.t = static_cast<Timestamp>(get_bytes(in, 8));
      x.q = Quantity(get_bytes(in, 8));
      x.seq = get_bytes(in, 8);
      boundary.push_back(x);
    }
    table.append(path, boundary);
  }
  if (in.peek() != std::char_traits<char>::eof()) throw DataError("trailing data after path table");
  return table;
}

std::string path_table_filename(std::size_t hops, bool cyclic) {
  return "paths_k" + std::to_string(hops) + (cyclic ? "_cyclic" : "_acyclic") + ".tfpt";
}

PathTableSet load_path_tables(const std::filesystem::path& dir, const TemporalGraph& graph) {
  if (!std::filesystem::is_directory(dir)) {
    throw DataError("table directory '" + dir.string() + "' does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".tfpt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  PathTableSet tables;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    if (!in) throw DataError("cannot open " + f.string());
    auto t = read_path_table(in, graph);
    tables[{t.hops(), t.cyclic()}] = std::move(t);
  }
  return tables;
}

}  // namespace tempoflow
