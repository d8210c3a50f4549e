#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tempoflow/core/graph.hpp"

namespace tempoflow {

/// All k-hop paths of a graph with their greedy boundary sequences.
///
/// Rows are sorted lexicographically by vertex sequence, so rows sharing a
/// first vertex are contiguous. Acyclic tables hold paths with k + 1 distinct
/// vertices; cyclic tables hold closed paths whose k distinct vertices return
/// to the first one. Rows with an empty boundary are kept.
class PathTable {
 public:
  PathTable() = default;
  PathTable(std::size_t hops, bool cyclic) : hops_(hops), cyclic_(cyclic) {}

  std::size_t hops() const { return hops_; }
  bool cyclic() const { return cyclic_; }
  std::size_t row_count() const { return boundary_start_.size() - 1; }

  std::span<const VertexId> vertices(std::size_t row) const {
    return std::span<const VertexId>(vertices_).subspan(row * (hops_ + 1), hops_ + 1);
  }
  std::span<const Interaction> boundary(std::size_t row) const {
    return std::span<const Interaction>(boundary_).subspan(
        boundary_start_[row], boundary_start_[row + 1] - boundary_start_[row]);
  }
  Quantity boundary_total(std::size_t row) const;

  /// Half-open row range whose first vertex is v.
  std::pair<std::size_t, std::size_t> rows_from(VertexId v) const;
  /// Distinct first vertices, ascending.
  std::vector<VertexId> anchors() const;

  void append(std::span<const VertexId> path, std::span<const Interaction> boundary);

  friend bool operator==(const PathTable&, const PathTable&) = default;

 private:
  std::size_t hops_ = 0;
  bool cyclic_ = false;
  std::vector<VertexId> vertices_;
  std::vector<Interaction> boundary_;
  std::vector<std::size_t> boundary_start_{0};
};

struct PrecomputeOptions {
  // Above this many rows a warning is recorded; the table is still complete.
  std::size_t row_cap = 5'000'000;
};

struct PrecomputeResult {
  PathTable table;
  std::vector<std::string> warnings;
};

/// DFS from every vertex in ascending id order, following out-edges in
/// ascending destination order. Throws std::invalid_argument when hops < 2.
PrecomputeResult precompute_paths(const TemporalGraph& graph, std::size_t hops, bool cyclic,
                                  const PrecomputeOptions& options = {});

/// Binary table file: a text header
///
///     TFPT 1
///     hops <k>
///     cyclic <0|1>
///     rows <n>
///     graph_vertices <V>
///     graph_interactions <I>
///     ---
///
/// followed by little-endian rows: k + 1 u32 vertex ids, a u32 boundary
/// length, then per boundary entry i64 t, u64 q, u64 seq.
void write_path_table(std::ostream& out, const PathTable& table, const TemporalGraph& graph);
/// Throws DataError on format errors or when the table was built for a graph
/// of a different size.
PathTable read_path_table(std::istream& in, const TemporalGraph& graph);

std::string path_table_filename(std::size_t hops, bool cyclic);

/// Tables available to pattern enumeration, keyed by (hops, cyclic).
using PathTableSet = std::map<std::pair<std::size_t, bool>, PathTable>;

/// Loads every table file found in `dir`.
PathTableSet load_path_tables(const std::filesystem::path& dir, const TemporalGraph& graph);

}  // namespace tempoflow
