#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tempoflow/core/quantity.hpp"

namespace tempoflow {

using Timestamp = std::int64_t;

enum class VertexId : std::uint32_t {};

constexpr std::uint32_t index(VertexId v) { return static_cast<std::uint32_t>(v); }
constexpr VertexId vertex_id(std::size_t i) { return static_cast<VertexId>(i); }

using EdgeIndex = std::uint32_t;

/// One timestamped transfer on an edge. `seq` is the stable tiebreak for equal
/// timestamps (input position for ingested records) and is unique within a
/// graph, so it also identifies the interaction across graph rewrites.
struct Interaction {
  Timestamp t = 0;
  Quantity q;
  std::uint64_t seq = 0;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

/// Strict weak order by (t, seq).
constexpr bool time_order(const Interaction& a, const Interaction& b) {
  return a.t != b.t ? a.t < b.t : a.seq < b.seq;
}

struct EdgeSeries {
  VertexId src{};
  VertexId dst{};
  std::vector<Interaction> interactions;  // sorted by time_order

  friend bool operator==(const EdgeSeries&, const EdgeSeries&) = default;
};

/// Immutable directed temporal graph. Vertex ids are dense in [0, vertex_count()).
/// Edges are stored sorted by (src, dst), so the out-edges of a vertex form a
/// contiguous range ordered by destination id.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t interaction_count() const { return offsets_.empty() ? 0 : offsets_.back(); }

  const std::string& name(VertexId v) const { return names_[index(v)]; }
  std::span<const std::string> names() const { return names_; }
  // Linear scan; intended for CLI arguments and tests.
  std::optional<VertexId> find_vertex(std::string_view name) const;

  std::span<const EdgeSeries> edges() const { return edges_; }
  const EdgeSeries& edge(EdgeIndex e) const { return edges_[e]; }

  std::span<const EdgeIndex> out_edges(VertexId v) const;
  std::span<const EdgeIndex> in_edges(VertexId v) const;
  std::size_t out_degree(VertexId v) const { return out_edges(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_edges(v).size(); }
  std::optional<EdgeIndex> find_edge(VertexId src, VertexId dst) const;

  /// Interactions are addressed by a flat index: edge order, then position.
  std::size_t interaction_offset(EdgeIndex e) const { return offsets_[e]; }

  /// Rebuilds adjacency from the edge list and compares with the stored one.
  bool adjacency_consistent() const;

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  friend class GraphBuilder;
  void index_edges();

  std::vector<std::string> names_;
  std::vector<EdgeSeries> edges_;
  std::vector<std::size_t> offsets_;   // size edges+1
  std::vector<EdgeIndex> out_list_;    // identity permutation, kept for span access
  std::vector<std::uint32_t> out_start_;
  std::vector<EdgeIndex> in_list_;
  std::vector<std::uint32_t> in_start_;
};

/// Accumulates vertices and interactions. Raw records for the same ordered pair
/// are merged into one series and sorted stably by (t, seq).
class GraphBuilder {
 public:
  /// Returns the id for `name`, adding a vertex if it is new.
  VertexId intern(std::string_view name);
  /// Adds a vertex that must not exist yet.
  VertexId add_vertex(std::string name);

  /// Appends an interaction with an automatically assigned sequence number.
  void add_interaction(VertexId src, VertexId dst, Timestamp t, Quantity q);
  /// Appends an interaction keeping its sequence number.
  void add_interaction(VertexId src, VertexId dst, const Interaction& x);
  void add_interactions(VertexId src, VertexId dst, std::span<const Interaction> xs);

  std::size_t vertex_count() const { return names_.size(); }

  /// Throws DataError on self-loops or duplicate sequence numbers.
  TemporalGraph build() &&;

 private:
  struct Record {
    VertexId src;
    VertexId dst;
    Interaction x;
  };

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::vector<Record> records_;
  std::uint64_t next_seq_ = 0;
};

/// Kahn order with ties broken by ascending id; nullopt when a directed cycle exists.
std::optional<std::vector<VertexId>> topological_order(const TemporalGraph& g);

}  // namespace tempoflow
