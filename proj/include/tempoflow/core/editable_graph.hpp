#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tempoflow/core/graph.hpp"
#include "tempoflow/core/normalize.hpp"

namespace tempoflow {

/// Mutable working copy used by the graph-reduction passes. Deleted edges and
/// vertices are tombstoned; `freeze` compacts back into a TemporalGraph.
class EditableGraph {
 public:
  using EdgeId = std::uint32_t;

  struct Edge {
    VertexId src{};
    VertexId dst{};
    std::vector<Interaction> interactions;
    bool alive = true;
  };

  explicit EditableGraph(const TemporalGraph& g);

  std::size_t vertex_count() const { return alive_.size(); }
  std::size_t live_vertex_count() const { return live_vertices_; }
  bool alive(VertexId v) const { return alive_[index(v)]; }
  const std::string& name(VertexId v) const { return names_[index(v)]; }

  Edge& edge(EdgeId e) { return edges_[e]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::size_t out_degree(VertexId v) const { return out_degree_[index(v)]; }
  std::size_t in_degree(VertexId v) const { return in_degree_[index(v)]; }

  /// Live out-/in-edges, ascending by the opposite endpoint's id.
  std::vector<EdgeId> out_edges(VertexId v) const;
  std::vector<EdgeId> in_edges(VertexId v) const;
  std::optional<EdgeId> find_edge(VertexId src, VertexId dst) const;

  void remove_edge(EdgeId e);
  /// Removes a vertex together with all its live incident edges.
  void remove_vertex(VertexId v);
  /// Adds an edge, or merges into the existing (src, dst) edge keeping time order.
  /// Returns true when a merge happened.
  bool add_or_merge(VertexId src, VertexId dst, std::vector<Interaction> xs);

  /// Removes live vertices that are not on a directed source-to-sink path.
  /// Returns the number of vertices removed.
  std::size_t prune_to_flow_paths(VertexId source, VertexId sink);

  /// Compacts live vertices (relative order kept) into an instance whose
  /// source and sink are the given vertices, dropping vertices not on a
  /// source-to-sink path.
  FlowInstance freeze(VertexId source, VertexId sink) const;

 private:
  std::vector<std::string> names_;
  std::vector<char> alive_;
  std::size_t live_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::size_t> out_degree_;
  std::vector<std::size_t> in_degree_;
};

}  // namespace tempoflow
