#include "tempoflow/core/editable_graph.hpp"

#include <algorithm>

#include "tempoflow/core/error.hpp"

namespace tempoflow {

EditableGraph::EditableGraph(const TemporalGraph& g)
    : names_(g.names().begin(), g.names().end()),
      alive_(g.vertex_count(), 1),
      live_vertices_(g.vertex_count()),
      out_(g.vertex_count()),
      in_(g.vertex_count()),
      out_degree_(g.vertex_count(), 0),
      in_degree_(g.vertex_count(), 0) {
  edges_.reserve(g.edge_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out_[v].reserve(g.out_degree(vertex_id(v)));
    in_[v].reserve(g.in_degree(vertex_id(v)));
  }
  for (const auto& e : g.edges()) {
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{e.src, e.dst, e.interactions, true});
    out_[index(e.src)].push_back(id);
    in_[index(e.dst)].push_back(id);
    ++out_degree_[index(e.src)];
    ++in_degree_[index(e.dst)];
  }
}

std::vector<EditableGraph::EdgeId> EditableGraph::out_edges(VertexId v) const {
  std::vector<EdgeId> out;
  out.reserve(out_degree_[index(v)]);
  for (auto e : out_[index(v)]) {
    if (edges_[e].alive) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [this](EdgeId a, EdgeId b) {
    return index(edges_[a].dst) < index(edges_[b].dst);
  });
  return out;
}

std::vector<EditableGraph::EdgeId> EditableGraph::in_edges(VertexId v) const {
  std::vector<EdgeId> in;
  in.reserve(in_degree_[index(v)]);
  for (auto e : in_[index(v)]) {
    if (edges_[e].alive) in.push_back(e);
  }
  std::sort(in.begin(), in.end(), [this](EdgeId a, EdgeId b) {
    return index(edges_[a].src) < index(edges_[b].src);
  });
  return in;
}

std::optional<EditableGraph::EdgeId> EditableGraph::find_edge(VertexId src, VertexId dst) const {
  for (auto e : out_[index(src)]) {
    if (edges_[e].alive && edges_[e].dst == dst) return e;
  }
  return std::nullopt;
}

void EditableGraph::remove_edge(EdgeId e) {
  auto& edge = edges_[e];
  if (!edge.alive) return;
  edge.alive = false;
  edge.interactions.clear();
  --out_degree_[index(edge.src)];
  --in_degree_[index(edge.dst)];
}

void EditableGraph::remove_vertex(VertexId v) {
  if (!alive_[index(v)]) return;
  for (auto e : out_[index(v)]) remove_edge(e);
  for (auto e : in_[index(v)]) remove_edge(e);
  alive_[index(v)] = 0;
  --live_vertices_;
}

bool EditableGraph::add_or_merge(VertexId src, VertexId dst, std::vector<Interaction> xs) {
  if (src == dst) throw InvariantViolation("add_or_merge: self-loop");
  if (auto existing = find_edge(src, dst)) {
    auto& target = edges_[*existing].interactions;
    const auto mid = static_cast<std::ptrdiff_t>(target.size());
    target.insert(target.end(), xs.begin(), xs.end());
    std::inplace_merge(target.begin(), target.begin() + mid, target.end(), time_order);
    return true;
  }
  if (xs.empty()) return false;
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{src, dst, std::move(xs), true});
  out_[index(src)].push_back(id);
  in_[index(dst)].push_back(id);
  ++out_degree_[index(src)];
  ++in_degree_[index(dst)];
  return false;
}

std::size_t EditableGraph::prune_to_flow_paths(VertexId source, VertexId sink) {
  auto reach = [this](VertexId start, bool forward) {
    std::vector<char> seen(names_.size(), 0);
    std::vector<VertexId> stack{start};
    seen[index(start)] = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto e : forward ? out_[index(v)] : in_[index(v)]) {
        if (!edges_[e].alive) continue;
        const auto w = forward ? edges_[e].dst : edges_[e].src;
        if (!seen[index(w)]) {
          seen[index(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  };
  const auto fwd = reach(source, true);
  const auto bwd = reach(sink, false);
  std::size_t removed = 0;
  for (std::size_t v = 0; v < names_.size(); ++v) {
    const auto id = vertex_id(v);
    if (!alive_[v] || id == source || id == sink || (fwd[v] && bwd[v])) continue;
    remove_vertex(id);
    ++removed;
  }
  return removed;
}

FlowInstance EditableGraph::freeze(VertexId source, VertexId sink) const {
  if (!alive_[index(source)] || !alive_[index(sink)]) {
    throw InvariantViolation("freeze: source or sink was removed");
  }
  auto usable = [&](EdgeId e) { return edges_[e].alive && !edges_[e].interactions.empty(); };
  auto reach = [&](VertexId start, bool forward) {
    std::vector<char> seen(names_.size(), 0);
    std::vector<VertexId> stack{start};
    seen[index(start)] = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto e : forward ? out_[index(v)] : in_[index(v)]) {
        if (!usable(e)) continue;
        const auto w = forward ? edges_[e].dst : edges_[e].src;
        if (!seen[index(w)]) {
          seen[index(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  };
  const auto fwd = reach(source, true);
  if (!fwd[index(sink)]) {
    GraphBuilder b;
    FlowInstance out;
    out.source = b.add_vertex(names_[index(source)]);
    out.sink = b.add_vertex(names_[index(sink)]);
    out.graph = std::move(b).build();
    out.disconnected = true;
    return out;
  }
  const auto bwd = reach(sink, false);

  GraphBuilder b;
  std::vector<VertexId> remap(names_.size());
  std::vector<char> keep(names_.size(), 0);
  for (std::size_t v = 0; v < names_.size(); ++v) {
    keep[v] = alive_[v] && fwd[v] && bwd[v];
    if (keep[v]) remap[v] = b.add_vertex(names_[v]);
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto& x = edges_[e];
    if (usable(e) && keep[index(x.src)] && keep[index(x.dst)]) {
      b.add_interactions(remap[index(x.src)], remap[index(x.dst)], x.interactions);
    }
  }
  FlowInstance out;
  out.source = remap[index(source)];
  out.sink = remap[index(sink)];
  out.graph = std::move(b).build();
  return out;
}

}  // namespace tempoflow
