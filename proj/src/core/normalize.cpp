#include "tempoflow/core/normalize.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tempoflow/core/error.hpp"

namespace tempoflow {
namespace {

std::vector<VertexId> dedup(std::span<const VertexId> ids) {
  std::vector<VertexId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::string unique_name(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += '*';
  return base;
}

std::vector<char> reach(const TemporalGraph& g, VertexId start, bool forward) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{start};
  seen[index(start)] = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    const auto adj = forward ? g.out_edges(v) : g.in_edges(v);
    for (EdgeIndex e : adj) {
      const auto w = forward ? g.edge(e).dst : g.edge(e).src;
      if (!seen[index(w)]) {
        seen[index(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

FlowInstance prune_to_flow_paths(const TemporalGraph& graph, VertexId source, VertexId sink) {
  const auto fwd = reach(graph, source, true);
  const auto bwd = reach(graph, sink, false);

  GraphBuilder b;
  if (!fwd[index(sink)]) {
    FlowInstance out;
    out.source = b.add_vertex(graph.name(source));
    out.sink = b.add_vertex(graph.name(sink));
    out.graph = std::move(b).build();
    out.disconnected = true;
    return out;
  }

  std::vector<VertexId> remap(graph.vertex_count());
  std::vector<char> keep(graph.vertex_count(), 0);
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    keep[v] = fwd[v] && bwd[v];
    if (keep[v]) remap[v] = b.add_vertex(graph.names()[v]);
  }
  for (const auto& e : graph.edges()) {
    if (keep[index(e.src)] && keep[index(e.dst)]) {
      b.add_interactions(remap[index(e.src)], remap[index(e.dst)], e.interactions);
    }
  }
  FlowInstance out;
  out.source = remap[index(source)];
  out.sink = remap[index(sink)];
  out.graph = std::move(b).build();
  return out;
}

FlowInstance normalize(const TemporalGraph& graph, std::span<const VertexId> sources_in,
                       std::span<const VertexId> sinks_in) {
  if (sources_in.empty()) throw std::invalid_argument("normalize: no source vertices");
  if (sinks_in.empty()) throw std::invalid_argument("normalize: no sink vertices");
  const auto sources = dedup(sources_in);
  const auto sinks = dedup(sinks_in);
  for (auto v : sources) {
    if (index(v) >= graph.vertex_count()) throw std::invalid_argument("normalize: unknown source");
  }
  for (auto v : sinks) {
    if (index(v) >= graph.vertex_count()) throw std::invalid_argument("normalize: unknown sink");
  }

  std::vector<VertexId> both;
  std::set_intersection(sources.begin(), sources.end(), sinks.begin(), sinks.end(),
                        std::back_inserter(both));

  // Vertex layout of the rewritten graph: split vertices become two entries.
  GraphBuilder b;
  std::vector<VertexId> as_tail(graph.vertex_count());  // id used when v is an edge source
  std::vector<VertexId> as_head(graph.vertex_count());  // id used when v is an edge target
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    const auto v = vertex_id(i);
    if (contains(both, v)) {
      as_tail[i] = b.add_vertex(graph.name(v) + ":out");
      as_head[i] = b.add_vertex(graph.name(v) + ":in");
    } else {
      as_tail[i] = as_head[i] = b.add_vertex(graph.name(v));
    }
  }

  Timestamp t_min = std::numeric_limits<Timestamp>::max();
  Timestamp t_max = std::numeric_limits<Timestamp>::min();
  std::uint64_t max_seq = 0;
  bool any = false;
  for (const auto& e : graph.edges()) {
    b.add_interactions(as_tail[index(e.src)], as_head[index(e.dst)], e.interactions);
    for (const auto& x : e.interactions) {
      t_min = std::min(t_min, x.t);
      t_max = std::max(t_max, x.t);
      max_seq = std::max(max_seq, x.seq);
      any = true;
    }
  }
  if (!any) t_min = t_max = 0;

  std::vector<VertexId> flow_sources;
  for (auto v : sources) flow_sources.push_back(as_tail[index(v)]);
  std::vector<VertexId> flow_sinks;
  for (auto v : sinks) flow_sinks.push_back(as_head[index(v)]);

  // In-/out-degree in the rewritten graph, before synthetic vertices.
  std::vector<std::size_t> indeg(b.vertex_count(), 0), outdeg(b.vertex_count(), 0);
  for (const auto& e : graph.edges()) {
    ++outdeg[index(as_tail[index(e.src)])];
    ++indeg[index(as_head[index(e.dst)])];
  }

  const bool need_source = flow_sources.size() != 1 || indeg[index(flow_sources[0])] != 0;
  const bool need_sink = flow_sinks.size() != 1 || outdeg[index(flow_sinks[0])] != 0;

  std::vector<std::string> taken(graph.names().begin(), graph.names().end());
  for (auto v : both) {
    taken.push_back(graph.name(v) + ":out");
    taken.push_back(graph.name(v) + ":in");
  }
  std::uint64_t seq = any ? max_seq + 1 : 0;

  VertexId source = flow_sources.front();
  if (need_source) {
    if (t_min == std::numeric_limits<Timestamp>::min()) {
      throw DataError("normalize: timestamp range leaves no room for a synthetic source");
    }
    const auto name = unique_name(taken, "S*");
    taken.push_back(name);
    source = b.add_vertex(name);
    for (auto v : flow_sources) {
      b.add_interaction(source, v, Interaction{t_min - 1, Quantity::infinite(), seq++});
    }
  }
  VertexId sink = flow_sinks.front();
  if (need_sink) {
    if (t_max == std::numeric_limits<Timestamp>::max()) {
      throw DataError("normalize: timestamp range leaves no room for a synthetic sink");
    }
    const auto name = unique_name(taken, "T*");
    sink = b.add_vertex(name);
    for (auto v : flow_sinks) {
      b.add_interaction(v, sink, Interaction{t_max + 1, Quantity::infinite(), seq++});
    }
  }

  const auto rewritten = std::move(b).build();
  return prune_to_flow_paths(rewritten, source, sink);
}

std::string check_instance(const FlowInstance& inst) {
  const auto& g = inst.graph;
  if (index(inst.source) >= g.vertex_count() || index(inst.sink) >= g.vertex_count()) {
    return "source or sink out of range";
  }
  if (inst.source == inst.sink) return "source equals sink";
  if (g.in_degree(inst.source) != 0) return "source has incoming edges";
  if (g.out_degree(inst.sink) != 0) return "sink has outgoing edges";
  if (!g.adjacency_consistent()) return "adjacency inconsistent with edges";
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (e.interactions.empty()) return "edge without interactions";
    if (!std::is_sorted(e.interactions.begin(), e.interactions.end(), time_order)) {
      return "interactions not time-sorted";
    }
    count += e.interactions.size();
  }
  if (count != inst.interaction_count()) return "interaction count mismatch";
  if (inst.disconnected) {
    if (g.edge_count() != 0) return "disconnected instance with edges";
    return {};
  }
  // Every vertex must lie on a directed source-to-sink path.
  auto pruned = prune_to_flow_paths(g, inst.source, inst.sink);
  if (pruned.disconnected) return "sink unreachable from source";
  if (pruned.graph.vertex_count() != g.vertex_count()) {
    return "vertex not on any source-to-sink path";
  }
  return {};
}

}  // namespace tempoflow
