#include <stdexcept>
#include <vector>

#include "tempoflow/analysis/analysis.hpp"
#include "tempoflow/core/editable_graph.hpp"
#include "tempoflow/greedy/greedy.hpp"

namespace tempoflow {
namespace {

struct Applied {
  bool merged = false;
  std::vector<Interaction> boundary;
};

Applied reduce_chain(EditableGraph& g, const std::vector<EditableGraph::EdgeId>& edges,
                     VertexId source, VertexId sink, ChainStep* step) {
  std::vector<EdgeSeries> series;
  series.reserve(edges.size());
  for (auto e : edges) {
    const auto& edge = g.edge(e);
    series.push_back(EdgeSeries{edge.src, edge.dst, edge.interactions});
  }
  Applied out;
  out.boundary = greedy_chain_boundary(series);
  const auto last = series.back().dst;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) g.remove_vertex(series[i].dst);
  const bool had_edge = g.find_edge(source, last).has_value();
  out.merged = g.add_or_merge(source, last, out.boundary);
  if (!had_edge && out.boundary.empty()) g.prune_to_flow_paths(source, sink);
  if (step) step->chain = std::move(series);
  return out;
}

}  // namespace

ChainReduced chain_reduce(const FlowInstance& instance, const std::vector<VertexId>& chain) {
  if (chain.size() < 2 || chain.front() != instance.source) {
    throw std::invalid_argument("chain_reduce: chain must start at the source");
  }
  const auto& g = instance.graph;
  std::vector<EditableGraph::EdgeId> edges;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (i > 0 && (g.in_degree(chain[i]) != 1 || g.out_degree(chain[i]) != 1)) {
      throw std::invalid_argument("chain_reduce: interior vertex '" + g.name(chain[i]) +
                                  "' must have in- and out-degree 1");
    }
    const auto e = g.find_edge(chain[i], chain[i + 1]);
    if (!e) throw std::invalid_argument("chain_reduce: chain vertices are not linked");
    edges.push_back(*e);  // TemporalGraph and EditableGraph share edge ids initially
  }
  ChainReduced out;
  if (edges.size() == 1) {
    out.instance = instance;
    out.boundary = g.edge(edges.front()).interactions;
    return out;
  }
  EditableGraph eg(g);
  auto applied = reduce_chain(eg, edges, instance.source, instance.sink, nullptr);
  out.instance = eg.freeze(instance.source, instance.sink);
  out.merged = applied.merged;
  out.boundary = std::move(applied.boundary);
  return out;
}

namespace {

// Whether some source edge leads into a vertex with in- and out-degree 1.
bool starts_chain(const TemporalGraph& g, VertexId s, VertexId t) {
  for (EdgeIndex e : g.out_edges(s)) {
    const auto v = g.edge(e).dst;
    if (v != t && g.in_degree(v) == 1 && g.out_degree(v) == 1) return true;
  }
  return false;
}

}  // namespace

Simplified simplify(const FlowInstance& instance) {
  Simplified out;
  if (instance.disconnected) {
    out.instance = instance;
    return out;
  }
  const auto s = instance.source;
  const auto t = instance.sink;
  if (!starts_chain(instance.graph, s, t)) {
    out.instance = instance;
    return out;
  }
  EditableGraph g(instance.graph);

  for (;;) {
    std::vector<EditableGraph::EdgeId> chain;
    for (auto first : g.out_edges(s)) {
      chain = {first};
      auto v = g.edge(first).dst;
      while (v != t && g.in_degree(v) == 1 && g.out_degree(v) == 1) {
        const auto next = g.out_edges(v).front();
        chain.push_back(next);
        v = g.edge(next).dst;
      }
      if (chain.size() >= 2) break;
      chain.clear();
    }
    if (chain.empty()) break;
    ChainStep step;
    const auto applied = reduce_chain(g, chain, s, t, &step);
    out.trace.steps.push_back(std::move(step));
    ++out.report.chains_reduced;
    if (applied.merged) ++out.report.edges_merged;
    if (g.out_degree(s) == 0) break;
  }

  const bool trivial = g.out_degree(s) == 0 || g.in_degree(t) == 0;
  out.instance = g.freeze(s, t);
  auto sizes = size_difference(instance, out.instance);
  sizes.chains_reduced = out.report.chains_reduced;
  sizes.edges_merged = out.report.edges_merged;
  sizes.became_trivial = trivial || out.instance.disconnected;
  out.report = sizes;
  return out;
}

void unwind_simplify(const SimplifyTrace& trace,
                     std::unordered_map<std::uint64_t, Quantity>& transfer_by_seq) {
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    const auto& chain = it->chain;
    std::vector<Interaction> arrivals;
    for (const auto& x : chain.front().interactions) {
      if (!x.q.is_zero()) arrivals.push_back(x);
    }
    // The first edge leaves the source, so it always carries its full quantity.
    for (const auto& x : chain.front().interactions) transfer_by_seq[x.seq] = x.q;
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const auto& xs = chain[i].interactions;
      const bool last = i + 1 == chain.size();
      arrivals = boundary_step(arrivals, xs);
      std::unordered_map<std::uint64_t, Quantity> moved;
      for (const auto& a : arrivals) moved[a.seq] = a.q;
      for (const auto& x : xs) {
        const auto m = moved.find(x.seq);
        const Quantity greedy = m == moved.end() ? Quantity::zero() : m->second;
        if (last) {
          // The boundary interaction kept this seq in the reduced graph; its
          // transfer there is at most what greedy delivered here.
          const auto kept = transfer_by_seq.find(x.seq);
          const Quantity reduced = kept == transfer_by_seq.end() ? Quantity::zero() : kept->second;
          transfer_by_seq[x.seq] = std::min(reduced, greedy);
        } else {
          transfer_by_seq[x.seq] = greedy;
        }
      }
    }
  }
}

}  // namespace tempoflow
