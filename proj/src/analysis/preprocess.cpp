#include <algorithm>
#include <vector>

#include "tempoflow/analysis/analysis.hpp"
#include "tempoflow/core/editable_graph.hpp"
#include "tempoflow/core/error.hpp"

namespace tempoflow {

Reduced preprocess(const FlowInstance& instance, const PreprocessOptions& options) {
  if (instance.disconnected) return {instance, {}};
  const auto order = topological_order(instance.graph);
  if (!order) throw CycleDetected("preprocess requires an acyclic instance");

  const auto s = instance.source;
  const auto t = instance.sink;
  EditableGraph g(instance.graph);

  // Removes v and then every upstream vertex left without outgoing edges.
  auto cascade_upstream = [&](VertexId start) {
    std::vector<VertexId> work{start};
    while (!work.empty()) {
      const auto v = work.back();
      work.pop_back();
      if (!g.alive(v)) continue;
      std::vector<VertexId> preds;
      for (auto e : g.in_edges(v)) preds.push_back(g.edge(e).src);
      g.remove_vertex(v);
      for (auto p : preds) {
        if (p != s && g.alive(p) && g.out_degree(p) == 0) work.push_back(p);
      }
    }
  };

  for (auto v : *order) {
    if (v == s || v == t || !g.alive(v)) continue;
    if (g.in_degree(v) == 0) {
      g.remove_vertex(v);
      continue;
    }
    Timestamp mintime = g.edge(g.in_edges(v).front()).interactions.front().t;
    for (auto e : g.in_edges(v)) mintime = std::min(mintime, g.edge(e).interactions.front().t);

    for (auto e : g.out_edges(v)) {
      auto& xs = g.edge(e).interactions;
      const auto keep_from =
          options.strict_prune
              ? std::find_if(xs.begin(), xs.end(), [&](const Interaction& x) { return x.t > mintime; })
              : std::find_if(xs.begin(), xs.end(), [&](const Interaction& x) { return x.t >= mintime; });
      xs.erase(xs.begin(), keep_from);
      if (xs.empty()) g.remove_edge(e);
    }
    if (g.out_degree(v) == 0) cascade_upstream(v);
  }

  Reduced out;
  out.report.became_trivial = g.out_degree(s) == 0 || g.in_degree(t) == 0;
  out.instance = g.freeze(s, t);
  const bool trivial = out.report.became_trivial;
  out.report = size_difference(instance, out.instance);
  out.report.became_trivial = trivial || out.instance.disconnected;
  return out;
}

}  // namespace tempoflow
