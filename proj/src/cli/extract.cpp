#include "tempoflow/cli/extract.hpp"

#include <set>
#include <stdexcept>

namespace tempoflow {
namespace {

// Collects edge indices of every simple path from `root` to `target` with at
// most `hops` edges. With root == target the paths are cycles.
class PathCollector {
 public:
  PathCollector(const TemporalGraph& g, std::size_t hops) : g_(g), hops_(hops) {
    on_path_.assign(g.vertex_count(), 0);
  }

  std::set<EdgeIndex> collect(VertexId root, VertexId target) {
    used_.clear();
    stack_.clear();
    target_ = target;
    on_path_[index(root)] = 1;
    dfs(root);
    on_path_[index(root)] = 0;
    return std::move(used_);
  }

 private:
  void dfs(VertexId v) {
    for (EdgeIndex e : g_.out_edges(v)) {
      const auto w = g_.edge(e).dst;
      if (w == target_) {
        used_.insert(stack_.begin(), stack_.end());
        used_.insert(e);
        continue;
      }
      if (on_path_[index(w)] || stack_.size() + 2 > hops_) continue;
      on_path_[index(w)] = 1;
      stack_.push_back(e);
      dfs(w);
      stack_.pop_back();
      on_path_[index(w)] = 0;
    }
  }

  const TemporalGraph& g_;
  std::size_t hops_;
  VertexId target_{};
  std::vector<char> on_path_;
  std::vector<EdgeIndex> stack_;
  std::set<EdgeIndex> used_;
};

}  // namespace

std::size_t extract_subgraphs(const TemporalGraph& graph, const ExtractOptions& options,
                              const std::function<bool(NamedInstance&&)>& emit) {
  if (options.max_hops < 2 || options.max_hops > 4) {
    throw std::invalid_argument("extract: hops must be between 2 and 4");
  }
  PathCollector collector(graph, options.max_hops);
  std::size_t emitted = 0;
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    const auto seed = vertex_id(i);
    const auto target = options.sink.value_or(seed);
    if (options.sink && seed == target) continue;
    const auto edges = collector.collect(seed, target);
    if (edges.empty()) continue;

    GraphBuilder b;
    for (const auto& name : graph.names()) b.add_vertex(name);
    for (EdgeIndex e : edges) {
      const auto& s = graph.edge(e);
      b.add_interactions(s.src, s.dst, s.interactions);
    }
    const std::vector<VertexId> sources{seed};
    const std::vector<VertexId> sinks{target};
    auto inst = normalize(std::move(b).build(), sources, sinks);
    const auto n = inst.interaction_count();
    if (n < options.min_interactions || n > options.max_interactions) continue;
    ++emitted;
    if (!emit(NamedInstance{graph.name(seed), std::move(inst)})) break;
  }
  return emitted;
}

std::vector<NamedInstance> extract_subgraphs(const TemporalGraph& graph,
                                             const ExtractOptions& options) {
  std::vector<NamedInstance> out;
  extract_subgraphs(graph, options, [&](NamedInstance&& x) {
    out.push_back(std::move(x));
    return true;
  });
  return out;
}

}  // namespace tempoflow
