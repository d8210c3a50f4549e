#include <limits>

#include "tempoflow/greedy/greedy.hpp"
#include "tempoflow/patterns/enumerate.hpp"

namespace tempoflow {
namespace {

constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();

class GraphBrowser {
 public:
  GraphBrowser(const TemporalGraph& g, const Pattern& p, const InstanceSink& sink,
               const EnumerateOptions& options)
      : g_(g), p_(p), sink_(sink), options_(options),
        binding_(p.size()), label_vertex_(p.label_count(), kFree),
        owner_(g.vertex_count(), kFree), boundary_(p.size()) {}

  std::size_t run() {
    if (g_.vertex_count() > 0) place(0);
    return emitted_;
  }

 private:
  bool edges_from_bound_predecessors(Pattern::Node node, VertexId v) const {
    for (auto pred : p_.predecessors(node)) {
      if (!g_.find_edge(binding_[pred], v)) return false;
    }
    return true;
  }

  void place(std::size_t depth) {
    if (stop_) return;
    if (depth == p_.size()) {
      emit();
      return;
    }
    const auto node = p_.topological_order()[depth];
    const auto label = p_.label_id(node);
    if (label_vertex_[label] != kFree) {
      const auto v = vertex_id(label_vertex_[label]);
      if (edges_from_bound_predecessors(node, v)) descend(depth, node, v);
      return;
    }
    auto try_vertex = [&](VertexId v) {
      if (owner_[index(v)] != kFree || !edges_from_bound_predecessors(node, v)) return;
      label_vertex_[label] = index(v);
      owner_[index(v)] = label;
      descend(depth, node, v);
      owner_[index(v)] = kFree;
      label_vertex_[label] = kFree;
    };
    const auto& preds = p_.predecessors(node);
    if (preds.empty()) {
      for (std::size_t v = 0; v < g_.vertex_count() && !stop_; ++v) try_vertex(vertex_id(v));
    } else {
      for (EdgeIndex e : g_.out_edges(binding_[preds.front()])) {
        if (stop_) break;
        try_vertex(g_.edge(e).dst);
      }
    }
  }

  void descend(std::size_t depth, Pattern::Node node, VertexId v) {
    binding_[node] = v;
    if (p_.is_simple_chain() && options_.compute_flow && depth > 0) {
      const auto prev = binding_[p_.topological_order()[depth - 1]];
      const auto& xs = g_.edge(*g_.find_edge(prev, v)).interactions;
      auto& here = boundary_[depth];
      if (depth == 1) {
        here.clear();
        for (const auto& x : xs) {
          if (!x.q.is_zero()) here.push_back(x);
        }
      } else {
        here = boundary_step(boundary_[depth - 1], xs);
      }
    }
    place(depth + 1);
  }

  void emit() {
    FoundInstance found;
    found.instance.binding = binding_;
    if (options_.compute_flow) {
      found.flow = p_.is_simple_chain() ? total_quantity(boundary_[p_.size() - 1])
                                        : instance_flow(g_, p_, found.instance);
    }
    ++emitted_;
    if (!sink_(found) || (options_.limit != 0 && emitted_ >= options_.limit)) stop_ = true;
  }

  const TemporalGraph& g_;
  const Pattern& p_;
  const InstanceSink& sink_;
  const EnumerateOptions& options_;
  std::vector<VertexId> binding_;
  std::vector<std::uint32_t> label_vertex_;
  std::vector<std::uint32_t> owner_;
  std::vector<std::vector<Interaction>> boundary_;
  std::size_t emitted_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t enumerate_gb(const TemporalGraph& graph, const Pattern& pattern,
                         const InstanceSink& sink, const EnumerateOptions& options) {
  return GraphBrowser(graph, pattern, sink, options).run();
}

}  // namespace tempoflow
