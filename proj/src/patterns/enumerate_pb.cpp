#include <algorithm>
#include <limits>
#include <set>

#include "tempoflow/maxflow/strategy.hpp"
#include "tempoflow/patterns/enumerate.hpp"

namespace tempoflow {
namespace {

using Node = Pattern::Node;
constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();

// One unit of the enumeration plan: a pattern path served by a table, or a
// single pattern edge served by the graph.
struct Item {
  std::vector<Node> path;
  const PathTable* table = nullptr;
  bool isolated = false;
  bool source_anchored = false;
};

bool labels_fit_table(const Pattern& p, const std::vector<Node>& path, bool cyclic) {
  const bool closes = p.label_id(path.front()) == p.label_id(path.back());
  if (closes != cyclic) return false;
  std::set<std::uint32_t> seen;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!seen.insert(p.label_id(path[i])).second) return false;
  }
  return cyclic || !seen.contains(p.label_id(path.back()));
}

bool is_isolated(const Pattern& p, const std::vector<Node>& path) {
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const auto v = path[i];
    if (p.predecessors(v).size() != 1 || p.successors(v).size() != 1) return false;
    if (p.label_multiplicity(v) != 1) return false;
  }
  return true;
}

void collect_paths(const Pattern& p, std::vector<Node>& path, std::size_t max_hops,
                   std::vector<std::vector<Node>>& out) {
  if (path.size() >= 3) out.push_back(path);
  if (path.size() - 1 == max_hops) return;
  for (auto next : p.successors(path.back())) {
    path.push_back(next);
    collect_paths(p, path, max_hops, out);
    path.pop_back();
  }
}

struct Plan {
  std::vector<Item> items;
  bool full = false;
};

Plan make_plan(const Pattern& p, const PathTableSet& tables) {
  std::size_t max_hops = 0;
  for (const auto& [key, table] : tables) max_hops = std::max(max_hops, key.first);

  std::vector<std::vector<Node>> paths;
  for (Node v = 0; v < p.size(); ++v) {
    std::vector<Node> path{v};
    collect_paths(p, path, max_hops, paths);
  }
  std::vector<Item> candidates;
  for (auto& path : paths) {
    for (bool cyclic : {false, true}) {
      const auto it = tables.find({path.size() - 1, cyclic});
      if (it == tables.end() || !labels_fit_table(p, path, cyclic)) continue;
      candidates.push_back(
          Item{path, &it->second, is_isolated(p, path), path.front() == p.source()});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Item& a, const Item& b) {
    if (a.isolated != b.isolated) return a.isolated;
    if (a.source_anchored != b.source_anchored) return a.source_anchored;
    if (a.path.size() != b.path.size()) return a.path.size() > b.path.size();
    return a.path < b.path;
  });

  std::set<std::pair<Node, Node>> used;
  Plan plan;
  for (auto& c : candidates) {
    bool free = true;
    for (std::size_t i = 0; i + 1 < c.path.size() && free; ++i) {
      free = !used.contains({c.path[i], c.path[i + 1]});
    }
    if (!free) continue;
    for (std::size_t i = 0; i + 1 < c.path.size(); ++i) used.insert({c.path[i], c.path[i + 1]});
    plan.items.push_back(std::move(c));
  }
  if (plan.items.empty()) {
    throw TableMissing("no precomputed path table matches any path of the pattern");
  }
  plan.full = true;
  for (const auto& item : plan.items) {
    if (!item.isolated || item.path.front() != p.source() || item.path.back() != p.sink()) {
      plan.full = false;
    }
  }
  for (const auto& [a, b] : p.edges()) {
    if (!used.contains({a, b})) {
      plan.items.push_back(Item{{a, b}, nullptr, false, a == p.source()});
      plan.full = false;
    }
  }
  std::stable_sort(plan.items.begin(), plan.items.end(), [&p](const Item& a, const Item& b) {
    const auto pa = p.topo_position(a.path.front());
    const auto pb = p.topo_position(b.path.front());
    if (pa != pb) return pa < pb;
    if ((a.table != nullptr) != (b.table != nullptr)) return a.table != nullptr;
    if (a.path.size() != b.path.size()) return a.path.size() > b.path.size();
    return a.path < b.path;
  });
  return plan;
}

class TableJoin {
 public:
  TableJoin(const TemporalGraph& g, const Pattern& p, const Plan& plan, const InstanceSink& sink,
            const EnumerateOptions& options)
      : g_(g), p_(p), plan_(plan), sink_(sink), options_(options),
        binding_(p.size(), kFree), label_vertex_(p.label_count(), kFree),
        owner_(g.vertex_count(), kFree), row_(plan.items.size(), 0) {
    const auto s_label = p.label_id(p.source());
    const auto mult = p.label_multiplicity(p.source());
    substitutable_source_ =
        mult == 1 || (mult == 2 && p.label_id(p.sink()) == s_label);
  }

  std::size_t run() {
    // Leading table items anchored at the pattern source are merge-joined on
    // their first vertex; everything after is driven by bound vertices.
    std::size_t lead = 0;
    while (lead < plan_.items.size() && plan_.items[lead].table &&
           plan_.items[lead].path.front() == p_.source()) {
      ++lead;
    }
    if (lead == 0) {
      for (std::size_t v = 0; v < g_.vertex_count() && !stop_; ++v) {
        const auto undo = trail_.size();
        if (bind(p_.source(), vertex_id(v))) process(0);
        unwind(undo);
      }
      return emitted_;
    }
    std::vector<VertexId> common = plan_.items[0].table->anchors();
    for (std::size_t i = 1; i < lead; ++i) {
      const auto other = plan_.items[i].table->anchors();
      std::vector<VertexId> merged;
      auto a = common.begin();
      auto b = other.begin();
      while (a != common.end() && b != other.end()) {
        if (index(*a) < index(*b)) {
          ++a;
        } else if (index(*b) < index(*a)) {
          ++b;
        } else {
          merged.push_back(*a);
          ++a;
          ++b;
        }
      }
      common = std::move(merged);
    }
    for (auto anchor : common) {
      if (stop_) break;
      const auto undo = trail_.size();
      if (bind(p_.source(), anchor)) process(0);
      unwind(undo);
    }
    return emitted_;
  }

 private:
  struct Undo {
    Node node;
    bool claimed_label;
  };

  bool bind(Node node, VertexId v) {
    if (binding_[node] != kFree) return binding_[node] == index(v);
    const auto label = p_.label_id(node);
    bool claimed = false;
    if (label_vertex_[label] != kFree) {
      if (label_vertex_[label] != index(v)) return false;
    } else {
      if (owner_[index(v)] != kFree) return false;
      label_vertex_[label] = index(v);
      owner_[index(v)] = label;
      claimed = true;
    }
    binding_[node] = index(v);
    trail_.push_back({node, claimed});
    return true;
  }

  void unwind(std::size_t size) {
    while (trail_.size() > size) {
      const auto [node, claimed] = trail_.back();
      trail_.pop_back();
      if (claimed) {
        owner_[binding_[node]] = kFree;
        label_vertex_[p_.label_id(node)] = kFree;
      }
      binding_[node] = kFree;
    }
  }

  void process(std::size_t i) {
    if (stop_) return;
    if (i == plan_.items.size()) {
      emit();
      return;
    }
    const auto& item = plan_.items[i];
    const auto start = vertex_id(binding_[item.path.front()]);
    if (item.table) {
      const auto [lo, hi] = item.table->rows_from(start);
      for (std::size_t r = lo; r < hi && !stop_; ++r) {
        const auto row = item.table->vertices(r);
        const auto undo = trail_.size();
        bool ok = true;
        for (std::size_t k = 1; k < row.size() && ok; ++k) ok = bind(item.path[k], row[k]);
        if (ok) {
          row_[i] = r;
          process(i + 1);
        }
        unwind(undo);
      }
      return;
    }
    const auto to = item.path[1];
    if (binding_[to] != kFree) {
      if (g_.find_edge(start, vertex_id(binding_[to]))) process(i + 1);
      return;
    }
    for (EdgeIndex e : g_.out_edges(start)) {
      if (stop_) break;
      const auto undo = trail_.size();
      if (bind(to, g_.edge(e).dst)) process(i + 1);
      unwind(undo);
    }
  }

  Quantity partial_flow(const PatternInstance& inst) const {
    if (!substitutable_source_) return instance_flow(g_, p_, inst);
    // Isolated source-anchored table paths are independent chains out of the
    // source: each collapses to one edge carrying its stored boundary.
    GraphBuilder b;
    const auto s = b.intern(g_.name(inst.binding[p_.source()]));
    const auto t = b.intern(g_.name(inst.binding[p_.sink()]));
    Quantity direct;
    std::set<std::pair<Node, Node>> covered;
    for (std::size_t i = 0; i < plan_.items.size(); ++i) {
      const auto& item = plan_.items[i];
      if (!item.table || !item.isolated || item.path.front() != p_.source()) continue;
      for (std::size_t k = 0; k + 1 < item.path.size(); ++k) {
        covered.insert({item.path[k], item.path[k + 1]});
      }
      const auto boundary = item.table->boundary(row_[i]);
      if (p_.label_id(item.path.back()) == p_.label_id(p_.source())) {
        direct += total_quantity(boundary);
      } else {
        b.add_interactions(s, b.intern(g_.name(inst.binding[item.path.back()])), boundary);
      }
    }
    for (const auto& [pa, pb] : p_.edges()) {
      if (covered.contains({pa, pb})) continue;
      const auto u = inst.binding[pa];
      const auto w = inst.binding[pb];
      b.add_interactions(b.intern(g_.name(u)), b.intern(g_.name(w)),
                         g_.edge(*g_.find_edge(u, w)).interactions);
    }
    const auto sub = std::move(b).build();
    const std::vector<VertexId> src{s};
    const std::vector<VertexId> dst{t};
    return direct + max_flow(normalize(sub, src, dst), Strategy::kPreSim).result.value;
  }

  void emit() {
    FoundInstance found;
    found.instance.binding.resize(p_.size());
    for (Node n = 0; n < p_.size(); ++n) found.instance.binding[n] = vertex_id(binding_[n]);
    found.coverage = plan_.full ? Coverage::kFull : Coverage::kPartial;
    if (options_.compute_flow) {
      if (plan_.full) {
        for (std::size_t i = 0; i < plan_.items.size(); ++i) {
          found.flow += plan_.items[i].table->boundary_total(row_[i]);
        }
      } else {
        found.flow = partial_flow(found.instance);
      }
    }
    ++emitted_;
    if (!sink_(found) || (options_.limit != 0 && emitted_ >= options_.limit)) stop_ = true;
  }

  const TemporalGraph& g_;
  const Pattern& p_;
  const Plan& plan_;
  const InstanceSink& sink_;
  const EnumerateOptions& options_;
  std::vector<std::uint32_t> binding_;
  std::vector<std::uint32_t> label_vertex_;
  std::vector<std::uint32_t> owner_;
  std::vector<std::size_t> row_;
  std::vector<Undo> trail_;
  bool substitutable_source_ = false;
  std::size_t emitted_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t enumerate_pb(const TemporalGraph& graph, const Pattern& pattern,
                         const PathTableSet& tables, const InstanceSink& sink,
                         const EnumerateOptions& options) {
  const auto plan = make_plan(pattern, tables);
  return TableJoin(graph, pattern, plan, sink, options).run();
}

}  // namespace tempoflow
