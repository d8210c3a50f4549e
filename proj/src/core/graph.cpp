#include "tempoflow/core/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "tempoflow/core/error.hpp"

namespace tempoflow {

std::optional<VertexId> TemporalGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return vertex_id(i);
  }
  return std::nullopt;
}

std::span<const EdgeIndex> TemporalGraph::out_edges(VertexId v) const {
  const auto i = index(v);
  return std::span<const EdgeIndex>(out_list_).subspan(out_start_[i],
                                                       out_start_[i + 1] - out_start_[i]);
}

std::span<const EdgeIndex> TemporalGraph::in_edges(VertexId v) const {
  const auto i = index(v);
  return std::span<const EdgeIndex>(in_list_).subspan(in_start_[i],
                                                      in_start_[i + 1] - in_start_[i]);
}

std::optional<EdgeIndex> TemporalGraph::find_edge(VertexId src, VertexId dst) const {
  auto out = out_edges(src);
  auto it = std::lower_bound(out.begin(), out.end(), dst, [this](EdgeIndex e, VertexId d) {
    return index(edges_[e].dst) < index(d);
  });
  if (it != out.end() && edges_[*it].dst == dst) return *it;
  return std::nullopt;
}

void TemporalGraph::index_edges() {
  const std::size_t n = names_.size();
  offsets_.assign(edges_.size() + 1, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    offsets_[e + 1] = offsets_[e] + edges_[e].interactions.size();
  }

  out_start_.assign(n + 1, 0);
  in_start_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++out_start_[index(e.src) + 1];
    ++in_start_[index(e.dst) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    out_start_[i + 1] += out_start_[i];
    in_start_[i + 1] += in_start_[i];
  }

  out_list_.resize(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) out_list_[e] = static_cast<EdgeIndex>(e);

  // Edges are sorted by (src, dst); filling by edge order keeps each in-list
  // sorted by src.
  in_list_.resize(edges_.size());
  std::vector<std::uint32_t> fill(in_start_.begin(), in_start_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    in_list_[fill[index(edges_[e].dst)]++] = static_cast<EdgeIndex>(e);
  }
}

bool TemporalGraph::adjacency_consistent() const {
  TemporalGraph copy;
  copy.names_ = names_;
  copy.edges_ = edges_;
  copy.index_edges();
  if (copy.out_start_ != out_start_ || copy.in_start_ != in_start_ ||
      copy.in_list_ != in_list_ || copy.offsets_ != offsets_) {
    return false;
  }
  for (std::size_t e = 1; e < edges_.size(); ++e) {
    const auto& a = edges_[e - 1];
    const auto& b = edges_[e];
    if (std::pair(index(a.src), index(a.dst)) >= std::pair(index(b.src), index(b.dst))) {
      return false;
    }
  }
  return true;
}

VertexId GraphBuilder::intern(std::string_view name) {
  std::string key(name);
  if (auto it = by_name_.find(key); it != by_name_.end()) return it->second;
  const auto id = vertex_id(names_.size());
  names_.push_back(key);
  by_name_.emplace(std::move(key), id);
  return id;
}

VertexId GraphBuilder::add_vertex(std::string name) {
  if (by_name_.contains(name)) {
    throw DataError("duplicate vertex name '" + name + "'");
  }
  const auto id = vertex_id(names_.size());
  by_name_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

void GraphBuilder::add_interaction(VertexId src, VertexId dst, Timestamp t, Quantity q) {
  add_interaction(src, dst, Interaction{t, q, next_seq_});
}

void GraphBuilder::add_interaction(VertexId src, VertexId dst, const Interaction& x) {
  if (src == dst) {
    throw DataError("self-loop interaction on vertex '" + names_.at(index(src)) + "'");
  }
  if (index(src) >= names_.size() || index(dst) >= names_.size()) {
    throw InvariantViolation("interaction references an unknown vertex");
  }
  records_.push_back({src, dst, x});
  next_seq_ = std::max(next_seq_, x.seq + 1);
}

void GraphBuilder::add_interactions(VertexId src, VertexId dst,
                                    std::span<const Interaction> xs) {
  for (const auto& x : xs) add_interaction(src, dst, x);
}

TemporalGraph GraphBuilder::build() && {
  const auto before = [](const Record& a, const Record& b) {
    if (a.src != b.src) return index(a.src) < index(b.src);
    if (a.dst != b.dst) return index(a.dst) < index(b.dst);
    return time_order(a.x, b.x);
  };
  // Rewrites of an existing graph usually arrive in order already.
  if (!std::is_sorted(records_.begin(), records_.end(), before)) {
    std::stable_sort(records_.begin(), records_.end(), before);
  }

  std::vector<std::uint64_t> seqs;
  seqs.reserve(records_.size());
  for (const auto& r : records_) seqs.push_back(r.x.seq);
  std::sort(seqs.begin(), seqs.end());
  if (std::adjacent_find(seqs.begin(), seqs.end()) != seqs.end()) {
    throw DataError("duplicate interaction sequence number");
  }

  TemporalGraph g;
  g.names_ = std::move(names_);
  for (std::size_t i = 0; i < records_.size();) {
    std::size_t j = i;
    while (j < records_.size() && records_[j].src == records_[i].src &&
           records_[j].dst == records_[i].dst) {
      ++j;
    }
    auto& series = g.edges_.emplace_back(EdgeSeries{records_[i].src, records_[i].dst, {}});
    series.interactions.reserve(j - i);
    for (; i < j; ++i) series.interactions.push_back(records_[i].x);
  }
  g.index_edges();
  return g;
}

std::optional<std::vector<VertexId>> topological_order(const TemporalGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n);
  for (std::size_t v = 0; v < n; ++v) indeg[v] = g.in_degree(vertex_id(v));

  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(static_cast<std::uint32_t>(v));
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const auto v = vertex_id(ready.top());
    ready.pop();
    order.push_back(v);
    for (EdgeIndex e : g.out_edges(v)) {
      const auto d = index(g.edge(e).dst);
      if (--indeg[d] == 0) ready.push(d);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

}  // namespace tempoflow
