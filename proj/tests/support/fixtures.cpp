#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "tempoflow/maxflow/validate.hpp"

namespace tempoflow::testing {

TemporalGraph make_graph(const std::vector<std::string>& order,
                         const std::vector<EdgeSpec>& edges) {
  GraphBuilder b;
  for (const auto& name : order) b.add_vertex(name);
  std::uint64_t seq = 0;
  for (const auto& e : edges) {
    const auto src = b.intern(e.src);
    const auto dst = b.intern(e.dst);
    for (const auto& [t, q] : e.xs) b.add_interaction(src, dst, Interaction{t, Quantity(q), seq++});
  }
  return std::move(b).build();
}

FlowInstance make_instance(const std::vector<std::string>& order,
                           const std::vector<EdgeSpec>& edges, const std::string& source,
                           const std::string& sink) {
  FlowInstance inst;
  inst.graph = make_graph(order, edges);
  inst.source = *inst.graph.find_vertex(source);
  inst.sink = *inst.graph.find_vertex(sink);
  return inst;
}

std::vector<std::pair<Timestamp, std::uint64_t>> pairs_of(const std::vector<Interaction>& xs) {
  std::vector<std::pair<Timestamp, std::uint64_t>> out;
  for (const auto& x : xs) out.emplace_back(x.t, x.q.value());
  return out;
}

std::vector<std::pair<Timestamp, std::uint64_t>> pairs_of(const FlowInstance& inst,
                                                          const std::string& src,
                                                          const std::string& dst) {
  const auto& g = inst.graph;
  const auto a = g.find_vertex(src);
  const auto b = g.find_vertex(dst);
  if (!a || !b) return {};
  const auto e = g.find_edge(*a, *b);
  if (!e) return {};
  return pairs_of(g.edge(*e).interactions);
}

FlowInstance greedy_gap_instance() {
  return make_instance({"s", "y", "z", "t"},
                       {{"s", "y", {{1, 5}}},
                        {"s", "z", {{2, 3}}},
                        {"y", "z", {{3, 5}}},
                        {"y", "t", {{4, 4}}},
                        {"z", "t", {{5, 1}}}},
                       "s", "t");
}

FlowInstance chain_instance() {
  return make_instance({"s", "y", "z", "t"},
                       {{"s", "y", {{1, 3}, {5, 4}}},
                        {"y", "z", {{3, 4}, {7, 5}}},
                        {"z", "t", {{2, 1}, {6, 3}, {8, 4}}}},
                       "s", "t");
}

FlowInstance single_out_instance() {
  return make_instance({"s", "a", "b", "c", "t"},
                       {{"s", "a", {{1, 6}}},
                        {"s", "b", {{2, 5}}},
                        {"a", "c", {{3, 6}}},
                        {"b", "c", {{4, 5}}},
                        {"c", "t", {{5, 8}, {6, 4}}},
                        {"s", "t", {{7, 3}}}},
                       "s", "t");
}

FlowInstance late_inflow_instance() {
  return make_instance({"s", "x", "y", "z", "t"},
                       {{"s", "x", {{5, 10}}},
                        {"x", "y", {{2, 7}, {9, 4}}},
                        {"x", "z", {{1, 2}, {10, 5}}},
                        {"y", "t", {{3, 3}, {12, 3}}},
                        {"z", "t", {{4, 2}, {13, 6}}}},
                       "s", "t");
}

FlowInstance dead_branch_instance() {
  return make_instance({"s", "x", "y", "z", "t"},
                       {{"s", "x", {{5, 1}, {8, 2}}},
                        {"x", "y", {{3, 4}}},
                        {"y", "z", {{2, 3}}},
                        {"y", "t", {{6, 1}}},
                        {"s", "z", {{7, 5}}},
                        {"z", "t", {{4, 2}, {9, 6}}}},
                       "s", "t");
}

FlowInstance two_chain_instance() {
  return make_instance({"s", "y", "z", "a", "w", "t"},
                       {{"s", "y", {{2, 2}, {6, 1}}},
                        {"y", "z", {{1, 4}, {3, 5}, {5, 2}, {7, 4}}},
                        {"s", "z", {{2, 5}, {11, 2}}},
                        {"z", "w", {{4, 6}, {12, 9}}},
                        {"s", "a", {{1, 4}}},
                        {"a", "w", {{5, 3}}},
                        {"a", "t", {{6, 2}}},
                        {"w", "t", {{13, 10}}}},
                       "s", "t");
}

TemporalGraph triangle_graph() {
  return make_graph({"u1", "u2", "u3", "u4"},
                    {{"u1", "u2", {{2, 4}, {4, 3}}},
                     {"u2", "u3", {{3, 5}, {5, 2}}},
                     {"u3", "u1", {{1, 2}, {6, 5}}},
                     {"u3", "u4", {{7, 1}}}});
}

TemporalGraph two_by_two_graph() {
  return make_graph({"a", "b", "c", "d", "e"},
                    {{"a", "c", {{1, 4}}},
                     {"b", "c", {{2, 3}}},
                     {"c", "d", {{3, 5}}},
                     {"c", "e", {{4, 2}}}});
}

namespace {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

FlowInstance finish(GraphBuilder& b, VertexId s, VertexId t) {
  return prune_to_flow_paths(std::move(b).build(), s, t);
}

}  // namespace

FlowInstance random_instance(std::mt19937_64& rng, const RandomSpec& spec) {
  const auto n = uniform(rng, spec.min_vertices, spec.max_vertices);
  GraphBuilder b;
  const auto s = b.add_vertex("s");
  for (std::size_t i = 1; i + 1 < n; ++i) b.add_vertex("v" + std::to_string(i));
  const auto t = b.add_vertex("t");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || j == 0 || i == n - 1) continue;
      if (!spec.allow_cycles && j < i) continue;
      pairs.emplace_back(i, j);
    }
  }
  const auto m = uniform(rng, 1, spec.max_interactions);
  std::vector<Timestamp> times;
  for (Timestamp k = 1; k <= std::max<Timestamp>(spec.max_time, static_cast<Timestamp>(m)); ++k) {
    times.push_back(k);
  }
  std::shuffle(times.begin(), times.end(), rng);
  for (std::size_t k = 0; k < m; ++k) {
    const auto [i, j] = pairs[uniform(rng, 0, pairs.size() - 1)];
    const Timestamp when =
        spec.distinct_times ? times[k] : static_cast<Timestamp>(uniform(rng, 1, spec.max_time));
    const std::uint64_t q = uniform(rng, spec.allow_zero ? 0 : 1, spec.max_quantity);
    b.add_interaction(vertex_id(i), vertex_id(j), when, Quantity(q));
  }
  return finish(b, s, t);
}

FlowInstance random_single_out_instance(std::mt19937_64& rng, std::size_t max_interactions) {
  const auto n = uniform(rng, 3, 7);
  GraphBuilder b;
  const auto s = b.add_vertex("s");
  for (std::size_t i = 1; i + 1 < n; ++i) b.add_vertex("v" + std::to_string(i));
  const auto t = b.add_vertex("t");

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i + 1 < n; ++i) edges.emplace_back(i, uniform(rng, i + 1, n - 1));
  for (std::size_t j = 1; j < n; ++j) {
    if (j == 1 || uniform(rng, 0, 2) == 0) edges.emplace_back(0, j);
  }
  const std::size_t budget = std::max(max_interactions, edges.size());
  std::vector<std::size_t> per_edge(edges.size(), 1);
  for (std::size_t k = edges.size(); k < budget; ++k) {
    if (uniform(rng, 0, 1) == 0) ++per_edge[uniform(rng, 0, edges.size() - 1)];
  }
  std::size_t total = 0;
  for (auto c : per_edge) total += c;
  std::vector<Timestamp> times;
  for (Timestamp k = 1; k <= static_cast<Timestamp>(3 * total); ++k) times.push_back(k);
  std::shuffle(times.begin(), times.end(), rng);
  std::size_t next = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t c = 0; c < per_edge[e]; ++c) {
      b.add_interaction(vertex_id(edges[e].first), vertex_id(edges[e].second), times[next++],
                        Quantity(uniform(rng, 1, 9)));
    }
  }
  return finish(b, s, t);
}

TemporalGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices,
                           std::size_t max_edges) {
  const auto n = uniform(rng, 3, max_vertices);
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const auto m = std::min<std::size_t>(pairs.size(), uniform(rng, n, max_edges));
  for (std::size_t k = 0; k < m; ++k) {
    const auto count = uniform(rng, 1, 3);
    for (std::uint64_t c = 0; c < count; ++c) {
      b.add_interaction(vertex_id(pairs[k].first), vertex_id(pairs[k].second),
                        static_cast<Timestamp>(uniform(rng, 1, 30)), Quantity(uniform(rng, 1, 9)));
    }
  }
  return std::move(b).build();
}

const std::vector<NamedPattern>& pattern_suite() {
  static const std::vector<NamedPattern> suite = {
      {"chain", "a -> b\nb -> c\n"},
      {"long-chain", "a -> b\nb -> c\nc -> d\n"},
      {"two-cycle", "a -> b\nb -> a2:a\n"},
      {"chain-cycle", "a -> b\nb -> c\nc -> a2:a\n"},
      {"parallel-cycles", "a -> b\nb -> a2:a\na -> c\nc -> d\nd -> a2\n"},
      {"parallel-short-cycles", "a -> b\nb -> a2:a\na -> c\nc -> a2\n"},
      {"chorded-cycle", "a -> b\nb -> c\nc -> a2:a\na -> c\n"},
      {"chorded-square", "a -> b\nb -> c\nc -> d\nd -> a2:a\nb -> d\n"},
      {"diamond", "a -> b\na -> c\nb -> d\nc -> d\n"},
  };
  return suite;
}

std::uint64_t brute_force_max_flow(const FlowInstance& inst) {
  const auto& g = inst.graph;
  std::vector<Quantity> x(g.interaction_count());
  std::vector<std::size_t> free_vars;
  std::size_t flat = 0;
  for (const auto& e : g.edges()) {
    for (const auto& i : e.interactions) {
      if (i.q.is_infinite()) throw std::invalid_argument("brute force needs finite quantities");
      if (e.src == inst.source) {
        x[flat] = i.q;
      } else {
        free_vars.push_back(flat);
      }
      ++flat;
    }
  }
  std::vector<std::uint64_t> cap(free_vars.size());
  flat = 0;
  for (const auto& e : g.edges()) {
    for (const auto& i : e.interactions) {
      const auto it = std::find(free_vars.begin(), free_vars.end(), flat);
      if (it != free_vars.end()) cap[it - free_vars.begin()] = i.q.value();
      ++flat;
    }
  }

  std::uint64_t best = 0;
  std::vector<std::uint64_t> digits(free_vars.size(), 0);
  for (;;) {
    for (std::size_t k = 0; k < free_vars.size(); ++k) x[free_vars[k]] = Quantity(digits[k]);
    Quantity into_sink;
    flat = 0;
    for (const auto& e : g.edges()) {
      for (std::size_t p = 0; p < e.interactions.size(); ++p, ++flat) {
        if (e.dst == inst.sink) into_sink += x[flat];
      }
    }
    if (into_sink.value() > best && validate_transfers(inst, x, into_sink).empty()) {
      best = into_sink.value();
    }
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == cap[k]) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
  return best;
}

}  // namespace tempoflow::testing
