#include "tempoflow/cli/synthetic.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <random>
#include <string>

#include "tempoflow/core/error.hpp"

namespace tempoflow {
namespace {

constexpr int kAttempts = 200;
// Class C candidates with greedy == max are rejected only this many times.
constexpr int kGapAttempts = 40;

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

struct Draft {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (tail, head), tail < head
  std::vector<char> dead;                                   // per edge, class B only
  // Interaction times follow the vertex order; otherwise they are uniform.
  bool aligned = true;
};

// Interior vertices each get one forward out-edge; the source feeds every
// vertex that would otherwise have no inflow, then further targets at random.
Draft tree_draft(Rng& rng, const SyntheticSpec& spec, std::size_t live_edges) {
  const std::size_t n = spec.vertices;
  Draft d;
  d.n = n;
  std::vector<char> fed(n, 0);
  for (std::size_t v = 1; v + 1 < n; ++v) {
    const auto head = uniform(rng, v + 1, n - 1);
    d.edges.emplace_back(v, head);
    fed[head] = 1;
  }
  std::vector<std::size_t> rest;
  for (std::size_t v = 1; v < n; ++v) {
    if (!fed[v]) {
      d.edges.emplace_back(0, v);
    } else {
      rest.push_back(v);
    }
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  for (std::size_t i = 0; d.edges.size() < live_edges && i < rest.size(); ++i) {
    d.edges.emplace_back(0, rest[i]);
  }
  d.dead.assign(d.edges.size(), 0);
  return d;
}

// A spine v0 -> v1 -> ... -> v{n-1} plus random forward edges.
Draft dag_draft(Rng& rng, const SyntheticSpec& spec) {
  const std::size_t n = spec.vertices;
  Draft d;
  d.n = n;
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v + 1 < n; ++v) {
    d.edges.emplace_back(v, v + 1);
    has[v][v + 1] = 1;
  }
  while (d.edges.size() < spec.edges) {
    auto a = uniform(rng, 0, n - 1);
    auto b = uniform(rng, 0, n - 1);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (has[a][b]) continue;
    has[a][b] = 1;
    d.edges.emplace_back(a, b);
  }
  d.dead.assign(d.edges.size(), 0);
  d.aligned = false;
  return d;
}

FlowInstance realize(Rng& rng, const SyntheticSpec& spec, const Draft& d) {
  const std::size_t m = d.edges.size();
  // Every edge gets one interaction; the rest are spread at random.
  std::vector<std::size_t> count(m, 1);
  for (std::size_t i = m; i < spec.interactions; ++i) ++count[uniform(rng, 0, m - 1)];

  // Times follow the topological position loosely: an edge (a, b) draws from a
  // window starting at a's slice and ending at b's slice. Live interactions
  // start after a reserved early band that dead interactions use.
  const Timestamp band = std::max<Timestamp>(1, spec.max_time / 10);
  const Timestamp span = std::max<Timestamp>(static_cast<Timestamp>(d.n), spec.max_time - band);
  const Timestamp slice = std::max<Timestamp>(1, span / static_cast<Timestamp>(d.n));
  std::uniform_int_distribution<std::uint64_t> qty(1, std::max<std::uint64_t>(1, spec.max_quantity));

  GraphBuilder b;
  std::vector<VertexId> ids;
  for (std::size_t v = 0; v < d.n; ++v) ids.push_back(b.add_vertex("v" + std::to_string(v)));
  for (std::size_t e = 0; e < m; ++e) {
    const auto [a, h] = d.edges[e];
    Timestamp lo = band + static_cast<Timestamp>(a) * slice;
    Timestamp hi = band + static_cast<Timestamp>(h + 1) * slice;
    if (d.dead[e]) {
      lo = 0;
      hi = band - 1;
    } else if (!d.aligned) {
      lo = band;
      hi = band + span;
    }
    std::uniform_int_distribution<Timestamp> when(lo, std::max(lo, hi));
    for (std::size_t i = 0; i < count[e]; ++i) {
      b.add_interaction(ids[a], ids[h], when(rng), Quantity(qty(rng)));
    }
  }
  const std::vector<VertexId> sources{ids.front()};
  const std::vector<VertexId> sinks{ids.back()};
  return normalize(std::move(b).build(), sources, sinks);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DataError("synthetic spec infeasible: " + what);
}

}  // namespace

SyntheticSpec parse_synthetic_spec(std::string_view text) {
  SyntheticSpec spec;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw DataError("synthetic spec: expected key=value, got '" + std::string(item) + "'");
    }
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "class") {
      if (value == "A") {
        spec.class_bias = TriageClass::kA;
      } else if (value == "B") {
        spec.class_bias = TriageClass::kB;
      } else if (value == "C") {
        spec.class_bias = TriageClass::kC;
      } else {
        throw DataError("synthetic spec: class must be A, B or C");
      }
      continue;
    }
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw DataError("synthetic spec: malformed value for '" + std::string(key) + "'");
    }
    if (key == "vertices") {
      spec.vertices = n;
    } else if (key == "edges") {
      spec.edges = n;
    } else if (key == "interactions") {
      spec.interactions = n;
    } else if (key == "seed") {
      spec.seed = n;
    } else if (key == "max_time") {
      spec.max_time = static_cast<Timestamp>(n);
    } else if (key == "max_quantity") {
      spec.max_quantity = n;
    } else {
      throw DataError("synthetic spec: unknown key '" + std::string(key) + "'");
    }
  }
  return spec;
}

FlowInstance gen_synthetic(const SyntheticSpec& spec) {
  const std::size_t n = spec.vertices;
  require(n >= 3, "at least 3 vertices");
  require(spec.edges >= n - 1, "edges >= vertices - 1");
  require(spec.interactions >= spec.edges, "interactions >= edges");
  require(spec.max_time >= static_cast<Timestamp>(10 * n), "max_time >= 10 * vertices");
  switch (spec.class_bias) {
    case TriageClass::kA:
      require(spec.edges <= 2 * n - 3, "class A allows at most 2 * vertices - 3 edges");
      break;
    case TriageClass::kB:
      require(n >= 4, "class B needs at least 4 vertices");
      require(spec.edges >= n, "class B needs edges >= vertices");
      break;
    case TriageClass::kC:
      require(n >= 4, "class C needs at least 4 vertices");
      require(spec.edges <= n * (n - 1) / 2, "too many edges for a DAG");
      break;
  }

  Rng rng(spec.seed);
  std::optional<FlowInstance> fallback;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    FlowInstance inst;
    if (spec.class_bias == TriageClass::kC) {
      inst = realize(rng, spec, dag_draft(rng, spec));
    } else {
      const std::size_t live =
          spec.class_bias == TriageClass::kA ? spec.edges : std::max(n - 1, spec.edges - 1);
      auto d = tree_draft(rng, spec, live);
      if (spec.class_bias == TriageClass::kB) {
        // Give interior vertices a second, early out-edge until the edge
        // budget is spent.
        std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
        for (auto [a, h] : d.edges) has[a][h] = 1;
        for (int tries = 0; d.edges.size() < spec.edges && tries < 1000; ++tries) {
          const auto a = uniform(rng, 1, n - 3);
          const auto h = uniform(rng, a + 1, n - 1);
          if (has[a][h]) continue;
          has[a][h] = 1;
          d.edges.emplace_back(a, h);
          d.dead.push_back(1);
        }
        if (std::find(d.dead.begin(), d.dead.end(), 1) == d.dead.end()) continue;
      }
      inst = realize(rng, spec, d);
    }
    if (inst.disconnected) continue;
    if (classify(inst) != spec.class_bias) continue;
    if (spec.class_bias != TriageClass::kC) return inst;
    if (attempt >= kGapAttempts) return inst;
    const auto greedy = greedy_flow(inst, TieMode::kStrict).value;
    if (greedy < max_flow(inst, Strategy::kLp).result.value) return inst;
    if (!fallback) fallback = std::move(inst);
  }
  if (fallback) return std::move(*fallback);
  throw DataError("synthetic spec infeasible: no instance of the requested class found");
}

}  // namespace tempoflow
