#include "tempoflow/patterns/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <istream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace tempoflow {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

}  // namespace

Pattern::Pattern(std::vector<std::string> names, std::vector<std::string> labels,
                 std::vector<std::pair<Node, Node>> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  const std::size_t n = names_.size();
  if (labels.size() != n) throw DataError("pattern: one label per vertex required");
  if (edges_.empty()) throw DataError("pattern has no edges");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
    throw DataError("pattern: duplicate vertex name");
  }

  std::map<std::string, std::uint32_t> ids;
  for (const auto& l : labels) {
    if (ids.emplace(l, static_cast<std::uint32_t>(label_names_.size())).second) {
      label_names_.push_back(l);
    }
  }
  multiplicity_.assign(label_names_.size(), 0);
  for (const auto& l : labels) {
    label_.push_back(ids.at(l));
    ++multiplicity_[ids.at(l)];
  }

  succ_.resize(n);
  pred_.resize(n);
  std::set<std::pair<std::uint32_t, std::uint32_t>> label_pairs;
  for (const auto& [a, b] : edges_) {
    if (a >= n || b >= n) throw DataError("pattern: edge references an unknown vertex");
    if (label_[a] == label_[b]) {
      throw DataError("pattern: edge " + names_[a] + " -> " + names_[b] +
                      " joins two vertices with the same label");
    }
    if (!label_pairs.emplace(label_[a], label_[b]).second) {
      throw DataError("pattern: more than one edge from label '" + label(a) + "' to label '" +
                      label(b) + "'");
    }
    succ_[a].push_back(b);
    pred_[b].push_back(a);
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (succ_[p].empty() && pred_[p].empty()) {
      throw DataError("pattern: vertex " + names_[p] + " has no edges");
    }
    std::sort(succ_[p].begin(), succ_[p].end());
    std::sort(pred_[p].begin(), pred_[p].end());
  }

  std::vector<Node> sources;
  std::vector<Node> sinks;
  for (Node p = 0; p < n; ++p) {
    if (pred_[p].empty()) sources.push_back(p);
    if (succ_[p].empty()) sinks.push_back(p);
  }
  if (sources.size() != 1) throw DataError("pattern must have exactly one vertex without incoming edges");
  if (sinks.size() != 1) throw DataError("pattern must have exactly one vertex without outgoing edges");
  source_ = sources.front();
  sink_ = sinks.front();

  std::vector<std::size_t> indeg(n);
  std::priority_queue<Node, std::vector<Node>, std::greater<>> ready;
  for (Node p = 0; p < n; ++p) {
    indeg[p] = pred_[p].size();
    if (indeg[p] == 0) ready.push(p);
  }
  while (!ready.empty()) {
    const auto p = ready.top();
    ready.pop();
    topo_.push_back(p);
    for (auto q : succ_[p]) {
      if (--indeg[q] == 0) ready.push(q);
    }
  }
  if (topo_.size() != n) throw DataError("pattern has a directed cycle");
  topo_pos_.resize(n);
  for (std::size_t i = 0; i < n; ++i) topo_pos_[topo_[i]] = i;

  chain_ = edges_.size() + 1 == n;
  for (Node p = 0; p < n && chain_; ++p) {
    if (succ_[p].size() > 1 || pred_[p].size() > 1) chain_ = false;
    if (p != source_ && p != sink_ && multiplicity_[label_[p]] != 1) chain_ = false;
  }
}

Pattern parse_rigid_pattern(std::istream& in) {
  auto spec = parse_pattern(in);
  if (auto* p = std::get_if<Pattern>(&spec)) return std::move(*p);
  throw DataError("expected a rigid pattern, found a relaxed one");
}

PatternSpec parse_pattern(std::istream& in) {
  std::vector<std::string> names;
  std::vector<std::string> labels;
  std::map<std::string, Pattern::Node> by_name;
  std::vector<std::pair<Pattern::Node, Pattern::Node>> edges;
  std::optional<RelaxedPattern> relaxed;

  auto vertex = [&](const std::string& token, std::size_t line_no) {
    const auto colon = token.find(':');
    const std::string name = trim(token.substr(0, colon));
    const bool has_label = colon != std::string::npos;
    const std::string label = has_label ? trim(token.substr(colon + 1)) : name;
    if (!valid_identifier(name) || !valid_identifier(label)) {
      throw DataError("pattern line " + std::to_string(line_no) + ": bad vertex '" + token + "'");
    }
    if (auto it = by_name.find(name); it != by_name.end()) {
      if (has_label && labels[it->second] != label) {
        throw DataError("pattern line " + std::to_string(line_no) + ": vertex '" + name +
                        "' relabeled");
      }
      return it->second;
    }
    const auto id = static_cast<Pattern::Node>(names.size());
    names.push_back(name);
    labels.push_back(label);
    by_name.emplace(name, id);
    return id;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto where = "pattern line " + std::to_string(line_no) + ": ";
    if (line.rfind("relaxed", 0) == 0) {
      std::istringstream words(line.substr(7));
      RelaxedPattern rp;
      long long hops = 0;
      long long min_paths = 1;
      if (!(words >> rp.label >> hops)) throw DataError(where + "expected 'relaxed <label> <hops>'");
      if (!(words >> min_paths)) min_paths = 1;
      std::string extra;
      if (words >> extra) throw DataError(where + "trailing text '" + extra + "'");
      if (hops < 2) throw DataError(where + "relaxed paths need at least 2 hops");
      if (min_paths < 1) throw DataError(where + "min_paths must be at least 1");
      rp.hops = static_cast<std::size_t>(hops);
      rp.min_paths = static_cast<std::size_t>(min_paths);
      if (relaxed) throw DataError(where + "only one relaxed line is allowed");
      relaxed = rp;
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string::npos || line.find("->", arrow + 2) != std::string::npos) {
      throw DataError(where + "expected 'from -> to'");
    }
    const auto a = vertex(line.substr(0, arrow), line_no);
    const auto b = vertex(line.substr(arrow + 2), line_no);
    edges.emplace_back(a, b);
  }
  if (relaxed) {
    if (!edges.empty()) throw DataError("pattern mixes a relaxed line with edges");
    return *relaxed;
  }
  return Pattern(std::move(names), std::move(labels), std::move(edges));
}

std::vector<VertexId> canonical_key(const Pattern& pattern, const PatternInstance& instance) {
  std::vector<VertexId> key;
  key.reserve(pattern.size());
  for (auto p : pattern.topological_order()) key.push_back(instance.binding[p]);
  return key;
}

std::string check_instance(const TemporalGraph& graph, const Pattern& pattern,
                           const PatternInstance& instance) {
  if (instance.binding.size() != pattern.size()) return "binding has the wrong size";
  for (Pattern::Node p = 0; p < pattern.size(); ++p) {
    if (index(instance.binding[p]) >= graph.vertex_count()) return "binding out of range";
    for (Pattern::Node q = 0; q < p; ++q) {
      const bool same_label = pattern.label_id(p) == pattern.label_id(q);
      const bool same_vertex = instance.binding[p] == instance.binding[q];
      if (same_label != same_vertex) {
        return "vertices " + pattern.name(p) + " and " + pattern.name(q) +
               (same_label ? " share a label but not a binding" : " share a binding but not a label");
      }
    }
  }
  for (const auto& [a, b] : pattern.edges()) {
    if (!graph.find_edge(instance.binding[a], instance.binding[b])) {
      return "missing edge for " + pattern.name(a) + " -> " + pattern.name(b);
    }
  }
  return {};
}

FlowInstance instance_subgraph(const TemporalGraph& graph, const Pattern& pattern,
                               const PatternInstance& instance) {
  GraphBuilder b;
  std::map<VertexId, VertexId> local;
  for (auto p : pattern.topological_order()) {
    const auto v = instance.binding[p];
    if (!local.contains(v)) local.emplace(v, b.add_vertex(graph.name(v)));
  }
  for (const auto& [pa, pb] : pattern.edges()) {
    const auto u = instance.binding[pa];
    const auto w = instance.binding[pb];
    const auto e = graph.find_edge(u, w);
    if (!e) throw InvariantViolation("instance edge missing from graph");
    b.add_interactions(local.at(u), local.at(w), graph.edge(*e).interactions);
  }
  const auto sub = std::move(b).build();
  const std::vector<VertexId> s{local.at(instance.binding[pattern.source()])};
  const std::vector<VertexId> t{local.at(instance.binding[pattern.sink()])};
  return normalize(sub, s, t);
}

}  // namespace tempoflow
