#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tempoflow/core/error.hpp"
#include "tempoflow/core/normalize.hpp"

namespace tempoflow {

/// A labeled DAG template. Pattern vertices sharing a label must map to the same
/// graph vertex; vertices with different labels must map to different ones.
///
/// Text form, one edge per line:
///
///     a -> b
///     b -> c
///     c -> a2:a      # vertex a2 carries label a
///
/// A vertex is written `name` or `name:label`; the label defaults to the name.
/// '#' starts a comment. The source and sink are the unique vertices without
/// incoming and outgoing pattern edges respectively.
class Pattern {
 public:
  using Node = std::uint32_t;

  Pattern(std::vector<std::string> names, std::vector<std::string> labels,
          std::vector<std::pair<Node, Node>> edges);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Node p) const { return names_[p]; }
  const std::string& label(Node p) const { return label_names_[label_[p]]; }
  std::uint32_t label_id(Node p) const { return label_[p]; }
  std::size_t label_count() const { return label_names_.size(); }
  std::size_t label_multiplicity(Node p) const { return multiplicity_[label_[p]]; }

  const std::vector<std::pair<Node, Node>>& edges() const { return edges_; }
  const std::vector<Node>& successors(Node p) const { return succ_[p]; }
  const std::vector<Node>& predecessors(Node p) const { return pred_[p]; }

  Node source() const { return source_; }
  Node sink() const { return sink_; }
  const std::vector<Node>& topological_order() const { return topo_; }
  std::size_t topo_position(Node p) const { return topo_pos_[p]; }

  /// Simple path source -> sink through vertices with one predecessor and one
  /// successor, all labels distinct except possibly source and sink.
  bool is_simple_chain() const { return chain_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::string> label_names_;
  std::vector<std::uint32_t> label_;
  std::vector<std::size_t> multiplicity_;
  std::vector<std::pair<Node, Node>> edges_;
  std::vector<std::vector<Node>> succ_;
  std::vector<std::vector<Node>> pred_;
  std::vector<Node> topo_;
  std::vector<std::size_t> topo_pos_;
  Node source_ = 0;
  Node sink_ = 0;
  bool chain_ = false;
};

/// An anchor connected to itself by any number of parallel k-hop cycles.
/// Text form: a single line `relaxed <label> <hops> [min_paths]`.
struct RelaxedPattern {
  std::string label;
  std::size_t hops = 2;
  std::size_t min_paths = 1;
};

using PatternSpec = std::variant<Pattern, RelaxedPattern>;

/// Throws DataError on syntax errors or an invalid pattern.
PatternSpec parse_pattern(std::istream& in);
Pattern parse_rigid_pattern(std::istream& in);

/// Graph vertex per pattern vertex.
struct PatternInstance {
  std::vector<VertexId> binding;

  friend bool operator==(const PatternInstance&, const PatternInstance&) = default;
};

/// Bindings listed in the pattern's topological order; instances compare by this tuple.
std::vector<VertexId> canonical_key(const Pattern& pattern, const PatternInstance& instance);

/// Empty string when the instance satisfies every label and edge condition.
std::string check_instance(const TemporalGraph& graph, const Pattern& pattern,
                           const PatternInstance& instance);

/// The instance's edges with their full interaction sequences, as a flow
/// instance from the source binding to the sink binding (split when equal).
FlowInstance instance_subgraph(const TemporalGraph& graph, const Pattern& pattern,
                               const PatternInstance& instance);

}  // namespace tempoflow
