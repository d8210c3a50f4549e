#include "tempoflow/maxflow/lp.hpp"

#include <algorithm>
#include <ostream>

namespace tempoflow {
namespace {

struct Incident {
  Timestamp t;
  std::uint64_t seq;
  std::size_t flat;
  bool outgoing;
  bool from_source;
};

}  // namespace

LpModel build_lp(const FlowInstance& instance) {
  const auto& g = instance.graph;
  LpModel model;
  model.interaction_count = g.interaction_count();
  model.fixed.assign(model.interaction_count, Quantity::zero());
  if (instance.disconnected) return model;

  std::vector<std::int64_t> var_of(model.interaction_count, -1);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    for (std::size_t p = 0; p < edge.interactions.size(); ++p) {
      const auto flat = g.interaction_offset(e) + p;
      const auto q = edge.interactions[p].q;
      if (edge.src == instance.source) {
        model.fixed[flat] = q;
        if (edge.dst == instance.sink) model.objective_constant += q;
        continue;
      }
      var_of[flat] = static_cast<std::int64_t>(model.var_interaction.size());
      model.var_interaction.push_back(flat);
      model.upper.push_back(q);
      if (edge.dst == instance.sink) {
        model.objective.push_back(static_cast<std::uint32_t>(var_of[flat]));
      }
    }
  }

  for (std::size_t vi = 0; vi < g.vertex_count(); ++vi) {
    const auto v = vertex_id(vi);
    if (v == instance.source || v == instance.sink) continue;
    std::vector<Incident> events;
    for (EdgeIndex e : g.in_edges(v)) {
      const auto& edge = g.edge(e);
      for (std::size_t p = 0; p < edge.interactions.size(); ++p) {
        const auto& x = edge.interactions[p];
        events.push_back({x.t, x.seq, g.interaction_offset(e) + p, false,
                          edge.src == instance.source});
      }
    }
    for (EdgeIndex e : g.out_edges(v)) {
      const auto& edge = g.edge(e);
      for (std::size_t p = 0; p < edge.interactions.size(); ++p) {
        const auto& x = edge.interactions[p];
        events.push_back({x.t, x.seq, g.interaction_offset(e) + p, true, false});
      }
    }
    // Within a timestamp, incoming events sort after outgoing ones so that an
    // outgoing row never sees same-time arrivals.
    std::sort(events.begin(), events.end(), [](const Incident& a, const Incident& b) {
      if (a.t != b.t) return a.t < b.t;
      if (a.outgoing != b.outgoing) return a.outgoing;
      return a.seq < b.seq;
    });

    std::vector<LpTerm> prefix;
    Quantity fixed_in;
    for (const auto& ev : events) {
      if (!ev.outgoing) {
        if (ev.from_source) {
          fixed_in += model.fixed[ev.flat];
        } else {
          prefix.push_back({static_cast<std::uint32_t>(var_of[ev.flat]), -1});
        }
        continue;
      }
      prefix.push_back({static_cast<std::uint32_t>(var_of[ev.flat]), 1});
      if (fixed_in.is_infinite()) continue;
      LpConstraint row;
      row.name = "c" + std::to_string(ev.flat);
      row.terms = prefix;
      std::sort(row.terms.begin(), row.terms.end(),
                [](const LpTerm& a, const LpTerm& b) { return a.var < b.var; });
      row.rhs = fixed_in;
      model.constraints.push_back(std::move(row));
    }
  }
  return model;
}

void write_cplex_lp(std::ostream& os, const LpModel& model) {
  auto name = [&](std::uint32_t var) { return "x" + std::to_string(model.var_interaction[var]); };
  os << "\\ temporal flow model: " << model.variable_count() << " variables, "
     << model.constraints.size() << " constraints\n";
  os << "\\ constant objective term: " << model.objective_constant.to_string() << "\n";
  os << "Maximize\n obj:";
  if (model.objective.empty()) {
    os << " 0 x_none";
  } else {
    for (std::size_t i = 0; i < model.objective.size(); ++i) {
      os << (i == 0 ? " " : " + ") << name(model.objective[i]);
    }
  }
  os << "\nSubject To\n";
  for (const auto& row : model.constraints) {
    os << " " << row.name << ":";
    for (std::size_t i = 0; i < row.terms.size(); ++i) {
      const auto& term = row.terms[i];
      if (i == 0) {
        os << (term.coef < 0 ? " - " : " ");
      } else {
        os << (term.coef < 0 ? " - " : " + ");
      }
      os << name(term.var);
    }
    os << " <= " << row.rhs.value() << "\n";
  }
  os << "Bounds\n";
  for (std::uint32_t v = 0; v < model.variable_count(); ++v) {
    if (model.upper[v].is_infinite()) {
      os << " " << name(v) << " >= 0\n";
    } else {
      os << " 0 <= " << name(v) << " <= " << model.upper[v].value() << "\n";
    }
  }
  if (model.objective.empty()) os << " x_none = 0\n";
  os << "End\n";
}

}  // namespace tempoflow
