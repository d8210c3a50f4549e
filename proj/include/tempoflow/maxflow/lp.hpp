#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tempoflow/core/normalize.hpp"
#include "tempoflow/greedy/greedy.hpp"

namespace tempoflow {

struct LpTerm {
  std::uint32_t var = 0;
  int coef = 1;  // +1 or -1
};

/// sum(terms) <= rhs
struct LpConstraint {
  std::string name;
  std::vector<LpTerm> terms;
  Quantity rhs;
};

/// The transfer LP of an instance. One variable per interaction that does not
/// leave the source (those are fixed to their quantity). For every outgoing
/// interaction i of a non-source vertex v:
///
///   sum_{out j of v, j before or tied with i} x_j - sum_{in j of v, t_j < t_i} x_j
///       <= sum_{source interactions j into v, t_j < t_i} q_j
///
/// where "tied with" includes equal timestamps up to i in (t, seq) order, so
/// outgoing interactions at one timestamp share the buffer. Rows with an
/// INFINITE right-hand side are vacuous and omitted.
struct LpModel {
  std::vector<std::size_t> var_interaction;  // flat interaction index per variable
  std::vector<Quantity> upper;               // q_i; INFINITE means unbounded
  std::vector<LpConstraint> constraints;
  std::vector<std::uint32_t> objective;      // variables entering the sink
  Quantity objective_constant;               // fixed source -> sink inflow
  std::size_t interaction_count = 0;
  std::vector<Quantity> fixed;               // per flat index; set for source interactions

  std::size_t variable_count() const { return var_interaction.size(); }
};

LpModel build_lp(const FlowInstance& instance);

/// CPLEX LP text. Output depends only on the model, so repeated emission is
/// byte-identical. Variables are named x<flat index>.
void write_cplex_lp(std::ostream& os, const LpModel& model);

struct SimplexOptions {
  std::size_t max_iterations = 50000;
};

/// Exact rational simplex. Meant as a verification oracle for small models.
/// Throws DataError when the model is unbounded or the iteration cap is hit.
FlowResult solve_lp(const LpModel& model, const SimplexOptions& options = {});

}  // namespace tempoflow
