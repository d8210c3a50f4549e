#include <gmpxx.h>

#include <vector>

#include "tempoflow/core/error.hpp"
#include "tempoflow/maxflow/lp.hpp"

namespace tempoflow {
namespace {

// Dense tableau for: maximize c.x subject to A x <= b, x >= 0, with b >= 0 so
// the all-slack basis is feasible from the start.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t vars)
      : rows_(rows), vars_(vars), cols_(vars + rows),
        a_(rows, std::vector<mpq_class>(vars + rows + 1)), z_(vars + rows + 1),
        basis_(rows) {
    for (std::size_t r = 0; r < rows; ++r) {
      a_[r][vars + r] = 1;
      basis_[r] = vars + r;
    }
  }

  void set(std::size_t r, std::size_t c, long v) { a_[r][c] = v; }
  void set_rhs(std::size_t r, const mpq_class& v) { a_[r][cols_] = v; }
  void set_cost(std::size_t c, long v) { z_[c] = -v; }

  void solve(std::size_t max_iterations) {
    std::size_t degenerate_run = 0;
    for (std::size_t it = 0;; ++it) {
      if (it >= max_iterations) throw DataError("simplex iteration cap exceeded");
      const bool bland = degenerate_run > 50;
      std::size_t enter = cols_;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(z_[c]) >= 0) continue;
        if (bland) {
          enter = c;
          break;
        }
        if (enter == cols_ || z_[c] < z_[enter]) enter = c;
      }
      if (enter == cols_) return;

      std::size_t leave = rows_;
      mpq_class best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn(a_[r][enter]) <= 0) continue;
        mpq_class ratio = a_[r][cols_] / a_[r][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_) throw DataError("linear program is unbounded");
      degenerate_run = sgn(best) == 0 ? degenerate_run + 1 : 0;
      pivot(leave, enter);
    }
  }

  mpq_class value(std::size_t var) const {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] == var) return a_[r][cols_];
    }
    return 0;
  }

 private:
  void pivot(std::size_t pr, std::size_t pc) {
    auto& prow = a_[pr];
    const mpq_class inv = 1 / prow[pc];
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c <= cols_; ++c) {
      if (sgn(prow[c]) != 0) {
        prow[c] *= inv;
        nz.push_back(c);
      }
    }
    auto eliminate = [&](std::vector<mpq_class>& row) {
      if (sgn(row[pc]) == 0) return;
      const mpq_class f = row[pc];
      for (auto c : nz) row[c] -= f * prow[c];
    };
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != pr) eliminate(a_[r]);
    }
    eliminate(z_);
    basis_[pr] = pc;
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t cols_;
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> z_;
  std::vector<std::size_t> basis_;
};

mpq_class to_mpq(Quantity q) {
  const std::uint64_t raw = q.value();
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(raw), 0, 0, &raw);
  return mpq_class(z);
}

Quantity to_quantity(const mpq_class& v) {
  if (v.get_den() != 1 || sgn(v) < 0) {
    throw InvariantViolation("simplex produced a non-integral or negative value " + v.get_str());
  }
  const mpz_class& z = v.get_num();
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > 64) throw DataError("simplex value exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
  const Quantity q(out);
  if (q.is_infinite()) throw DataError("simplex value reaches the INFINITE sentinel");
  return q;
}

}  // namespace

FlowResult solve_lp(const LpModel& model, const SimplexOptions& options) {
  const std::size_t n = model.variable_count();
  std::vector<std::uint32_t> bounded;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!model.upper[v].is_infinite()) bounded.push_back(v);
  }
  Tableau tab(model.constraints.size() + bounded.size(), n);
  std::size_t r = 0;
  for (const auto& row : model.constraints) {
    for (const auto& term : row.terms) tab.set(r, term.var, term.coef);
    tab.set_rhs(r, to_mpq(row.rhs));
    ++r;
  }
  for (auto v : bounded) {
    tab.set(r, v, 1);
    tab.set_rhs(r, to_mpq(model.upper[v]));
    ++r;
  }
  for (auto v : model.objective) tab.set_cost(v, 1);

  tab.solve(options.max_iterations);

  FlowResult result;
  result.method = FlowMethod::kMaxflowLp;
  result.transfers = model.fixed;
  for (std::uint32_t v = 0; v < n; ++v) {
    result.transfers[model.var_interaction[v]] = to_quantity(tab.value(v));
  }
  Quantity value = model.objective_constant;
  for (auto v : model.objective) value += result.transfers[model.var_interaction[v]];
  result.value = value;
  return result;
}

}  // namespace tempoflow
