#include "divl1/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace divl1 {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Tableau {
  Eigen::MatrixXd rows;      // m x total columns
  Eigen::VectorXd b;         // m
  Eigen::RowVectorXd cost;   // reduced-cost row for the active phase
  double objective = 0.0;    // objective value of the active phase
  std::vector<int> basis;    // basic column per row
  int first_artificial = 0;  // columns >= this are artificial

  int cols() const { return static_cast<int>(rows.cols()); }
  int m() const { return static_cast<int>(rows.rows()); }
};

void pivot(Tableau& t, int row, int col) {
  const double pivot_value = t.rows(row, col);
  t.rows.row(row) /= pivot_value;
  t.b(row) /= pivot_value;
  const double scaled_rhs = t.b(row);
  for (int i = 0; i < t.m(); ++i) {
    if (i == row) continue;
    const double factor = t.rows(i, col);
    if (factor == 0.0) continue;
    t.rows.row(i) -= factor * t.rows.row(row);
    t.b(i) -= factor * scaled_rhs;
  }
  const double cost_factor = t.cost(col);
  if (cost_factor != 0.0) {
    t.cost -= cost_factor * t.rows.row(row);
    t.objective -= cost_factor * scaled_rhs;
  }
  t.basis[row] = col;
}

// Returns true on optimal, false on unbounded. `allowed_cols` bounds the
// candidate entering columns (used to freeze artificials in phase 2).
bool run_simplex(Tableau& t, int allowed_cols, const LpOptions& opt, int& iterations,
                 bool& hit_limit) {
  while (true) {
    if (iterations >= opt.max_iterations) {
      hit_limit = true;
      return true;
    }
    // Bland: smallest column index with a negative reduced cost.
    int entering = -1;
    for (int j = 0; j < allowed_cols; ++j) {
      if (t.cost(j) < -opt.pivot_tol) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return true;

    // Ratio test; ties resolved by the smallest basic variable index.
    int leaving = -1;
    double best_ratio = kInf;
    for (int i = 0; i < t.m(); ++i) {
      const double a = t.rows(i, entering);
      if (a <= opt.pivot_tol) continue;
      const double ratio = t.b(i) / a;
      if (leaving < 0) {
        leaving = i;
        best_ratio = ratio;
        continue;
      }
      const double slack = 1e-12 * std::max(1.0, std::abs(best_ratio));
      if (ratio < best_ratio - slack) {
        leaving = i;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + slack &&
                 t.basis[static_cast<std::size_t>(i)] < t.basis[static_cast<std::size_t>(leaving)]) {
        leaving = i;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    if (leaving < 0) return false;

    pivot(t, leaving, entering);
    ++iterations;
  }
}

LpProblem expand_upper_bounds(const LpProblem& p) {
  if (p.upper_bounds.size() == 0) return p;
  if (p.upper_bounds.size() != p.objective.size())
    throw std::invalid_argument("upper_bounds size mismatch");

  std::vector<int> bounded;
  for (int j = 0; j < p.num_vars(); ++j)
    if (std::isfinite(p.upper_bounds(j))) bounded.push_back(j);
  if (bounded.empty()) {
    LpProblem q = p;
    q.upper_bounds.resize(0);
    return q;
  }

  LpProblem q;
  q.objective = p.objective;
  const int m = p.num_rows();
  const int extra = static_cast<int>(bounded.size());
  q.constraints = Eigen::MatrixXd::Zero(m + extra, p.num_vars());
  q.constraints.topRows(m) = p.constraints;
  q.rhs.resize(m + extra);
  q.rhs.head(m) = p.rhs;
  q.senses = p.senses;
  for (int r = 0; r < extra; ++r) {
    q.constraints(m + r, bounded[static_cast<std::size_t>(r)]) = 1.0;
    q.rhs(m + r) = p.upper_bounds(bounded[static_cast<std::size_t>(r)]);
    q.senses.push_back(ConstraintSense::le);
  }
  return q;
}

}  // namespace

LpSolution solve_lp(const LpProblem& input, const LpOptions& opt) {
  const LpProblem p = expand_upper_bounds(input);
  const int n = p.num_vars();
  const int m = p.num_rows();
  if (p.constraints.rows() != m || p.constraints.cols() != n ||
      static_cast<int>(p.senses.size()) != m)
    throw std::invalid_argument("solve_lp: inconsistent problem dimensions");
  if (!p.constraints.allFinite() || !p.rhs.allFinite() || !p.objective.allFinite())
    throw std::invalid_argument("solve_lp: non-finite problem data");

  // Row-normalize so every right-hand side is non-negative.
  Eigen::MatrixXd a = p.constraints;
  Eigen::VectorXd b = p.rhs;
  std::vector<ConstraintSense> senses = p.senses;
  for (int i = 0; i < m; ++i) {
    if (b(i) < 0.0) {
      a.row(i) = -a.row(i);
      b(i) = -b(i);
      senses[static_cast<std::size_t>(i)] =
          senses[static_cast<std::size_t>(i)] == ConstraintSense::le   ? ConstraintSense::ge
          : senses[static_cast<std::size_t>(i)] == ConstraintSense::ge ? ConstraintSense::le
                                                                       : ConstraintSense::eq;
    }
  }

  int num_slack = 0;
  int num_artificial = 0;
  for (const ConstraintSense s : senses) {
    if (s != ConstraintSense::eq) ++num_slack;
    if (s != ConstraintSense::le) ++num_artificial;
  }

  Tableau t;
  const int total = n + num_slack + num_artificial;
  t.rows = Eigen::MatrixXd::Zero(m, total);
  t.rows.leftCols(n) = a;
  t.b = b;
  t.basis.assign(static_cast<std::size_t>(m), -1);
  t.first_artificial = n + num_slack;

  int slack_col = n;
  int art_col = t.first_artificial;
  for (int i = 0; i < m; ++i) {
    switch (senses[static_cast<std::size_t>(i)]) {
      case ConstraintSense::le:
        t.rows(i, slack_col) = 1.0;
        t.basis[static_cast<std::size_t>(i)] = slack_col++;
        break;
      case ConstraintSense::ge:
        t.rows(i, slack_col) = -1.0;
        ++slack_col;
        t.rows(i, art_col) = 1.0;
        t.basis[static_cast<std::size_t>(i)] = art_col++;
        break;
      case ConstraintSense::eq:
        t.rows(i, art_col) = 1.0;
        t.basis[static_cast<std::size_t>(i)] = art_col++;
        break;
    }
  }

  LpSolution sol;
  sol.x = Eigen::VectorXd::Zero(n);
  int iterations = 0;
  bool hit_limit = false;

  // Phase 1: minimize the sum of artificials.
  t.cost = Eigen::RowVectorXd::Zero(total);
  t.objective = 0.0;
  for (int i = 0; i < m; ++i) {
    if (t.basis[static_cast<std::size_t>(i)] >= t.first_artificial) {
      t.cost -= t.rows.row(i);
      t.objective -= t.b(i);
    }
  }
  for (int j = t.first_artificial; j < total; ++j) t.cost(j) += 1.0;

  run_simplex(t, total, opt, iterations, hit_limit);
  if (hit_limit) {
    sol.status = LpStatus::iteration_limit;
    sol.iterations = iterations;
    return sol;
  }
  if (-t.objective > opt.feasibility_tol) {
    sol.status = LpStatus::infeasible;
    sol.iterations = iterations;
    return sol;
  }

  // Drive any residual artificial out of the basis; a row with no available
  // pivot is redundant and can be neutralized.
  for (int i = 0; i < m; ++i) {
    if (t.basis[static_cast<std::size_t>(i)] < t.first_artificial) continue;
    int col = -1;
    for (int j = 0; j < t.first_artificial; ++j) {
      if (std::abs(t.rows(i, j)) > opt.pivot_tol) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      pivot(t, i, col);
    } else {
      t.rows.row(i).setZero();
      t.b(i) = 0.0;
    }
  }

  // Phase 2: original objective, artificial columns frozen out.
  t.cost = Eigen::RowVectorXd::Zero(total);
  t.cost.head(n) = p.objective.transpose();
  t.objective = 0.0;
  for (int i = 0; i < m; ++i) {
    const int j = t.basis[static_cast<std::size_t>(i)];
    if (j >= t.first_artificial) continue;  // neutralized redundant row
    const double cj = j < n ? p.objective(j) : 0.0;
    if (cj != 0.0) {
      t.cost -= cj * t.rows.row(i);
      t.objective -= cj * t.b(i);
    }
  }

  const bool bounded = run_simplex(t, t.first_artificial, opt, iterations, hit_limit);
  sol.iterations = iterations;
  if (hit_limit) {
    sol.status = LpStatus::iteration_limit;
    return sol;
  }
  if (!bounded) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  for (int i = 0; i < m; ++i) {
    const int j = t.basis[static_cast<std::size_t>(i)];
    if (j >= 0 && j < n) sol.x(j) = t.b(i);
  }
  sol.status = LpStatus::optimal;
  sol.objective = p.objective.dot(sol.x);
  return sol;
}

std::string dump_lp(const LpProblem& p) {
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  std::string out = "min:";
  for (int j = 0; j < p.num_vars(); ++j) out += " " + fmt(p.objective(j));
  out += "\n";
  for (int i = 0; i < p.num_rows(); ++i) {
    out += "row:";
    for (int j = 0; j < p.num_vars(); ++j) out += " " + fmt(p.constraints(i, j));
    switch (p.senses[static_cast<std::size_t>(i)]) {
      case ConstraintSense::le: out += " <= "; break;
      case ConstraintSense::ge: out += " >= "; break;
      case ConstraintSense::eq: out += " == "; break;
    }
    out += fmt(p.rhs(i)) + "\n";
  }
  return out;
}

std::vector<Subset> canonical_splits(int n) {
  std::vector<Subset> splits;
  const Subset x = full_set(n);
  for (Subset b = 1; b < x; ++b)
    if (!contains(b, 0)) splits.push_back(b);
  return splits;
}

LpProblem make_split_distortion_lp(const FiniteDiversity& div, const std::vector<Subset>& splits) {
  const int n = div.n();
  const int s = static_cast<int>(splits.size());
  const Subset limit = Subset{1} << n;
  const Subset x = full_set(n);

  int num_sets = 0;
  for (Subset a = 0; a < limit; ++a)
    if (subset_size(a) >= 2) ++num_sets;

  LpProblem p;
  p.objective = Eigen::VectorXd::Zero(s + 1);
  p.objective(s) = 1.0;  // minimize c
  p.constraints = Eigen::MatrixXd::Zero(2 * num_sets + 1, s + 1);
  p.rhs = Eigen::VectorXd::Zero(2 * num_sets + 1);
  p.senses.assign(static_cast<std::size_t>(2 * num_sets + 1), ConstraintSense::ge);

  int row = 0;
  for (Subset a = 0; a < limit; ++a) {
    if (subset_size(a) < 2) continue;
    const double da = div.value(a);
    for (int j = 0; j < s; ++j) {
      const Subset b = splits[static_cast<std::size_t>(j)];
      const double cut = ((a & b) != 0 && (a & (x & ~b)) != 0) ? 1.0 : 0.0;
      p.constraints(row, j) = cut;
      p.constraints(row + 1, j) = cut;
    }
    // sum_B w_B delta_B(A) >= delta(A)
    p.senses[static_cast<std::size_t>(row)] = ConstraintSense::ge;
    p.rhs(row) = da;
    // sum_B w_B delta_B(A) - c delta(A) <= 0
    p.constraints(row + 1, s) = -da;
    p.senses[static_cast<std::size_t>(row + 1)] = ConstraintSense::le;
    p.rhs(row + 1) = 0.0;
    row += 2;
  }
  // c >= 1
  p.constraints(row, s) = 1.0;
  p.senses[static_cast<std::size_t>(row)] = ConstraintSense::ge;
  p.rhs(row) = 1.0;
  return p;
}

SplitDistortionResult optimal_split_distortion(const FiniteDiversity& div) {
  const int n = div.n();
  if (n > 8) throw std::out_of_range("optimal_split_distortion: n must be <= 8");

  const std::vector<Subset> splits = canonical_splits(n);
  const LpProblem p = make_split_distortion_lp(div, splits);
  LpSolution sol = solve_lp(p);
  if (sol.status == LpStatus::infeasible || sol.status == LpStatus::unbounded)
    throw std::logic_error(
        "optimal_split_distortion: solver reported an impossible status (internal error)");
  if (sol.status == LpStatus::iteration_limit)
    throw std::runtime_error("optimal_split_distortion: simplex iteration cap exceeded");

  SplitDistortionResult result{1.0, SplitWeighting(n), {}};
  const int s = static_cast<int>(splits.size());
  result.distortion = sol.x(s);
  for (int j = 0; j < s; ++j) {
    const double w = sol.x(j);
    if (w > 0.0) result.witness.add(splits[static_cast<std::size_t>(j)], w);
  }
  result.solution = std::move(sol);

  // The witness must sandwich the input within reporting accuracy.
  const Subset limit = Subset{1} << n;
  for (Subset a = 0; a < limit; ++a) {
    if (subset_size(a) < 2) continue;
    const double da = div.value(a);
    const double embedded = eval_split_combination(result.witness, a);
    if (embedded < da * (1.0 - 1e-6) || embedded > result.distortion * da * (1.0 + 1e-6))
      throw std::logic_error("optimal_split_distortion: witness fails the sandwich (internal error)");
  }
  return result;
}

}  // namespace divl1
