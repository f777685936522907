#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lctpoly/rational.hpp"

namespace lctpoly {

enum class LPStatus { Optimal, Infeasible, Unbounded };

/** One linear constraint: <coeffs, x> <= rhs, or == rhs when equality. */
struct LPRow {
  RatVec coeffs;
  Rational rhs;
  bool equality = false;
};

/**
 * Linear program over exact rationals.
 *
 * nonneg[j] restricts x_j to be nonnegative; variables with nonneg[j] false
 * are free. An empty mask means every variable is nonnegative.
 */
struct LPProblem {
  int nvars = 0;
  std::vector<LPRow> rows;
  std::vector<bool> nonneg;
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value = 0;
  RatVec point;
};

namespace detail {

/**
 * Dense rational simplex tableau in standard form (all variables >= 0,
 * equality rows, right hand sides >= 0). Pivoting follows Bland's rule:
 * the entering column is the lowest index with positive reduced cost and
 * ratio-test ties leave the row whose basic variable has the lowest index.
 * That rule never cycles, so termination needs no perturbation.
 */
class SimplexTableau {
 public:
  SimplexTableau(std::vector<RatVec> tableau, std::vector<int> basis,
                 int ncols)
      : t_(std::move(tableau)), basis_(std::move(basis)), ncols_(ncols) {}

  // Maximizes <cost, x_std> over the current feasible basis. cost has one
  // entry per standard-form column; blocked columns never enter the basis.
  LPStatus run(const RatVec& cost, const std::vector<bool>& blocked) {
    for (int guard = 0; guard < 1000000; ++guard) {
      int entering = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (blocked[j]) continue;
        Rational z = cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i)
          z -= cost[basis_[i]] * t_[i][j];
        if (z > 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return LPStatus::Optimal;

      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][entering] <= 0) continue;
        const Rational ratio = t_[i][ncols_] / t_[i][entering];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return LPStatus::Unbounded;
      pivot(leave, entering);
    }
    throw std::logic_error("simplex failed to terminate");
  }

  void pivot(int row, int col) {
    const Rational p = t_[row][col];
    for (auto& x : t_[row]) x /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (static_cast<int>(i) == row || t_[i][col] == 0) continue;
      const Rational f = t_[i][col];
      for (int j = 0; j <= ncols_; ++j) t_[i][j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t i) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  const std::vector<RatVec>& tableau() const { return t_; }
  const std::vector<int>& basis() const { return basis_; }
  int ncols() const { return ncols_; }

  RatVec solution() const {
    RatVec x(ncols_, Rational(0));
    for (std::size_t i = 0; i < t_.size(); ++i) x[basis_[i]] = t_[i][ncols_];
    return x;
  }

 private:
  std::vector<RatVec> t_;  // rows x (ncols + 1), last column is the rhs
  std::vector<int> basis_;
  int ncols_;
};

}  // namespace detail

/**
 * Two-phase primal simplex. Free variables are split into differences of
 * nonnegative ones, inequality rows receive slacks, and phase one drives a
 * full set of artificial variables to zero before the real objective runs.
 */
inline LPResult lp_maximize(const LPProblem& prob, const RatVec& objective) {
  if (static_cast<int>(objective.size()) != prob.nvars)
    throw std::invalid_argument("lp_maximize: objective size mismatch");
  std::vector<bool> nonneg = prob.nonneg;
  if (nonneg.empty()) nonneg.assign(prob.nvars, true);
  if (static_cast<int>(nonneg.size()) != prob.nvars)
    throw std::invalid_argument("lp_maximize: nonneg mask size mismatch");
  for (const auto& row : prob.rows)
    if (static_cast<int>(row.coeffs.size()) != prob.nvars)
      throw std::invalid_argument("lp_maximize: row size mismatch");

  // Standard-form columns: one (or two, when free) per variable, then slacks.
  std::vector<int> pos_col(prob.nvars), neg_col(prob.nvars, -1);
  int ncols = 0;
  for (int j = 0; j < prob.nvars; ++j) {
    pos_col[j] = ncols++;
    if (!nonneg[j]) neg_col[j] = ncols++;
  }
  const int nslack = static_cast<int>(std::count_if(
      prob.rows.begin(), prob.rows.end(),
      [](const LPRow& r) { return !r.equality; }));
  const int slack0 = ncols;
  ncols += nslack;
  const int m = static_cast<int>(prob.rows.size());
  const int art0 = ncols;
  ncols += m;

  std::vector<RatVec> tableau(m, RatVec(ncols + 1, Rational(0)));
  int slack = slack0;
  for (int i = 0; i < m; ++i) {
    const LPRow& row = prob.rows[i];
    const bool flip = row.rhs < 0;
    const Rational sign(flip ? -1 : 1);
    for (int j = 0; j < prob.nvars; ++j) {
      tableau[i][pos_col[j]] = sign * row.coeffs[j];
      if (neg_col[j] >= 0) tableau[i][neg_col[j]] = -sign * row.coeffs[j];
    }
    if (!row.equality) tableau[i][slack++] = sign;
    tableau[i][art0 + i] = 1;
    tableau[i][ncols] = sign * row.rhs;
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = art0 + i;

  detail::SimplexTableau tab(std::move(tableau), std::move(basis), ncols);
  std::vector<bool> blocked(ncols, false);

  RatVec phase1(ncols, Rational(0));
  for (int i = 0; i < m; ++i) phase1[art0 + i] = -1;
  if (tab.run(phase1, blocked) != LPStatus::Optimal)
    throw std::logic_error("phase one cannot be unbounded");
  {
    Rational infeas = 0;
    const RatVec x = tab.solution();
    for (int i = 0; i < m; ++i) infeas += x[art0 + i];
    if (infeas > 0) return LPResult{LPStatus::Infeasible, Rational(0), {}};
  }
  // Drive leftover artificials out of the basis; rows that cannot pivot are
  // redundant combinations of earlier rows and get dropped.
  for (std::size_t i = tab.basis().size(); i-- > 0;) {
    if (tab.basis()[i] < art0) continue;
    int col = -1;
    for (int j = 0; j < art0; ++j)
      if (tab.tableau()[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0)
      tab.pivot(static_cast<int>(i), col);
    else
      tab.drop_row(i);
  }
  for (int j = art0; j < ncols; ++j) blocked[j] = true;

  RatVec phase2(ncols, Rational(0));
  for (int j = 0; j < prob.nvars; ++j) {
    phase2[pos_col[j]] = objective[j];
    if (neg_col[j] >= 0) phase2[neg_col[j]] = -objective[j];
  }
  const LPStatus status = tab.run(phase2, blocked);
  if (status == LPStatus::Unbounded)
    return LPResult{LPStatus::Unbounded, Rational(0), {}};

  const RatVec x = tab.solution();
  LPResult out;
  out.status = LPStatus::Optimal;
  out.point.resize(prob.nvars);
  for (int j = 0; j < prob.nvars; ++j) {
    out.point[j] = x[pos_col[j]];
    if (neg_col[j] >= 0) out.point[j] -= x[neg_col[j]];
  }
  out.value = dot(objective, out.point);
  return out;
}

/** Feasibility probe: Optimal status carries an exact witness point. */
inline LPResult lp_feasible(const LPProblem& prob) {
  return lp_maximize(prob, RatVec(prob.nvars, Rational(0)));
}

}  // namespace lctpoly
