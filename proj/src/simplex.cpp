#include "mvmodal/simplex.hpp"

#include <stdexcept>

namespace mvmodal {

namespace {

class Tableau {
public:
  // columns: [0, n) structural, [n, n+s) slack/surplus, [n+s, n+s+a) artificial
  int cols = 0;
  std::vector<std::vector<Rational>> rows;  // each of size cols
  std::vector<Rational> rhs;
  std::vector<int> basis;       // basic column per row
  std::vector<bool> banned;     // columns excluded from entering
  std::vector<Rational> objrow; // reduced profits

  void pivot(int r, int c) {
    const Rational p = rows[r][c];
    for (auto& x : rows[r]) x /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      const Rational f = rows[i][c];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    const Rational f = objrow[c];
    if (f != 0) {
      for (int j = 0; j < cols; ++j) objrow[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Bland: entering = least column with positive reduced profit; leaving =
  // least basic index among minimal ratios. Returns false at optimum.
  bool step() {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (banned[j]) continue;
      if (objrow[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;
    int leave = -1;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / rows[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = static_cast<int>(i);
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::runtime_error("lp-unbounded");
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const int n = problem.num_vars;
  const int m = static_cast<int>(problem.rows.size());

  int num_slack = 0, num_art = 0;
  for (const auto& row : problem.rows) {
    Rational b = row.rhs;
    Rel rel = row.rel;
    // orientation after making rhs nonnegative
    bool flip = b < 0;
    if (flip) rel = (rel == Rel::Le ? Rel::Ge : (rel == Rel::Ge ? Rel::Le : Rel::Eq));
    if (rel == Rel::Le)
      ++num_slack;
    else if (rel == Rel::Ge) {
      ++num_slack;
      ++num_art;
    } else
      ++num_art;
  }

  Tableau t;
  t.cols = n + num_slack + num_art;
  t.rows.assign(m, std::vector<Rational>(t.cols, Rational(0)));
  t.rhs.assign(m, Rational(0));
  t.basis.assign(m, -1);
  t.banned.assign(t.cols, false);
  t.objrow.assign(t.cols, Rational(0));

  int slack_at = n;
  int art_at = n + num_slack;
  std::vector<int> artificials;
  for (int i = 0; i < m; ++i) {
    const auto& row = problem.rows[i];
    Rational b = row.rhs;
    const bool flip = b < 0;
    Rel rel = row.rel;
    if (flip) {
      b = -b;
      rel = (rel == Rel::Le ? Rel::Ge : (rel == Rel::Ge ? Rel::Le : Rel::Eq));
    }
    for (const auto& term : row.terms) {
      if (term.var < 0 || term.var >= n) throw std::runtime_error("lp: variable out of range");
      t.rows[i][term.var] += flip ? -term.coeff : term.coeff;
    }
    t.rhs[i] = b;
    if (rel == Rel::Le) {
      t.rows[i][slack_at] = 1;
      t.basis[i] = slack_at++;
    } else if (rel == Rel::Ge) {
      t.rows[i][slack_at] = -1;
      ++slack_at;
      t.rows[i][art_at] = 1;
      t.basis[i] = art_at;
      artificials.push_back(art_at++);
    } else {
      t.rows[i][art_at] = 1;
      t.basis[i] = art_at;
      artificials.push_back(art_at++);
    }
  }

  LpSolution sol;

  if (!artificials.empty()) {
    // phase 1: maximize -sum(artificials)
    for (int a : artificials) t.objrow[a] = -1;
    for (int i = 0; i < m; ++i) {
      // make reduced profits of basic artificials zero
      bool is_art = false;
      for (int a : artificials)
        if (t.basis[i] == a) is_art = true;
      if (is_art)
        for (int j = 0; j < t.cols; ++j) t.objrow[j] += t.rows[i][j];
    }
    try {
      while (t.step()) {
      }
    } catch (const std::runtime_error&) {
      throw std::logic_error("phase-1 LP cannot be unbounded");
    }
    Rational art_sum = 0;
    for (int i = 0; i < m; ++i)
      for (int a : artificials)
        if (t.basis[i] == a) art_sum += t.rhs[i];
    if (art_sum != 0) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // drive remaining artificial basics out (degenerate pivots), then ban
    for (int i = 0; i < m; ++i) {
      bool is_art = false;
      for (int a : artificials)
        if (t.basis[i] == a) is_art = true;
      if (!is_art) continue;
      int col = -1;
      for (int j = 0; j < n + num_slack; ++j)
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0) t.pivot(i, col);
      // an all-zero row is redundant; its artificial stays basic at 0 and
      // is banned below, so it never re-enters
    }
    for (int a : artificials) t.banned[a] = true;
  }

  // phase 2
  std::fill(t.objrow.begin(), t.objrow.end(), Rational(0));
  for (int j = 0; j < n; ++j) t.objrow[j] = problem.objective[j];
  for (int i = 0; i < m; ++i) {
    const int b = t.basis[i];
    const Rational f = t.objrow[b];
    if (f != 0)
      for (int j = 0; j < t.cols; ++j) t.objrow[j] -= f * t.rows[i][j];
  }
  try {
    while (t.step()) {
    }
  } catch (const std::runtime_error&) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.point.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < n) sol.point[t.basis[i]] = t.rhs[i];
  sol.value = 0;
  for (int j = 0; j < n; ++j) sol.value += problem.objective[j] * sol.point[j];
  return sol;
}

}  // namespace mvmodal
