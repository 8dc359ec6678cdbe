#include "matroid_forge/exact_simplex.hpp"

#include "matroid_forge/errors.hpp"

namespace matroid_forge {

namespace {

struct Tableau {
  // rows_[i] = [coefficients..., rhs]; basis_[i] = basic column of row i.
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = rows[row][col];
    for (auto& v : rows[row]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == row || sgn(rows[i][col]) == 0) continue;
      const Rational factor = rows[i][col];
      for (std::size_t k = 0; k <= columns; ++k) rows[i][k] -= factor * rows[row][k];
    }
    basis[row] = col;
  }

  /// Minimises cost over columns where `allowed` is set. Returns false if unbounded.
  bool optimise(const std::vector<Rational>& cost, const std::vector<char>& allowed) {
    while (true) {
      // Reduced costs; Bland: the lowest-index improving column enters.
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < columns && !entering; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) reduced -= cost[basis[i]] * rows[i][j];
        if (sgn(reduced) < 0) entering = j;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rows[i][*entering]) <= 0) continue;
        Rational ratio = rows[i][columns] / rows[i][*entering];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
          best_ratio = ratio;
          leaving = i;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }
};

}  // namespace

std::optional<LpSolution> solve_standard_lp(const std::vector<std::vector<Rational>>& a, std::vector<Rational> b,
                                            const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  for (const auto& row : a) {
    if (row.size() != n) throw InputError("solve_standard_lp: ragged constraint matrix");
  }
  if (b.size() != m) throw InputError("solve_standard_lp: rhs length mismatch");

  // Columns: n structural, then m artificials.
  Tableau t;
  t.columns = n + m;
  t.rows.assign(m, std::vector<Rational>(n + m + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t.rows[i][n + m] = flip ? Rational(-b[i]) : b[i];
    t.rows[i][n + i] = 1;
    t.basis[i] = n + i;
  }

  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  std::vector<char> all(n + m, 1);
  t.optimise(phase1, all);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] >= n) infeasibility += t.rows[i][n + m];
  }
  if (sgn(infeasibility) != 0) return std::nullopt;

  // Drive remaining (zero-valued) artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(t.rows[i][j]) != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }

  std::vector<Rational> phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  std::vector<char> structural(n + m, 0);
  for (std::size_t j = 0; j < n; ++j) structural[j] = 1;
  if (!t.optimise(phase2, structural)) throw ConsistencyError("solve_standard_lp: unbounded objective");

  LpSolution out;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) out.x[t.basis[i]] = t.rows[i][n + m];
  }
  out.objective = 0;
  for (std::size_t j = 0; j < n; ++j) out.objective += c[j] * out.x[j];
  return out;
}

}  // namespace matroid_forge
