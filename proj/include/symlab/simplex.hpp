#ifndef SYMLAB_SIMPLEX_HPP
#define SYMLAB_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace symlab {

/// maximize c·x subject to A x = b, x ≥ 0, over the rationals.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
  /// Optimal dual multipliers y (one per row) with yᵀA ≥ c and yᵀb = value.
  std::vector<Rational> dual;
};

namespace detail {

class Tableau {
public:
  Tableau(const LinearProgram& lp) : m_(lp.b.size()), n_(lp.c.size()) {
    if (lp.a.size() != m_) throw precondition_violation("LP row count mismatch");
    rows_.assign(m_, std::vector<Rational>(n_ + m_ + 1));
    sign_.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.a[i].size() != n_) throw precondition_violation("LP column count mismatch");
      sign_[i] = lp.b[i].sign() < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = sign_[i] < 0 ? -lp.a[i][j] : lp.a[i][j];
      rows_[i][n_ + i] = Rational(1);
      rows_[i][n_ + m_] = sign_[i] < 0 ? -lp.b[i] : lp.b[i];
      basis_.push_back(n_ + i);
    }
  }

  /// Runs Bland-rule simplex maximizing `cost` over the current basis;
  /// columns >= `allowed` never enter. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed && enter == allowed; ++j) {
        if (is_basic(j)) continue;
        Rational r = cost[j];
        for (std::size_t i = 0; i < m_; ++i)
          if (!rows_[i][j].is_zero() && !cost[basis_[i]].is_zero()) r -= cost[basis_[i]] * rows_[i][j];
        if (r.sign() > 0) enter = j;
      }
      if (enter == allowed) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        Rational ratio = rows_[i][n_ + m_] / rows_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational p = rows_[row][col];
    for (auto& v : rows_[row])
      if (!v.is_zero()) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col].is_zero()) continue;
      Rational f = rows_[i][col];
      for (std::size_t j = 0; j <= n_ + m_; ++j)
        if (!rows_[row][j].is_zero()) rows_[i][j] -= f * rows_[row][j];
    }
    basis_[row] = col;
  }

  /// After phase one: pivots artificial variables out of the basis where
  /// possible. Rows where that is impossible are redundant and stay inert.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!is_basic(j) && !rows_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
    }
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational v;
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * rows_[i][n_ + m_];
    return v;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][n_ + m_];
    return x;
  }

  /// y = c_Bᵀ B⁻¹, read from the artificial columns (which started as the identity).
  std::vector<Rational> dual(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_);
    for (std::size_t k = 0; k < m_; ++k) {
      Rational v;
      for (std::size_t i = 0; i < m_; ++i)
        if (!cost[basis_[i]].is_zero()) v += cost[basis_[i]] * rows_[i][n_ + k];
      y[k] = sign_[k] < 0 ? -v : v;
    }
    return y;
  }

  std::size_t rows() const { return m_; }
  std::size_t columns() const { return n_; }

private:
  std::size_t m_, n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

} // namespace detail

/// Exact two-phase simplex with Bland's anti-cycling rule.
inline LpSolution solve_lp(const LinearProgram& lp) {
  detail::Tableau t(lp);
  const std::size_t m = t.rows(), n = t.columns();
  std::vector<Rational> phase1(n + m);
  for (std::size_t k = 0; k < m; ++k) phase1[n + k] = Rational(-1);
  t.optimize(phase1, n + m);
  LpSolution sol;
  if (t.objective(phase1).sign() < 0) {
    sol.status = LpStatus::infeasible;
    return sol;
  }
  t.drive_out_artificials();
  std::vector<Rational> phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.c[j];
  if (!t.optimize(phase2, n)) {
    sol.status = LpStatus::unbounded;
    return sol;
  }
  sol.status = LpStatus::optimal;
  sol.value = t.objective(phase2);
  sol.x = t.primal();
  sol.dual = t.dual(phase2);
  return sol;
}

} // namespace symlab

#endif
