#include "nctx/lp.hpp"

#include <algorithm>

namespace nctx {

void RationalLP::check_dimensions() const {
  auto expect = [&](std::size_t got, const char* what) {
    if (got != num_vars) throw ValidationError("DimensionMismatch", what);
  };
  if (!objective.empty()) expect(objective.size(), "objective length");
  for (const auto& row : eq_lhs) expect(row.size(), "equality row length");
  for (const auto& row : le_lhs) expect(row.size(), "inequality row length");
  if (eq_lhs.size() != eq_rhs.size()) throw ValidationError("DimensionMismatch", "equality rhs");
  if (le_lhs.size() != le_rhs.size()) throw ValidationError("DimensionMismatch", "inequality rhs");
  if (!lower.empty() && lower.size() != num_vars)
    throw ValidationError("DimensionMismatch", "lower bounds");
  if (!upper.empty() && upper.size() != num_vars)
    throw ValidationError("DimensionMismatch", "upper bounds");
}

namespace {

// Dense rational tableau simplex, Bland's rule throughout.
class Simplex {
 public:
  // A y = b, y >= 0; b made nonnegative by the caller via row sign flips.
  Simplex(RMatrix a, RVector b) : a_(std::move(a)), b_(std::move(b)) {
    m_ = a_.size();
    n_ = m_ ? a_[0].size() : 0;
  }

  // Returns false when infeasible.
  bool phase1() {
    // Append artificial columns and start from the artificial basis.
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) a_[i].push_back(i == k ? 1 : 0);
      basis_[i] = n_ + i;
    }
    RVector cost(n_ + m_, 0);
    for (std::size_t j = n_; j < n_ + m_; ++j) cost[j] = 1;
    run(cost);
    Rational art = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= n_) art += b_[i];
    if (art != 0) return false;

    // Pivot surviving artificials out; drop rows that are redundant.
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      for (; j < n_; ++j)
        if (a_[i][j] != 0) break;
      if (j < n_) {
        pivot(i, j);
        ++i;
      } else {
        a_.erase(a_.begin() + i);
        b_.erase(b_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
      }
    }
    for (auto& row : a_) row.resize(n_);
    return true;
  }

  // Minimizes cost over the current feasible basis. Returns false if unbounded.
  bool phase2(const RVector& cost) { return run(cost); }

  RVector solution() const {
    RVector y(n_, 0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) y[basis_[i]] = b_[i];
    return y;
  }

 private:
  bool run(const RVector& cost) {
    const std::size_t cols = a_.empty() ? cost.size() : a_[0].size();
    for (;;) {
      // Reduced costs: r_j = c_j - c_B B^-1 A_j (tableau already in B^-1 A form).
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        Rational r = cost[j];
        for (std::size_t i = 0; i < m_; ++i)
          if (cost[basis_[i]] != 0) r -= cost[basis_[i]] * a_[i][j];
        if (r < 0) {
          enter = j;
          break;  // Bland: smallest improving index
        }
      }
      if (enter == cols) return true;

      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m_) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational p = a_[row][col];
    for (auto& v : a_[row]) v /= p;
    b_[row] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || a_[i][col] == 0) continue;
      Rational f = a_[i][col];
      for (std::size_t j = 0; j < a_[i].size(); ++j) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  RMatrix a_;
  RVector b_;
  std::vector<std::size_t> basis_;
  std::size_t m_ = 0, n_ = 0;
};

}  // namespace

LPResult lp_solve(const RationalLP& p, LPSense sense) {
  p.check_dimensions();
  const std::size_t n = p.num_vars;

  // Substitution to nonnegative variables: x_j = shift_j + sign_j * y_j, or a
  // split pair y+ - y- when free on both sides.
  struct VarMap {
    Rational shift;
    int sign = 1;       // 0 marks a split variable
    std::size_t col;    // first column (split uses col, col+1)
  };
  std::vector<VarMap> vmap(n);
  std::size_t cols = 0;
  std::vector<std::pair<std::size_t, Rational>> extra_upper;  // column <= bound
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<Rational> lo = p.lower.empty() ? std::nullopt : p.lower[j];
    std::optional<Rational> hi = p.upper.empty() ? std::nullopt : p.upper[j];
    if (lo && hi && *hi < *lo) return {LPStatus::Infeasible, 0, {}};
    if (lo) {
      vmap[j] = {*lo, 1, cols};
      if (hi) extra_upper.emplace_back(cols, *hi - *lo);
      ++cols;
    } else if (hi) {
      vmap[j] = {*hi, -1, cols};
      ++cols;
    } else {
      vmap[j] = {0, 0, cols};
      cols += 2;
    }
  }

  const std::size_t n_slack = p.le_lhs.size() + extra_upper.size();
  const std::size_t total = cols + n_slack;
  RMatrix a;
  RVector b;
  auto expand_row = [&](const RVector& row, const Rational& rhs) {
    RVector out(total, 0);
    Rational r = rhs;
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == 0) continue;
      r -= row[j] * vmap[j].shift;
      if (vmap[j].sign == 0) {
        out[vmap[j].col] += row[j];
        out[vmap[j].col + 1] -= row[j];
      } else {
        out[vmap[j].col] += row[j] * vmap[j].sign;
      }
    }
    return std::make_pair(std::move(out), std::move(r));
  };

  for (std::size_t i = 0; i < p.eq_lhs.size(); ++i) {
    auto [row, rhs] = expand_row(p.eq_lhs[i], p.eq_rhs[i]);
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }
  std::size_t slack = cols;
  for (std::size_t i = 0; i < p.le_lhs.size(); ++i) {
    auto [row, rhs] = expand_row(p.le_lhs[i], p.le_rhs[i]);
    row[slack++] = 1;
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }
  for (const auto& [col, bound] : extra_upper) {
    RVector row(total, 0);
    row[col] = 1;
    row[slack++] = 1;
    a.push_back(std::move(row));
    b.push_back(bound);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  }

  RVector cost(total, 0);
  Rational const_term = 0;
  if (!p.objective.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = p.objective[j];
      if (sense == LPSense::Max) c = -c;  // simplex minimizes
      if (c == 0) continue;
      const_term += p.objective[j] * vmap[j].shift;
      if (vmap[j].sign == 0) {
        cost[vmap[j].col] += c;
        cost[vmap[j].col + 1] -= c;
      } else {
        cost[vmap[j].col] += c * vmap[j].sign;
      }
    }
  }

  Simplex sx(std::move(a), std::move(b));
  if (!sx.phase1()) return {LPStatus::Infeasible, 0, {}};
  if (!sx.phase2(cost)) return {LPStatus::Unbounded, 0, {}};

  RVector y = sx.solution();
  LPResult res;
  res.status = LPStatus::Optimal;
  res.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (vmap[j].sign == 0)
      res.point[j] = y[vmap[j].col] - y[vmap[j].col + 1];
    else
      res.point[j] = vmap[j].shift + Rational(vmap[j].sign) * y[vmap[j].col];
  }
  res.value = 0;
  if (!p.objective.empty())
    for (std::size_t j = 0; j < n; ++j) res.value += p.objective[j] * res.point[j];
  return res;
}

LPResult lp_feasible_point(const RationalLP& constraints) {
  RationalLP q = constraints;
  q.objective.clear();
  return lp_solve(q, LPSense::Min);
}

}  // namespace nctx
