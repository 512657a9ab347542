#include "nctx/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

namespace nctx {

namespace {

constexpr std::size_t kDimGuard = 32;

// Scale a rational vector so entries are coprime integers. The sign is kept:
// rays are directed, so negating one would leave the cone.
void canonicalize_ray(RVector& r) {
  Integer lcm = 1;
  for (const auto& x : r)
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
  Integer gcd = 0;
  for (auto& x : r) {
    x *= lcm;
    gcd = boost::multiprecision::gcd(gcd, boost::multiprecision::numerator(x));
  }
  if (gcd == 0) return;
  for (auto& x : r) x /= gcd;
}

struct Ray {
  RVector z;                     // homogeneous coordinates (t, y1..yk)
  boost::dynamic_bitset<> zero;  // halfspaces satisfied with equality
};

// Gaussian elimination: solve eq_lhs x = eq_rhs, returning a particular
// solution and a nullspace basis. Returns false when inconsistent.
bool solve_equalities(const RMatrix& a, const RVector& b, std::size_t n,
                      RVector& x0, RMatrix& nullspace) {
  RMatrix m = a;
  RVector r = b;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t pr = row;
    while (pr < m.size() && m[pr][col] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[pr], m[row]);
    std::swap(r[pr], r[row]);
    Rational p = m[row][col];
    for (auto& v : m[row]) v /= p;
    r[row] /= p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[row][j];
      r[i] -= f * r[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m.size(); ++i)
    if (r[i] != 0) return false;

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  x0.assign(n, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x0[pivot_col[i]] = r[i];
  nullspace.clear();
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RVector dir(n, 0);
    dir[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      dir[pivot_col[i]] = -m[i][free];
    nullspace.push_back(std::move(dir));
  }
  return true;
}

Rational dot(const RVector& a, const RVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

std::size_t matrix_rank(RMatrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pr = rank;
    while (pr < m.size() && m[pr][col] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[pr], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Invert a square rational matrix; caller guarantees nonsingularity.
RMatrix invert(RMatrix m) {
  const std::size_t d = m.size();
  RMatrix inv(d, RVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pr = col;
    while (m[pr][col] == 0) ++pr;
    std::swap(m[pr], m[col]);
    std::swap(inv[pr], inv[col]);
    Rational p = m[col][col];
    for (std::size_t j = 0; j < d; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < d; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

std::vector<RVector> enumerate_vertices(const HRepPolytope& p) {
  if (p.num_vars > kDimGuard)
    throw ValidationError("TooLarge",
                          "polytope dimension exceeds guard of 32 variables");
  const std::size_t n = p.num_vars;

  RVector x0;
  RMatrix ns;
  if (!solve_equalities(p.eq_lhs, p.eq_rhs, n, x0, ns)) return {};
  const std::size_t k = ns.size();

  // Reduced inequalities a.y <= c over the nullspace coordinates y.
  RMatrix red;
  RVector red_rhs;
  for (std::size_t i = 0; i < p.le_lhs.size(); ++i) {
    RVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(p.le_lhs[i], ns[j]);
    Rational rhs = p.le_rhs[i] - dot(p.le_lhs[i], x0);
    bool zero = std::all_of(row.begin(), row.end(),
                            [](const Rational& v) { return v == 0; });
    if (zero) {
      if (rhs < 0) return {};  // infeasible
      continue;
    }
    red.push_back(std::move(row));
    red_rhs.push_back(std::move(rhs));
  }
  if (k == 0) return {x0};

  // Homogenize: halfspace h.z >= 0 over z = (t, y), h_i = (rhs_i, -row_i),
  // plus t >= 0.
  const std::size_t dim = k + 1;
  RMatrix half;
  {
    RVector t_row(dim, 0);
    t_row[0] = 1;
    half.push_back(std::move(t_row));
  }
  for (std::size_t i = 0; i < red.size(); ++i) {
    RVector h(dim);
    h[0] = red_rhs[i];
    for (std::size_t j = 0; j < k; ++j) h[j + 1] = -red[i][j];
    half.push_back(std::move(h));
  }
  const std::size_t nh = half.size();

  // Pointedness: the halfspace normals must span the homogenized space,
  // otherwise the cone has a lineality direction (unbounded polytope).
  if (matrix_rank(half) < dim)
    throw SolverError("Unbounded", "feasible region has a recession direction");

  // Initial simplicial cone from `dim` linearly independent halfspaces; its
  // extreme rays are the columns of the inverse of that basis block.
  std::vector<std::size_t> basis;
  {
    RMatrix accum;
    for (std::size_t i = 0; i < nh && basis.size() < dim; ++i) {
      accum.push_back(half[i]);
      if (matrix_rank(accum) == accum.size())
        basis.push_back(i);
      else
        accum.pop_back();
    }
  }
  RMatrix b_mat;
  for (auto i : basis) b_mat.push_back(half[i]);
  RMatrix b_inv = invert(std::move(b_mat));

  std::vector<Ray> rays;
  for (std::size_t c = 0; c < dim; ++c) {
    Ray r;
    r.z.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) r.z[i] = b_inv[i][c];
    canonicalize_ray(r.z);
    r.zero.resize(nh);
    for (std::size_t bi = 0; bi < dim; ++bi)
      if (bi != c) r.zero.set(basis[bi]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(nh, false);
  for (auto i : basis) processed[i] = true;

  for (std::size_t h = 0; h < nh; ++h) {
    if (processed[h]) continue;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(half[h], rays[i].z);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
      else
        rays[i].zero.set(h);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);

    for (auto ip : pos) {
      for (auto in : neg) {
        // Combinatorial adjacency: no third ray's zero set contains the
        // common zero set of the candidate pair.
        boost::dynamic_bitset<> common = rays[ip].zero & rays[in].zero;
        bool adjacent = true;
        for (std::size_t j = 0; j < rays.size(); ++j) {
          if (j == ip || j == in) continue;
          if ((common & ~rays[j].zero).none()) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Ray fresh;
        fresh.z.resize(dim);
        for (std::size_t c = 0; c < dim; ++c)
          fresh.z[c] = val[ip] * rays[in].z[c] - val[in] * rays[ip].z[c];
        canonicalize_ray(fresh.z);
        // Exact zero set over all halfspaces handled so far; the common set
        // of the parents can miss coincidental incidences under degeneracy.
        fresh.zero.resize(nh);
        for (std::size_t j = 0; j < nh; ++j)
          if (processed[j] && dot(half[j], fresh.z) == 0) fresh.zero.set(j);
        fresh.zero.set(h);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
    processed[h] = true;
  }

  std::vector<RVector> verts;
  for (const auto& r : rays) {
    if (r.z[0] == 0)
      throw SolverError("Unbounded", "extreme ray with zero homogenizer");
    RVector y(k);
    for (std::size_t j = 0; j < k; ++j) y[j] = r.z[j + 1] / r.z[0];
    RVector x = x0;
    for (std::size_t j = 0; j < k; ++j)
      if (y[j] != 0)
        for (std::size_t i = 0; i < n; ++i) x[i] += y[j] * ns[j][i];
    verts.push_back(std::move(x));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

}  // namespace nctx
