#include "ngon/lp.hpp"

#include <stdexcept>

namespace ngon {

namespace {

// dense tableau over the rationals; rows are equations, the last column is
// the right hand side, obj holds the objective with basic columns priced
// out (current value = -obj.back())
struct Simplex {
  int ncols;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> obj;
  std::vector<int> basis;
  std::vector<bool> allowed;

  void pivot(int r, int col) {
    Rat piv = rows[r][col];
    for (Rat& x : rows[r]) x /= piv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (obj[col] != 0) {
      Rat f = obj[col];
      for (int j = 0; j <= ncols; ++j) obj[j] -= f * rows[r][j];
    }
    basis[r] = col;
  }

  void price_out() {
    for (size_t i = 0; i < rows.size(); ++i) {
      if (obj[basis[i]] == 0) continue;
      Rat f = obj[basis[i]];
      for (int j = 0; j <= ncols; ++j) obj[j] -= f * rows[i][j];
    }
  }

  // Bland's rule; returns false when the objective is unbounded
  bool run() {
    for (;;) {
      int col = -1;
      for (int j = 0; j < ncols && col < 0; ++j)
        if (allowed[j] && obj[j] > 0) col = j;
      if (col < 0) return true;
      int r = -1;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col] <= 0) continue;
        if (r < 0) {
          r = static_cast<int>(i);
          continue;
        }
        Rat cur = rows[r][ncols] / rows[r][col];
        Rat cand = rows[i][ncols] / rows[i][col];
        if (cand < cur || (cand == cur && basis[i] < basis[r]))
          r = static_cast<int>(i);
      }
      if (r < 0) return false;
      pivot(r, col);
    }
  }
};

}  // namespace

LPResult lp_maximize(const std::vector<std::vector<Rat>>& a,
                     const std::vector<Rat>& b, const std::vector<Rat>& c) {
  int m = static_cast<int>(a.size());
  int d = static_cast<int>(c.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("constraint dimension mismatch");
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("constraint count mismatch");

  // x = p - q with p,q >= 0; <a_i,x> - s_i = b_i; artificials seed the basis
  int base_q = d, base_s = 2 * d, base_art = 2 * d + m;
  int ncols = 2 * d + 2 * m;

  Simplex sx;
  sx.ncols = ncols;
  sx.rows.assign(m, std::vector<Rat>(ncols + 1, Rat(0)));
  sx.basis.resize(m);
  sx.allowed.assign(ncols, true);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) {
      sx.rows[i][j] = a[i][j];
      sx.rows[i][base_q + j] = -a[i][j];
    }
    sx.rows[i][base_s + i] = -1;
    sx.rows[i][ncols] = b[i];
    if (sx.rows[i][ncols] < 0)
      for (int j = 0; j <= ncols; ++j) sx.rows[i][j] = -sx.rows[i][j];
    sx.rows[i][base_art + i] = 1;
    sx.basis[i] = base_art + i;
  }

  sx.obj.assign(ncols + 1, Rat(0));
  for (int i = 0; i < m; ++i) sx.obj[base_art + i] = -1;
  sx.price_out();
  sx.run();  // bounded above by zero
  if (sx.obj[ncols] != 0) return {LPStatus::infeasible, Rat(0), {}};

  // drive leftover artificials out of the basis, dropping redundant rows
  for (int i = static_cast<int>(sx.rows.size()) - 1; i >= 0; --i) {
    if (sx.basis[i] < base_art) continue;
    int col = -1;
    for (int j = 0; j < base_art && col < 0; ++j)
      if (sx.rows[i][j] != 0) col = j;
    if (col >= 0) {
      sx.pivot(i, col);
    } else {
      sx.rows.erase(sx.rows.begin() + i);
      sx.basis.erase(sx.basis.begin() + i);
    }
  }
  for (int j = base_art; j < ncols; ++j) sx.allowed[j] = false;

  sx.obj.assign(ncols + 1, Rat(0));
  for (int j = 0; j < d; ++j) {
    sx.obj[j] = c[j];
    sx.obj[base_q + j] = -c[j];
  }
  sx.price_out();
  if (!sx.run()) return {LPStatus::unbounded, Rat(0), {}};

  std::vector<Rat> x(d, Rat(0));
  for (size_t i = 0; i < sx.rows.size(); ++i) {
    if (sx.basis[i] < d)
      x[sx.basis[i]] += sx.rows[i][ncols];
    else if (sx.basis[i] < 2 * d)
      x[sx.basis[i] - d] -= sx.rows[i][ncols];
  }
  return {LPStatus::optimal, -sx.obj[ncols], x};
}

}  // namespace ngon
