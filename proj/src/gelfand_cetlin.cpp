#include "ngon/gelfand_cetlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ngon {

namespace {

// arrow head >= tail; Q marks the fixed top entry, ONE the fixed zero
constexpr int kQ = -2;
constexpr int kOne = -1;

struct Arrow {
  int head;
  int tail;
};

std::vector<Arrow> arrows(const GCVarTable& gv) {
  const int n = gv.n;
  std::vector<Arrow> out;
  out.push_back({gv.idx1(2), gv.idx1(1)});
  out.push_back({gv.idx1(1), gv.idx2(2)});
  out.push_back({gv.idx2(2), kOne});
  for (int k = 2; k <= n - 3; ++k) {
    out.push_back({gv.idx1(k + 1), gv.idx1(k)});
    out.push_back({gv.idx1(k), gv.idx2(k + 1)});
    out.push_back({gv.idx2(k + 1), gv.idx2(k)});
  }
  out.push_back({kQ, gv.idx1(n - 2)});
  out.push_back({gv.idx1(n - 2), gv.idx2(n - 1)});
  out.push_back({gv.idx2(n - 1), gv.idx2(n - 2)});
  return out;
}

Rat det_of(std::vector<std::vector<Rat>> a) {
  const size_t m = a.size();
  Rat det = 1;
  for (size_t c = 0; c < m; ++c) {
    size_t p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < m; ++r) {
      if (a[r][c] == 0) continue;
      const Rat f = a[r][c] / a[c][c];
      for (size_t j = c; j < m; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a,
                              std::vector<Rat> b) {
  const size_t m = a.size();
  for (size_t c = 0; c < m; ++c) {
    size_t p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) throw std::logic_error("singular exponent system");
    if (p != c) {
      std::swap(a[p], a[c]);
      std::swap(b[p], b[c]);
    }
    for (size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rat f = a[r][c] / a[c][c];
      for (size_t j = c; j < m; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rat> x(m);
  for (size_t c = 0; c < m; ++c) x[c] = b[c] / a[c][c];
  return x;
}

}  // namespace

int GCVarTable::idx1(int k) const {
  if (k < 1 || k > n - 2) throw std::invalid_argument("row out of range");
  return k == 1 ? 0 : 2 * k - 3;
}

int GCVarTable::idx2(int k) const {
  if (k < 2 || k > n - 1) throw std::invalid_argument("row out of range");
  return k == n - 1 ? 2 * n - 5 : 2 * k - 2;
}

std::string GCVarTable::name(int var) const {
  if (var == q_var()) return "Q";
  for (int k = 1; k <= n - 2; ++k)
    if (idx1(k) == var) return "y(" + std::to_string(k) + ",1)";
  for (int k = 2; k <= n - 1; ++k)
    if (idx2(k) == var) return "y(" + std::to_string(k) + ",2)";
  throw std::invalid_argument("variable out of range");
}

GCVarTable gc_vars(int n) {
  if (n < 4) throw std::invalid_argument("need n >= 4");
  return {n};
}

PLMap gc_map(const Triangulation& t, const Rat& perimeter) {
  const int n = t.n();
  if (!(t == caterpillar(n)))
    throw std::invalid_argument("pattern coordinates need the caterpillar");
  const GCVarTable gv = gc_vars(n);
  const CoordinateFrame f = frame_of(t, perimeter);
  std::vector<AffineForm> comps(gv.coords());
  for (AffineForm& a : comps) {
    a.v.assign(f.dim(), Rat(0));
    a.c = 0;
  }
  comps[gv.idx1(1)].v[f.e_index(1)] = 1;
  for (int k = 2; k <= n - 2; ++k) {
    AffineForm& a = comps[gv.idx1(k)];
    for (int i = 1; i <= k; ++i) a.v[f.e_index(i)] = 1;
    a.v[f.d_index({1, k})] = -1;
    comps[gv.idx2(k)].v[f.d_index({1, k})] = 1;
  }
  AffineForm& top = comps[gv.idx2(n - 1)];
  for (int i = 1; i < n; ++i) top.v[f.e_index(i)] = 1;
  top.c = -perimeter;

  PLMap m;
  m.in_dim = f.dim();
  for (AffineForm& a : comps) m.comps.push_back(TropExpr::affine(std::move(a)));
  return m;
}

Rat affine_map_determinant(const PLMap& m) {
  if (m.out_dim() != m.in_dim)
    throw std::invalid_argument("determinant needs a square map");
  std::vector<std::vector<Rat>> a;
  for (const TropExpr& comp : m.comps) {
    if (comp.kind() != TropExpr::Kind::affine)
      throw std::invalid_argument("determinant needs an affine map");
    a.push_back(comp.form().v);
  }
  return det_of(std::move(a));
}

Polytope gc_polytope(int n, const Rat& perimeter) {
  const GCVarTable gv = gc_vars(n);
  std::vector<Halfspace> rows;
  for (const Arrow& ar : arrows(gv)) {
    Halfspace h;
    h.v.assign(gv.coords(), Rat(0));
    h.tau = 0;
    if (ar.head == kQ) h.tau -= perimeter;
    else h.v[ar.head] += 1;
    if (ar.tail != kOne) h.v[ar.tail] -= 1;
    rows.push_back(std::move(h));
  }
  return Polytope(gv.coords(), std::move(rows));
}

LaurentPoly potential_gc(int n) {
  const GCVarTable gv = gc_vars(n);
  LaurentPoly w;
  for (const Arrow& ar : arrows(gv)) {
    std::vector<int> e(gv.vars(), 0);
    if (ar.head == kQ) e[gv.q_var()] += 2;
    else e[ar.head] += 2;
    if (ar.tail != kOne) e[ar.tail] -= 2;
    w.add_term(e, 1);
  }
  return w;
}

LaurentPoly ehx_form(int n) {
  const Triangulation t = caterpillar(n);
  const VarTable vt = var_table(n);
  const GCVarTable gv = gc_vars(n);
  const int m = 2 * n - 3;

  std::vector<int> slot;
  for (int i = 1; i < n; ++i) slot.push_back(vt.e_var(i));
  slot.push_back(vt.q_var());
  for (int k = 2; k <= n - 2; ++k) slot.push_back(vt.d_var({1, k}));
  std::vector<int> row_of(vt.vars(), -1);
  for (int r = 0; r < m; ++r) row_of[slot[r]] = r;

  // columns are the source exponents of the pattern variable monomials
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m, Rat(0)));
  a[row_of[vt.e_var(1)]][gv.idx1(1)] = 1;
  for (int k = 2; k <= n - 2; ++k) {
    for (int i = 1; i <= k; ++i) a[row_of[vt.e_var(i)]][gv.idx1(k)] = 1;
    a[row_of[vt.d_var({1, k})]][gv.idx1(k)] = -1;
    a[row_of[vt.d_var({1, k})]][gv.idx2(k)] = 1;
  }
  for (int i = 1; i < n; ++i) a[row_of[vt.e_var(i)]][gv.idx2(n - 1)] = 1;
  a[row_of[vt.q_var()]][gv.idx2(n - 1)] = -1;
  a[row_of[vt.q_var()]][gv.q_var()] = 1;

  const Rat d = det_of(a);
  if (d != 1 && d != -1)
    throw std::logic_error("pattern change of variables is not unimodular");

  LaurentPoly out;
  for (const auto& [e, c] : potential(t).terms) {
    std::vector<Rat> tv(m, Rat(0));
    for (int g = 0; g < vt.vars(); ++g) {
      if (e[g] == 0) continue;
      if (row_of[g] < 0)
        throw std::logic_error("potential touches a foreign diagonal");
      if (e[g] % 2 != 0) throw std::logic_error("half power in the potential");
      tv[row_of[g]] = Rat(e[g] / 2);
    }
    const std::vector<Rat> s = solve_linear(a, tv);
    std::vector<int> ge(gv.vars(), 0);
    for (int v = 0; v < m; ++v) {
      if (!is_integer(s[v]))
        throw std::logic_error("fractional pattern exponent");
      ge[v] = 2 * static_cast<int>(to_ll(num(s[v])));
    }
    out.add_term(ge, c);
  }
  return out;
}

std::string to_string(const GCVarTable& vt, const LaurentPoly& p) {
  return poly_string(p, [&](int v) { return vt.name(v); });
}

}  // namespace ngon
