#include "ngon/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ngon/lp.hpp"

namespace ngon {

Rat AffineForm::eval(const std::vector<Rat>& u) const {
  Rat out = c;
  for (size_t i = 0; i < v.size(); ++i) out += v[i] * u[i];
  return out;
}

Polytope::Polytope(int dim, std::vector<Halfspace> ineqs)
    : dim_(dim), ineqs_(std::move(ineqs)) {
  if (dim_ < 1) throw std::invalid_argument("dimension must be positive");
  for (const auto& h : ineqs_)
    if (static_cast<int>(h.v.size()) != dim_)
      throw std::invalid_argument("inequality dimension mismatch");
}

bool Polytope::contains(const std::vector<Rat>& p) const {
  if (static_cast<int>(p.size()) != dim_)
    throw std::invalid_argument("point dimension mismatch");
  for (const auto& h : ineqs_) {
    Rat s = 0;
    for (int i = 0; i < dim_; ++i) s += h.v[i] * p[i];
    if (s < h.tau) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<Rat>> lhs(const std::vector<Halfspace>& hs) {
  std::vector<std::vector<Rat>> a;
  for (const auto& h : hs) a.push_back(h.v);
  return a;
}

std::vector<Rat> rhs(const std::vector<Halfspace>& hs) {
  std::vector<Rat> b;
  for (const auto& h : hs) b.push_back(h.tau);
  return b;
}

struct IntIneq {
  std::vector<long long> w;
  long long t;
};

// clear denominators so the inequality reads <w,x> >= t over the integers
IntIneq clear_ineq(const Halfspace& h) {
  Int L = 1;
  for (const Rat& x : h.v) L = boost::multiprecision::lcm(L, den(x));
  L = boost::multiprecision::lcm(L, den(h.tau));
  IntIneq out;
  for (const Rat& x : h.v) out.w.push_back(to_ll(num(x) * (L / den(x))));
  out.t = to_ll(num(h.tau) * (L / den(h.tau)));
  return out;
}

// per coordinate integer bounds; nullopt-like flag when infeasible
struct Box {
  bool feasible = true;
  std::vector<long long> lo, hi;
};

Box integer_box(const Polytope& p) {
  Box box;
  auto a = lhs(p.ineqs());
  auto b = rhs(p.ineqs());
  for (int i = 0; i < p.dim(); ++i) {
    std::vector<Rat> c(p.dim(), Rat(0));
    c[i] = 1;
    LPResult up = lp_maximize(a, b, c);
    if (up.status == LPStatus::infeasible) {
      box.feasible = false;
      return box;
    }
    if (up.status == LPStatus::unbounded)
      throw std::runtime_error("polytope is unbounded");
    c[i] = -1;
    LPResult down = lp_maximize(a, b, c);
    if (down.status == LPStatus::unbounded)
      throw std::runtime_error("polytope is unbounded");
    box.lo.push_back(to_ll(rat_ceil(-down.value)));
    box.hi.push_back(to_ll(rat_floor(up.value)));
    if (box.lo.back() > box.hi.back()) {
      box.feasible = false;
      return box;
    }
  }
  return box;
}

// depth first scan over integer points; maxTail[c][i] bounds what the
// coordinates from i on can still contribute to constraint c
struct LatticeWalk {
  int N = 0;
  std::vector<IntIneq> cons;
  std::vector<long long> lo, hi;
  std::vector<std::vector<long long>> maxTail;
  std::vector<long long> partial;
  std::vector<long long> x;
  long long count = 0;
  std::vector<std::vector<long long>>* sink = nullptr;

  void prepare() {
    size_t m = cons.size();
    maxTail.assign(m, std::vector<long long>(N + 1, 0));
    for (size_t c = 0; c < m; ++c)
      for (int i = N - 1; i >= 0; --i)
        maxTail[c][i] =
            maxTail[c][i + 1] +
            std::max(cons[c].w[i] * lo[i], cons[c].w[i] * hi[i]);
    partial.assign(m, 0);
    x.assign(N, 0);
  }

  void level_bounds(int i, long long& L, long long& U) const {
    L = lo[i];
    U = hi[i];
    for (size_t c = 0; c < cons.size(); ++c) {
      long long w = cons[c].w[i];
      long long rem = cons[c].t - partial[c] - maxTail[c][i + 1];
      if (w > 0) {
        L = std::max(L, ceildiv(rem, w));
      } else if (w < 0) {
        U = std::min(U, -ceildiv(rem, -w));
      } else if (rem > 0) {
        L = U + 1;
        return;
      }
    }
  }

  void rec(int i) {
    long long L, U;
    level_bounds(i, L, U);
    if (L > U) return;
    if (i == N - 1 && !sink) {
      count += U - L + 1;
      return;
    }
    for (long long v = L; v <= U; ++v) {
      x[i] = v;
      if (i == N - 1) {
        ++count;
        sink->push_back(x);
        continue;
      }
      for (size_t c = 0; c < cons.size(); ++c)
        partial[c] += cons[c].w[i] * v;
      rec(i + 1);
      for (size_t c = 0; c < cons.size(); ++c)
        partial[c] -= cons[c].w[i] * v;
    }
  }
};

long long walk_lattice(const Polytope& p, bool interior,
                       std::vector<std::vector<long long>>* sink) {
  Box box = integer_box(p);
  if (!box.feasible) return 0;
  LatticeWalk lw;
  lw.N = p.dim();
  for (const auto& h : p.ineqs()) {
    IntIneq c = clear_ineq(h);
    if (interior) c.t += 1;
    lw.cons.push_back(c);
  }
  lw.lo = box.lo;
  lw.hi = box.hi;
  lw.sink = sink;
  lw.prepare();
  lw.rec(0);
  return lw.count;
}

// solve the square system rows * x = rhs; false when singular
bool solve_square(std::vector<std::vector<Rat>> m, std::vector<Rat> b,
                  std::vector<Rat>& x) {
  int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n && piv < 0; ++r)
      if (m[r][col] != 0) piv = r;
    if (piv < 0) return false;
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, Rat(0));
  for (int i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return true;
}

}  // namespace

bool Polytope::empty() const {
  LPResult r = lp_maximize(lhs(ineqs_), rhs(ineqs_),
                           std::vector<Rat>(dim_, Rat(0)));
  return r.status == LPStatus::infeasible;
}

Polytope Polytope::dilate(const Rat& k) const {
  if (k <= 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<Halfspace> out = ineqs_;
  for (auto& h : out) h.tau *= k;
  return Polytope(dim_, out);
}

Polytope Polytope::remove_redundant() const {
  std::vector<Halfspace> kept = ineqs_;
  for (size_t i = 0; i < kept.size();) {
    std::vector<Halfspace> others;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    std::vector<Rat> c;
    for (const Rat& x : kept[i].v) c.push_back(-x);
    LPResult r = lp_maximize(lhs(others), rhs(others), c);
    bool essential = r.status != LPStatus::optimal || r.value > -kept[i].tau;
    if (essential)
      ++i;
    else
      kept.erase(kept.begin() + i);
  }
  return Polytope(dim_, kept);
}

std::vector<std::vector<Rat>> Polytope::vertices() const {
  Box box = integer_box(*this);  // also certifies boundedness
  if (!box.feasible && empty()) return {};
  int M = static_cast<int>(ineqs_.size());
  int N = dim_;
  if (M < N) return {};
  long long subsets = 1;
  for (int i = 0; i < N; ++i) {
    subsets = subsets * (M - i) / (i + 1);
    if (subsets > 1000000)
      throw std::runtime_error("too many facet subsets");
  }
  std::set<std::vector<Rat>> found;
  std::vector<int> idx(N);
  for (int i = 0; i < N; ++i) idx[i] = i;
  for (;;) {
    std::vector<std::vector<Rat>> m;
    std::vector<Rat> b;
    for (int i : idx) {
      m.push_back(ineqs_[i].v);
      b.push_back(ineqs_[i].tau);
    }
    std::vector<Rat> x;
    if (solve_square(m, b, x) && contains(x)) found.insert(x);
    int p = N - 1;
    while (p >= 0 && idx[p] == M - N + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < N; ++q) idx[q] = idx[q - 1] + 1;
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<long long>> Polytope::lattice_points() const {
  std::vector<std::vector<long long>> pts;
  walk_lattice(*this, false, &pts);
  std::sort(pts.begin(), pts.end());
  return pts;
}

long long Polytope::lattice_count() const {
  return walk_lattice(*this, false, nullptr);
}

long long Polytope::interior_lattice_count() const {
  return walk_lattice(*this, true, nullptr);
}

Rat Polytope::ehrhart_volume() const {
  auto verts = vertices();
  if (verts.empty()) return 0;
  Int D = 1;
  for (const auto& v : verts)
    for (const Rat& x : v) D = boost::multiprecision::lcm(D, den(x));
  int N = dim_;
  // counts of the k*D dilations interpolate a degree N polynomial whose
  // leading coefficient is vol * D^N
  std::vector<Rat> E(N + 1);
  E[0] = 1;
  for (int k = 1; k <= N; ++k)
    E[k] = Rat(dilate(Rat(D) * k).lattice_count());
  Rat delta = 0;
  Int binom = 1;
  for (int j = 0; j <= N; ++j) {
    Rat sign = ((N - j) % 2 == 0) ? 1 : -1;
    delta += sign * Rat(binom) * E[j];
    binom = binom * (N - j) / (j + 1);
  }
  Int fact = 1;
  for (int i = 2; i <= N; ++i) fact *= i;
  Rat scale = Rat(fact);
  for (int i = 0; i < N; ++i) scale *= Rat(D);
  return delta / scale;
}

}  // namespace ngon
