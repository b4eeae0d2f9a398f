#include "ngon/frame.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngon {

int CoordinateFrame::e_index(int i) const {
  if (i < 1 || i > n - 1) throw std::invalid_argument("side out of range");
  return i - 1;
}

int CoordinateFrame::d_index(const Diagonal& d) const {
  auto it = std::lower_bound(diags.begin(), diags.end(), d);
  if (it == diags.end() || !(*it == d))
    throw std::invalid_argument("diagonal not in frame: " + to_string(d));
  return n - 1 + static_cast<int>(it - diags.begin());
}

CoordinateFrame frame_of(const Triangulation& t, const Rat& perimeter) {
  if (perimeter <= 0) throw std::invalid_argument("perimeter must be positive");
  return {t.n(), perimeter, t.diagonals()};
}

AffineForm length_form(const CoordinateFrame& f, const EdgeLabel& e) {
  AffineForm out;
  out.v.assign(f.dim(), Rat(0));
  out.c = 0;
  Rat half(1, 2);
  if (e.is_side()) {
    if (e.side == f.n) {
      for (int i = 1; i < f.n; ++i) out.v[f.e_index(i)] = -half;
      out.c = f.perimeter;
    } else {
      out.v[f.e_index(e.side)] = half;
    }
  } else {
    out.v[f.d_index(e.d)] = -1;
    for (int i = e.d.lo; i <= e.d.hi; ++i) out.v[f.e_index(i)] = half;
  }
  return out;
}

namespace {

// sa*A + sb*B + sc*C >= 0 as a half space
Halfspace triangle_ineq(int sa, const AffineForm& a, int sb,
                        const AffineForm& b, int sc, const AffineForm& c) {
  Halfspace h;
  h.v.assign(a.v.size(), Rat(0));
  for (size_t i = 0; i < a.v.size(); ++i)
    h.v[i] = sa * a.v[i] + sb * b.v[i] + sc * c.v[i];
  h.tau = -(sa * a.c + sb * b.c + sc * c.c);
  return h;
}

}  // namespace

Polytope moment_polytope(const Triangulation& t, const Rat& perimeter) {
  CoordinateFrame f = frame_of(t, perimeter);
  std::vector<Halfspace> ineqs;
  for (const Triangle& tri : t.triangles()) {
    AffineForm a = length_form(f, tri.edges[0]);
    AffineForm b = length_form(f, tri.edges[1]);
    AffineForm c = length_form(f, tri.edges[2]);
    ineqs.push_back(triangle_ineq(-1, a, 1, b, 1, c));
    ineqs.push_back(triangle_ineq(1, a, -1, b, 1, c));
    ineqs.push_back(triangle_ineq(1, a, 1, b, -1, c));
  }
  for (const Halfspace& h : ineqs)
    for (const Rat& x : h.v)
      if (den(x) != 1) throw std::logic_error("non integral facet normal");
  return Polytope(f.dim(), ineqs);
}

Polytope bending_polytope(const Triangulation& t, const std::vector<Rat>& r) {
  int n = t.n();
  if (static_cast<int>(r.size()) != n)
    throw std::invalid_argument("need one side length per side");
  Rat total = 0;
  for (const Rat& x : r) {
    if (x <= 0) throw std::invalid_argument("side lengths must be positive");
    total += x;
  }
  for (const Rat& x : r)
    if (!(x < total - x))
      throw std::invalid_argument("side lengths fail the polygon inequality");

  int dim = n - 3;
  // length of an edge: constant for sides, coordinate for diagonals
  auto form = [&](const EdgeLabel& e) {
    AffineForm out;
    out.v.assign(dim, Rat(0));
    if (e.is_side())
      out.c = r[e.side - 1];
    else
      out.v[t.diag_index(e.d)] = 1;
    return out;
  };
  std::vector<Halfspace> ineqs;
  for (const Triangle& tri : t.triangles()) {
    AffineForm a = form(tri.edges[0]);
    AffineForm b = form(tri.edges[1]);
    AffineForm c = form(tri.edges[2]);
    ineqs.push_back(triangle_ineq(-1, a, 1, b, 1, c));
    ineqs.push_back(triangle_ineq(1, a, -1, b, 1, c));
    ineqs.push_back(triangle_ineq(1, a, 1, b, -1, c));
  }
  return Polytope(dim, ineqs);
}

std::vector<std::vector<Rat>> predicted_vertices(const Triangulation& t,
                                                 const Rat& perimeter) {
  CoordinateFrame f = frame_of(t, perimeter);
  std::vector<std::vector<Rat>> out;
  for (int k = 1; k <= f.n; ++k)
    for (int l = k + 1; l <= f.n; ++l) {
      std::vector<Rat> p(f.dim(), Rat(0));
      if (k < f.n) p[f.e_index(k)] = perimeter;
      if (l < f.n) p[f.e_index(l)] = perimeter;
      for (const Diagonal& d : f.diags)
        if (d.contains(k) && d.contains(l)) p[f.d_index(d)] = perimeter;
      out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> reflexive_shift(const CoordinateFrame& f) {
  std::vector<Rat> s(f.dim(), Rat(0));
  for (int i = 1; i < f.n; ++i) s[f.e_index(i)] = 2;
  for (const Diagonal& d : f.diags) s[f.d_index(d)] = d.size() - 1;
  return s;
}

std::pair<bool, std::vector<Rat>> reflexivity_check(const Triangulation& t,
                                                    const Rat& perimeter) {
  Polytope p = moment_polytope(t, perimeter).remove_redundant();
  CoordinateFrame f = frame_of(t, perimeter);
  std::vector<Rat> s = reflexive_shift(f);

  for (const Rat& x : s)
    if (den(x) != 1) return {false, s};
  for (const Halfspace& h : p.ineqs()) {
    // clear to integers and compare the facet's gap at s with the
    // coefficient content: lattice distance one means they agree
    Int L = 1;
    for (const Rat& x : h.v) L = boost::multiprecision::lcm(L, den(x));
    L = boost::multiprecision::lcm(L, den(h.tau));
    Int g = 0;
    Rat gap = -h.tau;
    for (size_t i = 0; i < h.v.size(); ++i) {
      g = boost::multiprecision::gcd(g, num(h.v[i] * Rat(L)));
      gap += h.v[i] * s[i];
    }
    if (g == 0) return {false, s};
    if (gap * Rat(L) != Rat(g)) return {false, s};
  }
  if (p.interior_lattice_count() != 1) return {false, s};
  for (const Halfspace& h : p.ineqs()) {
    Rat val = -h.tau;
    for (size_t i = 0; i < h.v.size(); ++i) val += h.v[i] * s[i];
    if (!(val > 0)) return {false, s};
  }
  return {true, s};
}

}  // namespace ngon
