#include "ngon/plmap.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ngon {

TropExpr TropExpr::affine(AffineForm f) {
  TropExpr e;
  e.kind_ = Kind::affine;
  e.form_ = std::move(f);
  return e;
}

TropExpr TropExpr::min(std::vector<TropExpr> parts) {
  if (parts.empty()) throw std::invalid_argument("minimum of nothing");
  if (parts.size() == 1) return parts.front();
  TropExpr e;
  e.kind_ = Kind::min;
  e.parts_ = std::move(parts);
  return e;
}

TropExpr TropExpr::sum(TropExpr a, TropExpr b) {
  TropExpr e;
  e.kind_ = Kind::sum;
  e.parts_ = {std::move(a), std::move(b)};
  return e;
}

TropExpr TropExpr::diff(TropExpr a, TropExpr b) {
  TropExpr e;
  e.kind_ = Kind::diff;
  e.parts_ = {std::move(a), std::move(b)};
  return e;
}

TropExpr TropExpr::scale(const Rat& k, TropExpr a) {
  TropExpr e;
  e.kind_ = Kind::scale;
  e.factor_ = k;
  e.parts_ = {std::move(a)};
  return e;
}

Rat TropExpr::eval(const std::vector<Rat>& u) const {
  switch (kind_) {
    case Kind::affine:
      return form_.eval(u);
    case Kind::min: {
      Rat best = parts_[0].eval(u);
      for (size_t i = 1; i < parts_.size(); ++i)
        best = std::min(best, parts_[i].eval(u));
      return best;
    }
    case Kind::sum:
      return parts_[0].eval(u) + parts_[1].eval(u);
    case Kind::diff:
      return parts_[0].eval(u) - parts_[1].eval(u);
    case Kind::scale:
      return factor_ * parts_[0].eval(u);
  }
  throw std::logic_error("unreachable");
}

std::vector<Rat> PLMap::eval(const std::vector<Rat>& u) const {
  if (static_cast<int>(u.size()) != in_dim)
    throw std::invalid_argument("point dimension mismatch");
  std::vector<Rat> out;
  out.reserve(comps.size());
  for (const TropExpr& c : comps) out.push_back(c.eval(u));
  return out;
}

namespace {

AffineForm zero_form(int dim) {
  AffineForm f;
  f.v.assign(dim, Rat(0));
  f.c = 0;
  return f;
}

AffineForm unit_form(int dim, int slot) {
  AffineForm f = zero_form(dim);
  f.v[slot] = 1;
  return f;
}

AffineForm add(const AffineForm& a, const AffineForm& b) {
  AffineForm f = a;
  for (size_t i = 0; i < f.v.size(); ++i) f.v[i] += b.v[i];
  f.c += b.c;
  return f;
}

bool arc_has(const std::vector<int>& arc, int x) {
  return std::find(arc.begin(), arc.end(), x) != arc.end();
}

// u(a)+v(a) and u(a)-v(a) for a quadrilateral side, where v sums the side
// lengths over the arc cut off as seen from inside the quadrilateral; both
// combinations have integer coefficients
struct SideBlocks {
  AffineForm up, um;
};

SideBlocks side_blocks(const CoordinateFrame& f, const QuadSide& s) {
  SideBlocks out{zero_form(f.dim()), zero_form(f.dim())};
  if (s.label.is_side()) {
    if (s.label.side == f.n) {
      out.up.c = 2 * f.perimeter;
      for (int i = 1; i < f.n; ++i) out.up.v[f.e_index(i)] = -1;
    } else {
      out.up.v[f.e_index(s.label.side)] = 1;
    }
    return out;
  }
  const Diagonal& d = s.label.d;
  int slot = f.d_index(d);
  out.up.v[slot] = -1;
  out.um.v[slot] = -1;
  if (!arc_has(s.arc, f.n)) {
    for (int i = d.lo; i <= d.hi; ++i) out.up.v[f.e_index(i)] += 1;
  } else {
    out.up.c = f.perimeter;
    out.um.c = -f.perimeter;
    for (int i = d.lo; i <= d.hi; ++i) out.um.v[f.e_index(i)] += 1;
  }
  return out;
}

// sum of u(e_i) over an arc of sides, as a form in the frame coordinates
AffineForm arc_sum(const CoordinateFrame& f, const std::vector<int>& arc) {
  AffineForm out = zero_form(f.dim());
  Rat half(1, 2);
  for (int i : arc) {
    if (i == f.n) {
      out.c += f.perimeter;
      for (int j = 1; j < f.n; ++j) out.v[f.e_index(j)] -= half;
    } else {
      out.v[f.e_index(i)] += half;
    }
  }
  return out;
}

}  // namespace

PLMap identity_plmap(int dim) {
  PLMap m;
  m.in_dim = dim;
  for (int i = 0; i < dim; ++i)
    m.comps.push_back(TropExpr::affine(unit_form(dim, i)));
  return m;
}

PLMap whitehead_plmap(const CoordinateFrame& from, const WhiteheadMove& mv) {
  std::vector<Diagonal> target = from.diags;
  target.erase(std::find(target.begin(), target.end(), mv.removed));
  target.push_back(mv.inserted);
  std::sort(target.begin(), target.end());
  CoordinateFrame to{from.n, from.perimeter, target};

  int dim = from.dim();
  Rat half(1, 2);

  // half the side sum over the new arc minus half over the old one,
  // corrected by the two arcs the flip turns; integer coefficients overall
  AffineForm base = zero_form(dim);
  for (int i = mv.inserted.lo; i <= mv.inserted.hi; ++i)
    base.v[from.e_index(i)] += half;
  for (int i = mv.removed.lo; i <= mv.removed.hi; ++i)
    base.v[from.e_index(i)] -= half;
  AffineForm v2 = arc_sum(from, mv.sides[1].arc);
  AffineForm v4 = arc_sum(from, mv.sides[3].arc);
  for (int i = 0; i < dim; ++i) base.v[i] += v4.v[i] - v2.v[i];
  base.c += v4.c - v2.c;
  base.v[from.d_index(mv.removed)] += 1;

  SideBlocks b1 = side_blocks(from, mv.sides[0]);
  SideBlocks b2 = side_blocks(from, mv.sides[1]);
  SideBlocks b3 = side_blocks(from, mv.sides[2]);
  SideBlocks b4 = side_blocks(from, mv.sides[3]);
  AffineForm L1 = add(b1.up, b2.up);
  AffineForm L2 = add(b3.um, b4.um);
  L2.c += from.perimeter;
  AffineForm M1 = add(b1.up, b4.up);
  AffineForm M2 = add(b2.um, b3.um);
  M2.c += from.perimeter;

  TropExpr flip = TropExpr::diff(
      TropExpr::sum(TropExpr::affine(base),
                    TropExpr::min({TropExpr::affine(L1), TropExpr::affine(L2)})),
      TropExpr::min({TropExpr::affine(M1), TropExpr::affine(M2)}));

  PLMap m;
  m.in_dim = dim;
  for (int i = 1; i < to.n; ++i)
    m.comps.push_back(TropExpr::affine(unit_form(dim, from.e_index(i))));
  for (const Diagonal& d : to.diags) {
    if (d == mv.inserted)
      m.comps.push_back(flip);
    else
      m.comps.push_back(TropExpr::affine(unit_form(dim, from.d_index(d))));
  }
  return m;
}

PLMap bending_plmap(const Triangulation& from, const WhiteheadMove& mv,
                    const std::vector<Rat>& r) {
  int n = from.n();
  if (static_cast<int>(r.size()) != n)
    throw std::invalid_argument("need one side length per side");
  int dim = n - 3;
  // length of a quadrilateral side: fixed for boundary sides, a
  // coordinate for diagonals
  auto len = [&](const QuadSide& s) {
    AffineForm f = zero_form(dim);
    if (s.label.is_side())
      f.c = r[s.label.side - 1];
    else
      f.v[from.diag_index(s.label.d)] = 1;
    return f;
  };
  AffineForm l1 = len(mv.sides[0]), l2 = len(mv.sides[1]);
  AffineForm l3 = len(mv.sides[2]), l4 = len(mv.sides[3]);

  TropExpr flip = TropExpr::diff(
      TropExpr::sum(
          TropExpr::affine(unit_form(dim, from.diag_index(mv.removed))),
          TropExpr::min(
              {TropExpr::affine(add(l1, l4)), TropExpr::affine(add(l2, l3))})),
      TropExpr::min(
          {TropExpr::affine(add(l1, l2)), TropExpr::affine(add(l3, l4))}));

  std::vector<Diagonal> target = from.diagonals();
  target.erase(std::find(target.begin(), target.end(), mv.removed));
  target.push_back(mv.inserted);
  std::sort(target.begin(), target.end());

  PLMap m;
  m.in_dim = dim;
  for (const Diagonal& d : target) {
    if (d == mv.inserted)
      m.comps.push_back(flip);
    else
      m.comps.push_back(TropExpr::affine(unit_form(dim, from.diag_index(d))));
  }
  return m;
}

namespace {

TropExpr subst(const TropExpr& e, const PLMap& inner) {
  switch (e.kind()) {
    case TropExpr::Kind::affine: {
      AffineForm acc = zero_form(inner.in_dim);
      acc.c = e.form().c;
      std::vector<TropExpr> extra;
      for (size_t i = 0; i < e.form().v.size(); ++i) {
        const Rat& k = e.form().v[i];
        if (k == 0) continue;
        const TropExpr& comp = inner.comps[i];
        if (comp.kind() == TropExpr::Kind::affine) {
          for (int j = 0; j < inner.in_dim; ++j)
            acc.v[j] += k * comp.form().v[j];
          acc.c += k * comp.form().c;
        } else {
          extra.push_back(k == 1 ? comp : TropExpr::scale(k, comp));
        }
      }
      TropExpr out = TropExpr::affine(acc);
      for (TropExpr& x : extra) out = TropExpr::sum(out, std::move(x));
      return out;
    }
    case TropExpr::Kind::min: {
      std::vector<TropExpr> parts;
      for (const TropExpr& p : e.parts()) parts.push_back(subst(p, inner));
      return TropExpr::min(std::move(parts));
    }
    case TropExpr::Kind::sum:
      return TropExpr::sum(subst(e.parts()[0], inner),
                           subst(e.parts()[1], inner));
    case TropExpr::Kind::diff:
      return TropExpr::diff(subst(e.parts()[0], inner),
                            subst(e.parts()[1], inner));
    case TropExpr::Kind::scale:
      return TropExpr::scale(e.factor(), subst(e.parts()[0], inner));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

PLMap compose_plmaps(const std::vector<PLMap>& maps, int dim) {
  if (maps.empty()) return identity_plmap(dim);
  PLMap acc = maps.back();
  for (int k = static_cast<int>(maps.size()) - 2; k >= 0; --k) {
    const PLMap& outerm = maps[k];
    if (outerm.in_dim != acc.out_dim())
      throw std::invalid_argument("map dimensions do not chain");
    PLMap next;
    next.in_dim = acc.in_dim;
    for (const TropExpr& c : outerm.comps) next.comps.push_back(subst(c, acc));
    acc = std::move(next);
  }
  return acc;
}

namespace {

bool integral_expr(const TropExpr& e) {
  switch (e.kind()) {
    case TropExpr::Kind::affine: {
      for (const Rat& x : e.form().v)
        if (den(x) != 1) return false;
      return den(e.form().c) == 1;
    }
    case TropExpr::Kind::scale:
      if (den(e.factor()) != 1) return false;
      return integral_expr(e.parts()[0]);
    default:
      for (const TropExpr& p : e.parts())
        if (!integral_expr(p)) return false;
      return true;
  }
}

}  // namespace

bool integrality_check(const PLMap& m) {
  for (const TropExpr& c : m.comps)
    if (!integral_expr(c)) return false;
  return true;
}

std::pair<TropExpr, TropExpr> min_identity(const TropExpr& a,
                                           const TropExpr& b) {
  TropExpr na = TropExpr::scale(-1, a);
  TropExpr nb = TropExpr::scale(-1, b);
  TropExpr lhs =
      TropExpr::diff(TropExpr::sum(TropExpr::min({a, b}), TropExpr::min({na, b})), b);
  TropExpr rhs = TropExpr::min({a, na, b, nb});
  return {lhs, rhs};
}

std::pair<TropExpr, TropExpr> range_length_identity() {
  auto plus = [&](int i, int j) {
    AffineForm f = zero_form(4);
    f.v[i] = 1;
    f.v[j] = 1;
    return TropExpr::affine(f);
  };
  auto minus = [&](int i, int j) {
    AffineForm f = zero_form(4);
    f.v[i] = 1;
    f.v[j] = -1;
    return TropExpr::affine(f);
  };
  TropExpr lhs = TropExpr::sum(
      TropExpr::min({plus(0, 1), plus(2, 3)}),
      TropExpr::min({minus(0, 1), minus(1, 0), minus(2, 3), minus(3, 2)}));
  TropExpr rhs = TropExpr::sum(
      TropExpr::min({plus(0, 3), plus(1, 2)}),
      TropExpr::min({minus(0, 3), minus(3, 0), minus(1, 2), minus(2, 1)}));
  return {lhs, rhs};
}

bool transform_polytope_check(const PLMap& m, const Polytope& from,
                              const Polytope& to) {
  auto pts = from.lattice_points();
  std::set<std::vector<Rat>> images;
  for (const auto& p : pts) {
    std::vector<Rat> x(p.begin(), p.end());
    std::vector<Rat> img = m.eval(x);
    for (const Rat& c : img)
      if (den(c) != 1) return false;
    if (!to.contains(img)) return false;
    images.insert(img);
  }
  if (images.size() != pts.size()) return false;
  return static_cast<long long>(images.size()) == to.lattice_count();
}

}  // namespace ngon
