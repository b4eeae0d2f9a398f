#include "ngon/laurent.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace ngon {

int VarTable::e_var(int i) const {
  if (i < 1 || i > n - 1) throw std::invalid_argument("side variable out of range");
  return i - 1;
}

int VarTable::d_var(const Diagonal& d) const {
  auto it = std::lower_bound(diags.begin(), diags.end(), d);
  if (it == diags.end() || !(*it == d))
    throw std::invalid_argument("unknown diagonal " + to_string(d));
  return n + static_cast<int>(it - diags.begin());
}

std::string VarTable::name(int var) const {
  if (var < 0 || var >= vars()) throw std::invalid_argument("variable out of range");
  if (var < n - 1) return "y_e" + std::to_string(var + 1);
  if (var == n - 1) return "Q";
  return "y_d" + to_string(diags[var - n]);
}

VarTable var_table(int n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  VarTable vt;
  vt.n = n;
  for (int lo = 1; lo < n - 1; ++lo)
    for (int hi = lo + 1; hi <= n - 1 && hi - lo + 1 <= n - 2; ++hi)
      vt.diags.push_back({lo, hi});
  return vt;
}

LaurentPoly LaurentPoly::monomial(std::vector<int> exps, const Rat& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms.emplace(std::move(exps), coeff);
  return p;
}

LaurentPoly LaurentPoly::unit(int vars) {
  return monomial(std::vector<int>(vars, 0), 1);
}

void LaurentPoly::add_term(const std::vector<int>& exps, const Rat& coeff) {
  auto [it, fresh] = terms.emplace(exps, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  } else if (coeff == 0) {
    terms.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) {
      if (ea.size() != eb.size()) throw std::invalid_argument("variable count mismatch");
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string poly_string(const LaurentPoly& p,
                        const std::function<std::string(int)>& name) {
  if (p.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, coeff] : p.terms) {
    Rat c = coeff;
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (c < 0) c = -c;
    first = false;
    std::string factors;
    for (size_t v = 0; v < exps.size(); ++v) {
      int s = exps[v];
      if (s == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += name(static_cast<int>(v));
      if (s != 2) {
        factors += "^";
        if (s % 2 == 0) factors += std::to_string(s / 2);
        else factors += std::to_string(s) + "/2";
      }
    }
    if (factors.empty()) out += to_string(c);
    else if (c != 1) out += to_string(c) + "*" + factors;
    else out += factors;
  }
  return out;
}

std::string to_string(const VarTable& vt, const LaurentPoly& p) {
  return poly_string(p, [&](int v) { return vt.name(v); });
}

RationalExpr make_rational(LaurentPoly top, LaurentPoly bot) {
  std::erase_if(top.terms, [](const auto& t) { return t.second == 0; });
  std::erase_if(bot.terms, [](const auto& t) { return t.second == 0; });
  if (bot.terms.empty()) throw std::invalid_argument("zero denominator");
  const size_t nv = bot.terms.begin()->first.size();
  RationalExpr r;
  if (top.terms.empty()) {
    r.num = LaurentPoly{};
    r.den = LaurentPoly::unit(static_cast<int>(nv));
    r.subtraction_free = true;
    return r;
  }

  std::vector<int> shift(nv, INT_MAX);
  for (const LaurentPoly* p : {&top, &bot})
    for (const auto& [e, c] : p->terms)
      for (size_t i = 0; i < nv; ++i) shift[i] = std::min(shift[i], e[i]);

  Int g = 0, L = 1;
  for (const LaurentPoly* p : {&top, &bot})
    for (const auto& [e, c] : p->terms) {
      g = boost::multiprecision::gcd(g, abs(num(c)));
      L = boost::multiprecision::lcm(L, den(c));
    }
  const Rat scale = Rat(L) / Rat(g);

  auto rebuild = [&](const LaurentPoly& p) {
    LaurentPoly q;
    for (const auto& [e, c] : p.terms) {
      std::vector<int> e2(nv);
      for (size_t i = 0; i < nv; ++i) e2[i] = e[i] - shift[i];
      q.terms.emplace(std::move(e2), c * scale);
    }
    return q;
  };
  r.num = rebuild(top);
  r.den = rebuild(bot);

  if (r.den.terms.begin()->second < 0) {
    for (auto& [e, c] : r.num.terms) c = -c;
    for (auto& [e, c] : r.den.terms) c = -c;
  }
  r.subtraction_free = true;
  for (const LaurentPoly* p : {&r.num, &r.den})
    for (const auto& [e, c] : p->terms)
      if (c < 0) r.subtraction_free = false;
  return r;
}

bool rational_equal(const RationalExpr& a, const RationalExpr& b) {
  return a.num * b.den == b.num * a.den;
}

LaurentPoly edge_monomial(const VarTable& vt, const EdgeLabel& e) {
  std::vector<int> exps(vt.vars(), 0);
  if (e.is_side()) {
    if (e.side == vt.n) {
      exps[vt.q_var()] = 2;
      for (int i = 1; i < vt.n; ++i) exps[vt.e_var(i)] = -1;
    } else {
      exps[vt.e_var(e.side)] = 1;
    }
  } else {
    exps[vt.d_var(e.d)] = -2;
    for (int i = e.d.lo; i <= e.d.hi; ++i) exps[vt.e_var(i)] = 1;
  }
  return LaurentPoly::monomial(exps);
}

LaurentPoly potential(const Triangulation& t) {
  const VarTable vt = var_table(t.n());
  LaurentPoly w;
  for (const Triangle& tri : t.triangles()) {
    std::array<std::vector<int>, 3> ex;
    for (int k = 0; k < 3; ++k)
      ex[k] = edge_monomial(vt, tri.edges[k]).terms.begin()->first;
    for (int a = 0; a < 3; ++a) {
      const int b = (a + 1) % 3, c = (a + 2) % 3;
      std::vector<int> e(vt.vars());
      for (int i = 0; i < vt.vars(); ++i) e[i] = ex[b][i] + ex[c][i] - ex[a][i];
      w.add_term(e, 1);
    }
  }
  return w;
}

GeomLift geometric_lift(const WhiteheadMove& mv, int n) {
  const VarTable vt = var_table(n);
  std::vector<int> m(vt.vars(), 0);
  m[vt.d_var(mv.inserted)] += 2;
  for (int i = mv.removed.lo; i <= mv.removed.hi; ++i) m[vt.e_var(i)] += 1;
  for (int i = mv.inserted.lo; i <= mv.inserted.hi; ++i) m[vt.e_var(i)] -= 1;
  auto y = [&](int k) { return edge_monomial(vt, mv.sides[k].label); };
  const LaurentPoly N = y(0) * y(3) + y(1) * y(2);
  const LaurentPoly D = y(0) * y(1) + y(2) * y(3);
  return {mv.removed, make_rational(LaurentPoly::monomial(std::move(m)) * N, D)};
}

namespace {

LaurentPoly poly_pow(const LaurentPoly& p, int k, int nv) {
  LaurentPoly r = LaurentPoly::unit(nv);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

struct SubstParts {
  LaurentPoly top, bot;
};

// p with var := sn/sd, written over the common denominator sn^A sd^B
SubstParts subst_poly(const LaurentPoly& p, int var, const LaurentPoly& sn,
                      const LaurentPoly& sd, int nv) {
  if (p.terms.empty()) return {LaurentPoly{}, LaurentPoly::unit(nv)};
  int kmin = INT_MAX, kmax = INT_MIN;
  for (const auto& [e, c] : p.terms) {
    if (e[var] % 2 != 0)
      throw std::invalid_argument("half power of substituted variable");
    kmin = std::min(kmin, e[var] / 2);
    kmax = std::max(kmax, e[var] / 2);
  }
  const int A = std::max(0, -kmin), B = std::max(0, kmax);
  LaurentPoly top;
  for (const auto& [e, c] : p.terms) {
    const int k = e[var] / 2;
    std::vector<int> rest = e;
    rest[var] = 0;
    top = top + LaurentPoly::monomial(std::move(rest), c) *
                    poly_pow(sn, k + A, nv) * poly_pow(sd, B - k, nv);
  }
  return {top, poly_pow(sn, A, nv) * poly_pow(sd, B, nv)};
}

}  // namespace

RationalExpr substitute(const RationalExpr& x, int var,
                        const RationalExpr& value) {
  if (value.den.terms.empty()) throw std::invalid_argument("zero denominator");
  const int nv = static_cast<int>(value.den.terms.begin()->first.size());
  const SubstParts a = subst_poly(x.num, var, value.num, value.den, nv);
  const SubstParts b = subst_poly(x.den, var, value.num, value.den, nv);
  return make_rational(a.top * b.bot, a.bot * b.top);
}

LiftReport lift_verify(const Triangulation& t1, const Triangulation& t2) {
  if (t1.n() != t2.n()) throw std::invalid_argument("polygon size mismatch");
  const VarTable vt = var_table(t1.n());
  const auto path = flip_path(t1, t2);
  RationalExpr x = make_rational(potential(t1), LaurentPoly::unit(vt.vars()));
  for (const WhiteheadMove& mv : path) {
    const GeomLift gl = geometric_lift(mv, t1.n());
    x = substitute(x, vt.d_var(gl.removed), gl.value);
  }
  const RationalExpr y = make_rational(potential(t2), LaurentPoly::unit(vt.vars()));
  LiftReport rep;
  rep.equal = rational_equal(x, y);
  rep.moves = static_cast<int>(path.size());
  rep.num_terms = x.num.size();
  rep.den_terms = x.den.size();
  return rep;
}

namespace {

TropExpr trop_poly(const CoordinateFrame& f, const VarTable& vt,
                   const LaurentPoly& p) {
  if (p.terms.empty()) throw std::invalid_argument("tropicalizing zero");
  std::vector<TropExpr> parts;
  for (const auto& [e, c] : p.terms) {
    if (c < 0) throw std::invalid_argument("expression is not subtraction free");
    AffineForm a;
    a.v.assign(f.dim(), Rat(0));
    a.c = Rat(e[vt.q_var()]) / 2 * f.perimeter;
    for (int i = 1; i < vt.n; ++i) a.v[f.e_index(i)] = Rat(e[vt.e_var(i)]) / 2;
    for (size_t k = 0; k < vt.diags.size(); ++k) {
      const int s = e[vt.n + static_cast<int>(k)];
      if (s == 0) continue;
      a.v[f.d_index(vt.diags[k])] = Rat(s) / 2;
    }
    parts.push_back(TropExpr::affine(std::move(a)));
  }
  return TropExpr::min(std::move(parts));
}

}  // namespace

TropExpr tropicalize(const CoordinateFrame& f, const RationalExpr& x) {
  if (!x.subtraction_free)
    throw std::invalid_argument("expression is not subtraction free");
  const VarTable vt = var_table(f.n);
  TropExpr top = trop_poly(f, vt, x.num);
  if (x.den.size() == 1) {
    const auto& [e, c] = *x.den.terms.begin();
    const bool trivial =
        c == 1 && std::all_of(e.begin(), e.end(), [](int s) { return s == 0; });
    if (trivial) return top;
  }
  return TropExpr::diff(std::move(top), trop_poly(f, vt, x.den));
}

}  // namespace ngon
