#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ngon/gelfand_cetlin.hpp"
#include "ngon/laurent.hpp"
#include "ngon/plmap.hpp"
#include "ngon/pluecker.hpp"
#include "ngon/polytope.hpp"
#include "ngon/triangulation.hpp"

using njson = nlohmann::ordered_json;
using namespace ngon;

namespace {

struct Options {
  int n = 5;
  std::string perimeter;  // empty: use n
  std::string gamma = "caterpillar";
  std::string format = "text";
  std::uint64_t seed = 0;
};

Rat perimeter_of(const Options& o) {
  return o.perimeter.empty() ? Rat(o.n) : parse_rat(o.perimeter);
}

std::vector<int> parse_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::string cur;
  for (char c : s + sep) {
    if (c == sep) {
      if (cur.empty()) throw std::invalid_argument("empty entry in '" + s + "'");
      out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + sep) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

Triangulation parse_gamma(int n, const std::string& text) {
  if (text == "caterpillar") return caterpillar(n);
  if (text.rfind("flips:", 0) == 0) {
    Triangulation t = caterpillar(n);
    for (const std::string& part : split(text.substr(6), '|'))
      t = whitehead_move(t, make_diagonal(parse_ints(part, ','), n)).first;
    return t;
  }
  std::string body = text;
  if (body.rfind("arcs:", 0) == 0) body = body.substr(5);
  std::vector<Diagonal> ds;
  for (const std::string& part : split(body, ';'))
    ds.push_back(make_diagonal(parse_ints(part, ','), n));
  return Triangulation(n, std::move(ds));
}

std::vector<Rat> parse_side_lengths(const Options& o, const std::string& sides_arg) {
  if (sides_arg.empty())
    throw std::invalid_argument("side lengths required: --r r1,r2,...");
  std::vector<Rat> r;
  for (const std::string& part : split(sides_arg, ',')) r.push_back(parse_rat(part));
  if (static_cast<int>(r.size()) != o.n)
    throw std::invalid_argument("need exactly n side lengths");
  return r;
}

njson triangulation_json(const Triangulation& t) {
  njson j;
  j["n"] = t.n();
  njson ds = njson::array();
  for (const Diagonal& d : t.diagonals()) ds.push_back(d.arc());
  j["diagonals"] = std::move(ds);
  return j;
}

njson rat_list(const std::vector<Rat>& v) {
  njson a = njson::array();
  for (const Rat& x : v) a.push_back(to_string(x));
  return a;
}

njson hrep_json(const Polytope& p) {
  njson j;
  j["dim"] = p.dim();
  njson rows = njson::array();
  for (const Halfspace& h : p.ineqs())
    rows.push_back(njson{{"v", rat_list(h.v)}, {"tau", to_string(h.tau)}});
  j["ineqs"] = std::move(rows);
  return j;
}

void emit_hrep(const Options& o, const Polytope& p) {
  if (o.format == "json") {
    std::cout << hrep_json(p).dump(2) << "\n";
    return;
  }
  std::cout << "dim: " << p.dim() << "\n";
  for (const Halfspace& h : p.ineqs()) {
    std::cout << "ineq:";
    for (const Rat& c : h.v) std::cout << " " << to_string(c);
    std::cout << " >= " << to_string(h.tau) << "\n";
  }
}

void emit(const Options& o, const njson& j) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // text rendering: one "key: value" line per scalar, lists line by line
  for (const auto& [key, value] : j.items()) {
    if (value.is_array()) {
      for (const auto& item : value) {
        std::cout << key << ":";
        if (item.is_array()) {
          for (const auto& x : item)
            std::cout << " " << (x.is_string() ? x.get<std::string>() : x.dump());
        } else if (item.is_string()) {
          std::cout << " " << item.get<std::string>();
        } else {
          std::cout << " " << item.dump();
        }
        std::cout << "\n";
      }
    } else if (value.is_string()) {
      std::cout << key << ": " << value.get<std::string>() << "\n";
    } else {
      std::cout << key << ": " << value.dump() << "\n";
    }
  }
}

std::string gamma_string(const Triangulation& t) {
  std::string s;
  for (const Diagonal& d : t.diagonals()) {
    if (!s.empty()) s += " ";
    s += to_string(d);
  }
  return s.empty() ? "(none)" : s;
}

std::string affine_string(const AffineForm& a,
                          const std::vector<std::string>& names) {
  std::string s;
  auto append = [&](const Rat& c, const std::string& body) {
    if (c == 0) return;
    const bool neg = c < 0;
    Rat m = neg ? Rat(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (body.empty()) s += to_string(m);
    else if (m == 1) s += body;
    else s += to_string(m) + "*" + body;
  };
  for (size_t i = 0; i < a.v.size(); ++i) append(a.v[i], names[i]);
  append(a.c, "");
  return s.empty() ? "0" : s;
}

std::string expr_string(const TropExpr& x, const std::vector<std::string>& names) {
  switch (x.kind()) {
    case TropExpr::Kind::affine:
      return affine_string(x.form(), names);
    case TropExpr::Kind::min: {
      std::string s = "min(";
      for (size_t i = 0; i < x.parts().size(); ++i) {
        if (i) s += ", ";
        s += expr_string(x.parts()[i], names);
      }
      return s + ")";
    }
    case TropExpr::Kind::sum:
      return "(" + expr_string(x.parts()[0], names) + " + " +
             expr_string(x.parts()[1], names) + ")";
    case TropExpr::Kind::diff:
      return "(" + expr_string(x.parts()[0], names) + " - " +
             expr_string(x.parts()[1], names) + ")";
    case TropExpr::Kind::scale:
      return to_string(x.factor()) + "*(" + expr_string(x.parts()[0], names) + ")";
  }
  return "";
}

std::vector<std::string> frame_names(const CoordinateFrame& f) {
  std::vector<std::string> names;
  for (int i = 1; i < f.n; ++i) names.push_back("u_e" + std::to_string(i));
  for (const Diagonal& d : f.diags) names.push_back("u_d" + to_string(d));
  return names;
}

std::vector<std::string> length_names(const Triangulation& t) {
  std::vector<std::string> names;
  for (const Diagonal& d : t.diagonals()) names.push_back("l_d" + to_string(d));
  return names;
}

struct Checker {
  njson rows = njson::array();
  bool ok = true;

  void add(const std::string& name, bool pass) {
    rows.push_back(njson{{"name", name}, {"pass", pass}});
    ok = ok && pass;
  }
};

void emit_checks(const Options& o, Checker& ck) {
  if (o.format == "json") {
    njson j;
    j["checks"] = ck.rows;
    j["pass"] = ck.ok;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& row : ck.rows)
    std::cout << "check " << row["name"].get<std::string>() << ": "
              << (row["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  std::cout << "result: " << (ck.ok ? "pass" : "FAIL") << "\n";
}

int cmd_triangulations(const Options& o) {
  const std::vector<Triangulation> all = enumerate_triangulations(o.n);
  njson j;
  j["n"] = o.n;
  if (o.format == "json") {
    njson list = njson::array();
    for (const Triangulation& t : all) list.push_back(triangulation_json(t));
    j["triangulations"] = std::move(list);
    j["count"] = all.size();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "n: " << o.n << "\n";
  for (const Triangulation& t : all)
    std::cout << "gamma: " << gamma_string(t) << "\n";
  std::cout << "count: " << all.size() << "\n";
  return 0;
}

int cmd_polytope(const Options& o, const std::string& mode,
                 bool bending, const std::string& sides_arg, int dilate) {
  const Triangulation t = parse_gamma(o.n, o.gamma);
  Polytope p = bending ? bending_polytope(t, parse_side_lengths(o, sides_arg))
                       : moment_polytope(t, perimeter_of(o));
  if (dilate != 1) {
    if (mode == "reflexive")
      throw std::invalid_argument("dilation does not apply to the reflexivity check");
    p = p.dilate(dilate);
  }

  if (mode == "hrep") {
    emit_hrep(o, p);
    return 0;
  }
  if (mode == "vertices") {
    njson j;
    j["dim"] = p.dim();
    njson vs = njson::array();
    for (const auto& v : p.vertices()) vs.push_back(rat_list(v));
    j["vertex"] = std::move(vs);
    emit(o, j);
    return 0;
  }
  if (mode == "lattice") {
    njson j;
    j["dim"] = p.dim();
    j["lattice_count"] = p.lattice_count();
    j["interior_count"] = p.interior_lattice_count();
    emit(o, j);
    return 0;
  }
  if (mode == "volume") {
    njson j;
    j["dim"] = p.dim();
    j["volume"] = to_string(p.ehrhart_volume());
    emit(o, j);
    return 0;
  }
  if (mode == "reflexive") {
    if (bending)
      throw std::invalid_argument("the reflexivity check uses the moment body");
    const auto [good, shift] = reflexivity_check(t, perimeter_of(o));
    njson j;
    j["reflexive"] = good;
    if (o.format == "json") {
      j["shift"] = rat_list(shift);
    } else {
      std::string s;
      for (const Rat& x : shift) s += (s.empty() ? "" : " ") + to_string(x);
      j["shift"] = s;
    }
    emit(o, j);
    return good ? 0 : 1;
  }
  throw std::invalid_argument("unknown polytope mode '" + mode + "'");
}

int cmd_plmap(const Options& o, const std::string& mode, const std::string& from,
              const std::string& to, bool bending, const std::string& sides_arg) {
  const Triangulation t1 = parse_gamma(o.n, from);
  const Triangulation t2 = parse_gamma(o.n, to);
  const std::vector<WhiteheadMove> path = flip_path(t1, t2);
  const Rat r = perimeter_of(o);
  const std::vector<Rat> sides =
      bending ? parse_side_lengths(o, sides_arg) : std::vector<Rat>{};

  std::vector<PLMap> maps;
  std::vector<Polytope> bodies;
  Triangulation cur = t1;
  bodies.push_back(bending ? bending_polytope(cur, sides)
                           : moment_polytope(cur, r));
  for (const WhiteheadMove& mv : path) {
    maps.push_back(bending ? bending_plmap(cur, mv, sides)
                           : whitehead_plmap(frame_of(cur, r), mv));
    cur = whitehead_move(cur, mv.removed).first;
    bodies.push_back(bending ? bending_polytope(cur, sides)
                             : moment_polytope(cur, r));
  }

  if (mode == "derive") {
    njson moves = njson::array();
    cur = t1;
    for (size_t k = 0; k < path.size(); ++k) {
      const Triangulation next = whitehead_move(cur, path[k].removed).first;
      const std::vector<std::string> names =
          bending ? length_names(cur) : frame_names(frame_of(cur, r));
      const int slot = bending
                           ? [&] {
                               const auto& ds = next.diagonals();
                               return static_cast<int>(
                                   std::lower_bound(ds.begin(), ds.end(),
                                                    path[k].inserted) -
                                   ds.begin());
                             }()
                           : frame_of(next, r).d_index(path[k].inserted);
      moves.push_back(
          njson{{"remove", path[k].removed.arc()},
                {"insert", path[k].inserted.arc()},
                {"target", (bending ? "l_d" : "u_d") + to_string(path[k].inserted)},
                {"formula", expr_string(maps[k].comps[slot], names)}});
      cur = next;
    }
    const int dim = bodies.front().dim();
    std::vector<PLMap> rev(maps.rbegin(), maps.rend());
    const PLMap composite = compose_plmaps(rev, dim);
    const std::vector<std::string> names =
        bending ? length_names(t1) : frame_names(frame_of(t1, r));
    njson comp = njson::array();
    for (const TropExpr& c : composite.comps)
      comp.push_back(expr_string(c, names));
    if (o.format == "json") {
      njson j;
      j["moves"] = std::move(moves);
      j["composite"] = std::move(comp);
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    for (size_t k = 0; k < moves.size(); ++k) {
      std::cout << "move " << (k + 1) << ": remove "
                << to_string(path[k].removed) << " insert "
                << to_string(path[k].inserted) << "\n";
      std::cout << "  " << moves[k]["target"].get<std::string>() << " = "
                << moves[k]["formula"].get<std::string>() << "\n";
    }
    std::cout << "composite:\n";
    for (size_t i = 0; i < comp.size(); ++i)
      std::cout << "  " << names[i] << " -> " << comp[i].get<std::string>()
                << "\n";
    return 0;
  }
  if (mode == "verify") {
    Checker ck;
    for (size_t k = 0; k < maps.size(); ++k) {
      const std::string tag = "move " + std::to_string(k + 1);
      if (!bending) ck.add(tag + " integral", integrality_check(maps[k]));
      ck.add(tag + " lattice bijection",
             transform_polytope_check(maps[k], bodies[k], bodies[k + 1]));
    }
    const int dim = bodies.front().dim();
    std::vector<PLMap> rev(maps.rbegin(), maps.rend());
    ck.add("composite lattice bijection",
           transform_polytope_check(compose_plmaps(rev, dim), bodies.front(),
                                    bodies.back()));
    emit_checks(o, ck);
    return ck.ok ? 0 : 1;
  }
  throw std::invalid_argument("unknown plmap mode '" + mode + "'");
}

int cmd_potential(const Options& o, const std::string& mode,
                  const std::string& from, const std::string& to) {
  if (mode == "emit") {
    const Triangulation t = parse_gamma(o.n, o.gamma);
    const VarTable vt = var_table(o.n);
    const LaurentPoly w = potential(t);
    njson j;
    j["n"] = o.n;
    j["gamma"] = gamma_string(t);
    j["terms"] = w.size();
    j["potential"] = to_string(vt, w);
    emit(o, j);
    return 0;
  }
  if (mode == "lift-verify") {
    const Triangulation t1 = parse_gamma(o.n, from);
    const Triangulation t2 = parse_gamma(o.n, to);
    const LiftReport rep = lift_verify(t1, t2);
    njson j;
    j["moves"] = rep.moves;
    j["num_terms"] = rep.num_terms;
    j["den_terms"] = rep.den_terms;
    j["equal"] = rep.equal;
    emit(o, j);
    return rep.equal ? 0 : 1;
  }
  throw std::invalid_argument("unknown potential mode '" + mode + "'");
}

int cmd_pluecker(const Options& o, const std::string& mode, int stage) {
  const Triangulation t = parse_gamma(o.n, o.gamma);
  if (mode == "deform") {
    std::vector<QuadRelation> rels;
    if (stage == 0) {
      rels = deform_relations(t);
    } else {
      if (stage < 1 || stage > static_cast<int>(t.diagonals().size()))
        throw std::invalid_argument("stage out of range");
      rels = one_param_family(t, stage - 1);
    }
    njson j;
    njson list = njson::array();
    for (const QuadRelation& r : rels) list.push_back(to_string(r));
    j["relations"] = std::move(list);
    emit(o, j);
    return 0;
  }
  if (mode == "central-fiber") {
    njson j;
    njson list = njson::array();
    for (const BinomialRelation& b : central_fiber(t)) list.push_back(to_string(b));
    j["relations"] = std::move(list);
    emit(o, j);
    return 0;
  }
  if (mode == "fixed-points") {
    const std::vector<FixedPoint> fps = fixed_points(t, perimeter_of(o));
    if (o.format == "json") {
      njson list = njson::array();
      for (const FixedPoint& fp : fps)
        list.push_back(njson{{"pair", {fp.pair.first, fp.pair.second}},
                             {"point", rat_list(fp.point)}});
      std::cout << njson{{"fixed_points", std::move(list)}}.dump(2) << "\n";
      return 0;
    }
    for (const FixedPoint& fp : fps) {
      std::cout << "point (" << fp.pair.first << "," << fp.pair.second << "):";
      for (const Rat& x : fp.point) std::cout << " " << to_string(x);
      std::cout << "\n";
    }
    return 0;
  }
  if (mode == "strata") {
    const std::vector<SingularStratum> strata = singular_strata(t);
    if (o.format == "json") {
      njson list = njson::array();
      for (const SingularStratum& s : strata) {
        njson edges = njson::array();
        for (const EdgeLabel& e : s.edges) edges.push_back(to_string(e));
        list.push_back(
            njson{{"diagonal", s.d.arc()}, {"edges", std::move(edges)}});
      }
      std::cout << njson{{"strata", std::move(list)}}.dump(2) << "\n";
      return 0;
    }
    for (const SingularStratum& s : strata) {
      std::cout << "stratum " << to_string(s.d) << ":";
      for (const EdgeLabel& e : s.edges) std::cout << " " << to_string(e);
      std::cout << "\n";
    }
    return 0;
  }
  throw std::invalid_argument("unknown pluecker mode '" + mode + "'");
}

void gc_checks(const Options& o, Checker& ck) {
  const Rat r = perimeter_of(o);
  const PLMap m = gc_map(caterpillar(o.n), r);
  const Rat d = affine_map_determinant(m);
  ck.add("pattern map unimodular", d == 1 || d == -1);
  ck.add("pattern lattice bijection",
         transform_polytope_check(m, moment_polytope(caterpillar(o.n), r),
                                  gc_polytope(o.n, r)));
  ck.add("potential transport", ehx_form(o.n) == potential_gc(o.n));
}

int cmd_gc(const Options& o, const std::string& mode) {
  if (mode == "polytope") {
    emit_hrep(o, gc_polytope(o.n, perimeter_of(o)));
    return 0;
  }
  if (mode == "ehx") {
    const GCVarTable gv = gc_vars(o.n);
    const LaurentPoly w = ehx_form(o.n);
    njson j;
    j["n"] = o.n;
    j["terms"] = w.size();
    j["potential"] = to_string(gv, w);
    j["matches_pattern_potential"] = w == potential_gc(o.n);
    emit(o, j);
    return w == potential_gc(o.n) ? 0 : 1;
  }
  if (mode == "verify") {
    Checker ck;
    gc_checks(o, ck);
    emit_checks(o, ck);
    return ck.ok ? 0 : 1;
  }
  throw std::invalid_argument("unknown gc mode '" + mode + "'");
}

void identity_checks(const Options& o, Checker& ck) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> numd(-60, 60), dend(1, 12);
  auto rand_rat = [&] { return Rat(numd(rng)) / dend(rng); };

  auto coord = [](int dim, int i) {
    AffineForm a;
    a.v.assign(dim, Rat(0));
    a.v[i] = 1;
    return TropExpr::affine(a);
  };
  const auto [l1, r1] = min_identity(coord(2, 0), coord(2, 1));
  bool ok1 = true;
  for (int k = 0; k < 1000; ++k) {
    const std::vector<Rat> u = {rand_rat(), rand_rat()};
    ok1 = ok1 && l1.eval(u) == r1.eval(u);
  }
  ck.add("three term minimum identity", ok1);

  const auto [l2, r2] = range_length_identity();
  bool ok2 = true;
  for (int k = 0; k < 1000; ++k) {
    const std::vector<Rat> u = {rand_rat(), rand_rat(), rand_rat(), rand_rat()};
    ok2 = ok2 && l2.eval(u) == r2.eval(u);
  }
  ck.add("four point exchange identity", ok2);
}

void lift_checks(const Options& o, Checker& ck) {
  bool ok = true;
  int pairs = 0;
  for (const Triangulation& t : enumerate_triangulations(o.n))
    for (const Diagonal& d : t.diagonals()) {
      const Triangulation t2 = whitehead_move(t, d).first;
      const LiftReport rep = lift_verify(t, t2);
      ok = ok && rep.equal && rep.moves == 1;
      ++pairs;
    }
  ck.add("potential lift across " + std::to_string(pairs) + " flips", ok);
}

void plmap_checks(const Options& o, Checker& ck) {
  const Rat r = perimeter_of(o);
  bool integral = true, bijective = true, inverse = true;
  for (const Triangulation& t : enumerate_triangulations(o.n))
    for (const Diagonal& d : t.diagonals()) {
      const auto [t2, mv] = whitehead_move(t, d);
      const PLMap m = whitehead_plmap(frame_of(t, r), mv);
      integral = integral && integrality_check(m);
      const Polytope p1 = moment_polytope(t, r);
      bijective = bijective && transform_polytope_check(m, p1, moment_polytope(t2, r));
      const PLMap back =
          whitehead_plmap(frame_of(t2, r), whitehead_move(t2, mv.inserted).second);
      const PLMap round = compose_plmaps({back, m}, p1.dim());
      bool id = true;
      for (const auto& p : p1.lattice_points()) {
        const std::vector<Rat> x(p.begin(), p.end());
        id = id && round.eval(x) == x;
      }
      inverse = inverse && id;
    }
  ck.add("flip maps integral", integral);
  ck.add("flip maps lattice bijections", bijective);
  ck.add("flip maps invertible on the lattice", inverse);
}

void pluecker_checks(const Options& o, Checker& ck) {
  bool binomial = true, stages = true, vertices_ok = true;
  for (const Triangulation& t : enumerate_triangulations(o.n)) {
    try {
      central_fiber(t);
    } catch (const std::logic_error&) {
      binomial = false;
    }
    const std::vector<QuadRelation> full = deform_relations(t);
    const int nd = static_cast<int>(t.diagonals().size());
    for (int alpha = 0; alpha < nd; ++alpha) {
      const std::vector<QuadRelation> one = one_param_family(t, alpha);
      for (size_t q = 0; q < full.size(); ++q) {
        QuadRelation masked = full[q];
        for (int m = 0; m < 3; ++m)
          for (int s = 0; s < nd; ++s)
            if (s != alpha) masked.texp[m][s] = 0;
        stages = stages && one[q] == masked;
      }
    }
    std::vector<std::vector<Rat>> pts;
    for (const FixedPoint& fp : fixed_points(t, perimeter_of(o)))
      pts.push_back(fp.point);
    std::sort(pts.begin(), pts.end());
    vertices_ok =
        vertices_ok && pts == moment_polytope(t, perimeter_of(o)).vertices();
  }
  ck.add("degenerate relations binomial", binomial);
  ck.add("one parameter stages consistent", stages);
  ck.add("fixed points are the vertices", vertices_ok);
}

int cmd_verify(const Options& o, const std::string& what) {
  Checker ck;
  if (what == "identities" || what == "all") identity_checks(o, ck);
  if (what == "lift" || what == "all") lift_checks(o, ck);
  if (what == "plmap" || what == "all") plmap_checks(o, ck);
  if (what == "pluecker" || what == "all") pluecker_checks(o, ck);
  if (what == "gc" || what == "all") gc_checks(o, ck);
  emit_checks(o, ck);
  return ck.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for triangulations of a polygon"};
  app.fallthrough();
  Options o;
  app.add_option("--n", o.n, "number of polygon sides")->check(CLI::Range(3, 64));
  app.add_option("--perimeter", o.perimeter, "perimeter, a rational p/q (default n)");
  app.add_option("--gamma", o.gamma,
                 "triangulation: caterpillar | arcs 1,2;1,2,3 | flips:1,2|1,3");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized checks");

  std::string poly_mode, plmap_mode, pot_mode, plk_mode, gc_mode, verify_what;
  std::string from = "caterpillar", to, sides_arg;
  bool bending = false;
  int dilate = 1, stage = 0;

  CLI::App* c_tri = app.add_subcommand("triangulations", "list all triangulations");

  CLI::App* c_poly = app.add_subcommand("polytope", "polyhedral data");
  c_poly->add_option("mode", poly_mode, "hrep|vertices|lattice|volume|reflexive")
      ->required()
      ->check(CLI::IsMember({"hrep", "vertices", "lattice", "volume", "reflexive"}));
  c_poly->add_flag("--bending", bending, "fix all side lengths");
  c_poly->add_option("--r", sides_arg, "side lengths r1,r2,...");
  c_poly->add_option("--dilate", dilate, "dilate by a positive integer")
      ->check(CLI::PositiveNumber);

  CLI::App* c_plmap = app.add_subcommand("plmap", "piecewise linear flip maps");
  c_plmap->add_option("mode", plmap_mode, "derive|verify")
      ->required()
      ->check(CLI::IsMember({"derive", "verify"}));
  c_plmap->add_option("--from", from, "source triangulation");
  c_plmap->add_option("--to", to, "target triangulation")->required();
  c_plmap->add_flag("--bending", bending, "length coordinates at fixed sides");
  c_plmap->add_option("--r", sides_arg, "side lengths r1,r2,...");

  CLI::App* c_pot = app.add_subcommand("potential", "Laurent potentials");
  c_pot->add_option("mode", pot_mode, "emit|lift-verify")
      ->required()
      ->check(CLI::IsMember({"emit", "lift-verify"}));
  c_pot->add_option("--from", from, "source triangulation");
  c_pot->add_option("--to", to, "target triangulation");

  CLI::App* c_plk = app.add_subcommand("pluecker", "bracket relations");
  c_plk->add_option("mode", plk_mode, "deform|central-fiber|fixed-points|strata")
      ->required()
      ->check(CLI::IsMember({"deform", "central-fiber", "fixed-points", "strata"}));
  c_plk->add_option("--stage", stage, "deform by a single parameter (1-based)");

  CLI::App* c_gc = app.add_subcommand("gc", "staircase pattern");
  c_gc->add_option("mode", gc_mode, "verify|polytope|ehx")
      ->required()
      ->check(CLI::IsMember({"verify", "polytope", "ehx"}));

  CLI::App* c_verify = app.add_subcommand("verify", "consistency checks");
  c_verify->add_option("what", verify_what,
                       "all|lift|plmap|gc|pluecker|identities")
      ->required()
      ->check(CLI::IsMember({"all", "lift", "plmap", "gc", "pluecker", "identities"}));

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_tri->parsed()) return cmd_triangulations(o);
    if (c_poly->parsed()) return cmd_polytope(o, poly_mode, bending, sides_arg, dilate);
    if (c_plmap->parsed())
      return cmd_plmap(o, plmap_mode, from, to, bending, sides_arg);
    if (c_pot->parsed()) {
      if (pot_mode == "lift-verify" && to.empty())
        throw std::invalid_argument("lift-verify needs --to");
      return cmd_potential(o, pot_mode, from, to);
    }
    if (c_plk->parsed()) return cmd_pluecker(o, plk_mode, stage);
    if (c_gc->parsed()) return cmd_gc(o, gc_mode);
    if (c_verify->parsed()) return cmd_verify(o, verify_what);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
