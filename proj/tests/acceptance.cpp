#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ngon/gelfand_cetlin.hpp"
#include "ngon/laurent.hpp"
#include "ngon/plmap.hpp"
#include "ngon/pluecker.hpp"
#include "ngon/polytope.hpp"
#include "ngon/triangulation.hpp"

using namespace ngon;

namespace {

struct Gate {
  int index = 0;
  int passed = 0;

  void criterion(const std::string& label, double budget_seconds,
                 const std::function<bool(std::string&)>& body) {
    ++index;
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = body(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && budget_seconds > 0 && secs > budget_seconds) {
      ok = false;
      note = "time budget exceeded";
    }
    if (ok) ++passed;
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
                index, label.c_str(), secs, note.empty() ? "" : " - ",
                note.c_str());
    std::fflush(stdout);
  }
};

// counts triangulations without recursion: every subset of n-3 pairwise
// compatible intervals, compatibility checked by hand
long long interval_subset_count(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int lo = 1; lo <= n - 1; ++lo)
    for (int hi = lo + 1; hi <= n - 1; ++hi)
      if (hi - lo + 1 <= n - 2) arcs.push_back({lo, hi});
  const int need = n - 3;
  const int m = static_cast<int>(arcs.size());
  long long count = 0;
  std::vector<int> pick;
  const std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == need) {
      ++count;
      return;
    }
    for (int i = from; i < m; ++i) {
      bool ok = true;
      for (int j : pick) {
        const auto [a1, b1] = arcs[j];
        const auto [a2, b2] = arcs[i];
        const bool overlap = (a1 < a2 && a2 <= b1 && b1 < b2) ||
                             (a2 < a1 && a1 <= b2 && b2 < b1);
        ok = ok && !overlap;
      }
      if (ok) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    }
  };
  rec(0);
  return count;
}

long long choose4(int n) {
  return static_cast<long long>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
}

}  // namespace

int main() {
  Gate gate;

  gate.criterion(
      "triangulation enumeration matches the interval count", 5.0,
      [](std::string& note) {
        const long long want[] = {1, 2, 5, 14, 42, 132};
        for (int n = 3; n <= 8; ++n) {
          const auto all = enumerate_triangulations(n);
          std::set<std::vector<Diagonal>> distinct;
          for (const Triangulation& t : all) distinct.insert(t.diagonals());
          if (static_cast<long long>(all.size()) != want[n - 3] ||
              static_cast<long long>(distinct.size()) != want[n - 3] ||
              interval_subset_count(n) != want[n - 3]) {
            note = "mismatch at n=" + std::to_string(n);
            return false;
          }
        }
        return true;
      });

  gate.criterion(
      "deformed pentagon relations agree with the reference display", 0,
      [](std::string& note) {
        const std::vector<std::string> want = {
            "t1*Z(1,2)*Z(3,4) - Z(1,3)*Z(2,4) + Z(1,4)*Z(2,3)",
            "t1*Z(1,2)*Z(3,5) - Z(1,3)*Z(2,5) + Z(1,5)*Z(2,3)",
            "t1*t2*Z(1,2)*Z(4,5) - Z(1,4)*Z(2,5) + Z(1,5)*Z(2,4)",
            "t2*Z(1,3)*Z(4,5) - Z(1,4)*Z(3,5) + Z(1,5)*Z(3,4)",
            "t2*Z(2,3)*Z(4,5) - Z(2,4)*Z(3,5) + Z(2,5)*Z(3,4)"};
        const auto rels = deform_relations(caterpillar(5));
        if (rels.size() != want.size()) {
          note = "expected 5 relations";
          return false;
        }
        for (size_t i = 0; i < rels.size(); ++i)
          if (to_string(rels[i]) != want[i]) {
            note = "relation " + std::to_string(i + 1) + " reads " +
                   to_string(rels[i]);
            return false;
          }
        return true;
      });

  gate.criterion(
      "central fiber relations are binomial for every triangulation, n <= 7",
      30.0, [](std::string& note) {
        for (int n = 4; n <= 7; ++n)
          for (const Triangulation& t : enumerate_triangulations(n)) {
            const auto rels = central_fiber(t);
            if (static_cast<long long>(rels.size()) != choose4(n)) {
              note = "wrong relation count at n=" + std::to_string(n);
              return false;
            }
            for (const BinomialRelation& b : rels)
              if (b.signs[0] * b.signs[1] != -1) {
                note = "non-binomial signs at n=" + std::to_string(n);
                return false;
              }
          }
        return true;
      });

  gate.criterion(
      "lattice counts and normalized volume do not depend on the triangulation",
      120.0, [](std::string& note) {
        for (int n = 4; n <= 5; ++n)
          for (int r = n; r <= n + 1; ++r) {
            const auto all = enumerate_triangulations(n);
            const Polytope base = moment_polytope(all.front(), r);
            const auto base_counts = std::tuple(base.lattice_count(),
                                                base.interior_lattice_count(),
                                                base.ehrhart_volume());
            for (const Triangulation& t : all) {
              const Polytope p = moment_polytope(t, r);
              const auto counts = std::tuple(p.lattice_count(),
                                             p.interior_lattice_count(),
                                             p.ehrhart_volume());
              if (counts != base_counts) {
                note = "mismatch at n=" + std::to_string(n) +
                       ", perimeter=" + std::to_string(r);
                return false;
              }
            }
          }
        return true;
      });

  gate.criterion(
      "moment bodies at perimeter n are reflexive after the unit shift", 0,
      [](std::string& note) {
        for (int n = 4; n <= 6; ++n)
          for (const Triangulation& t : enumerate_triangulations(n))
            if (!reflexivity_check(t, Rat(n)).first) {
              note = "not reflexive at n=" + std::to_string(n);
              return false;
            }
        return true;
      });

  gate.criterion(
      "torus fixed points land on the vertices, one per side pair", 0,
      [](std::string& note) {
        for (int n = 4; n <= 5; ++n)
          for (const Triangulation& t : enumerate_triangulations(n)) {
            const auto fps = fixed_points(t, Rat(n));
            if (static_cast<int>(fps.size()) != n * (n - 1) / 2) {
              note = "wrong point count at n=" + std::to_string(n);
              return false;
            }
            std::vector<std::vector<Rat>> pts;
            for (const FixedPoint& fp : fps) pts.push_back(fp.point);
            std::sort(pts.begin(), pts.end());
            if (pts != moment_polytope(t, Rat(n)).vertices()) {
              note = "vertex mismatch at n=" + std::to_string(n);
              return false;
            }
          }
        return true;
      });

  gate.criterion(
      "the geometric lift rewrites the potential across every flip, n <= 6",
      60.0, [](std::string& note) {
        for (int n = 4; n <= 6; ++n)
          for (const Triangulation& t : enumerate_triangulations(n))
            for (const Diagonal& d : t.diagonals()) {
              const LiftReport rep =
                  lift_verify(t, whitehead_move(t, d).first);
              if (!rep.equal || rep.moves != 1) {
                note = "lift failed at n=" + std::to_string(n) + " across " +
                       to_string(d);
                return false;
              }
            }
        return true;
      });

  gate.criterion(
      "the tropicalized lift reproduces the flip map on lattice points", 0,
      [](std::string& note) {
        for (int n = 4; n <= 5; ++n)
          for (const Triangulation& t : enumerate_triangulations(n))
            for (const Diagonal& d : t.diagonals()) {
              const auto [t2, mv] = whitehead_move(t, d);
              const CoordinateFrame f1 = frame_of(t, n);
              const CoordinateFrame f2 = frame_of(t2, n);
              const PLMap m = whitehead_plmap(f1, mv);
              const TropExpr trop = tropicalize(f2, geometric_lift(mv, n).value);
              const int removed_slot = f1.d_index(d);
              for (const auto& p : moment_polytope(t, n).lattice_points()) {
                const std::vector<Rat> x(p.begin(), p.end());
                if (trop.eval(m.eval(x)) != x[removed_slot]) {
                  note = "mismatch at n=" + std::to_string(n);
                  return false;
                }
              }
            }
        return true;
      });

  gate.criterion(
      "flip maps give lattice bijections, including a two step path", 0,
      [](std::string& note) {
        for (int n = 4; n <= 5; ++n)
          for (const Triangulation& t : enumerate_triangulations(n))
            for (const Diagonal& d : t.diagonals()) {
              const auto [t2, mv] = whitehead_move(t, d);
              const PLMap m = whitehead_plmap(frame_of(t, n), mv);
              if (!integrality_check(m) ||
                  !transform_polytope_check(m, moment_polytope(t, n),
                                            moment_polytope(t2, n))) {
                note = "single flip failed at n=" + std::to_string(n);
                return false;
              }
            }
        const Triangulation start = caterpillar(5);
        const Triangulation goal(
            5, {make_diagonal({2, 3}, 5), make_diagonal({2, 3, 4}, 5)});
        const auto path = flip_path(start, goal);
        if (path.size() != 2) {
          note = "expected a two step path";
          return false;
        }
        Triangulation cur = start;
        std::vector<PLMap> maps;
        for (const WhiteheadMove& mv : path) {
          maps.push_back(whitehead_plmap(frame_of(cur, 5), mv));
          cur = whitehead_move(cur, mv.removed).first;
        }
        std::vector<PLMap> rev(maps.rbegin(), maps.rend());
        const PLMap composite = compose_plmaps(rev, 6);
        if (!transform_polytope_check(composite, moment_polytope(start, 5),
                                      moment_polytope(goal, 5))) {
          note = "two step composite failed";
          return false;
        }
        return true;
      });

  gate.criterion(
      "minimum and exchange identities hold on 1000 random samples each", 0,
      [](std::string& note) {
        std::mt19937_64 rng(12345);
        std::uniform_int_distribution<int> numd(-60, 60), dend(1, 12);
        auto rand_rat = [&] { return Rat(numd(rng)) / dend(rng); };
        auto coord = [](int dim, int i) {
          AffineForm a;
          a.v.assign(dim, Rat(0));
          a.v[i] = 1;
          return TropExpr::affine(a);
        };
        const auto [l1, r1] = min_identity(coord(2, 0), coord(2, 1));
        for (int k = 0; k < 1000; ++k) {
          const std::vector<Rat> u = {rand_rat(), rand_rat()};
          if (l1.eval(u) != r1.eval(u)) {
            note = "minimum identity failed";
            return false;
          }
        }
        const auto [l2, r2] = range_length_identity();
        for (int k = 0; k < 1000; ++k) {
          const std::vector<Rat> u = {rand_rat(), rand_rat(), rand_rat(),
                                      rand_rat()};
          if (l2.eval(u) != r2.eval(u)) {
            note = "exchange identity failed";
            return false;
          }
        }
        return true;
      });

  gate.criterion(
      "the staircase change of frame is unimodular and matches the lattice", 0,
      [](std::string& note) {
        for (int n = 4; n <= 8; ++n) {
          const Rat d = affine_map_determinant(gc_map(caterpillar(n), Rat(n)));
          if (d != 1 && d != -1) {
            note = "determinant " + to_string(d) + " at n=" + std::to_string(n);
            return false;
          }
        }
        for (int n = 4; n <= 5; ++n)
          for (int r = n; r <= n + 1; ++r) {
            const PLMap m = gc_map(caterpillar(n), r);
            if (!transform_polytope_check(m,
                                          moment_polytope(caterpillar(n), r),
                                          gc_polytope(n, r))) {
              note = "lattice mismatch at n=" + std::to_string(n) +
                     ", perimeter=" + std::to_string(r);
              return false;
            }
          }
        return true;
      });

  gate.criterion(
      "rewriting the square potential into pattern variables matches term "
      "for term",
      0, [](std::string& note) {
        const LaurentPoly a = ehx_form(4);
        const LaurentPoly b = potential_gc(4);
        if (a.size() != 6 || !(a == b)) {
          note = "rewritten form reads " + to_string(gc_vars(4), a);
          return false;
        }
        return true;
      });

  gate.criterion(
      "the square potential has exactly the six reference terms", 0,
      [](std::string& note) {
        const std::string want =
            "y_e1^-1*y_e2^-1*Q*y_d{1,2} + y_e3^-1*Q*y_d{1,2}^-1 + y_d{1,2} + "
            "y_e2*y_d{1,2}^-1 + y_e1*y_d{1,2}^-1 + "
            "y_e1*y_e2*y_e3*Q^-1*y_d{1,2}^-1";
        const LaurentPoly w = potential(caterpillar(4));
        const std::string got = to_string(var_table(4), w);
        if (w.size() != 6 || got != want) {
          note = "potential reads " + got;
          return false;
        }
        return true;
      });

  std::printf("acceptance: %d/%d criteria passed\n", gate.passed, gate.index);
  return gate.passed == gate.index ? 0 : 1;
}
