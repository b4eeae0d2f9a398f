#include "doctest.h"
#include "ngon/lp.hpp"
#include "ngon/polytope.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace ngon;

namespace {

Halfspace hs(std::vector<Rat> v, Rat tau) { return {std::move(v), tau}; }

// axis box [0,k]^d as inequalities
Polytope box_poly(int d, const Rat& k) {
  std::vector<Halfspace> ineqs;
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> up(d, Rat(0)), down(d, Rat(0));
    up[i] = 1;
    down[i] = -1;
    ineqs.push_back(hs(up, 0));
    ineqs.push_back(hs(down, -k));
  }
  return Polytope(d, ineqs);
}

// independent lattice count: scan a superset box and test membership
long long scan_count(const Polytope& p, long long lo, long long hi,
                     bool interior = false) {
  long long n = 0;
  std::vector<long long> x(p.dim(), lo);
  for (;;) {
    bool ok = true;
    for (const auto& h : p.ineqs()) {
      Rat s = 0;
      for (int i = 0; i < p.dim(); ++i) s += h.v[i] * x[i];
      if (interior ? !(s > h.tau) : s < h.tau) {
        ok = false;
        break;
      }
    }
    if (ok) ++n;
    int i = 0;
    while (i < p.dim() && x[i] == hi) x[i++] = lo;
    if (i == p.dim()) break;
    ++x[i];
  }
  return n;
}

}  // namespace

TEST_SUITE("polytope") {

TEST_CASE("linear programs") {
  // max x+y over the 2x3 box
  auto r = lp_maximize({{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                       {0, 0, -2, -3}, {1, 1});
  REQUIRE(r.status == LPStatus::optimal);
  CHECK(r.value == 5);
  CHECK(r.point == std::vector<Rat>{2, 3});

  r = lp_maximize({{1}}, {0}, {1});
  CHECK(r.status == LPStatus::unbounded);

  r = lp_maximize({{1}, {-1}}, {1, 0}, {0});
  CHECK(r.status == LPStatus::infeasible);

  // equality via two opposite inequalities
  r = lp_maximize({{1}, {-1}}, {2, -2}, {5});
  REQUIRE(r.status == LPStatus::optimal);
  CHECK(r.value == 10);

  // negative and fractional data
  r = lp_maximize({{Rat(1) / 2, 1}, {1, 0}, {0, 1}}, {Rat(-3) / 2, -4, -4},
                  {-1, -1});
  REQUIRE(r.status == LPStatus::optimal);
  // minimize x+y on x/2+y >= -3/2, x,y >= -4: optimum at (-4, 1/2)
  CHECK(r.value == Rat(7) / 2);

  // redundant rows do not disturb the optimum
  r = lp_maximize({{1, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}},
                  {0, 0, -1, -1, -2}, {1, 2});
  REQUIRE(r.status == LPStatus::optimal);
  CHECK(r.value == 3);
}

TEST_CASE("membership and dilation") {
  Polytope sq = box_poly(2, 2);
  CHECK(sq.contains({1, 1}));
  CHECK(sq.contains({0, 2}));
  CHECK_FALSE(sq.contains({Rat(5) / 2, 0}));
  CHECK_FALSE(sq.empty());
  Polytope big = sq.dilate(3);
  CHECK(big.contains({5, 6}));
  CHECK_FALSE(big.contains({7, 0}));
  CHECK_THROWS_AS(sq.dilate(0), std::invalid_argument);
}

TEST_CASE("lattice counts") {
  CHECK(box_poly(2, 1).lattice_count() == 4);
  CHECK(box_poly(2, 1).interior_lattice_count() == 0);
  CHECK(box_poly(3, 2).lattice_count() == 27);
  CHECK(box_poly(3, 2).interior_lattice_count() == 1);
  CHECK(box_poly(2, Rat(1) / 2).lattice_count() == 1);

  // standard triangle
  Polytope tri(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -1)});
  CHECK(tri.lattice_count() == 3);
  CHECK(tri.dilate(4).lattice_count() == 15);

  // empty and thin cases
  Polytope none(1, {hs({1}, 1), hs({-1}, 0)});
  CHECK(none.empty());
  CHECK(none.lattice_count() == 0);
  Polytope seg(2, {hs({1, 0}, 0), hs({-1, 0}, -1), hs({0, 1}, 0),
                   hs({0, -1}, 0)});
  CHECK(seg.lattice_count() == 2);
  // between two lattice hyperplanes
  Polytope thin(1, {hs({2}, 1), hs({-2}, -1)});
  CHECK_FALSE(thin.empty());
  CHECK(thin.lattice_count() == 0);

  Polytope ray(1, {hs({1}, 0)});
  CHECK_THROWS_AS(ray.lattice_count(), std::runtime_error);

  auto pts = tri.lattice_points();
  std::vector<std::vector<long long>> want = {{0, 0}, {0, 1}, {1, 0}};
  CHECK(pts == want);
}

TEST_CASE("lattice counts match a plain scan") {
  std::mt19937 rng(20260822);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 2 + trial % 2;
    std::vector<Halfspace> ineqs;
    for (int i = 0; i < d; ++i) {
      std::vector<Rat> up(d, Rat(0)), down(d, Rat(0));
      up[i] = 1;
      down[i] = -1;
      ineqs.push_back(hs(up, -4));
      ineqs.push_back(hs(down, -4));
    }
    for (int extra = 0; extra < 3; ++extra) {
      std::vector<Rat> v(d);
      for (auto& x : v) x = coeff(rng);
      ineqs.push_back(hs(v, coeff(rng)));
    }
    Polytope p(d, ineqs);
    CHECK(p.lattice_count() == scan_count(p, -4, 4));
    CHECK(p.interior_lattice_count() == scan_count(p, -4, 4, true));
  }
}

TEST_CASE("vertices") {
  Polytope sq = box_poly(2, 2);
  auto v = sq.vertices();
  std::vector<std::vector<Rat>> want = {{0, 0}, {0, 2}, {2, 0}, {2, 2}};
  CHECK(v == want);

  Polytope tri(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -1)});
  auto tv = tri.vertices();
  REQUIRE(tv.size() == 3);
  CHECK(tv[0] == std::vector<Rat>{0, 0});
  CHECK(tv[2] == std::vector<Rat>{1, 0});

  // repeated facets do not duplicate vertices
  Polytope dup(2, {hs({1, 0}, 0), hs({1, 0}, 0), hs({0, 1}, 0),
                   hs({-1, -1}, -1)});
  CHECK(dup.vertices().size() == 3);

  Polytope none(1, {hs({1}, 1), hs({-1}, 0)});
  CHECK(none.vertices().empty());
}

TEST_CASE("redundancy removal") {
  Polytope p(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, 0}, -2),
                 hs({0, -1}, -2), hs({1, 1}, -5), hs({1, 0}, -1)});
  Polytope q = p.remove_redundant();
  CHECK(q.ineqs().size() == 4);
  for (const auto& h : q.ineqs()) CHECK(h.v != std::vector<Rat>{1, 1});
  // the surviving system bounds the same set
  for (long long x = -6; x <= 6; ++x)
    for (long long y = -6; y <= 6; ++y)
      CHECK(p.contains({x, y}) == q.contains({x, y}));

  // duplicates collapse to one copy
  Polytope d(1, {hs({1}, 0), hs({1}, 0), hs({-1}, -1)});
  CHECK(d.remove_redundant().ineqs().size() == 2);
}

TEST_CASE("volumes") {
  CHECK(box_poly(2, 1).ehrhart_volume() == 1);
  CHECK(box_poly(3, 2).ehrhart_volume() == 8);
  CHECK(box_poly(2, Rat(1) / 2).ehrhart_volume() == Rat(1) / 4);
  Polytope tri(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -1)});
  CHECK(tri.ehrhart_volume() == Rat(1) / 2);
  // lower dimensional and empty polytopes have volume zero
  Polytope seg(2, {hs({1, 0}, 0), hs({-1, 0}, -1), hs({0, 1}, 0),
                   hs({0, -1}, 0)});
  CHECK(seg.ehrhart_volume() == 0);
  Polytope none(1, {hs({1}, 1), hs({-1}, 0)});
  CHECK(none.ehrhart_volume() == 0);
  // dilation scales volume by k^d
  CHECK(tri.dilate(3).ehrhart_volume() == Rat(9) / 2);
}

}  // TEST_SUITE
