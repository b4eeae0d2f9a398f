#include "doctest.h"
#include "ngon/triangulation.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace ngon;

namespace {

// independent count of n-3 element pairwise non-crossing diagonal sets,
// by filtering all subsets instead of backtracking
long long noncrossing_subset_count(int n) {
  std::vector<Diagonal> cands;
  for (int lo = 1; lo <= n - 2; ++lo)
    for (int hi = lo + 1; hi <= n - 1 && hi - lo + 1 <= n - 2; ++hi)
      cands.push_back({lo, hi});
  int m = static_cast<int>(cands.size());
  int k = n - 3;
  long long count = 0;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) return 1;
  while (true) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b)
        if (crossing(cands[idx[a]], cands[idx[b]])) ok = false;
    if (ok) ++count;
    int p = k - 1;
    while (p >= 0 && idx[p] == m - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return count;
}

// a diagonal lies between sides i and j iff its arc holds exactly one of them
bool separates(const Diagonal& d, int i, int j) {
  return d.contains(i) + d.contains(j) == 1;
}

std::vector<int> arc_of(std::initializer_list<int> xs) { return {xs}; }

}  // namespace

TEST_SUITE("triangulation") {

TEST_CASE("arc canonicalization avoids the last side") {
  CHECK(make_diagonal({2, 3}, 5) == Diagonal{2, 3});
  CHECK(make_diagonal({4, 5}, 5) == Diagonal{1, 3});
  CHECK(make_diagonal({3, 2}, 5) == Diagonal{2, 3});
  CHECK(make_diagonal({5, 6, 1}, 6) == Diagonal{2, 4});
  CHECK(make_diagonal({2, 3, 4}, 5) == Diagonal{2, 4});
  CHECK(Diagonal{2, 4}.arc() == arc_of({2, 3, 4}));
  CHECK_THROWS_AS(make_diagonal({1, 3}, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_diagonal({2}, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_diagonal({1, 2, 3, 4}, 5), std::invalid_argument);
}

TEST_CASE("crossing is proper overlap of arcs") {
  CHECK(crossing({1, 2}, {2, 3}));
  CHECK(crossing({2, 3}, {1, 2}));
  CHECK_FALSE(crossing({1, 2}, {1, 3}));
  CHECK_FALSE(crossing({1, 2}, {3, 4}));
  CHECK_FALSE(crossing({2, 3}, {2, 3}));
  CHECK(crossing({1, 3}, {2, 4}));
}

TEST_CASE("triangulation validation") {
  CHECK(caterpillar(5).diagonals() ==
        std::vector<Diagonal>{{1, 2}, {1, 3}});
  CHECK(caterpillar(3).diagonals().empty());
  CHECK_THROWS_AS(Triangulation(5, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Triangulation(5, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Triangulation(5, {{1, 2}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Triangulation(4, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("triangulation counts match the subset filter") {
  long long catalan[] = {1, 2, 5, 14, 42, 132};
  for (int n = 3; n <= 8; ++n) {
    auto all = enumerate_triangulations(n);
    CHECK(static_cast<long long>(all.size()) == catalan[n - 3]);
    CHECK(static_cast<long long>(all.size()) == noncrossing_subset_count(n));
    // lexicographic and duplicate free
    for (size_t i = 1; i < all.size(); ++i)
      CHECK(all[i - 1].diagonals() < all[i].diagonals());
  }
}

TEST_CASE("square triangle decomposition") {
  Triangulation t = caterpillar(4);
  REQUIRE(t.triangles().size() == 2);
  const Triangle& a = t.triangles()[0];
  CHECK(a.edges[0] == EdgeLabel::make_diag({1, 2}));
  CHECK(a.edges[1] == EdgeLabel::make_side(1));
  CHECK(a.edges[2] == EdgeLabel::make_side(2));
  CHECK(a.arcs[0] == arc_of({3, 4}));
  CHECK(a.arcs[1] == arc_of({1}));
  CHECK(a.arcs[2] == arc_of({2}));
  const Triangle& b = t.triangles()[1];
  CHECK(b.edges[0] == EdgeLabel::make_side(4));
  CHECK(b.edges[1] == EdgeLabel::make_diag({1, 2}));
  CHECK(b.edges[2] == EdgeLabel::make_side(3));
  CHECK(b.arcs[0] == arc_of({4}));
  CHECK(b.arcs[1] == arc_of({1, 2}));
  CHECK(b.arcs[2] == arc_of({3}));
  CHECK(t.parent_triangle(0) == 1);
}

TEST_CASE("triangle arcs partition the sides") {
  for (int n : {3, 5, 6}) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      REQUIRE(static_cast<int>(t.triangles().size()) == n - 2);
      for (const Triangle& tri : t.triangles()) {
        std::vector<int> all;
        for (int e = 0; e < 3; ++e)
          all.insert(all.end(), tri.arcs[e].begin(), tri.arcs[e].end());
        std::sort(all.begin(), all.end());
        std::vector<int> want(n);
        for (int i = 0; i < n; ++i) want[i] = i + 1;
        CHECK(all == want);
      }
    }
  }
}

TEST_CASE("leaf paths collect the separating diagonals") {
  for (int n : {5, 6}) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      TrivalentTree tree = dual_tree(t);
      for (size_t k = 0; k < tree.nbr.size(); ++k)
        for (int e = 0; e < 3; ++e)
          CHECK((tree.nbr[k][e] >= 0) == !tree.edge[k][e].is_side());
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          std::vector<Diagonal> want;
          for (const Diagonal& d : t.diagonals())
            if (separates(d, i, j)) want.push_back(d);
          CHECK(leaf_path(tree, i, j) == want);
        }
    }
  }
}

TEST_CASE("square flip") {
  auto [t2, mv] = whitehead_move(caterpillar(4), {1, 2});
  CHECK(t2.diagonals() == std::vector<Diagonal>{{2, 3}});
  CHECK(mv.removed == Diagonal{1, 2});
  CHECK(mv.inserted == Diagonal{2, 3});
  for (int k = 0; k < 4; ++k) {
    CHECK(mv.sides[k].label == EdgeLabel::make_side(k + 1));
    CHECK(mv.sides[k].arc == std::vector<int>{k + 1});
  }
  // flipping back restores the start
  auto [t3, mv2] = whitehead_move(t2, {2, 3});
  CHECK(t3 == caterpillar(4));
  CHECK(mv2.inserted == Diagonal{1, 2});
}

TEST_CASE("pentagon flips") {
  Triangulation start(5, {{2, 3}, {2, 4}});

  auto [mid, mv1] = whitehead_move(start, {2, 4});
  CHECK(mv1.inserted == Diagonal{1, 3});
  CHECK(mid.diagonals() == std::vector<Diagonal>{{1, 3}, {2, 3}});
  CHECK(mv1.sides[0].label == EdgeLabel::make_diag({2, 3}));
  CHECK(mv1.sides[1].label == EdgeLabel::make_side(4));
  CHECK(mv1.sides[2].label == EdgeLabel::make_side(5));
  CHECK(mv1.sides[3].label == EdgeLabel::make_side(1));
  CHECK(mv1.sides[0].arc == arc_of({2, 3}));
  CHECK(mv1.sides[1].arc == arc_of({4}));
  CHECK(mv1.sides[2].arc == arc_of({5}));
  CHECK(mv1.sides[3].arc == arc_of({1}));

  auto [end, mv2] = whitehead_move(mid, {2, 3});
  CHECK(mv2.inserted == Diagonal{1, 2});
  CHECK(end == caterpillar(5));
  CHECK(mv2.sides[0].label == EdgeLabel::make_side(2));
  CHECK(mv2.sides[1].label == EdgeLabel::make_side(3));
  CHECK(mv2.sides[2].label == EdgeLabel::make_diag({1, 3}));
  CHECK(mv2.sides[3].label == EdgeLabel::make_side(1));
  CHECK(mv2.sides[2].arc == arc_of({4, 5}));

  auto [other, mv3] = whitehead_move(caterpillar(5), {1, 3});
  CHECK(mv3.inserted == Diagonal{3, 4});
  CHECK(mv3.sides[0].label == EdgeLabel::make_diag({1, 2}));
  CHECK(other.diagonals() == std::vector<Diagonal>{{1, 2}, {3, 4}});
}

TEST_CASE("flip arcs partition the sides") {
  for (const Triangulation& t : enumerate_triangulations(6)) {
    for (const Diagonal& d : t.diagonals()) {
      auto [t2, mv] = whitehead_move(t, d);
      std::vector<int> all;
      for (int k = 0; k < 4; ++k)
        all.insert(all.end(), mv.sides[k].arc.begin(), mv.sides[k].arc.end());
      std::sort(all.begin(), all.end());
      std::vector<int> want(6);
      for (int i = 0; i < 6; ++i) want[i] = i + 1;
      CHECK(all == want);
      // removed spans sides 0+1, inserted spans sides 1+2
      std::vector<int> lower = mv.sides[0].arc;
      lower.insert(lower.end(), mv.sides[1].arc.begin(), mv.sides[1].arc.end());
      CHECK(make_diagonal(lower, 6) == d);
      auto [t3, back] = whitehead_move(t2, mv.inserted);
      CHECK(t3 == t);
    }
  }
}

TEST_CASE("shortest flip paths") {
  Triangulation a = caterpillar(5);
  Triangulation b(5, {{2, 3}, {2, 4}});
  auto path = flip_path(b, a);
  REQUIRE(path.size() == 2);
  CHECK(path[0].removed == Diagonal{2, 4});
  CHECK(path[1].removed == Diagonal{2, 3});
  CHECK(flip_path(a, a).empty());
  // the pentagon flip graph is a 5-cycle
  auto all = enumerate_triangulations(5);
  for (const auto& s : all)
    for (const auto& t : all) {
      auto p = flip_path(s, t);
      CHECK(p.size() <= 2);
      Triangulation cur = s;
      for (const auto& mv : p) cur = whitehead_move(cur, mv.removed).first;
      CHECK(cur == t);
    }
}

TEST_CASE("stage ordering") {
  auto stages = stage_ordering(caterpillar(6));
  REQUIRE(stages.size() == 3);
  CHECK(stages[0].first == Diagonal{1, 4});
  CHECK(stages[0].second == arc_of({1, 2, 3, 4}));
  CHECK(stages[1].second == arc_of({1, 2, 3}));
  CHECK(stages[2].second == arc_of({1, 2}));

  // without an arc of four sides the first stage is an ear complement
  Triangulation t(6, {{1, 3}, {2, 3}, {4, 5}});
  auto st = stage_ordering(t);
  REQUIRE(st.size() == 3);
  CHECK(st[0].first == Diagonal{2, 3});
  CHECK(st[0].second == arc_of({1, 4, 5, 6}));
  CHECK(st[1].first == Diagonal{1, 3});
  CHECK(st[1].second == arc_of({4, 5, 6}));
  CHECK(st[2].second == arc_of({4, 5}));

  for (const Triangulation& tr : enumerate_triangulations(6)) {
    auto s = stage_ordering(tr);
    CHECK(s[0].second.size() == 4);
    for (const auto& [d, arc] : s) {
      std::vector<int> ca = d.arc();
      std::set<int> have(arc.begin(), arc.end());
      std::set<int> canon(ca.begin(), ca.end());
      std::set<int> comp;
      for (int i = 1; i <= 6; ++i)
        if (!canon.count(i)) comp.insert(i);
      CHECK((have == canon || have == comp));
    }
  }
}

}  // TEST_SUITE
