#include "ngon/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ngon {

std::vector<int> Diagonal::arc() const {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

Diagonal make_diagonal(std::vector<int> arc, int n) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 sides");
  std::sort(arc.begin(), arc.end());
  arc.erase(std::unique(arc.begin(), arc.end()), arc.end());
  int sz = static_cast<int>(arc.size());
  if (sz < 2 || sz > n - 2)
    throw std::invalid_argument("arc must cut off between 2 and n-2 sides");
  for (int v : arc)
    if (v < 1 || v > n) throw std::invalid_argument("side index out of range");
  std::set<int> s(arc.begin(), arc.end());
  int wraps = 0;
  for (int v : arc)
    if (!s.count(v % n + 1)) ++wraps;
  if (wraps != 1) throw std::invalid_argument("arc is not cyclically consecutive");
  if (s.count(n)) {
    // store the complementary arc, which avoids n
    std::vector<int> comp;
    for (int i = 1; i < n; ++i)
      if (!s.count(i)) comp.push_back(i);
    return Diagonal{comp.front(), comp.back()};
  }
  return Diagonal{arc.front(), arc.back()};
}

bool crossing(const Diagonal& a, const Diagonal& b) {
  return (a.lo < b.lo && b.lo <= a.hi && a.hi < b.hi) ||
         (b.lo < a.lo && a.lo <= b.hi && b.hi < a.hi);
}

std::string to_string(const Diagonal& d) {
  std::string out = "{";
  for (int i = d.lo; i <= d.hi; ++i) {
    if (i > d.lo) out += ",";
    out += std::to_string(i);
  }
  return out + "}";
}

std::string to_string(const EdgeLabel& e) {
  if (e.is_side()) return "e" + std::to_string(e.side);
  return "d" + to_string(e.d);
}

namespace {

struct Node {
  int lo, hi;
  int diag_idx;  // >= 0 diagonal, -1 leaf, -2 root
  std::vector<int> kids;
};

}  // namespace

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals)
    : n_(n), diags_(std::move(diagonals)) {
  if (n_ < 3) throw std::invalid_argument("polygon needs at least 3 sides");
  for (const auto& d : diags_)
    if (d.lo < 1 || d.hi > n_ - 1 || d.size() < 2 || d.size() > n_ - 2)
      throw std::invalid_argument("invalid diagonal " + to_string(d));
  std::sort(diags_.begin(), diags_.end());
  if (std::adjacent_find(diags_.begin(), diags_.end()) != diags_.end())
    throw std::invalid_argument("repeated diagonal");
  if (static_cast<int>(diags_.size()) != n_ - 3)
    throw std::invalid_argument("a triangulation has exactly n-3 diagonals");
  for (size_t i = 0; i < diags_.size(); ++i)
    for (size_t j = i + 1; j < diags_.size(); ++j)
      if (crossing(diags_[i], diags_[j]))
        throw std::invalid_argument("diagonals " + to_string(diags_[i]) +
                                    " and " + to_string(diags_[j]) + " cross");

  // Nesting forest of the arcs: the diagonals' intervals together with the
  // single sides [i,i] and the full interval [1,n-1] for side e_n. Parent =
  // smallest strictly containing interval; a preorder sort makes the stack
  // scan linear.
  std::vector<Node> nodes;
  nodes.push_back({1, n_ - 1, -2, {}});
  for (size_t k = 0; k < diags_.size(); ++k)
    nodes.push_back({diags_[k].lo, diags_[k].hi, static_cast<int>(k), {}});
  for (int i = 1; i <= n_ - 1; ++i) nodes.push_back({i, i, -1, {}});

  std::vector<int> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (nodes[a].lo != nodes[b].lo) return nodes[a].lo < nodes[b].lo;
    return nodes[a].hi > nodes[b].hi;
  });

  std::vector<int> stack;
  for (int id : order) {
    while (!stack.empty() && !(nodes[stack.back()].lo <= nodes[id].lo &&
                               nodes[id].hi <= nodes[stack.back()].hi))
      stack.pop_back();
    if (!stack.empty()) nodes[stack.back()].kids.push_back(id);
    stack.push_back(id);
  }

  // Each non-leaf interval must be tiled by exactly two children.
  tris_.assign(diags_.size() + 1, Triangle{});
  parent_tri_.assign(diags_.size(), -1);
  auto tri_index = [&](const Node& nd) {
    return nd.diag_idx == -2 ? static_cast<int>(diags_.size()) : nd.diag_idx;
  };
  std::vector<int> all_sides(n_);
  std::iota(all_sides.begin(), all_sides.end(), 1);
  for (const Node& nd : nodes) {
    if (nd.diag_idx == -1) continue;
    if (nd.kids.size() != 2)
      throw std::logic_error("interval split into more than two pieces");
    const Node& c1 = nodes[nd.kids[0]];
    const Node& c2 = nodes[nd.kids[1]];
    if (c1.lo != nd.lo || c1.hi + 1 != c2.lo || c2.hi != nd.hi)
      throw std::logic_error("children do not tile their interval");
    Triangle tri;
    if (nd.diag_idx == -2) {
      tri.edges[0] = EdgeLabel::make_side(n_);
      tri.arcs[0] = {n_};
    } else {
      tri.edges[0] = EdgeLabel::make_diag(diags_[nd.diag_idx]);
      tri.arcs[0].clear();
      for (int i = 1; i <= n_; ++i)
        if (i < nd.lo || i > nd.hi) tri.arcs[0].push_back(i);
    }
    const Node* ch[2] = {&c1, &c2};
    for (int k = 0; k < 2; ++k) {
      if (ch[k]->diag_idx == -1) {
        tri.edges[k + 1] = EdgeLabel::make_side(ch[k]->lo);
      } else {
        tri.edges[k + 1] = EdgeLabel::make_diag(diags_[ch[k]->diag_idx]);
        parent_tri_[ch[k]->diag_idx] = tri_index(nd);
      }
      tri.arcs[k + 1].clear();
      for (int i = ch[k]->lo; i <= ch[k]->hi; ++i) tri.arcs[k + 1].push_back(i);
    }
    tris_[tri_index(nd)] = tri;
  }
}

int Triangulation::diag_index(const Diagonal& d) const {
  auto it = std::lower_bound(diags_.begin(), diags_.end(), d);
  if (it == diags_.end() || !(*it == d)) return -1;
  return static_cast<int>(it - diags_.begin());
}

Triangulation caterpillar(int n) {
  std::vector<Diagonal> ds;
  for (int k = 2; k <= n - 2; ++k) ds.push_back({1, k});
  return Triangulation(n, ds);
}

namespace {

void enumerate_rec(int n, const std::vector<Diagonal>& cands, size_t idx,
                   std::vector<Diagonal>& chosen,
                   std::vector<Triangulation>& out) {
  if (static_cast<int>(chosen.size()) == n - 3) {
    out.emplace_back(n, chosen);
    return;
  }
  int need = n - 3 - static_cast<int>(chosen.size());
  for (size_t i = idx; i + need <= cands.size(); ++i) {
    bool ok = true;
    for (const auto& c : chosen)
      if (crossing(c, cands[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(cands[i]);
    enumerate_rec(n, cands, i + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 sides");
  std::vector<Diagonal> cands;
  for (int lo = 1; lo <= n - 2; ++lo)
    for (int hi = lo + 1; hi <= n - 1 && hi - lo + 1 <= n - 2; ++hi)
      cands.push_back({lo, hi});
  std::vector<Triangulation> out;
  std::vector<Diagonal> chosen;
  enumerate_rec(n, cands, 0, chosen, out);
  return out;
}

TrivalentTree dual_tree(const Triangulation& t) {
  TrivalentTree tree;
  tree.n = t.n();
  size_t m = t.triangles().size();
  tree.nbr.assign(m, {-1, -1, -1});
  tree.edge.assign(m, {});
  tree.leaf_tri.assign(t.n() + 1, -1);
  for (size_t k = 0; k < m; ++k) {
    const Triangle& tri = t.triangles()[k];
    for (int e = 0; e < 3; ++e) {
      tree.edge[k][e] = tri.edges[e];
      if (tri.edges[e].is_side()) {
        tree.nbr[k][e] = -1;
        tree.leaf_tri[tri.edges[e].side] = static_cast<int>(k);
      } else {
        int di = t.diag_index(tri.edges[e].d);
        // the diagonal separates its own triangle from the parent one
        tree.nbr[k][e] = (static_cast<int>(k) == di) ? t.parent_triangle(di) : di;
      }
    }
  }
  return tree;
}

std::vector<Diagonal> leaf_path(const TrivalentTree& tree, int i, int j) {
  if (i < 1 || i > tree.n || j < 1 || j > tree.n || i == j)
    throw std::invalid_argument("need two distinct sides");
  int from = tree.leaf_tri[i];
  int to = tree.leaf_tri[j];
  std::vector<int> prev(tree.nbr.size(), -2);
  std::deque<int> q{from};
  prev[from] = -1;
  while (!q.empty()) {
    int cur = q.front();
    q.pop_front();
    if (cur == to) break;
    for (int e = 0; e < 3; ++e) {
      int nxt = tree.nbr[cur][e];
      if (nxt >= 0 && prev[nxt] == -2) {
        prev[nxt] = cur;
        q.push_back(nxt);
      }
    }
  }
  std::vector<Diagonal> out;
  for (int cur = to; prev[cur] != -1; cur = prev[cur]) {
    for (int e = 0; e < 3; ++e)
      if (tree.nbr[cur][e] == prev[cur]) out.push_back(tree.edge[cur][e].d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Triangulation, WhiteheadMove> whitehead_move(const Triangulation& t,
                                                       const Diagonal& d) {
  int k = t.diag_index(d);
  if (k < 0) throw std::invalid_argument("not a diagonal of this triangulation");
  const Triangle& below = t.triangles()[k];
  const Triangle& above = t.triangles()[t.parent_triangle(k)];
  QuadSide c1{below.edges[1], below.arcs[1]};
  QuadSide c2{below.edges[2], below.arcs[2]};
  QuadSide outer{above.edges[0], above.arcs[0]};
  int pos = (above.edges[1] == EdgeLabel::make_diag(d)) ? 1 : 2;
  QuadSide sib{above.edges[3 - pos], above.arcs[3 - pos]};

  WhiteheadMove mv;
  mv.removed = d;
  // cyclic order around the quadrilateral; the flip exchanges the diagonal
  // cutting off sides[0]+sides[1] for the one cutting off sides[1]+sides[2]
  mv.sides = (pos == 1) ? std::array<QuadSide, 4>{c1, c2, sib, outer}
                        : std::array<QuadSide, 4>{c1, c2, outer, sib};
  std::vector<int> arc = mv.sides[1].arc;
  arc.insert(arc.end(), mv.sides[2].arc.begin(), mv.sides[2].arc.end());
  mv.inserted = make_diagonal(arc, t.n());

  std::vector<Diagonal> ds = t.diagonals();
  ds.erase(ds.begin() + k);
  ds.push_back(mv.inserted);
  return {Triangulation(t.n(), ds), mv};
}

std::vector<WhiteheadMove> flip_path(const Triangulation& t1,
                                     const Triangulation& t2) {
  if (t1.n() != t2.n()) throw std::invalid_argument("polygon sizes differ");
  using Key = std::vector<Diagonal>;
  std::map<Key, std::pair<Key, Diagonal>> prev;
  prev[t1.diagonals()] = {t1.diagonals(), Diagonal{}};
  std::deque<Triangulation> q{t1};
  while (!q.empty() && !prev.count(t2.diagonals())) {
    Triangulation cur = q.front();
    q.pop_front();
    for (const Diagonal& d : cur.diagonals()) {
      auto [nxt, mv] = whitehead_move(cur, d);
      if (!prev.count(nxt.diagonals())) {
        prev[nxt.diagonals()] = {cur.diagonals(), d};
        q.push_back(nxt);
      }
    }
  }
  std::vector<Diagonal> flips;
  for (Key at = t2.diagonals(); at != t1.diagonals(); at = prev[at].first)
    flips.push_back(prev[at].second);
  std::reverse(flips.begin(), flips.end());

  std::vector<WhiteheadMove> out;
  Triangulation cur = t1;
  for (const Diagonal& d : flips) {
    auto [nxt, mv] = whitehead_move(cur, d);
    out.push_back(mv);
    cur = nxt;
  }
  return out;
}

std::vector<std::pair<Diagonal, std::vector<int>>> stage_ordering(
    const Triangulation& t) {
  int n = t.n();
  std::vector<std::pair<Diagonal, std::vector<int>>> out;
  if (n == 3) return out;

  // the first stage needs an arc of n-2 sides: either a diagonal already
  // cutting off n-2 sides, or an ear taken with its complementary arc
  int first = -1;
  for (size_t k = 0; k < t.diagonals().size(); ++k)
    if (t.diagonals()[k].size() == n - 2) first = static_cast<int>(k);
  if (first < 0)
    for (size_t k = 0; k < t.diagonals().size(); ++k)
      if (t.diagonals()[k].size() == 2) {
        first = static_cast<int>(k);
        break;
      }
  const Diagonal d1 = t.diagonals()[first];
  std::set<int> I1;
  if (d1.size() == n - 2) {
    for (int i = d1.lo; i <= d1.hi; ++i) I1.insert(i);
  } else {
    for (int i = 1; i <= n; ++i)
      if (!d1.contains(i)) I1.insert(i);
  }
  out.emplace_back(d1, std::vector<int>(I1.begin(), I1.end()));

  std::vector<std::pair<Diagonal, std::vector<int>>> rest;
  for (const Diagonal& d : t.diagonals()) {
    if (d == d1) continue;
    std::vector<int> arc = d.arc();
    bool inside = std::all_of(arc.begin(), arc.end(),
                              [&](int i) { return I1.count(i) > 0; });
    if (!inside) {
      arc.clear();
      for (int i = 1; i <= n; ++i)
        if (!d.contains(i)) arc.push_back(i);
      inside = std::all_of(arc.begin(), arc.end(),
                           [&](int i) { return I1.count(i) > 0; });
    }
    if (!inside)
      throw std::logic_error("no orientation of " + to_string(d) +
                             " fits inside the first stage");
    rest.emplace_back(d, arc);
  }
  std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size())
      return a.second.size() > b.second.size();
    return a.second < b.second;
  });
  out.insert(out.end(), rest.begin(), rest.end());

  for (size_t a = 0; a < out.size(); ++a)
    for (size_t b = a + 1; b < out.size(); ++b) {
      std::set<int> A(out[a].second.begin(), out[a].second.end());
      bool nested = std::all_of(out[b].second.begin(), out[b].second.end(),
                                [&](int i) { return A.count(i) > 0; });
      bool disjoint = std::none_of(out[b].second.begin(), out[b].second.end(),
                                   [&](int i) { return A.count(i) > 0; });
      if (!nested && !disjoint)
        throw std::logic_error("stage arcs fail the nesting property");
    }
  return out;
}

}  // namespace ngon
