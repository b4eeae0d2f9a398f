#include "ngon/pluecker.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngon {

int PlueckerWeights::pair_index(int i, int j) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair{i, j});
  if (it == pairs.end() || *it != std::pair{i, j})
    throw std::invalid_argument("no bracket variable for that pair");
  return static_cast<int>(it - pairs.begin());
}

PlueckerWeights pluecker_weights(const Triangulation& t) {
  PlueckerWeights pw;
  pw.diags = t.diagonals();
  const TrivalentTree tree = dual_tree(t);
  for (int i = 1; i <= t.n(); ++i)
    for (int j = i + 1; j <= t.n(); ++j) {
      pw.pairs.emplace_back(i, j);
      const std::vector<Diagonal> path = leaf_path(tree, i, j);
      std::vector<int> row(pw.diags.size(), 0);
      for (size_t a = 0; a < pw.diags.size(); ++a)
        if (std::binary_search(path.begin(), path.end(), pw.diags[a]))
          row[a] = 1;
      pw.w.push_back(std::move(row));
    }
  return pw;
}

std::vector<QuadRelation> deform_relations(const Triangulation& t) {
  const PlueckerWeights pw = pluecker_weights(t);
  const size_t nd = pw.diags.size();
  std::vector<QuadRelation> out;
  for (int i = 1; i <= t.n(); ++i)
    for (int j = i + 1; j <= t.n(); ++j)
      for (int k = j + 1; k <= t.n(); ++k)
        for (int l = k + 1; l <= t.n(); ++l) {
          QuadRelation r;
          r.quad = {i, j, k, l};
          r.products = {{{{{i, j}, {k, l}}}, {{{i, k}, {j, l}}}, {{{i, l}, {j, k}}}}};
          r.signs = {1, -1, 1};
          std::array<std::vector<int>, 3> raw;
          for (int m = 0; m < 3; ++m) {
            raw[m].assign(nd, 0);
            for (const auto& [a, b] : r.products[m]) {
              const auto& row = pw.w[pw.pair_index(a, b)];
              for (size_t s = 0; s < nd; ++s) raw[m][s] += row[s];
            }
          }
          for (int m = 0; m < 3; ++m) {
            r.texp[m].assign(nd, 0);
            for (size_t s = 0; s < nd; ++s) {
              const int top = std::max({raw[0][s], raw[1][s], raw[2][s]});
              const int gap = top - raw[m][s];
              if (gap % 2 != 0)
                throw std::logic_error("odd weight gap in an exchange relation");
              r.texp[m][s] = gap / 2;
            }
          }
          out.push_back(std::move(r));
        }
  return out;
}

std::vector<QuadRelation> one_param_family(const Triangulation& t, int alpha) {
  const auto& diags = t.diagonals();
  if (alpha < 0 || alpha >= static_cast<int>(diags.size()))
    throw std::invalid_argument("diagonal index out of range");
  const Diagonal d = diags[alpha];
  std::vector<QuadRelation> out;
  for (int i = 1; i <= t.n(); ++i)
    for (int j = i + 1; j <= t.n(); ++j)
      for (int k = j + 1; k <= t.n(); ++k)
        for (int l = k + 1; l <= t.n(); ++l) {
          QuadRelation r;
          r.quad = {i, j, k, l};
          r.products = {{{{{i, j}, {k, l}}}, {{{i, k}, {j, l}}}, {{{i, l}, {j, k}}}}};
          r.signs = {1, -1, 1};
          for (int m = 0; m < 3; ++m) r.texp[m].assign(diags.size(), 0);
          // positions of the quad entries inside the diagonal's arc form a
          // contiguous run; only runs of length two deform the relation
          std::vector<int> run;
          for (int m = 0; m < 4; ++m)
            if (d.contains(r.quad[m])) run.push_back(m);
          for (size_t s = 1; s < run.size(); ++s)
            if (run[s] != run[s - 1] + 1)
              throw std::logic_error("arc meets a quad in a broken run");
          if (run.size() == 2) {
            const int deformed = run[0] == 1 ? 2 : 0;
            r.texp[deformed][alpha] = 1;
          }
          out.push_back(std::move(r));
        }
  return out;
}

std::vector<BinomialRelation> central_fiber(const Triangulation& t) {
  std::vector<BinomialRelation> out;
  for (const QuadRelation& r : deform_relations(t)) {
    BinomialRelation b;
    b.quad = r.quad;
    int kept = 0;
    for (int m = 0; m < 3; ++m) {
      const bool zero = std::all_of(r.texp[m].begin(), r.texp[m].end(),
                                    [](int e) { return e == 0; });
      if (!zero) continue;
      if (kept == 2) throw std::logic_error("degenerate relation is not binomial");
      b.products[kept] = r.products[m];
      b.signs[kept] = r.signs[m];
      ++kept;
    }
    if (kept != 2) throw std::logic_error("degenerate relation is not binomial");
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<FixedPoint> fixed_points(const Triangulation& t,
                                     const Rat& perimeter) {
  const CoordinateFrame f = frame_of(t, perimeter);
  std::vector<FixedPoint> out;
  for (int k = 1; k <= t.n(); ++k)
    for (int l = k + 1; l <= t.n(); ++l) {
      FixedPoint fp;
      fp.pair = {k, l};
      fp.point.assign(f.dim(), Rat(0));
      for (int i = 1; i < t.n(); ++i)
        if (i == k || i == l) fp.point[f.e_index(i)] = perimeter;
      for (const Diagonal& d : f.diags)
        if (d.contains(k) && d.contains(l))
          fp.point[f.d_index(d)] = perimeter;
      out.push_back(std::move(fp));
    }
  return out;
}

std::vector<SingularStratum> singular_strata(const Triangulation& t) {
  std::vector<SingularStratum> out;
  const auto& diags = t.diagonals();
  for (size_t a = 0; a < diags.size(); ++a) {
    const Triangle& below = t.triangles()[a];
    const Triangle& above = t.triangles()[t.parent_triangle(static_cast<int>(a))];
    const EdgeLabel mine = EdgeLabel::make_diag(diags[a]);
    const bool left = above.edges[1] == mine;
    if (!left && !(above.edges[2] == mine))
      throw std::logic_error("diagonal missing from its gluing triangle");
    const EdgeLabel sibling = left ? above.edges[2] : above.edges[1];
    out.push_back({diags[a], {below.edges[1], below.edges[2], above.edges[0], sibling}});
  }
  return out;
}

namespace {

std::string bracket(const std::pair<int, int>& p) {
  return "Z(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string product_string(const std::array<std::pair<int, int>, 2>& prod,
                           const std::vector<int>* texp) {
  std::string s;
  if (texp)
    for (size_t a = 0; a < texp->size(); ++a) {
      if ((*texp)[a] == 0) continue;
      s += "t" + std::to_string(a + 1);
      if ((*texp)[a] > 1) s += "^" + std::to_string((*texp)[a]);
      s += "*";
    }
  return s + bracket(prod[0]) + "*" + bracket(prod[1]);
}

}  // namespace

std::string to_string(const QuadRelation& r) {
  std::string s;
  for (int m = 0; m < 3; ++m) {
    if (m > 0) s += r.signs[m] < 0 ? " - " : " + ";
    else if (r.signs[m] < 0) s += "-";
    s += product_string(r.products[m], &r.texp[m]);
  }
  return s;
}

std::string to_string(const BinomialRelation& r) {
  std::string s;
  for (int m = 0; m < 2; ++m) {
    if (m > 0) s += r.signs[m] < 0 ? " - " : " + ";
    else if (r.signs[m] < 0) s += "-";
    s += product_string(r.products[m], nullptr);
  }
  return s;
}

}  // namespace ngon
