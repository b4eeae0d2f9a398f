#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace ngon {

// Sides of the reference n-gon are e_1..e_n, where e_k joins polygon
// vertices k-1 and k (vertex 0 == vertex n). A diagonal cuts {1..n} into
// two cyclic arcs of sides; we store the arc that avoids side n, which is
// a plain interval [lo, hi] with 1 <= lo < hi <= n-1 and size <= n-2.
struct Diagonal {
  int lo = 0;
  int hi = 0;

  int size() const { return hi - lo + 1; }
  bool contains(int i) const { return lo <= i && i <= hi; }
  bool contains(const Diagonal& o) const { return lo <= o.lo && o.hi <= hi; }
  std::vector<int> arc() const;

  auto operator<=>(const Diagonal&) const = default;
};

// Accepts any cyclically consecutive arc of side indices (in any order);
// canonicalizes to the interval avoiding n. Throws on invalid arcs.
Diagonal make_diagonal(std::vector<int> arc, int n);

// Two diagonals cross iff their canonical intervals overlap properly
// (neither nested nor disjoint).
bool crossing(const Diagonal& a, const Diagonal& b);

std::string to_string(const Diagonal& d);

// An edge of the polygon: boundary side e_i or a diagonal.
struct EdgeLabel {
  enum class Kind { side, diag };
  Kind kind = Kind::side;
  int side = 0;  // valid when kind == side
  Diagonal d;    // valid when kind == diag

  static EdgeLabel make_side(int i) { return {Kind::side, i, {}}; }
  static EdgeLabel make_diag(const Diagonal& dd) { return {Kind::diag, 0, dd}; }
  bool is_side() const { return kind == Kind::side; }
  bool operator==(const EdgeLabel&) const = default;
};

std::string to_string(const EdgeLabel& e);

// One triangle of a triangulation. edges[0] is the edge separating the
// triangle from the part of the polygon containing side e_n ("outer"),
// edges[1], edges[2] are the left/right pieces. arcs[k] is the set of
// sides cut off by edges[k] as seen from inside the triangle; the three
// arcs partition {1..n}.
struct Triangle {
  std::array<EdgeLabel, 3> edges;
  std::array<std::vector<int>, 3> arcs;
};

class Triangulation {
 public:
  // Validates: n >= 3, exactly n-3 distinct pairwise non-crossing
  // diagonals. Builds the triangle decomposition or throws.
  Triangulation(int n, std::vector<Diagonal> diagonals);

  int n() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diags_; }
  // triangle k is cut off by diagonal k; triangle n-3 touches side e_n
  const std::vector<Triangle>& triangles() const { return tris_; }
  int diag_index(const Diagonal& d) const;  // -1 if absent
  // index of the triangle having diagonal k as a non-outer edge
  int parent_triangle(int diag_idx) const { return parent_tri_[diag_idx]; }

  bool operator==(const Triangulation& o) const {
    return n_ == o.n_ && diags_ == o.diags_;
  }

 private:
  int n_;
  std::vector<Diagonal> diags_;
  std::vector<Triangle> tris_;
  std::vector<int> parent_tri_;
};

Triangulation caterpillar(int n);

// All triangulations of the n-gon in lexicographic order of their sorted
// diagonal lists. Size is the Catalan number C_{n-2}.
std::vector<Triangulation> enumerate_triangulations(int n);

// Dual tree: one vertex per triangle, leaves 1..n for the sides.
struct TrivalentTree {
  int n = 0;
  std::vector<std::array<int, 3>> nbr;        // peer triangle or -1 (leaf)
  std::vector<std::array<EdgeLabel, 3>> edge; // labels, aligned with nbr
  std::vector<int> leaf_tri;                  // leaf_tri[i] = triangle of side e_i, 1-based
};

TrivalentTree dual_tree(const Triangulation& t);

// Diagonals on the unique path between leaves i and j, sorted.
std::vector<Diagonal> leaf_path(const TrivalentTree& tree, int i, int j);

// Quadrilateral data of a flip. sides are cyclic; removed spans
// sides[0]+sides[1], inserted spans sides[1]+sides[2]. Each arc is the
// side set cut off as seen from inside the quadrilateral; the four arcs
// partition {1..n}.
struct QuadSide {
  EdgeLabel label;
  std::vector<int> arc;
};

struct WhiteheadMove {
  Diagonal removed;
  Diagonal inserted;
  std::array<QuadSide, 4> sides;
};

std::pair<Triangulation, WhiteheadMove> whitehead_move(const Triangulation& t,
                                                       const Diagonal& d);

// Shortest flip sequence from t1 to t2 (BFS over the flip graph).
std::vector<WhiteheadMove> flip_path(const Triangulation& t1,
                                     const Triangulation& t2);

// Orders the diagonals so that each arc either contains or is disjoint
// from every later one, orienting arcs (possibly to the complement) so
// the first has size n-2. Returns (diagonal, oriented arc) pairs.
std::vector<std::pair<Diagonal, std::vector<int>>> stage_ordering(
    const Triangulation& t);

}  // namespace ngon
