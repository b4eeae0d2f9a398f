#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ngon/frame.hpp"
#include "ngon/triangulation.hpp"

namespace ngon {

// weights of the bracket variables Z_ij, 1 <= i < j <= n: one entry per
// diagonal of t, equal to one exactly when the diagonal separates side i
// from side j
struct PlueckerWeights {
  std::vector<std::pair<int, int>> pairs;  // lexicographic
  std::vector<Diagonal> diags;             // sorted, as in t
  std::vector<std::vector<int>> w;         // w[pair][diag] in {0,1}

  int pair_index(int i, int j) const;
};

PlueckerWeights pluecker_weights(const Triangulation& t);

// one exchange relation among the Z's, deformed by one parameter per
// diagonal: three products with signs +,-,+ and an exponent vector each
struct QuadRelation {
  std::array<int, 4> quad;  // i < j < k < l
  std::array<std::array<std::pair<int, int>, 2>, 3> products;
  std::array<int, 3> signs;
  std::array<std::vector<int>, 3> texp;  // texp[term][diag]

  bool operator==(const QuadRelation&) const = default;
};

// all quads in lexicographic order; the exponents make every product of
// a relation carry the same total weight
std::vector<QuadRelation> deform_relations(const Triangulation& t);

// the same relations with every parameter except the one of diagonal
// alpha (index into the sorted diagonals) set to one
std::vector<QuadRelation> one_param_family(const Triangulation& t, int alpha);

// relations surviving at parameter zero: per quad exactly the two
// products with vanishing exponent remain, giving a binomial
struct BinomialRelation {
  std::array<int, 4> quad;
  std::array<std::array<std::pair<int, int>, 2>, 2> products;
  std::array<int, 2> signs;

  bool operator==(const BinomialRelation&) const = default;
};

std::vector<BinomialRelation> central_fiber(const Triangulation& t);

// the n(n-1)/2 torus fixed points, labelled by side pairs, written in the
// coordinate frame of t; these are exactly the vertices of the moment
// polytope
struct FixedPoint {
  std::pair<int, int> pair;
  std::vector<Rat> point;
};

std::vector<FixedPoint> fixed_points(const Triangulation& t,
                                     const Rat& perimeter);

// where the degenerate variety fails to be smooth: one stratum per
// diagonal, described by the four incident (edge, diagonal) pairs of the
// two triangles glued along it
struct SingularStratum {
  Diagonal d;
  std::array<EdgeLabel, 4> edges;
};

std::vector<SingularStratum> singular_strata(const Triangulation& t);

std::string to_string(const QuadRelation& r);
std::string to_string(const BinomialRelation& r);

}  // namespace ngon
