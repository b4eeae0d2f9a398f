#pragma once

#include <utility>
#include <vector>

#include "ngon/frame.hpp"
#include "ngon/polytope.hpp"
#include "ngon/triangulation.hpp"

namespace ngon {

// expression tree for piecewise linear functions: affine leaves combined
// by pointwise minimum, sum, difference, and scaling
class TropExpr {
 public:
  enum class Kind { affine, min, sum, diff, scale };

  static TropExpr affine(AffineForm f);
  static TropExpr min(std::vector<TropExpr> parts);  // singletons collapse
  static TropExpr sum(TropExpr a, TropExpr b);
  static TropExpr diff(TropExpr a, TropExpr b);
  static TropExpr scale(const Rat& k, TropExpr a);

  Kind kind() const { return kind_; }
  const AffineForm& form() const { return form_; }
  const std::vector<TropExpr>& parts() const { return parts_; }
  const Rat& factor() const { return factor_; }

  Rat eval(const std::vector<Rat>& u) const;

 private:
  TropExpr() = default;
  Kind kind_ = Kind::affine;
  AffineForm form_;
  std::vector<TropExpr> parts_;
  Rat factor_;
};

struct PLMap {
  int in_dim = 0;
  std::vector<TropExpr> comps;

  int out_dim() const { return static_cast<int>(comps.size()); }
  std::vector<Rat> eval(const std::vector<Rat>& u) const;
};

PLMap identity_plmap(int dim);

// coordinate change of the moment coordinates under one flip: identity on
// the shared slots, and on the new diagonal slot an integral min formula
PLMap whitehead_plmap(const CoordinateFrame& from, const WhiteheadMove& mv);

// the same flip on diagonal length coordinates at fixed side lengths r
PLMap bending_plmap(const Triangulation& from, const WhiteheadMove& mv,
                    const std::vector<Rat>& r);

// maps applied right to left, so maps.back() acts first; the empty list
// gives the identity in the stated dimension
PLMap compose_plmaps(const std::vector<PLMap>& maps, int dim);

// every affine leaf has integer coefficients and constant, and every
// scaling factor is an integer
bool integrality_check(const PLMap& m);

// both sides of min(a,b) + min(-a,b) - b = min(a,-a,b,-b)
std::pair<TropExpr, TropExpr> min_identity(const TropExpr& a,
                                           const TropExpr& b);

// both sides of
// min(u1+u2,u3+u4) + min(u1-u2,u2-u1,u3-u4,u4-u3)
//   = min(u1+u4,u2+u3) + min(u1-u4,u4-u1,u2-u3,u3-u2)
std::pair<TropExpr, TropExpr> range_length_identity();

// m maps the integer points of "from" bijectively onto those of "to"
bool transform_polytope_check(const PLMap& m, const Polytope& from,
                              const Polytope& to);

}  // namespace ngon
