#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ngon/frame.hpp"
#include "ngon/plmap.hpp"
#include "ngon/triangulation.hpp"

namespace ngon {

// variable slots shared by every triangulation of the same n-gon: the
// sides y_{e_1}..y_{e_{n-1}}, the perimeter variable Q, then every
// diagonal ordered by its arc
struct VarTable {
  int n = 0;
  std::vector<Diagonal> diags;

  int vars() const { return n + static_cast<int>(diags.size()); }
  int e_var(int i) const;
  int q_var() const { return n - 1; }
  int d_var(const Diagonal& d) const;
  std::string name(int var) const;
};

VarTable var_table(int n);

// Laurent polynomial with doubled exponents, so half powers of the side
// and Q variables stay integral; diagonal slots always carry even entries
struct LaurentPoly {
  std::map<std::vector<int>, Rat> terms;

  static LaurentPoly monomial(std::vector<int> exps, const Rat& coeff = 1);
  static LaurentPoly unit(int vars);

  void add_term(const std::vector<int>& exps, const Rat& coeff);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const = default;
  size_t size() const { return terms.size(); }
};

std::string poly_string(const LaurentPoly& p,
                        const std::function<std::string(int)>& name);
std::string to_string(const VarTable& vt, const LaurentPoly& p);

struct RationalExpr {
  LaurentPoly num, den;
  bool subtraction_free = true;
};

// clears common monomial factors and content, fixes the sign so the
// denominator's leading coefficient is positive
RationalExpr make_rational(LaurentPoly num, LaurentPoly den);

bool rational_equal(const RationalExpr& a, const RationalExpr& b);

// the monomial attached to an edge: y_{e_i}^{1/2} for a side, Q over the
// root of the side product for e_n, and for a diagonal the inverse
// diagonal variable times the root of its arc's side product
LaurentPoly edge_monomial(const VarTable& vt, const EdgeLabel& e);

// sum over all triangles of the three cyclic ratios of edge monomials
LaurentPoly potential(const Triangulation& t);

// rewriting rule for the removed diagonal variable of a flip, expressed
// in the variables present after the flip; subtraction free
struct GeomLift {
  Diagonal removed;
  RationalExpr value;
};

GeomLift geometric_lift(const WhiteheadMove& mv, int n);

// substitute var := value into x; stored exponents of var must be even
RationalExpr substitute(const RationalExpr& x, int var,
                        const RationalExpr& value);

struct LiftReport {
  bool equal = false;
  int moves = 0;
  size_t num_terms = 0;
  size_t den_terms = 0;
};

// rewrite potential(t1) along a shortest flip path and compare the result
// with potential(t2) as rational functions
LiftReport lift_verify(const Triangulation& t1, const Triangulation& t2);

// min-plus shadow of a subtraction free expression: monomials become
// affine forms in the frame coordinates (Q contributes the perimeter),
// sums become minima, the quotient a difference
TropExpr tropicalize(const CoordinateFrame& f, const RationalExpr& x);

}  // namespace ngon
