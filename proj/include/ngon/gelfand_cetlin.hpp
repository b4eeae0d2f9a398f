#pragma once

#include <string>
#include <vector>

#include "ngon/laurent.hpp"
#include "ngon/plmap.hpp"
#include "ngon/polytope.hpp"
#include "ngon/triangulation.hpp"

namespace ngon {

// variable slots for the staircase pattern: the free entries in the order
// l(1,1), l(2,1), l(2,2), ..., l(n-2,1), l(n-2,2), l(n-1,2), then Q
struct GCVarTable {
  int n = 0;

  int coords() const { return 2 * n - 4; }
  int vars() const { return 2 * n - 3; }
  int idx1(int k) const;  // row k first entry, 1 <= k <= n-2
  int idx2(int k) const;  // row k second entry, 2 <= k <= n-1
  int q_var() const { return 2 * n - 4; }
  std::string name(int var) const;
};

GCVarTable gc_vars(int n);

// affine change from the length frame of the caterpillar to the free
// pattern entries; other triangulations are rejected
PLMap gc_map(const Triangulation& t, const Rat& perimeter);

// determinant of the linear part of an affine square map
Rat affine_map_determinant(const PLMap& m);

// the interlacing inequalities of the pattern, three per arrow block;
// coordinates are the free entries in table order
Polytope gc_polytope(int n, const Rat& perimeter);

// one ratio term per interlacing arrow, with the fixed top entry giving Q
// and the fixed bottom entry giving one
LaurentPoly potential_gc(int n);

// the caterpillar potential pushed through the monomial change of
// variables attached to gc_map, written in the pattern variables
LaurentPoly ehx_form(int n);

std::string to_string(const GCVarTable& vt, const LaurentPoly& p);

}  // namespace ngon
