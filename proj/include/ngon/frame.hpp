#pragma once

#include <utility>
#include <vector>

#include "ngon/polytope.hpp"
#include "ngon/triangulation.hpp"

namespace ngon {

// Coordinates attached to a triangulation: one slot per side e_1..e_{n-1}
// followed by one per diagonal in sorted order; dimension 2n-4. The length
// of e_n is recovered from the fixed perimeter.
struct CoordinateFrame {
  int n = 0;
  Rat perimeter;
  std::vector<Diagonal> diags;

  int dim() const { return n - 1 + static_cast<int>(diags.size()); }
  int e_index(int i) const;
  int d_index(const Diagonal& d) const;
};

CoordinateFrame frame_of(const Triangulation& t, const Rat& perimeter);

// edge length as an affine form in the frame coordinates
AffineForm length_form(const CoordinateFrame& f, const EdgeLabel& e);

// three triangle inequalities per triangle; all coefficients integral
Polytope moment_polytope(const Triangulation& t, const Rat& perimeter);

// side lengths fixed at r (strict polygon inequality required); the
// coordinates are the diagonal lengths in sorted order
Polytope bending_polytope(const Triangulation& t, const std::vector<Rat>& r);

// images of the n(n-1)/2 two-element side sets, sorted; these are exactly
// the vertices of the moment polytope
std::vector<std::vector<Rat>> predicted_vertices(const Triangulation& t,
                                                 const Rat& perimeter);

// the point giving every edge length one
std::vector<Rat> reflexive_shift(const CoordinateFrame& f);

// true when, after centering at the shift point, every facet has lattice
// distance one and the shift is the unique interior lattice point
std::pair<bool, std::vector<Rat>> reflexivity_check(const Triangulation& t,
                                                    const Rat& perimeter);

}  // namespace ngon
