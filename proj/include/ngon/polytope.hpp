#pragma once

#include <utility>
#include <vector>

#include "ngon/rational.hpp"

namespace ngon {

// affine functional <v,u> + c
struct AffineForm {
  std::vector<Rat> v;
  Rat c;

  Rat eval(const std::vector<Rat>& u) const;
  bool operator==(const AffineForm&) const = default;
};

// half space <v,u> >= tau
struct Halfspace {
  std::vector<Rat> v;
  Rat tau;

  bool operator==(const Halfspace&) const = default;
};

class Polytope {
 public:
  Polytope(int dim, std::vector<Halfspace> ineqs);

  int dim() const { return dim_; }
  const std::vector<Halfspace>& ineqs() const { return ineqs_; }

  bool contains(const std::vector<Rat>& p) const;
  bool empty() const;
  Polytope dilate(const Rat& k) const;  // k > 0, maps u to k*u

  // drops inequalities implied by the remaining ones, scanning in order
  Polytope remove_redundant() const;

  // all vertices, sorted; requires boundedness
  std::vector<std::vector<Rat>> vertices() const;

  std::vector<std::vector<long long>> lattice_points() const;
  long long lattice_count() const;
  long long interior_lattice_count() const;

  // leading Ehrhart coefficient, i.e. the euclidean volume; zero when the
  // polytope is empty or not full dimensional
  Rat ehrhart_volume() const;

 private:
  int dim_;
  std::vector<Halfspace> ineqs_;
};

}  // namespace ngon
