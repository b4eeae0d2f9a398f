#pragma once

#include <vector>

#include "ngon/rational.hpp"

namespace ngon {

enum class LPStatus { optimal, unbounded, infeasible };

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  Rat value;               // objective value when optimal
  std::vector<Rat> point;  // a maximizer when optimal
};

// maximize <c,x> over { x : <a_i,x> >= b_i for all i }, x unrestricted.
// Exact rational two-phase simplex with Bland's rule.
LPResult lp_maximize(const std::vector<std::vector<Rat>>& a,
                     const std::vector<Rat>& b, const std::vector<Rat>& c);

}  // namespace ngon
