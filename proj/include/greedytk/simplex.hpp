#pragma once

#include <vector>

namespace greedytk {

struct LpResult {
  bool optimal = false;     // false means unbounded or malformed input
  double value = 0.0;
  std::vector<double> x;    // primal solution when optimal
};

/// Maximizes c*x subject to A x <= b, x >= 0, where b >= 0 (the origin is
/// feasible, so no phase-1 is needed). Dense tableau simplex with Bland's
/// rule. Sized for the dual-norm LPs here: tens of variables, a few hundred
/// constraints.
LpResult simplex_max(const std::vector<std::vector<double>>& a,
                     const std::vector<double>& b, const std::vector<double>& c);

}  // namespace greedytk
