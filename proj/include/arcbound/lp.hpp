#pragma once

#include <vector>

#include "arcbound/rational.hpp"

namespace arcbound {

/// a·x ≤ b
struct HalfSpace {
  std::vector<Rational> a;
  Rational b;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> point;
};

// Exact two-phase dense simplex with Bland's rule over free variables x ∈ Q^dim.
LpResult solve_lp(const std::vector<HalfSpace>& rows, const std::vector<Rational>& objective,
                  std::size_t dim);
bool lp_feasible(const std::vector<HalfSpace>& rows, std::size_t dim);

}  // namespace arcbound
