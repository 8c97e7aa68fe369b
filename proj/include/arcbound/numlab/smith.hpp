#pragma once

#include <vector>

#include "arcbound/numlab/intmatrix.hpp"

namespace arcbound::numlab {

/// S·M·T = D with S, T unimodular and D = diag(λ₁, …, λ_n), λ₁ | λ₂ | … , λ_i ≥ 0.
struct SmithForm {
  IntMatrix s, d, t;
  std::vector<Integer> lambda() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace arcbound::numlab
