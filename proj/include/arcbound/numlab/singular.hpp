#pragma once

#include <cstdint>

#include "arcbound/numlab/intmatrix.hpp"

namespace arcbound::numlab {

/// Number of points of ℙ^{n−1}(𝔽_p) with Q₁ = Q₂ = 0 and rank(∇Q₁, ∇Q₂) < 2,
/// where Q_i(x) = xᵗM_i x. Requires an odd prime p, n ≤ 4 and pⁿ ≤ 10⁷.
std::int64_t singular_locus_points(const IntMatrix& m1, const IntMatrix& m2, std::int64_t p);

/// Projective dimension of that locus, −1 when empty. The count N must fall in
/// exactly one window [p^d, 2^{n−1}·#ℙ^d(𝔽_p)]; otherwise IndeterminateError.
int singular_locus_dim(const IntMatrix& m1, const IntMatrix& m2, std::int64_t p);

/// D(q) = ∏_{p | q} p^{s_p + 1} for n ≥ 2, and gcd(q, Cont M₁, Cont M₂) for n = 1.
/// q must be odd.
Integer singular_factor(const IntMatrix& m1, const IntMatrix& m2, std::int64_t q);

}  // namespace arcbound::numlab
