#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "arcbound/numlab/poly.hpp"

namespace arcbound::numlab {

/// Complex value with a running upper bound on accumulated rounding error.
struct ComplexVal {
  long double re = 0, im = 0, err = 0;

  long double abs() const;
  std::complex<long double> value() const { return {re, im}; }
};

ComplexVal operator*(const ComplexVal& a, const ComplexVal& b);
ComplexVal operator+(const ComplexVal& a, const ComplexVal& b);

/// Σ_k w_k e_q(k) for integer weights, with an error budget from Σ|w_k|.
ComplexVal phase_sum(const std::vector<std::int64_t>& weights, std::int64_t q);

/// S(a, q; m) = Σ_{x mod q} e_q(a₁F(x) + a₂G(x) + m·x). Needs gcd(a₁, a₂, q) = 1, qⁿ ≤ 10⁷.
ComplexVal exp_sum_pointwise(const QuadPoly& f, const QuadPoly& g, std::int64_t a1, std::int64_t a2,
                             std::int64_t q, const Vec& m);

/// S(q; m) = Σ*_{a mod q} S(a, q; m). Needs q²·qⁿ ≤ 10⁸.
ComplexVal exp_sum_averaged(const QuadPoly& f, const QuadPoly& g, std::int64_t q, const Vec& m);

/// Same sums for cubic polynomials, used by the local densities.
ComplexVal exp_sum_pointwise(const CubicPoly& f, const CubicPoly& g, std::int64_t a1,
                             std::int64_t a2, std::int64_t q, const Vec& m);
ComplexVal exp_sum_averaged(const CubicPoly& f, const CubicPoly& g, std::int64_t q, const Vec& m);

/// |S(a, q; m)| against 2^{n/2} q^{n/2} #Null_q(M)^{1/2} Δ_q(m + 𝔟), where
/// a₁F + a₂G = xᵗMx + 𝔟·x + 𝔠.
struct PropCheck {
  long double lhs = 0, rhs = 0, err = 0;
  Integer null_count;
  int delta = 0;
  bool holds = false;
};
PropCheck check_prop_t600(const QuadPoly& f, const QuadPoly& g, std::int64_t a1, std::int64_t a2,
                          std::int64_t q, const Vec& m);

/// One-variable form: 2^{1/2} q^{1/2} (q, M)^{1/2} [(q, M) | m + b].
PropCheck check_prop_n1(const QuadPoly& f, const QuadPoly& g, std::int64_t a1, std::int64_t a2,
                        std::int64_t q, std::int64_t m);

}  // namespace arcbound::numlab
