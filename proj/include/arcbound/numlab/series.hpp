#pragma once

#include <cstdint>
#include <vector>

#include "arcbound/numlab/poly.hpp"

namespace arcbound::numlab {

/// A(q) = q^{-n} Σ*_{a mod q} Σ_{x mod q} e_q(a₁F(x) + a₂G(x)). Exact: the
/// a-sum of each term is the integer Σ_{e | (q, F(x), G(x))} μ(q/e) e².
Rational local_density(const CubicPoly& f, const CubicPoly& g, std::int64_t q);

struct SeriesTerm {
  std::int64_t q;
  Rational a;
};

struct SeriesPartial {
  Rational value;  // 𝔖(R) = Σ_{q ≤ R} A(q)
  std::vector<SeriesTerm> terms;
};

/// n ≤ 3 and Σ_{q ≤ R} q^{n+2} ≤ 10⁹.
SeriesPartial singular_series_partial(const CubicPoly& f, const CubicPoly& g, std::int64_t r);

/// a_p(k) = p^{-kn} Σ*_{a mod p^k} |S_{a, p^k}|.
double absolute_density(const CubicPoly& f, const CubicPoly& g, std::int64_t p, int k);

}  // namespace arcbound::numlab
