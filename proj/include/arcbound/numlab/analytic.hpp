#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "arcbound/numlab/poly.hpp"

namespace arcbound::numlab {

/// Smooth even bump on (−1, 1): exp(−1/(1 − t²)), zero outside.
double bump(double t);

/// ω(x) = ∏_j bump((x_j − x0_j)/ρ), supported in the open cube x0 ± ρ.
struct Weight {
  Rational rho{1, 2};
  std::vector<Rational> x0;  // empty means the origin

  double operator()(const std::vector<double>& x) const;
  double center(std::size_t j) const { return x0.empty() ? 0.0 : x0[j].get_d(); }
};

struct PoissonConfig {
  std::int64_t q = 1;
  Rational z1 = 0, z2 = 0;
  std::int64_t big_p = 10;
  std::int64_t m_cut = 40;
  Weight weight;
  double tol = 1e-11;             // relative change between quadrature doublings
  std::size_t max_points = 4096;  // per axis
};

struct PoissonResult {
  std::complex<double> lhs, rhs;
  double abs_diff = 0;
  std::size_t quad_points = 0;  // per axis at acceptance
  double quad_change = 0;       // |rhs(N) − rhs(N/2)| at acceptance
  double sum_error = 0;         // rounding budget carried by the S(q; m)
  std::size_t lattice_points = 0;
};

/// T(q, z) by direct summation over y against q^{-n} Σ_{|m|∞ ≤ m_cut} S(q; m) I(z; m/q),
/// where I(γ; k) = ∫ ω(x/P) e(γ₁F(x) + γ₂G(x) − k·x) dx by midpoint doubling.
/// n ≤ 2, at most 200 lattice points per axis. QuadratureError if doubling stalls.
PoissonResult poisson_check(const QuadPoly& f, const QuadPoly& g, const PoissonConfig& cfg);
PoissonResult poisson_check(const CubicPoly& f, const CubicPoly& g, const PoissonConfig& cfg);

struct SingularIntegral {
  double value = 0;   // real part at the requested grid
  double imag = 0;    // identically zero: the z-integral is done in closed form
  double coarse = 0;  // same quadrature at half the grid
  std::size_t grid = 0;
};

/// ∫_{|z|∞<R} ∫ ω(x) e(z₁F + z₂G) dx dz. The z-integral is exact,
/// ∫_{−R}^{R} e(zu) dz = sin(2πRu)/(πu), leaving a midpoint tensor grid in x.
/// n ≤ 3, grid ≤ 200.
SingularIntegral singular_integral(const CubicPoly& f, const CubicPoly& g, const Rational& r,
                                   const Weight& weight, std::size_t grid);

}  // namespace arcbound::numlab
