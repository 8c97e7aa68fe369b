#include "arcbound/numlab/analytic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "arcbound/errors.hpp"
#include "arcbound/numlab/expsum.hpp"

namespace arcbound::numlab {

namespace {

using cplx = std::complex<double>;
constexpr double kTwoPi = 2 * std::numbers::pi;

cplx unit(double t) { return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)}; }

// Fractional part of an exact rational, as a double in [0, 1).
double frac(const Rational& v) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return Rational(v - fl).get_d();
}

void check_weight(const Weight& w, std::size_t n) {
  if (sgn(w.rho) <= 0) throw DomainError("rho must be positive");
  if (!w.x0.empty() && w.x0.size() != n) throw DomainError("x0 length mismatch");
}

}  // namespace

double bump(double t) {
  const double s = 1 - t * t;
  return s > 0 ? std::exp(-1 / s) : 0.0;
}

double Weight::operator()(const std::vector<double>& x) const {
  const double r = rho.get_d();
  double v = 1;
  for (std::size_t j = 0; j < x.size() && v != 0; ++j) v *= bump((x[j] - center(j)) / r);
  return v;
}

PoissonResult poisson_check(const QuadPoly& f, const QuadPoly& g, const PoissonConfig& cfg) {
  f.check();
  g.check();
  return poisson_check(f.to_poly(), g.to_poly(), cfg);
}

PoissonResult poisson_check(const CubicPoly& f, const CubicPoly& g, const PoissonConfig& cfg) {
  if (f.degree() > 2 || g.degree() > 2) throw DomainError("Poisson check needs polynomials of degree <= 2");
  const std::size_t n = f.nvars();
  if (g.nvars() != n) throw DomainError("dimension mismatch");
  if (n > 2) throw GuardError("Poisson check limited to n <= 2");
  if (cfg.q < 1 || cfg.big_p < 1 || cfg.m_cut < 0) throw DomainError("q, P must be positive and m_cut non-negative");
  check_weight(cfg.weight, n);
  const Rational big_p = cfg.big_p;
  const std::int64_t q = cfg.q;
  PoissonResult res;

  // Direct side: Σ_y ω(y/P) Σ*_a e((a₁/q + z₁)F(y) + (a₂/q + z₂)G(y)).
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational c = cfg.weight.x0.empty() ? Rational(0) : cfg.weight.x0[j];
    const Rational a = big_p * (c - cfg.weight.rho), b = big_p * (c + cfg.weight.rho);
    Integer l, h;
    mpz_fdiv_q(l.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_cdiv_q(h.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    lo[j] = l.get_si() + 1;
    hi[j] = h.get_si() - 1;
    if (hi[j] - lo[j] + 1 > 200) throw GuardError("more than 200 lattice points per axis");
  }
  std::vector<std::int64_t> prim(q + 1);
  for (std::int64_t d : divisors(q)) prim[d] = primitive_pair_sum(d, d, q);
  std::complex<long double> lhs = 0;
  std::vector<Integer> y(n);
  std::vector<double> yp(n);
  Vec idx(n);
  for (std::size_t j = 0; j < n; ++j) idx[j] = lo[j];
  for (;;) {
    bool inside = true;
    for (std::size_t j = 0; j < n; ++j) {
      y[j] = idx[j];
      yp[j] = static_cast<double>(idx[j]) / static_cast<double>(cfg.big_p);
      inside = inside && idx[j] <= hi[j];
    }
    if (inside) {
      const double w = cfg.weight(yp);
      if (w > 0) {
        const Integer fy = f.eval(y), gy = g.eval(y);
        const std::int64_t c = prim[std::gcd(std::gcd(mod(fy, q), mod(gy, q)), q)];
        if (c != 0) {
          const cplx ph = unit(frac(cfg.z1 * fy + cfg.z2 * gy));
          lhs += static_cast<long double>(w * c) * std::complex<long double>(ph.real(), ph.imag());
        }
        ++res.lattice_points;
      }
    }
    std::size_t j = n;
    while (j > 0) {
      if (++idx[j - 1] <= hi[j - 1]) break;
      idx[j - 1] = lo[j - 1];
      --j;
    }
    if (j == 0 || hi[0] < lo[0]) break;
  }
  res.lhs = {static_cast<double>(lhs.real()), static_cast<double>(lhs.imag())};

  // Dual side. S(q; m) depends on m mod q only.
  const std::int64_t mc = cfg.m_cut;
  const std::size_t km = static_cast<std::size_t>(2 * mc + 1);
  std::vector<ComplexVal> s_cache(static_cast<std::size_t>(std::pow(q, n)));
  std::vector<bool> s_have(s_cache.size(), false);
  auto s_at = [&](const Vec& m) -> const ComplexVal& {
    std::size_t key = 0;
    Vec r(n);
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = mod(m[j], q);
      key = key * q + r[j];
    }
    if (!s_have[key]) {
      s_cache[key] = exp_sum_averaged(f, g, q, r);
      s_have[key] = true;
    }
    return s_cache[key];
  };

  const double pd = static_cast<double>(cfg.big_p), rho = cfg.weight.rho.get_d();
  const double z1 = cfg.z1.get_d(), z2 = cfg.z2.get_d();
  const double qn = std::pow(static_cast<double>(q), static_cast<double>(n));
  bool have_prev = false;
  cplx prev;
  for (std::size_t pts = 32;; pts *= 2) {
    if (pts > cfg.max_points) {
      throw QuadratureError("exponential integrals did not settle within " +
                            std::to_string(cfg.max_points) + " points per axis");
    }
    const double width = 2 * pd * rho, h = width / static_cast<double>(pts);
    std::vector<std::vector<double>> xs(n, std::vector<double>(pts));
    for (std::size_t j = 0; j < n; ++j) {
      const double a = pd * (cfg.weight.center(j) - rho);
      for (std::size_t i = 0; i < pts; ++i) xs[j][i] = a + (static_cast<double>(i) + 0.5) * h;
    }
    // e(−k x) tables for k = m/q.
    std::vector<std::vector<std::vector<cplx>>> e(n, std::vector<std::vector<cplx>>(km, std::vector<cplx>(pts)));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t mi = 0; mi < km; ++mi) {
        const double k = static_cast<double>(static_cast<std::int64_t>(mi) - mc) / static_cast<double>(q);
        for (std::size_t i = 0; i < pts; ++i) e[j][mi][i] = unit(-k * xs[j][i]);
      }
    }
    cplx rhs = 0;
    double budget = 0;
    if (n == 1) {
      std::vector<cplx> gv(pts);
      std::vector<double> pt(1);
      for (std::size_t i = 0; i < pts; ++i) {
        pt[0] = xs[0][i] / pd;
        const double w = cfg.weight(pt);
        const std::vector<double> x{xs[0][i]};
        gv[i] = w == 0 ? cplx(0) : w * unit(z1 * f.eval_real(x) + z2 * g.eval_real(x));
      }
      for (std::size_t mi = 0; mi < km; ++mi) {
        cplx integral = 0;
        for (std::size_t i = 0; i < pts; ++i) integral += e[0][mi][i] * gv[i];
        integral *= h;
        const ComplexVal& s = s_at(Vec{static_cast<std::int64_t>(mi) - mc});
        rhs += cplx(static_cast<double>(s.re), static_cast<double>(s.im)) * integral;
        budget += static_cast<double>(s.err) * std::abs(integral);
      }
    } else {
      std::vector<cplx> gv(pts * pts);
      std::vector<double> pt(2), x(2);
      for (std::size_t i = 0; i < pts; ++i) {
        for (std::size_t j = 0; j < pts; ++j) {
          pt[0] = xs[0][i] / pd;
          pt[1] = xs[1][j] / pd;
          const double w = cfg.weight(pt);
          x[0] = xs[0][i];
          x[1] = xs[1][j];
          gv[i * pts + j] = w == 0 ? cplx(0) : w * unit(z1 * f.eval_real(x) + z2 * g.eval_real(x));
        }
      }
      // A[m1][j] = Σ_i e(−k₁x_i) g(x_i, y_j)
      std::vector<cplx> acc(km * pts, 0);
      for (std::size_t mi = 0; mi < km; ++mi) {
        cplx* row = &acc[mi * pts];
        for (std::size_t i = 0; i < pts; ++i) {
          const cplx c = e[0][mi][i];
          const cplx* gr = &gv[i * pts];
          for (std::size_t j = 0; j < pts; ++j) row[j] += c * gr[j];
        }
      }
      for (std::size_t m1 = 0; m1 < km; ++m1) {
        for (std::size_t m2 = 0; m2 < km; ++m2) {
          cplx integral = 0;
          const cplx* row = &acc[m1 * pts];
          for (std::size_t j = 0; j < pts; ++j) integral += e[1][m2][j] * row[j];
          integral *= h * h;
          const ComplexVal& s = s_at(Vec{static_cast<std::int64_t>(m1) - mc,
                                         static_cast<std::int64_t>(m2) - mc});
          rhs += cplx(static_cast<double>(s.re), static_cast<double>(s.im)) * integral;
          budget += static_cast<double>(s.err) * std::abs(integral);
        }
      }
    }
    rhs /= qn;
    budget /= qn;
    if (have_prev && std::abs(rhs - prev) <= cfg.tol * std::max(1.0, std::abs(rhs))) {
      res.rhs = rhs;
      res.quad_points = pts;
      res.quad_change = std::abs(rhs - prev);
      res.sum_error = budget;
      break;
    }
    prev = rhs;
    have_prev = true;
  }
  res.abs_diff = std::abs(res.lhs - res.rhs);
  return res;
}

namespace {

// ∫_{−R}^{R} e(zu) dz
double kernel(double r, double u) {
  const double t = kTwoPi * r * u;
  if (std::fabs(t) < 1e-6) return 2 * r * (1 - t * t / 6);
  return std::sin(t) / (std::numbers::pi * u);
}

double integrate(const CubicPoly& f, const CubicPoly& g, double r, const Weight& w, std::size_t grid) {
  const std::size_t n = f.nvars();
  const double rho = w.rho.get_d(), h = 2 * rho / static_cast<double>(grid);
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  double total = 0;
  for (;;) {
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = w.center(j) - rho + (static_cast<double>(idx[j]) + 0.5) * h;
    }
    const double om = w(x);
    if (om > 0) total += om * kernel(r, f.eval_real(x)) * kernel(r, g.eval_real(x));
    std::size_t j = n;
    while (j > 0) {
      if (++idx[j - 1] < grid) break;
      idx[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
  }
  return total * std::pow(h, static_cast<double>(n));
}

}  // namespace

SingularIntegral singular_integral(const CubicPoly& f, const CubicPoly& g, const Rational& r,
                                   const Weight& weight, std::size_t grid) {
  const std::size_t n = f.nvars();
  if (g.nvars() != n) throw DomainError("dimension mismatch");
  if (n > 3) throw GuardError("singular integral limited to n <= 3");
  if (grid < 2 || grid > 200) throw GuardError("grid must be between 2 and 200 points per axis");
  if (sgn(r) <= 0) throw DomainError("R must be positive");
  check_weight(weight, n);
  SingularIntegral out;
  out.grid = grid;
  out.value = integrate(f, g, r.get_d(), weight, grid);
  out.coarse = integrate(f, g, r.get_d(), weight, grid / 2);
  return out;
}

}  // namespace arcbound::numlab
