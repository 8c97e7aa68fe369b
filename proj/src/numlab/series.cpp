#include "arcbound/numlab/series.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "arcbound/errors.hpp"

namespace arcbound::numlab {

namespace {

void check_pair(const CubicPoly& f, const CubicPoly& g) {
  if (f.nvars() != g.nvars()) throw DomainError("dimension mismatch");
  if (f.nvars() > 3) throw GuardError("singular series limited to n <= 3");
}

}  // namespace

Rational local_density(const CubicPoly& f, const CubicPoly& g, std::int64_t q) {
  check_pair(f, g);
  if (q < 1) throw DomainError("modulus must be positive");
  guard_power(q, f.nvars(), 1e7, "q^n");
  std::vector<std::int64_t> prim(q + 1);
  for (std::int64_t d : divisors(q)) prim[d] = primitive_pair_sum(d, d, q);
  Integer total = 0;
  for_each_residue(f.nvars(), q, [&](const Vec& x) {
    total += prim[std::gcd(std::gcd(f.eval_mod(x, q), g.eval_mod(x, q)), q)];
  });
  Integer qn = 1;
  for (std::size_t i = 0; i < f.nvars(); ++i) qn *= q;
  Rational a(total, qn);
  a.canonicalize();
  return a;
}

SeriesPartial singular_series_partial(const CubicPoly& f, const CubicPoly& g, std::int64_t r) {
  check_pair(f, g);
  if (r < 1) throw DomainError("R must be at least 1");
  double work = 0;
  for (std::int64_t q = 1; q <= r; ++q) work += std::pow(static_cast<double>(q), f.nvars() + 2.0);
  if (work > 1e9) throw GuardError("sum of q^(n+2) over q <= R exceeds 1e9");
  SeriesPartial out;
  for (std::int64_t q = 1; q <= r; ++q) {
    Rational a = local_density(f, g, q);
    out.value += a;
    out.terms.push_back({q, std::move(a)});
  }
  return out;
}

double absolute_density(const CubicPoly& f, const CubicPoly& g, std::int64_t p, int k) {
  check_pair(f, g);
  if (!is_prime(p) || k < 1) throw DomainError("a_p(k) needs a prime p and k >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  guard_power(q, f.nvars() + 2, 1e8, "q^2 q^n");
  // Joint value histogram, then a separable transform over (a₁, a₂).
  std::vector<double> hist(q * q, 0);
  for_each_residue(f.nvars(), q, [&](const Vec& x) { hist[f.eval_mod(x, q) * q + g.eval_mod(x, q)] += 1; });
  std::vector<std::complex<double>> roots(q);
  for (std::int64_t t = 0; t < q; ++t) {
    const double th = 2 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(q);
    roots[t] = {std::cos(th), std::sin(th)};
  }
  double total = 0;
  std::vector<std::complex<double>> inner(q);
  for (std::int64_t a2 = 0; a2 < q; ++a2) {
    for (std::int64_t fv = 0; fv < q; ++fv) {
      std::complex<double> s = 0;
      for (std::int64_t gv = 0; gv < q; ++gv) {
        if (hist[fv * q + gv] != 0) s += hist[fv * q + gv] * roots[(a2 * gv) % q];
      }
      inner[fv] = s;
    }
    for (std::int64_t a1 = 0; a1 < q; ++a1) {
      if (std::gcd(std::gcd(a1, a2), q) != 1) continue;
      std::complex<double> s = 0;
      for (std::int64_t fv = 0; fv < q; ++fv) s += inner[fv] * roots[(a1 * fv) % q];
      total += std::abs(s);
    }
  }
  return total / std::pow(static_cast<double>(q), static_cast<double>(f.nvars()));
}

}  // namespace arcbound::numlab
