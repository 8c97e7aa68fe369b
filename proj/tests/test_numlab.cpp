#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "arcbound/errors.hpp"
#include "arcbound/numlab/analytic.hpp"
#include "arcbound/numlab/expsum.hpp"
#include "arcbound/numlab/modular.hpp"
#include "arcbound/numlab/series.hpp"
#include "arcbound/numlab/singular.hpp"
#include "arcbound/numlab/smith.hpp"
#include "numlab_fixtures.hpp"

using namespace arcbound;
using namespace arcbound::numlab;
using fixture::Rows;
using oracle::I64;

namespace {

std::vector<Integer> ints(const Vec& v) {
  std::vector<Integer> out;
  for (I64 x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

void check_smith(const IntMatrix& m) {
  const auto sf = smith_normal_form(m);
  CHECK(sf.s * m * sf.t == sf.d);
  CHECK(abs(sf.s.det()) == 1);
  CHECK(abs(sf.t.det()) == 1);
  const auto lam = sf.lambda();
  Integer prod = 1;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    CHECK(lam[i] >= 0);
    for (std::size_t j = 0; j < lam.size(); ++j) {
      if (i != j) CHECK(sf.d(i, j) == 0);
    }
    if (i + 1 < lam.size()) {
      CHECK((lam[i + 1] == 0 || (lam[i] != 0 && lam[i + 1] % lam[i] == 0)));
    }
    prod *= lam[i];
  }
  CHECK(prod == abs(m.det()));
}

// Unimodular matrix from random elementary operations.
Rows random_unimodular(std::mt19937_64& rng, std::size_t n) {
  Rows u(n, std::vector<I64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<I64> c(-2, 2);
  for (int k = 0; k < 6; ++k) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const I64 f = c(rng);
    for (std::size_t col = 0; col < n; ++col) u[i][col] += f * u[j][col];
  }
  return u;
}

}  // namespace

TEST_CASE("arithmetic helpers") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(factorize(360) == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(inverse_mod(5, 3) == 2);
  CHECK_THROWS_AS(inverse_mod(4, 6), DomainError);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  std::size_t count = 0;
  for_each_residue(3, 4, [&](const Vec&) { ++count; });
  CHECK(count == 64);
}

TEST_CASE("smith normal form") {
  const auto sf = smith_normal_form(IntMatrix::from_rows(std::vector<std::vector<long>>{{2, 1}, {1, 2}}));
  CHECK(sf.d == IntMatrix::diagonal({1, 3}));
  check_smith(IntMatrix::from_rows(std::vector<std::vector<long>>{{0, 0}, {0, 0}}));
  check_smith(IntMatrix::from_rows(std::vector<std::vector<long>>{{4, 6}, {6, 9}}));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + k % 5;
    check_smith(fixture::to_matrix(fixture::random_matrix(rng, n, n, -30, 30)));
  }
  CHECK_THROWS_AS(IntMatrix(9, 9), DomainError);
}

TEST_CASE("null counts agree with brute force") {
  CHECK(null_count(IntMatrix::identity(3), 12, NullMethod::Smith) == 1);
  CHECK(null_count(IntMatrix::diagonal({2, 4}), 8, NullMethod::Smith) == 8);
  CHECK(null_count(IntMatrix::diagonal({2, 4}), 8, NullMethod::Brute) == 8);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = 1 + k % 3;
    const auto m = fixture::random_matrix(rng, n, n, -12, 12);
    const I64 q = 2 + static_cast<I64>(rng() % 30);
    const Integer want = static_cast<long>(oracle::null_brute(m, q));
    CHECK(null_count(fixture::to_matrix(m), q, NullMethod::Smith) == want);
    CHECK(null_count(fixture::to_matrix(m), q, NullMethod::Brute) == want);
  }
  CHECK_THROWS_AS(null_count(IntMatrix::identity(5), 100, NullMethod::Brute), GuardError);
}

TEST_CASE("null counts are submultiplicative") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 6; ++k) {
    const auto m = fixture::to_matrix(fixture::random_matrix(rng, 2, 2, -9, 9));
    for (I64 u = 1; u <= 8; ++u)
      for (I64 v = 1; v <= 8; ++v) {
        const Integer uv = null_count(m, u * v, NullMethod::Brute);
        const Integer prod = null_count(m, u, NullMethod::Brute) * null_count(m, v, NullMethod::Brute);
        CHECK(uv <= prod);
        if (std::gcd(u, v) == 1) CHECK(uv == prod);
      }
  }
}

TEST_CASE("solution sets are cosets of the null set") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 1 + k % 3;
    const auto raw = fixture::random_matrix(rng, n, n, -6, 6);
    const auto m = fixture::to_matrix(raw);
    const I64 q = 2 + static_cast<I64>(rng() % 10);
    const auto null = null_count(m, q, NullMethod::Brute);
    Vec rhs(n);
    for (auto& v : rhs) v = static_cast<I64>(rng() % q);
    const auto count = solution_count(m, rhs, q);
    CHECK(count == oracle::solutions(raw, rhs, q));
    CHECK((count == 0 || Integer(static_cast<long>(count)) == null));

    // The image of a point x0 is hit exactly by x0 + Null.
    Vec x0(n);
    for (auto& v : x0) v = static_cast<I64>(rng() % q);
    Vec image(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) image[i] += raw[i][j] * x0[j];
      image[i] = mod(image[i], q);
    }
    const auto set = solution_set(m, image, q);
    CHECK(Integer(static_cast<long>(set.size())) == null);
    for (const auto& y : set) {
      Vec diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = mod(y[i] - x0[i], q);
      Vec img(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) img[i] += raw[i][j] * diff[j];
        CHECK(mod(img[i], q) == 0);
      }
    }
  }
}

TEST_CASE("delta criterion is solvability for symmetric matrices") {
  CHECK(delta_q(IntMatrix::diagonal({2, 0}), 4, {1, 0}) == 0);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + k % 3;
    const auto raw = fixture::random_symmetric(rng, n, -8, 8);
    const I64 q = 2 + static_cast<I64>(rng() % 14);
    Vec v(n);
    for (auto& x : v) x = static_cast<I64>(rng() % q);
    const int want = oracle::solutions(raw, v, q) > 0 ? 1 : 0;
    CHECK(delta_q(fixture::to_matrix(raw), q, ints(v)) == want);
  }
}

TEST_CASE("primitive pair sums match the literal a-loop") {
  for (I64 q = 1; q <= 30; ++q)
    for (I64 f = -3; f <= 12; ++f)
      for (I64 g : {0L, 1L, 6L, 10L, -4L}) {
        oracle::Cx s = 0;
        for (I64 a1 = 0; a1 < q; ++a1)
          for (I64 a2 = 0; a2 < q; ++a2)
            if (std::gcd(std::gcd(a1, a2), q) == 1) s += oracle::root(oracle::md(a1 * f + a2 * g, q), q);
        CHECK(std::abs(s.imag()) < 1e-9);
        CHECK(std::abs(s.real() - static_cast<long double>(primitive_pair_sum(f, g, q))) < 1e-9);
      }
}

TEST_CASE("pointwise and averaged sums match literal loops") {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 1 + k % 3;
    const auto f = fixture::random_quad(rng, n, 5);
    const auto g = fixture::random_quad(rng, n, 5);
    const I64 q = 2 + static_cast<I64>(rng() % (n == 3 ? 9 : 20));
    Vec m(n);
    for (auto& x : m) x = static_cast<I64>(rng() % q);
    I64 a1 = static_cast<I64>(rng() % q), a2 = static_cast<I64>(rng() % q);
    if (std::gcd(std::gcd(a1, a2), q) != 1) a1 = 1;
    const auto s = exp_sum_pointwise(f.lib(), g.lib(), a1, a2, q, m);
    const auto want = oracle::pointwise(f, g, n, a1, a2, q, m);
    CHECK(std::abs(s.value() - want) <= s.err + 1e-9L);
    if (n < 3 && q <= 12) {
      const auto avg = exp_sum_averaged(f.lib(), g.lib(), q, m);
      CHECK(std::abs(avg.value() - oracle::averaged(f, g, n, q, m)) <= avg.err + 1e-8L);
    }
  }
  const auto f = fixture::random_quad(rng, 1, 3);
  CHECK_THROWS_AS(exp_sum_pointwise(f.lib(), f.lib(), 2, 4, 6, {0}), DomainError);
}

TEST_CASE("quadratic Gauss sums") {
  fixture::Quad sq{{{1}}, {0}, 0};
  const fixture::Quad zero{{{0}}, {0}, 0};
  for (I64 p : {3, 5, 7, 11, 13}) {
    const auto s = exp_sum_pointwise(sq.lib(), zero.lib(), 1, 0, p, {0});
    CHECK(std::fabs(static_cast<double>(s.abs()) - std::sqrt(static_cast<double>(p))) < 1e-9);
  }
  CHECK(exp_sum_pointwise(sq.lib(), zero.lib(), 1, 0, 2, {0}).abs() < 1e-12L);
}

TEST_CASE("smith-form exponential sum bound") {
  std::mt19937_64 rng(7);
  int zero_delta = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + k % 3;
    const auto f = fixture::random_quad(rng, n, 6);
    const auto g = fixture::random_quad(rng, n, 6);
    const I64 q = 2 + static_cast<I64>(rng() % (n == 3 ? 20 : 40));
    Vec m(n);
    for (auto& x : m) x = static_cast<I64>(rng() % q);
    const I64 a1 = 1, a2 = static_cast<I64>(rng() % q);
    const auto r = check_prop_t600(f.lib(), g.lib(), a1, a2, q, m);
    CHECK(r.holds);
    CHECK(r.lhs <= r.rhs + r.err);
    if (r.delta == 0) {
      ++zero_delta;
      CHECK(r.lhs <= r.err);
    }
    if (n == 1) CHECK(check_prop_n1(f.lib(), g.lib(), a1, a2, q, m[0]).holds);
  }
  CHECK(zero_delta > 0);
  // Even q: x² mod 2 has a vanishing sum, and Δ = 1 for λ = 1.
  const fixture::Quad sq{{{1}}, {0}, 0};
  const auto r = check_prop_t600(sq.lib(), sq.lib(), 1, 0, 2, {0});
  CHECK(r.delta == 1);
  CHECK(r.lhs < 1e-12L);
}

TEST_CASE("pencil null sums are multiplicative and match their definition") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 4; ++k) {
    const auto r1 = fixture::random_symmetric(rng, 2, -5, 5);
    const auto r2 = fixture::random_symmetric(rng, 2, -5, 5);
    const auto m1 = fixture::to_matrix(r1), m2 = fixture::to_matrix(r2);
    for (I64 d = 1; d <= 12; ++d) {
      I64 want = 0;
      for (I64 b1 = 0; b1 < d; ++b1)
        for (I64 b2 = 0; b2 < d; ++b2) {
          if (std::gcd(std::gcd(b1, b2), d) != 1) continue;
          Rows p(2, std::vector<I64>(2));
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) p[i][j] = b1 * r1[i][j] + b2 * r2[i][j];
          want += oracle::null_brute(p, d);
        }
      CHECK(null_pencil_sum(m1, m2, d) == Integer(static_cast<long>(want)));
    }
    for (I64 u : {2, 3, 4, 5})
      for (I64 v : {3, 5, 7})
        if (std::gcd(u, v) == 1) {
          CHECK(null_pencil_sum(m1, m2, u * v) == null_pencil_sum(m1, m2, u) * null_pencil_sum(m1, m2, v));
        }
  }
}

TEST_CASE("rank of a nonsingular pencil") {
  // Simultaneously diagonal pairs with distinct ratios (λ₁ⱼ : λ₂ⱼ) are
  // nonsingular over the algebraic closure; a unimodular change of basis
  // preserves that. The pencil then has rank ≥ n − 1 everywhere and full rank
  // outside at most n proportionality classes of (a₁ : a₂).
  std::mt19937_64 rng(9);
  for (I64 p : {7, 11, 13}) {
    for (std::size_t n : {2, 3, 4}) {
      std::vector<std::pair<I64, I64>> ratios;
      std::uniform_int_distribution<I64> d(-6, 6);
      while (ratios.size() < n) {
        const I64 x = d(rng), y = d(rng);
        if (oracle::md(x, p) == 0 && oracle::md(y, p) == 0) continue;
        bool distinct = true;
        for (const auto& [u, v] : ratios) distinct &= oracle::md(x * v - y * u, p) != 0;
        if (distinct) ratios.push_back({x, y});
      }
      const Rows u = random_unimodular(rng, n);
      auto congruent = [&](int which) {
        Rows out(n, std::vector<I64>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
              const I64 lam = which == 0 ? ratios[k].first : ratios[k].second;
              out[i][j] += u[k][i] * lam * u[k][j];
            }
        return out;
      };
      const Rows r1 = congruent(0), r2 = congruent(1);
      const auto m1 = fixture::to_matrix(r1), m2 = fixture::to_matrix(r2);
      if (n >= 2 && static_cast<double>(std::pow(p, n)) <= 1e7) {
        CHECK(singular_locus_points(m1, m2, p) == 0);
      }
      std::set<std::pair<I64, I64>> classes;
      for (I64 a1 = 0; a1 < p; ++a1)
        for (I64 a2 = 0; a2 < p; ++a2) {
          if (a1 == 0 && a2 == 0) continue;
          const std::size_t rank = rank_mod_p(pencil(m1, m2, a1, a2), p);
          Rows pm(n, std::vector<I64>(n));
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) pm[i][j] = a1 * r1[i][j] + a2 * r2[i][j];
          I64 null = oracle::null_brute(pm, p), expect = n;
          while (null > 1) null /= p, --expect;
          CHECK(rank == static_cast<std::size_t>(expect));
          CHECK(rank + 1 >= n);
          if (rank < n) {
            // Normalise (a₁ : a₂) to a canonical representative.
            const I64 inv = a2 != 0 ? inverse_mod(a2, p) : inverse_mod(a1, p);
            classes.insert({oracle::md(a1 * inv, p), oracle::md(a2 * inv, p)});
          }
        }
      CHECK(classes.size() <= n);
    }
  }
}

TEST_CASE("singular locus dimensions") {
  const auto zero = IntMatrix::diagonal({0, 0, 0});
  CHECK(singular_locus_dim(zero, zero, 5) == 2);
  // Q₁ = x₁², Q₂ = x₂²: the locus is the single point (0 : 0 : 1).
  const auto q1 = IntMatrix::diagonal({1, 0, 0}), q2 = IntMatrix::diagonal({0, 1, 0});
  CHECK(singular_locus_points(q1, q2, 7) == 1);
  CHECK(singular_locus_dim(q1, q2, 7) == 0);
  CHECK(singular_locus_dim(IntMatrix::diagonal({1, 1, 1}), IntMatrix::diagonal({1, 2, 3}), 7) == -1);
  CHECK_THROWS_AS(singular_locus_dim(q1, q2, 2), DomainError);
  // Q₁ = x₁² has a line of singular points x₁ = 0 inside Q₁ = Q₂ = 0 when Q₂ = 0.
  CHECK(singular_locus_dim(q1, zero, 7) == 1);
  CHECK(singular_factor(IntMatrix::diagonal({6}), IntMatrix::diagonal({9}), 15) == 3);
}

TEST_CASE("quadratic forms and differencing") {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<long> d(-7, 7);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + k % 4;
    const auto raw = fixture::random_cubic(rng, n);
    const CubicPoly f = raw.lib();
    std::vector<Integer> h(n);
    for (auto& v : h) v = d(rng);
    const auto diff = difference_cubic(f, h);
    CHECK(diff.poly.degree() <= 2);
    for (int t = 0; t < 20; ++t) {
      std::vector<I64> y(n), yh(n);
      for (std::size_t i = 0; i < n; ++i) {
        y[i] = d(rng);
        yh[i] = y[i] + h[i].get_si();
      }
      const Integer want = static_cast<long>(raw(yh) - raw(y));
      CHECK(diff.poly.eval(ints(y)) == want);
      CHECK(diff.quad.form.eval(ints(y)) == diff.quad.scale * want);
    }
    CHECK(diff.quad.form.quadratic.symmetric());
  }
  CubicPoly odd(2);
  odd.add_term({1, 1}, 1);
  CHECK(quad_form(odd).scale == 2);
  CHECK(quad_form(odd).form.quadratic == IntMatrix::from_rows(std::vector<std::vector<long>>{{0, 1}, {1, 0}}));
}

TEST_CASE("local densities match the literal sum") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 4; ++k) {
    const std::size_t n = 1 + k % 2;
    const auto f = fixture::random_cubic(rng, n);
    const auto g = fixture::random_cubic(rng, n);
    for (I64 q = 1; q <= 10; ++q) {
      const auto s = oracle::averaged(f, g, n, q, std::vector<I64>(n, 0));
      const double want = static_cast<double>(s.real()) / std::pow(static_cast<double>(q), n);
      CHECK(std::fabs(local_density(f.lib(), g.lib(), q).get_d() - want) < 1e-9);
    }
  }
}

TEST_CASE("singular series partial sums") {
  fixture::Cubic f{2, {{{3, 0}, 1}, {{0, 3}, 1}}};
  fixture::Cubic g{2, {{{3, 0}, 1}, {{0, 3}, -1}}};
  const auto part = singular_series_partial(f.lib(), g.lib(), 12);
  REQUIRE(part.terms.size() == 12);
  Rational sum = 0;
  for (const auto& t : part.terms) {
    const auto s = oracle::averaged(f, g, 2, t.q, {0, 0});
    CHECK(std::fabs(t.a.get_d() - static_cast<double>(s.real()) / (t.q * t.q)) < 1e-9);
    sum += t.a;
  }
  CHECK(sum == part.value);
  CHECK(local_density(f.lib(), g.lib(), 12) == local_density(f.lib(), g.lib(), 3) * local_density(f.lib(), g.lib(), 4));
  // a_p(k) dominates |A(p^k)|.
  for (int k = 1; k <= 2; ++k) {
    const double a = std::fabs(local_density(f.lib(), g.lib(), static_cast<std::int64_t>(std::pow(3, k))).get_d());
    CHECK(absolute_density(f.lib(), g.lib(), 3, k) + 1e-12 >= a);
  }
}

TEST_CASE("bump weight") {
  CHECK(bump(0) == doctest::Approx(std::exp(-1.0)));
  CHECK(bump(1) == 0);
  CHECK(bump(-1) == 0);
  CHECK(bump(1.5) == 0);
  for (double t : {0.1, 0.5, 0.9, 0.999}) CHECK(bump(t) == bump(-t));
  Weight w;
  CHECK(w({0.0}) == doctest::Approx(std::exp(-1.0)));
  CHECK(w({0.5}) == 0);
}

TEST_CASE("poisson identity on a small case") {
  const fixture::Quad f{{{1}}, {0}, 0};
  const fixture::Quad g{{{0}}, {1}, 0};
  PoissonConfig cfg;
  cfg.q = 3;
  cfg.z1 = Rational(1, 100);
  cfg.z2 = Rational(-1, 50);
  const auto r = poisson_check(f.lib(), g.lib(), cfg);
  CHECK(r.abs_diff < 1e-8);
  CHECK(r.lattice_points > 0);
  std::mt19937_64 rng(1);
  const auto r3 = fixture::random_quad(rng, 3, 2);
  CHECK_THROWS_AS(poisson_check(r3.lib(), r3.lib(), cfg), GuardError);
}

TEST_CASE("singular integral against a direct double quadrature") {
  // n = 1, F = x², G = x³: integrate z over the square and x over the support.
  fixture::Cubic f{1, {{{2}, 1}}};
  fixture::Cubic g{1, {{{3}, 1}}};
  const Rational r(1, 2);
  const auto si = singular_integral(f.lib(), g.lib(), r, Weight{}, 200);
  CHECK(si.imag == 0);
  CHECK(std::fabs(si.value - si.coarse) < 1e-6);
  const int nx = 400, nz = 200;
  double direct = 0;
  for (int i = 0; i < nx; ++i) {
    const double x = -0.5 + (i + 0.5) / nx;
    const double w = bump(2 * x) / nx;
    for (int a = 0; a < nz; ++a)
      for (int b = 0; b < nz; ++b) {
        const double z1 = -0.5 + (a + 0.5) / nz, z2 = -0.5 + (b + 0.5) / nz;
        direct += w * std::cos(2 * M_PI * (z1 * x * x + z2 * x * x * x)) / (nz * nz);
      }
  }
  CHECK(std::fabs(si.value - direct) < 1e-5);
}
