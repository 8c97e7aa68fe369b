#include "arcbound/numlab/expsum.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "arcbound/errors.hpp"
#include "arcbound/numlab/modular.hpp"

namespace arcbound::numlab {

namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();
constexpr long double kTau = 6.283185307179586476925286766559005768L;

void check_pair(std::int64_t a1, std::int64_t a2, std::int64_t q) {
  if (q < 1) throw DomainError("modulus must be positive");
  if (std::gcd(std::gcd(mod(a1, q), mod(a2, q)), q) != 1) {
    throw DomainError("gcd(a1, a2, q) must be 1");
  }
}

void check_quads(const QuadPoly& f, const QuadPoly& g, const Vec& m) {
  f.check();
  g.check();
  if (f.nvars() != g.nvars() || m.size() != f.nvars()) throw DomainError("dimension mismatch");
}

std::int64_t dot_mod(const Vec& m, const Vec& x, std::int64_t q) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = (s + mod(m[i], q) * x[i]) % q;
  return s;
}

// Σ*_a e_q(a₁f + a₂g) depends only on gcd(f, g, q).
class PrimitiveTable {
 public:
  explicit PrimitiveTable(std::int64_t q) : q_(q), by_gcd_(q + 1, 0) {
    for (std::int64_t d : divisors(q)) by_gcd_[d] = primitive_pair_sum(d, d, q);
  }
  std::int64_t operator()(std::int64_t f, std::int64_t g) const {
    return by_gcd_[std::gcd(std::gcd(f, g), q_)];
  }

 private:
  std::int64_t q_;
  std::vector<std::int64_t> by_gcd_;
};

}  // namespace

long double ComplexVal::abs() const { return std::hypot(re, im); }

ComplexVal operator*(const ComplexVal& a, const ComplexVal& b) {
  ComplexVal r;
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  const long double na = a.abs(), nb = b.abs();
  r.err = na * b.err + nb * a.err + a.err * b.err + 4 * kEps * na * nb;
  return r;
}

ComplexVal operator+(const ComplexVal& a, const ComplexVal& b) {
  ComplexVal r{a.re + b.re, a.im + b.im, a.err + b.err};
  r.err += 2 * kEps * (std::fabs(r.re) + std::fabs(r.im));
  return r;
}

ComplexVal phase_sum(const std::vector<std::int64_t>& weights, std::int64_t q) {
  if (static_cast<std::int64_t>(weights.size()) != q) throw DomainError("weight table length");
  ComplexVal r;
  long double mass = 0;
  for (std::int64_t k = 0; k < q; ++k) {
    if (weights[k] == 0) continue;
    const long double t = kTau * static_cast<long double>(k) / static_cast<long double>(q);
    const long double w = static_cast<long double>(weights[k]);
    r.re += w * std::cos(t);
    r.im += w * std::sin(t);
    mass += std::fabs(w);
  }
  // Each root carries a few ulps; the running sum adds at most q roundings.
  r.err = mass * kEps * (8 + 2 * static_cast<long double>(q));
  return r;
}

ComplexVal exp_sum_pointwise(const QuadPoly& f, const QuadPoly& g, std::int64_t a1, std::int64_t a2,
                             std::int64_t q, const Vec& m) {
  check_quads(f, g, m);
  check_pair(a1, a2, q);
  guard_power(q, f.nvars(), 1e7, "q^n");
  const QuadPoly h = combine(a1, f, a2, g);
  std::vector<std::int64_t> hist(q, 0);
  for_each_residue(f.nvars(), q, [&](const Vec& x) {
    ++hist[(h.eval_mod(x, q) + dot_mod(m, x, q)) % q];
  });
  return phase_sum(hist, q);
}

ComplexVal exp_sum_pointwise(const CubicPoly& f, const CubicPoly& g, std::int64_t a1,
                             std::int64_t a2, std::int64_t q, const Vec& m) {
  if (f.nvars() != g.nvars() || m.size() != f.nvars()) throw DomainError("dimension mismatch");
  check_pair(a1, a2, q);
  guard_power(q, f.nvars(), 1e7, "q^n");
  const std::int64_t b1 = mod(a1, q), b2 = mod(a2, q);
  std::vector<std::int64_t> hist(q, 0);
  for_each_residue(f.nvars(), q, [&](const Vec& x) {
    const std::int64_t v = (b1 * f.eval_mod(x, q) + b2 * g.eval_mod(x, q) + dot_mod(m, x, q)) % q;
    ++hist[v];
  });
  return phase_sum(hist, q);
}

namespace {

// S(q; m) = Σ_u e_q(m·u) Σ*_a e_q(a₁F(u) + a₂G(u)); the inner sum is an integer.
template <class P>
ComplexVal averaged(const P& f, const P& g, std::int64_t q, const Vec& m) {
  if (q < 1) throw DomainError("modulus must be positive");
  guard_power(q, f.nvars() + 2, 1e8, "q^2 q^n");
  const PrimitiveTable prim(q);
  std::vector<std::int64_t> weights(q, 0);
  for_each_residue(f.nvars(), q, [&](const Vec& u) {
    weights[dot_mod(m, u, q)] += prim(f.eval_mod(u, q), g.eval_mod(u, q));
  });
  return phase_sum(weights, q);
}

}  // namespace

ComplexVal exp_sum_averaged(const QuadPoly& f, const QuadPoly& g, std::int64_t q, const Vec& m) {
  check_quads(f, g, m);
  return averaged(f, g, q, m);
}

ComplexVal exp_sum_averaged(const CubicPoly& f, const CubicPoly& g, std::int64_t q, const Vec& m) {
  if (f.nvars() != g.nvars() || m.size() != f.nvars()) throw DomainError("dimension mismatch");
  return averaged(f, g, q, m);
}

namespace {

PropCheck finish(const ComplexVal& s, long double rhs, Integer null, int delta) {
  PropCheck c;
  c.lhs = s.abs();
  c.err = s.err;
  c.rhs = rhs;
  c.null_count = std::move(null);
  c.delta = delta;
  c.holds = c.lhs <= c.rhs + c.err;
  return c;
}

}  // namespace

PropCheck check_prop_t600(const QuadPoly& f, const QuadPoly& g, std::int64_t a1, std::int64_t a2,
                          std::int64_t q, const Vec& m) {
  const ComplexVal s = exp_sum_pointwise(f, g, a1, a2, q, m);
  const QuadPoly h = combine(a1, f, a2, g);
  const std::size_t n = f.nvars();
  std::vector<Integer> shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = m[i] + h.linear[i];
  Integer null = null_count(h.quadratic, q, NullMethod::Smith);
  const int delta = delta_q(h.quadratic, q, shifted);
  const long double rhs = std::pow(2.0L * static_cast<long double>(q), n / 2.0L) *
                          std::sqrt(static_cast<long double>(null.get_d())) * delta;
  return finish(s, rhs, std::move(null), delta);
}

PropCheck check_prop_n1(const QuadPoly& f, const QuadPoly& g, std::int64_t a1, std::int64_t a2,
                        std::int64_t q, std::int64_t m) {
  if (f.nvars() != 1) throw DomainError("the one-variable bound needs n = 1");
  const ComplexVal s = exp_sum_pointwise(f, g, a1, a2, q, Vec{m});
  const QuadPoly h = combine(a1, f, a2, g);
  const std::int64_t qm = std::gcd(q, mod(h.quadratic(0, 0), q));
  const int delta = mod(m + mod(h.linear[0], q), qm) == 0 ? 1 : 0;
  const long double rhs = std::sqrt(2.0L * q * qm) * delta;
  return finish(s, rhs, Integer(qm), delta);
}

}  // namespace arcbound::numlab
