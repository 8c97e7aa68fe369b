#include "arcbound/numlab/poly.hpp"

#include <cmath>

#include "arcbound/errors.hpp"

namespace arcbound::numlab {

CubicPoly::CubicPoly(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxPolyVars) throw DomainError("polynomials take between 1 and 6 variables");
}

CubicPoly::CubicPoly(std::size_t n, const std::map<Monomial, Integer>& terms) : CubicPoly(n) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

int CubicPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

void CubicPoly::add_term(const Monomial& exps, const Integer& coeff) {
  if (exps.size() != n_) throw DomainError("monomial length does not match the variable count");
  int total = 0;
  for (int k : exps) {
    if (k < 0) throw DomainError("negative exponent");
    total += k;
  }
  if (total > kMaxPolyDegree) throw DomainError("polynomial degree exceeds 3");
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(exps, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer CubicPoly::coeff(const Monomial& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer CubicPoly::eval(const std::vector<Integer>& x) const {
  if (x.size() != n_) throw DomainError("point length mismatch");
  Integer total = 0;
  for (const auto& [e, c] : terms_) {
    Integer t = c;
    for (std::size_t i = 0; i < n_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    }
    total += t;
  }
  return total;
}

std::int64_t CubicPoly::eval_mod(const Vec& x, std::int64_t q) const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t t = mod(c, q);
    for (std::size_t i = 0; i < n_; ++i) {
      for (int k = 0; k < e[i]; ++k) t = t * mod(x[i], q) % q;
    }
    total = (total + t) % q;
  }
  return total;
}

double CubicPoly::eval_real(const std::vector<double>& x) const {
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < n_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    }
    total += t;
  }
  return total;
}

namespace {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer power(const Integer& b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

CubicPoly CubicPoly::shift(const std::vector<Integer>& h) const {
  if (h.size() != n_) throw DomainError("shift length mismatch");
  CubicPoly out(n_);
  // ∏ (y_i + h_i)^{e_i} expanded term by term.
  for (const auto& [e, c] : terms_) {
    std::map<Monomial, Integer> partial = {{Monomial(n_, 0), c}};
    for (std::size_t i = 0; i < n_; ++i) {
      std::map<Monomial, Integer> next;
      for (const auto& [m, v] : partial) {
        for (int k = 0; k <= e[i]; ++k) {
          Monomial mm = m;
          mm[i] = k;
          next[mm] += v * binomial(e[i], k) * power(h[i], e[i] - k);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [m, v] : partial) out.add_term(m, v);
  }
  return out;
}

CubicPoly CubicPoly::homogeneous(int k) const {
  CubicPoly out(n_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    if (s == k) out.add_term(e, c);
  }
  return out;
}

CubicPoly operator+(const CubicPoly& a, const CubicPoly& b) {
  if (a.n_ != b.n_) throw DomainError("polynomial variable counts differ");
  CubicPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

CubicPoly operator-(const CubicPoly& a, const CubicPoly& b) { return a + Integer(-1) * b; }

CubicPoly operator*(const Integer& c, const CubicPoly& p) {
  CubicPoly r(p.n_);
  for (const auto& [e, v] : p.terms_) r.add_term(e, c * v);
  return r;
}

QuadPoly QuadPoly::zero(std::size_t n) {
  return {IntMatrix(n, n), std::vector<Integer>(n), Integer(0)};
}

void QuadPoly::check() const {
  if (linear.empty() || quadratic.rows() != linear.size() || !quadratic.square()) {
    throw DomainError("quadratic polynomial shape mismatch");
  }
  if (!quadratic.symmetric()) throw DomainError("quadratic part must be symmetric");
}

Integer QuadPoly::eval(const std::vector<Integer>& x) const {
  const auto mx = quadratic.apply(x);
  Integer total = constant;
  for (std::size_t i = 0; i < x.size(); ++i) total += x[i] * (mx[i] + linear[i]);
  return total;
}

std::int64_t QuadPoly::eval_mod(const Vec& x, std::int64_t q) const {
  const std::size_t n = nvars();
  std::int64_t total = mod(constant, q);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t row = mod(linear[i], q);
    for (std::size_t j = 0; j < n; ++j) row = (row + mod(quadratic(i, j), q) * mod(x[j], q)) % q;
    total = (total + row * mod(x[i], q)) % q;
  }
  return total;
}

double QuadPoly::eval_real(const std::vector<double>& x) const {
  const std::size_t n = nvars();
  double total = constant.get_d();
  for (std::size_t i = 0; i < n; ++i) {
    double row = linear[i].get_d();
    for (std::size_t j = 0; j < n; ++j) row += quadratic(i, j).get_d() * x[j];
    total += row * x[i];
  }
  return total;
}

CubicPoly QuadPoly::to_poly() const {
  const std::size_t n = nvars();
  CubicPoly p(n);
  Monomial e(n, 0);
  p.add_term(e, constant);
  for (std::size_t i = 0; i < n; ++i) {
    e.assign(n, 0);
    e[i] = 1;
    p.add_term(e, linear[i]);
    for (std::size_t j = 0; j < n; ++j) {
      e.assign(n, 0);
      ++e[i];
      ++e[j];
      p.add_term(e, quadratic(i, j));
    }
  }
  return p;
}

QuadPoly combine(const Integer& a1, const QuadPoly& f, const Integer& a2, const QuadPoly& g) {
  if (f.nvars() != g.nvars()) throw DomainError("polynomial variable counts differ");
  QuadPoly r = f;
  r.quadratic = a1 * f.quadratic + a2 * g.quadratic;
  for (std::size_t i = 0; i < r.linear.size(); ++i) r.linear[i] = a1 * f.linear[i] + a2 * g.linear[i];
  r.constant = a1 * f.constant + a2 * g.constant;
  return r;
}

QuadForm quad_form(const CubicPoly& p) {
  if (p.degree() > 2) throw DomainError("polynomial has degree above 2");
  const std::size_t n = p.nvars();
  int scale = 1;
  for (const auto& [e, c] : p.terms()) {
    int ones = 0;
    for (int k : e) ones += k == 1;
    if (ones == 2 && c % 2 != 0) scale = 2;
  }
  QuadPoly q = QuadPoly::zero(n);
  for (const auto& [e, c] : p.terms()) {
    const Integer v = scale * c;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    }
    if (idx.empty()) {
      q.constant = v;
    } else if (idx.size() == 1) {
      q.linear[idx[0]] = v;
    } else if (idx[0] == idx[1]) {
      q.quadratic(idx[0], idx[0]) = v;
    } else {
      q.quadratic(idx[0], idx[1]) = v / 2;
      q.quadratic(idx[1], idx[0]) = v / 2;
    }
  }
  return {std::move(q), scale};
}

Differenced difference_cubic(const CubicPoly& f, const std::vector<Integer>& h) {
  CubicPoly d = f.shift(h) - f;
  QuadForm form = quad_form(d);
  return {std::move(d), std::move(form)};
}

}  // namespace arcbound::numlab
