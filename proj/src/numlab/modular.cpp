#include "arcbound/numlab/modular.hpp"

#include <numeric>
#include <utility>

#include "arcbound/errors.hpp"
#include "arcbound/numlab/smith.hpp"

namespace arcbound::numlab {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t inverse_mod(std::int64_t a, std::int64_t q) {
  if (q == 1) return 0;
  std::int64_t r0 = q, r1 = mod(a, q), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    r0 = std::exchange(r1, r0 - k * r1);
    s0 = std::exchange(s1, s0 - k * s1);
  }
  if (r0 != 1) throw DomainError("no inverse of " + std::to_string(a) + " mod " + std::to_string(q));
  return mod(s0, q);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw DomainError("factorize expects a positive integer");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius(std::int64_t n) {
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

void for_each_residue(std::size_t n, std::int64_t q, const std::function<void(const Vec&)>& f) {
  Vec x(n, 0);
  for (;;) {
    f(x);
    std::size_t i = n;
    while (i > 0) {
      if (++x[i - 1] < q) break;
      x[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

const char* null_method_name(NullMethod m) { return m == NullMethod::Smith ? "smith" : "brute"; }

NullMethod parse_null_method(const std::string& s) {
  if (s == "smith") return NullMethod::Smith;
  if (s == "brute") return NullMethod::Brute;
  throw ParseError("unknown method '" + s + "' (expected smith, brute or both)");
}

namespace {

void check_modulus(std::int64_t q) {
  if (q < 1) throw DomainError("modulus must be positive");
}

std::vector<Vec> reduce(const IntMatrix& m, std::int64_t q) {
  std::vector<Vec> r(m.rows(), Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = mod(m(i, j), q);
  }
  return r;
}

bool satisfies(const std::vector<Vec>& a, const Vec& x, const Vec& rhs, std::int64_t q) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s = (s + a[i][j] * x[j]) % q;
    if (s != rhs[i]) return false;
  }
  return true;
}

}  // namespace

Integer null_count(const IntMatrix& m, std::int64_t q, NullMethod method) {
  check_modulus(q);
  if (method == NullMethod::Brute) return solution_count(m, Vec(m.rows(), 0), q);
  if (!m.square()) throw DomainError("Smith method requires a square matrix");
  Integer count = 1;
  for (const Integer& l : smith_normal_form(m).lambda()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), Integer(q).get_mpz_t(), l.get_mpz_t());
    count *= g;
  }
  return count;
}

std::vector<Vec> solution_set(const IntMatrix& m, const Vec& rhs, std::int64_t q) {
  check_modulus(q);
  if (rhs.size() != m.rows()) throw DomainError("right-hand side length mismatch");
  guard_power(q, m.cols(), 1e7, "q^n");
  const auto a = reduce(m, q);
  Vec b(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) b[i] = mod(rhs[i], q);
  std::vector<Vec> out;
  for_each_residue(m.cols(), q, [&](const Vec& x) {
    if (satisfies(a, x, b, q)) out.push_back(x);
  });
  return out;
}

std::int64_t solution_count(const IntMatrix& m, const Vec& rhs, std::int64_t q) {
  check_modulus(q);
  if (rhs.size() != m.rows()) throw DomainError("right-hand side length mismatch");
  guard_power(q, m.cols(), 1e7, "q^n");
  const auto a = reduce(m, q);
  Vec b(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) b[i] = mod(rhs[i], q);
  std::int64_t count = 0;
  for_each_residue(m.cols(), q, [&](const Vec& x) { count += satisfies(a, x, b, q); });
  return count;
}

int delta_q(const IntMatrix& m, std::int64_t q, const std::vector<Integer>& v) {
  check_modulus(q);
  if (!m.square() || v.size() != m.rows()) throw DomainError("delta_q dimension mismatch");
  const SmithForm f = smith_normal_form(m);
  const auto tv = f.t.transpose().apply(v);
  const auto lambda = f.lambda();
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), Integer(q).get_mpz_t(), lambda[i].get_mpz_t());
    if (tv[i] % g != 0) return 0;
  }
  return 1;
}

Integer null_pencil_sum(const IntMatrix& m1, const IntMatrix& m2, std::int64_t d) {
  check_modulus(d);
  Integer total = 0;
  for (std::int64_t b1 = 0; b1 < d; ++b1) {
    for (std::int64_t b2 = 0; b2 < d; ++b2) {
      if (std::gcd(std::gcd(b1, b2), d) != 1) continue;
      total += null_count(pencil(m1, m2, b1, b2), d, NullMethod::Smith);
    }
  }
  return total;
}

std::int64_t primitive_pair_sum(std::int64_t f, std::int64_t g, std::int64_t q) {
  check_modulus(q);
  std::int64_t total = 0;
  for (std::int64_t e : divisors(q)) {
    if (f % e == 0 && g % e == 0) total += mobius(q / e) * e * e;
  }
  return total;
}

}  // namespace arcbound::numlab
