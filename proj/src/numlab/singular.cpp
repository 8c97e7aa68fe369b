#include "arcbound/numlab/singular.hpp"

#include <numeric>

#include "arcbound/errors.hpp"
#include "arcbound/numlab/modular.hpp"

namespace arcbound::numlab {

namespace {

void check_pair(const IntMatrix& m1, const IntMatrix& m2) {
  if (!m1.symmetric() || !m2.symmetric() || m1.rows() != m2.rows()) {
    throw DomainError("singular locus needs two symmetric matrices of equal size");
  }
  if (m1.rows() > 4) throw GuardError("singular locus limited to n <= 4");
}

std::int64_t projective_count(std::int64_t p, int d) {
  std::int64_t total = 0, pk = 1;
  for (int k = 0; k <= d; ++k, pk *= p) total += pk;
  return total;
}

}  // namespace

std::int64_t singular_locus_points(const IntMatrix& m1, const IntMatrix& m2, std::int64_t p) {
  check_pair(m1, m2);
  if (p == 2 || !is_prime(p)) throw DomainError("singular locus needs an odd prime");
  const std::size_t n = m1.rows();
  guard_power(p, n, 1e7, "p^n");
  std::vector<Vec> a(n, Vec(n)), b(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = mod(m1(i, j), p);
      b[i][j] = mod(m2(i, j), p);
    }
  }
  // Odd p: ∇Q_i = 2M_i x, so the rank condition is on (M₁x, M₂x).
  std::int64_t cone = 0;
  Vec u(n), v(n);
  for_each_residue(n, p, [&](const Vec& x) {
    bool zero = true;
    for (auto c : x) zero = zero && c == 0;
    if (zero) return;
    std::int64_t q1 = 0, q2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = v[i] = 0;
      for (std::size_t j = 0; j < n; ++j) {
        u[i] = (u[i] + a[i][j] * x[j]) % p;
        v[i] = (v[i] + b[i][j] * x[j]) % p;
      }
      q1 = (q1 + u[i] * x[i]) % p;
      q2 = (q2 + v[i] * x[i]) % p;
    }
    if (q1 != 0 || q2 != 0) return;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (mod(u[i] * v[j] - u[j] * v[i], p) != 0) return;
      }
    }
    ++cone;
  });
  return cone / (p - 1);
}

int singular_locus_dim(const IntMatrix& m1, const IntMatrix& m2, std::int64_t p) {
  const std::int64_t count = singular_locus_points(m1, m2, p);
  if (count == 0) return -1;
  const int n = static_cast<int>(m1.rows());
  const std::int64_t c = std::int64_t{1} << (n - 1);
  int found = -2;
  std::int64_t pd = 1;
  for (int d = 0; d <= n - 1; ++d, pd *= p) {
    if (count >= pd && count <= c * projective_count(p, d)) {
      if (found != -2) {
        throw IndeterminateError("dimension indeterminate at p = " + std::to_string(p) +
                                 " (" + std::to_string(count) + " points)");
      }
      found = d;
    }
  }
  if (found == -2) {
    throw IndeterminateError("dimension indeterminate at p = " + std::to_string(p) + " (" +
                             std::to_string(count) + " points)");
  }
  return found;
}

Integer singular_factor(const IntMatrix& m1, const IntMatrix& m2, std::int64_t q) {
  if (q < 1 || q % 2 == 0) throw DomainError("D(q) needs an odd positive q");
  check_pair(m1, m2);
  if (m1.rows() == 1) {
    Integer g = q;
    for (const IntMatrix* m : {&m1, &m2}) {
      for (std::size_t i = 0; i < m->rows(); ++i) {
        for (std::size_t j = 0; j < m->cols(); ++j) g = gcd(g, (*m)(i, j));
      }
    }
    return g;
  }
  Integer d = 1;
  for (const auto& [p, e] : factorize(q)) {
    const int s = singular_locus_dim(m1, m2, p);
    for (int k = 0; k < s + 1; ++k) d *= p;
  }
  return d;
}

}  // namespace arcbound::numlab
