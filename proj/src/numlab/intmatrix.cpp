#include "arcbound/numlab/intmatrix.hpp"

#include <cmath>

#include "arcbound/errors.hpp"

namespace arcbound::numlab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0 || rows > kMaxDim || cols > kMaxDim) {
    throw DomainError("matrix dimensions must be between 1 and 8");
  }
  data_.assign(rows * cols, Integer(0));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty()) throw DomainError("empty matrix");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Integer>> big;
  for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
  return from_rows(big);
}

IntMatrix IntMatrix::diagonal(const std::vector<long>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool IntMatrix::symmetric() const { return square() && *this == transpose(); }

Integer IntMatrix::det() const {
  if (!square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  std::vector<Integer> m = data_;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n + j]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != cols_) throw DomainError("vector length mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix sum dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  }
  return c;
}

IntMatrix operator*(const Integer& c, const IntMatrix& m) {
  IntMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) *= c;
  }
  return r;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

std::int64_t mod(const Integer& v, std::int64_t q) {
  Integer r = v % q;
  if (r < 0) r += q;
  return r.get_si();
}

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(c));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) a[i][j] = mod(m(i, j), p);
  }
  auto inv = [p](std::int64_t x) {
    std::int64_t result = 1, base = x, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && a[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t iv = inv(a[rank][col]);
    for (std::size_t i = rank + 1; i < r; ++i) {
      if (a[i][col] == 0) continue;
      const std::int64_t f = a[i][col] * iv % p;
      for (std::size_t j = col; j < c; ++j) a[i][j] = mod(a[i][j] - f * a[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

IntMatrix pencil(const IntMatrix& m1, const IntMatrix& m2, const Integer& a1, const Integer& a2) {
  return a1 * m1 + a2 * m2;
}

void guard_power(std::int64_t base, std::size_t exp, double limit, const std::string& what) {
  if (std::pow(static_cast<double>(base), static_cast<double>(exp)) > limit) {
    throw GuardError(what + " exceeds the brute-force limit");
  }
}

}  // namespace arcbound::numlab
