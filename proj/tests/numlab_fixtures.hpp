#pragma once

// Random instances shared by the numlab unit tests and the acceptance suite.
// Each instance keeps its raw integer data so the oracles never touch the
// library's own polynomial or matrix types.

#include <random>
#include <vector>

#include "arcbound/numlab/poly.hpp"
#include "oracles.hpp"

namespace fixture {

using arcbound::Integer;
using arcbound::numlab::CubicPoly;
using arcbound::numlab::IntMatrix;
using arcbound::numlab::QuadPoly;
using oracle::I64;

using Rows = std::vector<std::vector<I64>>;

inline IntMatrix to_matrix(const Rows& r) {
  std::vector<std::vector<long>> rows;
  for (const auto& row : r) rows.emplace_back(row.begin(), row.end());
  return IntMatrix::from_rows(rows);
}

inline Rows random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, I64 lo, I64 hi) {
  std::uniform_int_distribution<I64> d(lo, hi);
  Rows m(rows, std::vector<I64>(cols));
  for (auto& row : m)
    for (auto& v : row) v = d(rng);
  return m;
}

inline Rows random_symmetric(std::mt19937_64& rng, std::size_t n, I64 lo, I64 hi) {
  std::uniform_int_distribution<I64> d(lo, hi);
  Rows m(n, std::vector<I64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = d(rng);
  return m;
}

// xᵗMx + b·x + c from raw integers.
struct Quad {
  Rows m;
  std::vector<I64> b;
  I64 c = 0;

  std::size_t n() const { return b.size(); }

  I64 operator()(const std::vector<I64>& x) const {
    I64 v = c;
    for (std::size_t i = 0; i < n(); ++i) {
      v += b[i] * x[i];
      for (std::size_t j = 0; j < n(); ++j) v += m[i][j] * x[i] * x[j];
    }
    return v;
  }

  QuadPoly lib() const {
    QuadPoly p;
    p.quadratic = to_matrix(m);
    for (I64 v : b) p.linear.emplace_back(static_cast<long>(v));
    p.constant = static_cast<long>(c);
    return p;
  }
};

inline Quad random_quad(std::mt19937_64& rng, std::size_t n, I64 range) {
  std::uniform_int_distribution<I64> d(-range, range);
  Quad q;
  q.m = random_symmetric(rng, n, -range, range);
  for (std::size_t i = 0; i < n; ++i) q.b.push_back(d(rng));
  q.c = d(rng);
  return q;
}

// Σ coeff·∏ x_i^e_i from raw integers.
struct Cubic {
  std::size_t n = 0;
  std::vector<std::pair<std::vector<int>, I64>> terms;

  I64 operator()(const std::vector<I64>& x) const {
    I64 v = 0;
    for (const auto& [e, c] : terms) {
      I64 t = c;
      for (std::size_t i = 0; i < n; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      v += t;
    }
    return v;
  }

  CubicPoly lib() const {
    CubicPoly p(n);
    for (const auto& [e, c] : terms) p.add_term(e, Integer(static_cast<long>(c)));
    return p;
  }
};

// A cubic form plus a few lower-order terms, small coefficients.
inline Cubic random_cubic(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<I64> d(-3, 3);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  Cubic f;
  f.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 3;
    I64 c = d(rng);
    if (c == 0) c = 1;
    f.terms.push_back({e, c});
  }
  for (int k = 0; k < 3; ++k) {
    std::vector<int> e(n, 0);
    const int deg = 1 + k % 3;
    for (int j = 0; j < deg; ++j) ++e[pick(rng)];
    f.terms.push_back({e, d(rng)});
  }
  return f;
}

}  // namespace fixture
