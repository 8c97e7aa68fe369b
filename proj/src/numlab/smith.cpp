#include "arcbound/numlab/smith.hpp"

#include <algorithm>

#include "arcbound/errors.hpp"

namespace arcbound::numlab {

std::vector<Integer> SmithForm::lambda() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// Row and column operations applied simultaneously to the working matrix and
// to the accumulated transforms: rows act on S, columns on T.
struct Reducer {
  IntMatrix a, s, t;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < s.cols(); ++c) std::swap(s(i, c), s(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < t.rows(); ++r) std::swap(t(r, i), t(r, j));
  }
  // row_i -= f·row_j
  void add_row(std::size_t i, std::size_t j, const Integer& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= f * a(j, c);
    for (std::size_t c = 0; c < s.cols(); ++c) s(i, c) -= f * s(j, c);
  }
  // col_i -= f·col_j
  void add_col(std::size_t i, std::size_t j, const Integer& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= f * a(r, j);
    for (std::size_t r = 0; r < t.rows(); ++r) t(r, i) -= f * t(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < s.cols(); ++c) s(i, c) = -s(i, c);
  }

  static Integer fdiv(const Integer& x, const Integer& y) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
  }

  // Brings a minimal nonzero entry of the trailing block to (k, k) and clears
  // row k and column k. Returns false when the block is zero.
  bool pivot(std::size_t k) {
    const std::size_t n = a.rows(), m = a.cols();
    for (;;) {
      std::size_t pr = n, pc = m;
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < m; ++j) {
          if (a(i, j) != 0 && (pr == n || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == n) return false;
      if (pr != k) swap_rows(pr, k);
      if (pc != k) swap_cols(pc, k);
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        add_row(i, k, fdiv(a(i, k), a(k, k)));
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < m; ++j) {
        add_col(j, k, fdiv(a(k, j), a(k, k)));
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility: fold an offending row into row k and retry.
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i) {
        for (std::size_t j = k + 1; j < m; ++j) {
          if (a(i, j) % a(k, k) != 0) {
            add_row(k, i, -1);
            divides = false;
            break;
          }
        }
      }
      if (divides) return true;
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  if (!m.square()) throw DomainError("Smith normal form requires a square matrix");
  const std::size_t n = m.rows();
  Reducer r{m, IntMatrix::identity(n), IntMatrix::identity(n)};
  for (std::size_t k = 0; k < n; ++k) {
    if (!r.pivot(k)) break;
    if (r.a(k, k) < 0) r.negate_row(k);
  }
  return {r.s, r.a, r.t};
}

}  // namespace arcbound::numlab
