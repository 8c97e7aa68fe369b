#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcbound/rational.hpp"

namespace arcbound::numlab {

inline constexpr std::size_t kMaxDim = 8;

/// Small dense integer matrix (at most 8×8) with exact entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix diagonal(const std::vector<long>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  bool symmetric() const;
  Integer det() const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& c, const IntMatrix& m);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<std::vector<Integer>> to_rows() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// Rank over F_p, p prime.
std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p);

/// a1·M1 + a2·M2
IntMatrix pencil(const IntMatrix& m1, const IntMatrix& m2, const Integer& a1, const Integer& a2);

std::int64_t mod(const Integer& v, std::int64_t q);
inline std::int64_t mod(std::int64_t v, std::int64_t q) {
  const std::int64_t r = v % q;
  return r < 0 ? r + q : r;
}

/// Throws GuardError when base^exp exceeds limit.
void guard_power(std::int64_t base, std::size_t exp, double limit, const std::string& what);

}  // namespace arcbound::numlab
