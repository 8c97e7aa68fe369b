#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arcbound/numlab/intmatrix.hpp"
#include "arcbound/numlab/modular.hpp"

namespace arcbound::numlab {

inline constexpr std::size_t kMaxPolyVars = 6;
inline constexpr int kMaxPolyDegree = 3;

using Monomial = std::vector<int>;

/// Integer polynomial of total degree ≤ 3 in at most 6 variables.
class CubicPoly {
 public:
  explicit CubicPoly(std::size_t n);
  CubicPoly(std::size_t n, const std::map<Monomial, Integer>& terms);

  std::size_t nvars() const { return n_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  int degree() const;  // −1 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& exps, const Integer& coeff);
  Integer coeff(const Monomial& exps) const;

  Integer eval(const std::vector<Integer>& x) const;
  /// Value mod q at a residue vector.
  std::int64_t eval_mod(const Vec& x, std::int64_t q) const;
  double eval_real(const std::vector<double>& x) const;

  /// y ↦ F(y + h).
  CubicPoly shift(const std::vector<Integer>& h) const;
  /// Degree-k homogeneous part.
  CubicPoly homogeneous(int k) const;

  friend CubicPoly operator+(const CubicPoly& a, const CubicPoly& b);
  friend CubicPoly operator-(const CubicPoly& a, const CubicPoly& b);
  friend CubicPoly operator*(const Integer& c, const CubicPoly& p);
  friend bool operator==(const CubicPoly& a, const CubicPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  std::map<Monomial, Integer> terms_;
};

/// xᵗMx + 𝔟·x + c with M symmetric.
struct QuadPoly {
  IntMatrix quadratic;
  std::vector<Integer> linear;
  Integer constant;

  std::size_t nvars() const { return linear.size(); }
  static QuadPoly zero(std::size_t n);
  void check() const;  // throws DomainError on shape or symmetry violations

  Integer eval(const std::vector<Integer>& x) const;
  std::int64_t eval_mod(const Vec& x, std::int64_t q) const;
  double eval_real(const std::vector<double>& x) const;
  CubicPoly to_poly() const;
};

/// a₁F + a₂G.
QuadPoly combine(const Integer& a1, const QuadPoly& f, const Integer& a2, const QuadPoly& g);

/// The form of a polynomial of degree ≤ 2. Cross coefficients of xᵢxⱼ become
/// 2Mᵢⱼ; when one is odd the whole polynomial is doubled first and `scale` is 2.
struct QuadForm {
  QuadPoly form;  // scale · p
  int scale = 1;
};
QuadForm quad_form(const CubicPoly& p);

/// F_h(y) = F(y + h) − F(y), exact, together with its quadratic form.
struct Differenced {
  CubicPoly poly;
  QuadForm quad;
};
Differenced difference_cubic(const CubicPoly& f, const std::vector<Integer>& h);

}  // namespace arcbound::numlab
