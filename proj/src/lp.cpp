#include "arcbound/lp.hpp"

#include "arcbound/errors.hpp"

namespace arcbound {
namespace {

class Tableau {
 public:
  Tableau(const std::vector<HalfSpace>& rows, std::size_t dim) : dim_(dim) {
    const std::size_t m = rows.size();
    std::size_t nart = 0;
    for (const auto& h : rows) {
      if (h.a.size() != dim) throw DomainError("constraint dimension mismatch");
      if (sgn(h.b) < 0) ++nart;
    }
    art_begin_ = 2 * dim + m;
    ncols_ = art_begin_ + nart;
    t_.assign(m, std::vector<Rational>(ncols_));
    rhs_.resize(m);
    basis_.resize(m);
    std::size_t next_art = art_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      const bool flip = sgn(rows[i].b) < 0;
      auto& row = t_[i];
      for (std::size_t k = 0; k < dim; ++k) {
        if (sgn(rows[i].a[k]) == 0) continue;
        row[k] = flip ? Rational(-rows[i].a[k]) : rows[i].a[k];
        row[dim + k] = -row[k];
      }
      row[2 * dim + i] = flip ? -1 : 1;
      rhs_[i] = flip ? Rational(-rows[i].b) : rows[i].b;
      if (flip) {
        row[next_art] = 1;
        basis_[i] = next_art++;
      } else {
        basis_[i] = 2 * dim + i;
      }
    }
  }

  // Phase one. Returns false when the system is infeasible.
  bool phase_one() {
    if (ncols_ == art_begin_) return true;
    cost_.assign(ncols_, Rational(0));
    for (std::size_t j = art_begin_; j < ncols_; ++j) cost_[j] = -1;
    reprice();
    run(ncols_);
    if (sgn(z_) < 0) return false;
    drive_out_artificials();
    return true;
  }

  // Phase two on the original columns. Returns false when unbounded.
  bool phase_two(const std::vector<Rational>& objective) {
    cost_.assign(ncols_, Rational(0));
    for (std::size_t k = 0; k < dim_; ++k) {
      cost_[k] = objective[k];
      cost_[dim_ + k] = -objective[k];
    }
    reprice();
    return run(art_begin_);
  }

  const Rational& value() const { return z_; }

  std::vector<Rational> point() const {
    std::vector<Rational> x(dim_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const std::size_t b = basis_[i];
      if (b < dim_) x[b] += rhs_[i];
      else if (b < 2 * dim_) x[b - dim_] -= rhs_[i];
    }
    return x;
  }

 private:
  void reprice() {
    red_.assign(ncols_, Rational(0));
    z_ = 0;
    for (std::size_t j = 0; j < ncols_; ++j) red_[j] = -cost_[j];
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (sgn(t_[i][j]) != 0) red_[j] += cb * t_[i][j];
      }
      z_ += cb * rhs_[i];
    }
  }

  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool run(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(red_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = t_.size();
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == t_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == t_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = t_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    rhs_[r] *= inv;
    auto eliminate = [&](std::vector<Rational>& row, Rational& rhs) {
      if (sgn(row[c]) == 0) return;
      const Rational f = row[c];
      for (std::size_t j : nz) row[j] -= f * prow[j];
      rhs -= f * rhs_[r];
    };
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i != r) eliminate(t_[i], rhs_[i]);
    }
    eliminate(red_, z_);
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < t_.size();) {
      if (basis_[i] < art_begin_) {
        ++i;
        continue;
      }
      std::size_t col = art_begin_;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (sgn(t_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == art_begin_) {
        // Redundant row: every original column is zero here.
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
  }

  std::size_t dim_;
  std::size_t art_begin_ = 0;
  std::size_t ncols_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::vector<Rational> red_;
  Rational z_;
};

}  // namespace

LpResult solve_lp(const std::vector<HalfSpace>& rows, const std::vector<Rational>& objective,
                  std::size_t dim) {
  if (objective.size() != dim) throw DomainError("objective dimension mismatch");
  Tableau tab(rows, dim);
  LpResult res;
  if (!tab.phase_one()) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  if (!tab.phase_two(objective)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = tab.value();
  res.point = tab.point();
  return res;
}

bool lp_feasible(const std::vector<HalfSpace>& rows, std::size_t dim) {
  Tableau tab(rows, dim);
  return tab.phase_one();
}

}  // namespace arcbound
