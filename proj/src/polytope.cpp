#include "arcbound/polytope.hpp"

#include <algorithm>
#include <set>

#include "arcbound/errors.hpp"

namespace arcbound {

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::LessEq: return "<=";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "=";
  }
  return "?";
}

Relation parse_relation(const std::string& s) {
  if (s == "<=") return Relation::LessEq;
  if (s == ">=") return Relation::GreaterEq;
  if (s == "=" || s == "==") return Relation::Equal;
  throw ParseError("unknown relation '" + s + "'");
}

Polytope::Polytope(SpacePtr space, std::vector<Constraint> constraints)
    : space_(std::move(space)), constraints_(std::move(constraints)) {
  if (!space_) throw DomainError("null variable space");
  for (const auto& c : constraints_) {
    if (c.lhs.dim() != space_->size()) throw DomainError("constraint dimension mismatch");
  }
}

Polytope Polytope::with(const std::vector<Constraint>& extra) const {
  std::vector<Constraint> all = constraints_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Polytope(space_, std::move(all));
}

std::vector<HalfSpace> Polytope::halfspaces() const {
  std::vector<HalfSpace> out;
  out.reserve(constraints_.size() + 2);
  for (const auto& c : constraints_) {
    // lhs.coeffs·x + lhs.constant  rel  rhs
    const Rational bound = c.rhs - c.lhs.constant;
    if (c.rel != Relation::GreaterEq) out.push_back({c.lhs.coeffs, bound});
    if (c.rel != Relation::LessEq) {
      HalfSpace h{c.lhs.coeffs, -bound};
      for (auto& a : h.a) a = -a;
      out.push_back(std::move(h));
    }
  }
  return out;
}

bool Polytope::contains(const Point& p) const {
  for (const auto& c : constraints_) {
    const Rational v = c.lhs.eval(p);
    switch (c.rel) {
      case Relation::LessEq: if (v > c.rhs) return false; break;
      case Relation::GreaterEq: if (v < c.rhs) return false; break;
      case Relation::Equal: if (v != c.rhs) return false; break;
    }
  }
  return true;
}

Constraint le(AffineForm lhs, Rational rhs) { return {std::move(lhs), Relation::LessEq, std::move(rhs)}; }
Constraint ge(AffineForm lhs, Rational rhs) { return {std::move(lhs), Relation::GreaterEq, std::move(rhs)}; }
Constraint eq(AffineForm lhs, Rational rhs) { return {std::move(lhs), Relation::Equal, std::move(rhs)}; }

bool is_feasible(const Polytope& p) { return lp_feasible(p.halfspaces(), p.dim()); }

LpResult maximize_affine(const Polytope& p, const AffineForm& objective) {
  LpResult r = solve_lp(p.halfspaces(), objective.coeffs, p.dim());
  if (r.status == LpStatus::Optimal) r.value += objective.constant;
  return r;
}

LpResult minimize_affine(const Polytope& p, const AffineForm& objective) {
  LpResult r = maximize_affine(p, Rational(-1) * objective);
  if (r.status == LpStatus::Optimal) r.value = -r.value;
  return r;
}

LpResult maximize_lexmin(const Polytope& p, const AffineForm& objective) {
  LpResult best = maximize_affine(p, objective);
  if (best.status != LpStatus::Optimal) return best;
  std::vector<HalfSpace> rows = p.halfspaces();
  HalfSpace opt{objective.coeffs, objective.constant - best.value};
  for (auto& a : opt.a) a = -a;
  rows.push_back(opt);  // objective ≥ value
  const std::size_t d = p.dim();
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> c(d);
    c[i] = -1;
    LpResult r = solve_lp(rows, c, d);
    if (r.status != LpStatus::Optimal) {
      throw DomainError("optimal face is unbounded below in '" + p.space()->name(i) + "'");
    }
    const Rational xi = -r.value;
    std::vector<Rational> e(d);
    e[i] = 1;
    rows.push_back({e, xi});
    e[i] = -1;
    rows.push_back({e, -xi});
    best.point = std::move(r.point);
  }
  return best;
}

namespace {

struct Overflow {};

// Checked 128-bit arithmetic for the fast path; mpz for the fallback.
struct Wide {
  using Z = __int128;
  static Z mul(Z a, Z b) {
    Z r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Z sub(Z a, Z b) {
    Z r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Z add(Z a, Z b) {
    Z r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Z from(const Integer& v) {
    if (!v.fits_slong_p()) throw Overflow{};
    return static_cast<Z>(v.get_si());
  }
  static Integer to(Z v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer out = static_cast<unsigned long>(u >> 64);
    out <<= 64;
    out += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    return neg ? Integer(-out) : out;
  }
  static int sign(Z v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }
};

struct Big {
  using Z = Integer;
  static Z mul(const Z& a, const Z& b) { return a * b; }
  static Z sub(const Z& a, const Z& b) { return a - b; }
  static Z add(const Z& a, const Z& b) { return a + b; }
  static Z from(const Integer& v) { return v; }
  static Integer to(const Z& v) { return v; }
  static int sign(const Z& v) { return sgn(v); }
};

// Bareiss determinant of a k×k matrix given as row pointers, with column
// `replace` optionally swapped for `rhs`.
template <class A>
typename A::Z det(const std::vector<const std::vector<typename A::Z>*>& rows,
                  const std::vector<typename A::Z>& rhs_col, int replace, std::size_t k) {
  using Z = typename A::Z;
  std::vector<std::vector<Z>> m(k, std::vector<Z>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m[i][j] = (static_cast<int>(j) == replace) ? rhs_col[i] : (*rows[i])[j];
    }
  }
  Z prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c + 1 < k; ++c) {
    if (A::sign(m[c][c]) == 0) {
      std::size_t r = c + 1;
      while (r < k && A::sign(m[r][c]) == 0) ++r;
      if (r == k) return Z(0);
      std::swap(m[c], m[r]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j) {
        m[i][j] = A::sub(A::mul(m[i][j], m[c][c]), A::mul(m[i][c], m[c][j]));
        m[i][j] /= prev;  // exact by Sylvester's identity
      }
    }
    prev = m[c][c];
  }
  Z d = m[k - 1][k - 1];
  return sign < 0 ? Z(-d) : d;
}

struct IntRow {
  std::vector<Integer> a;
  Integer b;
};

template <class A>
std::set<Point> enumerate(const std::vector<IntRow>& rows, std::size_t d) {
  using Z = typename A::Z;
  const std::size_t m = rows.size();
  std::vector<std::vector<Z>> coef(m, std::vector<Z>(d));
  std::vector<Z> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) coef[i][j] = A::from(rows[i].a[j]);
    rhs[i] = A::from(rows[i].b);
  }
  std::set<Point> found;
  if (m < d) return found;
  std::vector<std::size_t> pick(d);
  std::vector<const std::vector<Z>*> sel(d);
  std::vector<Z> bsel(d);
  std::vector<Z> num(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    for (std::size_t i = 0; i < d; ++i) {
      sel[i] = &coef[pick[i]];
      bsel[i] = rhs[pick[i]];
    }
    Z den = det<A>(sel, bsel, -1, d);
    if (A::sign(den) != 0) {
      for (std::size_t j = 0; j < d; ++j) num[j] = det<A>(sel, bsel, static_cast<int>(j), d);
      if (A::sign(den) < 0) {
        den = -den;
        for (auto& v : num) v = -v;
      }
      // a·(num/den) ≤ b  ⇔  a·num ≤ b·den
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) {
        if (std::find(pick.begin(), pick.end(), i) != pick.end()) continue;
        Z lhs = 0;
        for (std::size_t j = 0; j < d; ++j) {
          if (A::sign(coef[i][j]) != 0) lhs = A::add(lhs, A::mul(coef[i][j], num[j]));
        }
        if (lhs > A::mul(rhs[i], den)) ok = false;
      }
      if (ok) {
        Point p(d);
        const Integer dd = A::to(den);
        for (std::size_t j = 0; j < d; ++j) {
          p[j] = Rational(A::to(num[j]), dd);
          p[j].canonicalize();
        }
        found.insert(std::move(p));
      }
    }
    std::size_t k = d;
    while (k > 0 && pick[k - 1] == m - d + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t i = k; i < d; ++i) pick[i] = pick[i - 1] + 1;
  }
  return found;
}

}  // namespace

std::vector<Point> vertices(const Polytope& p) {
  const std::size_t d = p.dim();
  if (d > 12) throw GuardError("vertex enumeration limited to 12 variables");
  const auto hs = p.halfspaces();
  if (!lp_feasible(hs, d)) return {};
  for (std::size_t i = 0; i < d; ++i) {
    for (int s : {1, -1}) {
      std::vector<Rational> c(d);
      c[i] = s;
      if (solve_lp(hs, c, d).status == LpStatus::Unbounded) {
        throw DomainError("vertex enumeration of an unbounded polytope");
      }
    }
  }
  if (d == 0) return {Point{}};

  // Scale to primitive integer rows and drop duplicates.
  std::set<std::pair<std::vector<Integer>, Integer>> seen;
  std::vector<IntRow> rows;
  for (const auto& h : hs) {
    Integer l = h.b.get_den();
    for (const auto& a : h.a) l = lcm(l, a.get_den());
    IntRow r;
    r.a.reserve(d);
    Integer g = 0;
    bool zero = true;
    for (const auto& a : h.a) {
      Integer v = a.get_num() * (l / a.get_den());
      if (v != 0) zero = false;
      g = gcd(g, v);
      r.a.push_back(std::move(v));
    }
    r.b = h.b.get_num() * (l / h.b.get_den());
    if (zero) continue;  // 0 ≤ b, already known feasible
    g = gcd(g, r.b);
    for (auto& v : r.a) v /= g;
    r.b /= g;
    if (seen.emplace(r.a, r.b).second) rows.push_back(std::move(r));
  }

  std::set<Point> found;
  try {
    found = enumerate<Wide>(rows, d);
  } catch (const Overflow&) {
    found = enumerate<Big>(rows, d);
  }
  return {found.begin(), found.end()};
}

}  // namespace arcbound
