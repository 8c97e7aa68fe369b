#include <doctest.h>

#include <random>

#include "arcbound/errors.hpp"
#include "arcbound/lp.hpp"
#include "arcbound/minmax.hpp"
#include "arcbound/polytope.hpp"
#include "arcbound/pwl.hpp"
#include "arcbound/sexpr.hpp"

using namespace arcbound;

namespace {

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

AffineForm form(std::vector<Rational> c, Rational k = 0) {
  AffineForm f(c.size(), std::move(k));
  f.coeffs = std::move(c);
  return f;
}

Polytope box(const SpacePtr& s, const Rational& lo, const Rational& hi) {
  std::vector<Constraint> cons;
  for (std::size_t i = 0; i < s->size(); ++i) {
    cons.push_back(ge(unit_form(s->size(), i), lo));
    cons.push_back(le(unit_form(s->size(), i), hi));
  }
  return Polytope(s, cons);
}

}  // namespace

TEST_CASE("rationals parse canonically and refuse decimals") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("6/-4"), ParseError);
  CHECK(to_string(parse_rational("-37/20000")) == "-37/20000");
  CHECK(to_string(parse_rational("12")) == "12");
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2x"), ParseError);
}

TEST_CASE("pwl evaluation, substitution and sharing") {
  const auto s = make_space({"x", "y"});
  const auto x = PwlExpr::variable(s, "x");
  const auto y = PwlExpr::variable(s, "y");
  const auto shared = PwlExpr::max({x, y});
  const auto e = PwlExpr::min({shared + Rational(1), Rational(2) * shared - y});
  CHECK(e.eval(Point{3, 1}) == 4);
  CHECK(e.eval(Point{Rational(-1, 2), Rational(-3)}) == Rational(1, 2));
  CHECK(e.branch_node_count() == 2);

  const auto fixed = e.substitute({{"y", Rational(1)}});
  CHECK(fixed.eval(Point{3, 99}) == 4);
  CHECK(fixed.branch_node_count() == 2);

  CHECK_THROWS_AS(e.eval(Assignment{{"x", Rational(1)}}), UnboundVariableError);
  CHECK(PwlExpr::constant(s, 7).eval(Assignment{}) == 7);
}

TEST_CASE("s-expressions round-trip") {
  const auto s = make_space({"phi", "tau"});
  const std::string text = "(min (affine (phi 1) (tau -1/2) 3/4) (* 2 (max (affine (tau 1) 0) (affine -1))))";
  const auto e = parse_sexpr(s, text);
  CHECK(to_sexpr(e) == text);
  CHECK(to_sexpr(parse_sexpr(s, to_sexpr(e))) == text);
  CHECK(e.eval(Point{1, 2}) == Rational(3, 4));
  CHECK_THROWS_AS(parse_sexpr(s, "(max (affine (zeta 1) 0))"), ParseError);
  CHECK_THROWS_AS(parse_sexpr(s, "(max"), ParseError);
}

TEST_CASE("simplex solves small programs exactly") {
  // max x + y s.t. x + 2y ≤ 4, 3x + y ≤ 6, x, y ≥ 0: optimum 14/5 at (8/5, 6/5)
  std::vector<HalfSpace> rows = {{{1, 2}, 4}, {{3, 1}, 6}, {{-1, 0}, 0}, {{0, -1}, 0}};
  const auto r = solve_lp(rows, {1, 1}, 2);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(14, 5));
  CHECK(r.point == std::vector<Rational>{Rational(8, 5), Rational(6, 5)});

  CHECK(solve_lp({{{1}, 1}}, {1}, 1).status == LpStatus::Optimal);
  CHECK(solve_lp({{{-1}, 1}}, {1}, 1).status == LpStatus::Unbounded);
  CHECK(solve_lp({{{1}, -1}, {{-1}, 0}}, {1}, 1).status == LpStatus::Infeasible);
  CHECK_FALSE(lp_feasible({{{1, 1}, -1}, {{-1, 0}, 0}, {{0, -1}, 0}}, 2));
}

TEST_CASE("simplex survives degenerate cycling examples") {
  // Beale's example, which cycles under the textbook largest-coefficient rule.
  std::vector<HalfSpace> rows = {
      {{Rational(1, 4), -8, -1, 9}, 0},
      {{Rational(1, 2), -12, Rational(-1, 2), 3}, 0},
      {{0, 0, 1, 0}, 1},
      {{-1, 0, 0, 0}, 0}, {{0, -1, 0, 0}, 0}, {{0, 0, -1, 0}, 0}, {{0, 0, 0, -1}, 0}};
  const auto r = solve_lp(rows, {Rational(3, 4), -20, Rational(1, 2), -6}, 4);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(5, 4));
}

TEST_CASE("polytope vertices and lexmin optimum") {
  const auto s = make_space({"x", "y"});
  const Polytope tri(s, {ge(unit_form(2, 0)), ge(unit_form(2, 1)), le(form({1, 1}), 1)});
  const auto v = vertices(tri);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Point{0, 0});
  CHECK(v[1] == Point{0, 1});
  CHECK(v[2] == Point{1, 0});
  CHECK(tri.contains(Point{Rational(1, 3), Rational(1, 3)}));
  CHECK_FALSE(tri.contains(Point{1, 1}));

  // x + y is maximal along the whole hypotenuse; the lexmin maximizer is (0, 1).
  const auto r = maximize_lexmin(tri, form({1, 1}));
  CHECK(r.value == 1);
  CHECK(r.point == std::vector<Rational>{0, 1});

  const Polytope empty = tri.with({ge(unit_form(2, 0), 2)});
  CHECK_FALSE(is_feasible(empty));
  CHECK(vertices(box(make_space({"a", "b", "c"}), -1, 1)).size() == 8);

  const Polytope ray(s, {ge(unit_form(2, 0))});
  CHECK_THROWS(vertices(ray));
}

TEST_CASE("max-min on hand-solved families") {
  const auto s = make_space({"x"});
  const auto x = PwlExpr::variable(s, "x");
  const Polytope dom = box(s, -2, 2);
  // min(x, 1 − x) peaks at 1/2
  for (Engine e : {Engine::Branch, Engine::Vertex, Engine::Both}) {
    const auto r = max_min({x, Rational(-1) * x + Rational(1)}, dom, e);
    CHECK(r.value == Rational(1, 2));
    CHECK(r.argmax == Point{Rational(1, 2)});
  }
  // |x| = max(x, −x) has its max-min at both ends; lexmin picks −2.
  const auto r = max_min({PwlExpr::max({x, Rational(-1) * x})}, dom, Engine::Branch);
  CHECK(r.value == 2);
  CHECK(r.argmax == Point{-2});
  CHECK(r.certificate.region.contains(r.argmax));
}

TEST_CASE("joint cells cover the domain and make every member affine") {
  const auto s = make_space({"x", "y"});
  const auto x = PwlExpr::variable(s, "x");
  const auto y = PwlExpr::variable(s, "y");
  const auto e1 = PwlExpr::max({x, y, Rational(-1) * x});
  const auto e2 = PwlExpr::min({x + y, PwlExpr::constant(s, 1)});
  const Polytope dom = box(s, -3, 3);
  const auto cells = joint_cells({e1, e2}, dom);
  REQUIRE(!cells.empty());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-300, 300);
  for (int k = 0; k < 500; ++k) {
    const Point p{frac(d(rng), 100), frac(d(rng), 100)};
    bool covered = false;
    for (const auto& c : cells) {
      if (!c.region.contains(p)) continue;
      covered = true;
      CHECK(c.active[0].eval(p) == e1.eval(p));
      CHECK(c.active[1].eval(p) == e2.eval(p));
    }
    CHECK(covered);
  }
}

TEST_CASE("max-min dominates a dense rational grid and is attained") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<long> coef(-3, 3);
  const auto s = make_space({"x", "y"});
  const Polytope dom = box(s, -1, 1);
  auto affine = [&] {
    return PwlExpr::affine(s, form({coef(rng), coef(rng)}, frac(coef(rng), 2)));
  };
  for (int t = 0; t < 10; ++t) {
    std::vector<PwlExpr> fam;
    for (int i = 0; i < 3; ++i) {
      fam.push_back(PwlExpr::max({affine(), PwlExpr::min({affine(), affine()})}));
    }
    const auto r = max_min(fam, dom, Engine::Both);
    auto min_at = [&](const Point& p) {
      Rational m = fam[0].eval(p);
      for (const auto& e : fam) m = std::min(m, e.eval(p));
      return m;
    };
    CHECK(min_at(r.argmax) == r.value);
    for (long i = -20; i <= 20; ++i)
      for (long j = -20; j <= 20; ++j) CHECK(min_at(Point{frac(i, 20), frac(j, 20)}) <= r.value);
  }
}
