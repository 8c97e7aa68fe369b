#include <doctest.h>

#include <random>

#include "arcbound/bounds.hpp"
#include "arcbound/errors.hpp"
#include "oracles.hpp"

using namespace arcbound;

namespace {

const Rational kDelta(993, 7000);
const Rational kEps(1, 10000);

BoundParams params(long n, DomainModel model = DomainModel::Lemma) {
  BoundParams p;
  p.n = n;
  p.model = model;
  return p;
}

}  // namespace

TEST_CASE("bound family matches the formulas pointwise") {
  std::mt19937_64 rng(11);
  for (long n : {3L, 20L, 38L, 39L, 48L, 60L}) {
    const auto fam = build_bound_family(params(n)).members();
    for (int k = 0; k < 300; ++k) {
      const Rational phi = oracle::grid_point(rng, -1, 2, 97);
      const Rational tau = oracle::grid_point(rng, -6, 1, 89);
      const Rational phi3 = oracle::grid_point(rng, -1, 2, 83);
      const Rational phi4 = oracle::grid_point(rng, -1, 2, 79);
      const auto want = oracle::bounds(n, kEps, phi, tau, phi3, phi4);
      const Point p{phi, tau, phi3, phi4};
      for (std::size_t i = 0; i < 5; ++i) CHECK(fam[i].eval(p) == want[i]);
    }
  }
}

TEST_CASE("domains contain exactly the points satisfying their definitions") {
  const auto lemma = domains(kDelta, DomainModel::Lemma);
  const auto display = domains(kDelta, DomainModel::Display);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 3000; ++k) {
    const Rational phi = oracle::grid_point(rng, -Rational(1, 4), 2, 64);
    const Rational tau = oracle::grid_point(rng, -6, 0, 96);
    const Rational phi3 = oracle::grid_point(rng, -Rational(1, 4), 2, 36);
    const Rational phi4 = k % 3 == 0 ? Rational(0) : oracle::grid_point(rng, -Rational(1, 4), 2, 36);
    const bool shared = phi3 >= 0 && phi4 >= 0 && phi3 + phi4 <= phi && tau <= -phi - Rational(3, 4);
    const bool in1 = shared && kDelta <= phi && phi <= Rational(3, 2) && tau >= -5;
    const bool in2 = shared && 0 <= phi && phi <= kDelta && tau >= kDelta - 3;
    const Point p{phi, tau, phi3, phi4};
    CHECK(lemma.d1.contains(p) == in1);
    CHECK(lemma.d2.contains(p) == in2);
    CHECK(display.d1.contains(p) == (in1 && phi4 == 0));
    CHECK(display.d2.contains(p) == (in2 && phi4 == 0));
  }
}

TEST_CASE("sampled domain points lie in the domains") {
  for (auto model : {DomainModel::Lemma, DomainModel::Display}) {
    const auto dom = domains(kDelta, model);
    for (const auto& p : sample_domain_points(kDelta, model, 3, 2000)) {
      CHECK((dom.d1.contains(p) || dom.d2.contains(p)));
    }
  }
}

TEST_CASE("frozen margins for n = 38..48") {
  // Each optimum is re-derived below by evaluating the oracle formulas at the
  // reported argmax and by checking random domain points never beat it.
  const std::map<long, std::pair<std::string, std::string>> frozen = {
      {38, {"57869/360000", "57869/360000"}}, {39, {"0", "-37/20000"}},
      {40, {"-19/10000", "-19/10000"}},       {41, {"-39/20000", "-39/20000"}},
      {42, {"-1/500", "-1/500"}},             {43, {"-9/4000", "-9/4000"}},
      {44, {"-331/5600", "-212833/2604000"}}, {45, {"-993/14000", "-15557/166250"}},
      {46, {"-331/4000", "-57263/543200"}},   {47, {"-331/3500", "-162521/1386000"}},
      {48, {"-2979/28000", "-365093/2828000"}}};
  std::mt19937_64 rng(17);
  for (const auto& [n, want] : frozen) {
    for (auto model : {DomainModel::Lemma, DomainModel::Display}) {
      const auto rep = verify_minor_arcs(params(n, model), Engine::Branch);
      const std::string expect = model == DomainModel::Lemma ? want.first : want.second;
      CHECK_MESSAGE(to_string(rep.margin) == expect, "n=" << n << " " << domain_model_name(model));
      const auto& a = rep.argmax;
      CHECK(oracle::min_bound(n, kEps, a[0], a[1], a[2], a[3]) == rep.value);
      const auto dom = domains(kDelta, model);
      CHECK((dom.d1.contains(a) || dom.d2.contains(a)));
      for (int k = 0; k < 400; ++k) {
        const Rational phi = oracle::grid_point(rng, 0, Rational(3, 2), 120);
        const Rational lo = phi < kDelta ? kDelta - 3 : Rational(-5);
        const Rational tau = oracle::grid_point(rng, lo, -phi - Rational(3, 4), 60);
        const Rational phi3 = oracle::grid_point(rng, 0, phi, 12);
        const Rational phi4 =
            model == DomainModel::Display ? Rational(0) : oracle::grid_point(rng, 0, phi - phi3, 12);
        CHECK(oracle::min_bound(n, kEps, phi, tau, phi3, phi4) <= rep.value);
      }
    }
  }
}

TEST_CASE("the n = 39 optima") {
  const auto display = verify_minor_arcs(params(39, DomainModel::Display), Engine::Both);
  CHECK(to_string(display.margin) == "-37/20000");
  CHECK(display.argmax == Point{Rational(3, 2), Rational(-9, 4), 0, 0});
  CHECK(kBoundNames[display.min_index] == std::string("B_AV/P"));

  // With φ₄ free the optimum reaches n − 6 exactly, at φ = Δ (shared by D1
  // and D2, reported as D1) with φ₄ > 0.
  const auto lemma = verify_minor_arcs(params(39), Engine::Both);
  CHECK(lemma.margin == 0);
  CHECK(lemma.domain == 1);
  CHECK(lemma.argmax == Point{Rational(993, 7000), Rational(-20669, 7000), 0, Rational(331, 3500)});
  CHECK(oracle::min_bound(39, kEps, lemma.argmax[0], lemma.argmax[1], 0, lemma.argmax[3]) == 33);
}

TEST_CASE("n = 38 witness exceeds n - 6") {
  const Point v{Rational(3, 2), Rational(-9, 4), 0, 0};
  const Rational floor = floor_at_points(params(38), {v});
  CHECK(floor > 32);
  CHECK(floor == oracle::min_bound(38, kEps, v[0], v[1], v[2], v[3]));
}

TEST_CASE("sample floor never exceeds the optimum") {
  for (long n : {39L, 44L}) {
    const auto rep = verify_minor_arcs(params(n), Engine::Branch);
    CHECK(sample_floor(params(n), 99, 3000) <= rep.value);
  }
}

TEST_CASE("parameter validation") {
  auto bad = params(39);
  bad.delta = Rational(1, 7);
  CHECK_THROWS_AS(build_bound_family(bad), DomainError);
  bad = params(2);
  CHECK_THROWS_AS(build_bound_family(bad), DomainError);
  bad = params(39);
  bad.eps_prime = 0;
  CHECK_THROWS_AS(build_bound_family(bad), DomainError);
  CHECK_THROWS_AS(parse_domain_model("full"), ParseError);
}
