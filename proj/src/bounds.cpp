#include "arcbound/bounds.hpp"

#include <chrono>
#include <random>

#include "arcbound/errors.hpp"

namespace arcbound {

const char* domain_model_name(DomainModel m) {
  return m == DomainModel::Lemma ? "lemma" : "display";
}

DomainModel parse_domain_model(const std::string& s) {
  if (s == "lemma") return DomainModel::Lemma;
  if (s == "display") return DomainModel::Display;
  throw ParseError("unknown domain model '" + s + "' (expected lemma or display)");
}

void validate(const BoundParams& p) {
  if (p.n < 3) throw DomainError("n must be at least 3");
  if (!(sgn(p.delta) > 0 && p.delta < Rational(1, 7))) {
    throw DomainError("delta must lie strictly between 0 and 1/7");
  }
  if (sgn(p.eps_prime) <= 0) throw DomainError("eps-prime must be positive");
}

SpacePtr bound_space() {
  static const SpacePtr space = make_space({"phi", "tau", "phi3", "phi4"});
  return space;
}

BoundFamily build_bound_family(const BoundParams& params) {
  validate(params);
  const SpacePtr s = bound_space();
  const Rational n = params.n;
  const Rational& eps = params.eps_prime;

  auto lin = [&](Rational phi, Rational tau, Rational phi3, Rational phi4, Rational c) {
    AffineForm f(4, std::move(c));
    f.coeffs = {std::move(phi), std::move(tau), std::move(phi3), std::move(phi4)};
    return PwlExpr::affine(s, std::move(f));
  };
  auto max = [](std::vector<PwlExpr> es) { return PwlExpr::max(std::move(es)); };
  auto min = [](std::vector<PwlExpr> es) { return PwlExpr::min(std::move(es)); };
  const PwlExpr phi = lin(1, 0, 0, 0, 0);
  const PwlExpr tau = lin(0, 1, 0, 0, 0);

  const PwlExpr h_hat = max({lin(0, 0, 0, 0, 10 / (n - 2) + eps),
                             lin(6 / (n + 2), 0, 0, 0, 2 / (n + 2) + eps)});
  const PwlExpr v_hat = max({lin(0, 0, 0, 0, 0), lin(1, 0, 0, 0, -1),
                             phi + Rational(1, 2) * (tau + h_hat)});
  const PwlExpr tau_brac = max({Rational(-1) * h_hat + Rational(-2), tau});
  const PwlExpr x_brac = max({phi,
                              lin((1 - n) / 2, 0, 0, 0, 0) + n * h_hat + (n - 1) * v_hat,
                              lin((1 - n) / 2, 0, n / 3 - Rational(1, 2), (n - 1) / 2, 0) + n * h_hat});

  const PwlExpr b_avp = lin(Rational(5, 2), 0, 0, 0, n - 1) + ((2 - n) / 2) * h_hat +
                        Rational(2) * tau_brac + Rational(1, 2) * x_brac;
  const PwlExpr b_pvp =
      lin(Rational(5, 2), 2, 0, 0, n) + (-n / 2) * h_hat + Rational(1, 2) * x_brac;

  const PwlExpr h_weyl = max({lin(Rational(1, 6), 0, 0, 0, 0),
                              lin(Rational(1, 5), Rational(1, 5), 0, 0, Rational(2, 5))});
  const PwlExpr tau_brac_weyl = max({Rational(-1) * h_weyl + Rational(-2), tau});
  const PwlExpr b_avw = lin(3, 0, Rational(-2, 3), Rational(-3, 4), n - 1) +
                        ((3 - n) / 2) * h_weyl + Rational(2) * tau_brac_weyl;
  const PwlExpr b_pvw = lin(3, 2, Rational(-2, 3), Rational(-3, 4), n) + ((1 - n) / 2) * h_weyl;

  const PwlExpr weyl_brac = max({lin(2, 2, 0, 0, 0),
                                 lin(-1, 0, 0, 0, 0) + min({lin(0, 0, 0, 0, 0), lin(0, -1, 0, 0, -3)})});
  const PwlExpr b_weyl =
      lin(3, 2, Rational(-2, 3), Rational(-3, 4), n) + ((n - 1) / 16) * weyl_brac;
  return BoundFamily{params, s, h_hat, v_hat, tau_brac, x_brac, h_weyl, tau_brac_weyl,
                     weyl_brac, b_avp, b_pvp, b_avw, b_pvw, b_weyl};
}

Domains domains(const Rational& delta, DomainModel model) {
  if (!(sgn(delta) > 0 && delta < Rational(1, 7))) {
    throw DomainError("delta must lie strictly between 0 and 1/7");
  }
  const SpacePtr s = bound_space();
  auto form = [](Rational phi, Rational tau, Rational phi3, Rational phi4) {
    AffineForm f(4);
    f.coeffs = {std::move(phi), std::move(tau), std::move(phi3), std::move(phi4)};
    return f;
  };
  std::vector<Constraint> common = {
      ge(form(0, 0, 1, 0), 0),
      ge(form(0, 0, 0, 1), 0),
      le(form(-1, 0, 1, 1), 0),               // phi3 + phi4 ≤ phi
      le(form(1, 1, 0, 0), Rational(-3, 4)),  // tau ≤ −phi − 3/4
  };
  if (model == DomainModel::Display) common.push_back(eq(form(0, 0, 0, 1), 0));
  std::vector<Constraint> c1 = {ge(form(1, 0, 0, 0), delta), le(form(1, 0, 0, 0), Rational(3, 2)),
                                ge(form(0, 1, 0, 0), -5)};
  std::vector<Constraint> c2 = {ge(form(1, 0, 0, 0), 0), le(form(1, 0, 0, 0), delta),
                                ge(form(0, 1, 0, 0), delta - 3)};
  c1.insert(c1.end(), common.begin(), common.end());
  c2.insert(c2.end(), common.begin(), common.end());
  return {Polytope(s, std::move(c1)), Polytope(s, std::move(c2))};
}

VerificationReport verify_minor_arcs(const BoundParams& params, Engine engine) {
  const auto start = std::chrono::steady_clock::now();
  const BoundFamily family = build_bound_family(params);
  const Domains dom = domains(params.delta, params.model);
  const auto exprs = family.members();

  VerificationReport rep;
  rep.params = params;
  rep.d1 = max_min(exprs, dom.d1, engine);
  rep.d2 = max_min(exprs, dom.d2, engine);
  const bool second = rep.d2.value > rep.d1.value;  // ties go to D1
  const MinMaxResult& win = second ? rep.d2 : rep.d1;
  rep.domain = second ? 2 : 1;
  rep.value = win.value;
  rep.margin = win.value - Rational(params.n - 6);
  rep.argmax = win.argmax;
  rep.min_index = win.min_index;
  for (const auto& e : exprs) rep.bound_values.push_back(e.eval(rep.argmax));
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Rational floor_at_points(const BoundParams& params, const std::vector<Point>& points) {
  if (points.empty()) throw DomainError("no sample points");
  const auto exprs = build_bound_family(params).members();
  Rational best;
  bool have = false;
  for (const auto& p : points) {
    Rational m = exprs.front().eval(p);
    for (std::size_t i = 1; i < exprs.size(); ++i) {
      Rational v = exprs[i].eval(p);
      if (v < m) m = std::move(v);
    }
    if (!have || m > best) {
      best = std::move(m);
      have = true;
    }
  }
  return best;
}

std::vector<Point> sample_domain_points(const Rational& delta, DomainModel model,
                                        std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  // U ∈ {k / 2^20}; one draw in eight snaps to an endpoint so faces get hit.
  auto unit = [&]() -> Rational {
    const std::uint64_t bits = rng();
    if ((bits & 7) == 0) return Rational((bits >> 3) & 1);
    Rational u(static_cast<unsigned long>((bits >> 8) & 0xFFFFF), 1UL << 20);
    u.canonicalize();
    return u;
  };
  auto lerp = [](const Rational& a, const Rational& b, const Rational& u) -> Rational { return a + (b - a) * u; };
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const bool d2 = rng() % 10 == 0;
    Point p(4);
    if (d2) {
      p[0] = lerp(0, delta, unit());
      p[1] = lerp(delta - 3, -p[0] - Rational(3, 4), unit());
    } else {
      p[0] = lerp(delta, Rational(3, 2), unit());
      p[1] = lerp(-5, -p[0] - Rational(3, 4), unit());
    }
    p[2] = p[0] * unit();
    p[3] = model == DomainModel::Display ? Rational(0) : Rational((p[0] - p[2]) * unit());
    out.push_back(std::move(p));
  }
  return out;
}

Rational sample_floor(const BoundParams& params, std::uint64_t seed, std::size_t count) {
  if (count == 0) throw DomainError("count must be at least 1");
  return floor_at_points(params, sample_domain_points(params.delta, params.model, seed, count));
}

}  // namespace arcbound
