#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "arcbound/minmax.hpp"

namespace arcbound {

// Lemma: φ₃, φ₄ ≥ 0 with φ₃ + φ₄ ≤ φ, as in the bound lemmas' hypotheses.
// Display: the three-coordinate domains (φ, τ, φ₃) with φ₄ pinned to 0.
enum class DomainModel { Lemma, Display };

const char* domain_model_name(DomainModel m);
DomainModel parse_domain_model(const std::string& s);

struct BoundParams {
  long n = 39;
  Rational delta{993, 7000};
  Rational eps_prime{1, 10000};
  DomainModel model = DomainModel::Lemma;
};

/// Throws DomainError unless n ≥ 3, 0 < delta < 1/7 and eps_prime > 0.
void validate(const BoundParams& p);

/// The variables (phi, tau, phi3, phi4).
SpacePtr bound_space();

struct BoundFamily {
  BoundParams params;
  SpacePtr space;
  // Shared subexpressions.
  PwlExpr h_hat, v_hat, tau_brac, x_brac, h_weyl, tau_brac_weyl, weyl_brac;
  PwlExpr b_avp, b_pvp, b_avw, b_pvw, b_weyl;

  std::vector<PwlExpr> members() const { return {b_avp, b_pvp, b_avw, b_pvw, b_weyl}; }
};

inline const std::array<const char*, 5> kBoundNames = {"B_AV/P", "B_PV/P", "B_AV/W", "B_PV/W",
                                                       "B_Weyl"};

BoundFamily build_bound_family(const BoundParams& params);

struct Domains {
  Polytope d1, d2;
};
Domains domains(const Rational& delta, DomainModel model = DomainModel::Lemma);

struct VerificationReport {
  BoundParams params;
  MinMaxResult d1, d2;
  Rational value;
  Rational margin;       // value − (n − 6)
  int domain = 1;        // domain holding the argmax
  Point argmax;
  std::size_t min_index = 0;
  std::vector<Rational> bound_values;  // each bound at the argmax
  double seconds = 0;
};

VerificationReport verify_minor_arcs(const BoundParams& params, Engine engine);

/// Max of min-of-bounds over `count` pseudorandom domain points.
Rational sample_floor(const BoundParams& params, std::uint64_t seed, std::size_t count);
/// Max of min-of-bounds over explicit points.
Rational floor_at_points(const BoundParams& params, const std::vector<Point>& points);

/// Deterministic pseudorandom rational points of D1 ∪ D2 (mostly D1).
std::vector<Point> sample_domain_points(const Rational& delta, DomainModel model,
                                        std::uint64_t seed, std::size_t count);

}  // namespace arcbound
