#pragma once

#include <string>
#include <vector>

#include "arcbound/lp.hpp"
#include "arcbound/pwl.hpp"

namespace arcbound {

enum class Relation { LessEq, GreaterEq, Equal };

struct Constraint {
  AffineForm lhs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

const char* relation_symbol(Relation r);
Relation parse_relation(const std::string& s);

/// H-representation over a fixed variable space. The feasible set may be empty.
class Polytope {
 public:
  Polytope() = default;
  Polytope(SpacePtr space, std::vector<Constraint> constraints);

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return space_->size(); }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Copy with additional constraints.
  Polytope with(const std::vector<Constraint>& extra) const;

  /// All constraints as a·x ≤ b (equalities become two rows).
  std::vector<HalfSpace> halfspaces() const;

  bool contains(const Point& p) const;

 private:
  SpacePtr space_;
  std::vector<Constraint> constraints_;
};

/// a·x ≤ b  (as a Constraint)
Constraint le(AffineForm lhs, Rational rhs = 0);
Constraint ge(AffineForm lhs, Rational rhs = 0);
Constraint eq(AffineForm lhs, Rational rhs = 0);

bool is_feasible(const Polytope& p);
LpResult maximize_affine(const Polytope& p, const AffineForm& objective);
LpResult minimize_affine(const Polytope& p, const AffineForm& objective);

/// Lexicographically smallest point (in variable order) among the maximizers
/// of `objective`. Requires an optimal, bounded-below face.
LpResult maximize_lexmin(const Polytope& p, const AffineForm& objective);

/// All vertices, deduplicated, in lexicographic order. At most 12 variables;
/// unbounded input is an error.
std::vector<Point> vertices(const Polytope& p);

}  // namespace arcbound
