#pragma once

#include <string>
#include <vector>

#include "arcbound/polytope.hpp"
#include "arcbound/pwl.hpp"

namespace arcbound {

/// A region on which every expression of a family is affine.
struct Cell {
  Polytope region;
  std::vector<AffineForm> active;
};

enum class Engine { Branch, Vertex, Both };

const char* engine_name(Engine e);
Engine parse_engine(const std::string& s);

struct MinMaxResult {
  Rational value;
  Point argmax;
  Cell certificate;
  std::size_t min_index = 0;
  Engine engine = Engine::Branch;
  std::size_t cells = 0;
};

/// Feasible pieces of `expr` over `domain` together with the affine form it
/// equals on each piece. Pieces cover the domain and may share boundaries.
std::vector<std::pair<Polytope, AffineForm>> linear_cells(const PwlExpr& expr,
                                                          const Polytope& domain);

/// Common refinement for a family: on each cell every expression is affine.
/// Shared subexpressions are branched once per cell.
std::vector<Cell> joint_cells(const std::vector<PwlExpr>& exprs, const Polytope& domain);

/// Exact max over `domain` of min_i exprs[i]. The argmax is the
/// lexicographically smallest optimal point (branch engine) or optimal vertex
/// (vertex engine). Both runs the two engines and throws ConsistencyError if
/// their values differ.
MinMaxResult max_min(const std::vector<PwlExpr>& exprs, const Polytope& domain, Engine engine);

}  // namespace arcbound
