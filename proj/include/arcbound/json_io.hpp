#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arcbound/minmax.hpp"
#include "arcbound/numlab/expsum.hpp"
#include "arcbound/numlab/intmatrix.hpp"
#include "arcbound/numlab/poly.hpp"

namespace arcbound {

using json = nlohmann::json;

// Rationals and big integers travel as strings ("p/q"); small integers may
// also be given as JSON numbers on input.
json to_json(const Rational& v);
json to_json(const Integer& v);
Rational rational_from_json(const json& j);
Integer integer_from_json(const json& j);
long small_int_from_json(const json& j);

json to_json(const SpacePtr& space, const Point& p);  // {"name": "p/q", …}
json to_json(const SpacePtr& space, const AffineForm& f);
json to_json(const SpacePtr& space, const Constraint& c);
json to_json(const Polytope& p);
json to_json(const Cell& c);

/// {"variables": [...], "constraints": [{"coeffs": {...}, "rel": "<=", "rhs": "p/q"}, ...]}
Polytope polytope_from_json(const json& j);
std::vector<Constraint> constraints_from_json(const SpacePtr& space, const json& j);

/// {"n": 2, "monomials": [{"exps": [3, 0], "coeff": 1}, ...]}
numlab::CubicPoly poly_from_json(const json& j);
json to_json(const numlab::CubicPoly& p);

/// Row-major integer arrays.
numlab::IntMatrix matrix_from_json(const json& j);
json to_json(const numlab::IntMatrix& m);

json to_json(const numlab::ComplexVal& v);  // {"re": …, "im": …, "err": …}

json load_json_file(const std::string& path);

}  // namespace arcbound
