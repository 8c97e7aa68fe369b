#pragma once

#include <string>
#include <string_view>

#include "arcbound/pwl.hpp"

namespace arcbound {

// Text form:
//   (affine (phi 1) (tau -1/2) 3/4)   nonzero terms in space order, constant last
//   (max e...) (min e...) (+ e...) (* p/q e)
// Shared subexpressions are written out in full at every use.
std::string to_sexpr(const PwlExpr& expr);
PwlExpr parse_sexpr(const SpacePtr& space, std::string_view text);

}  // namespace arcbound
