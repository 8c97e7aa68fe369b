#include "arcbound/pwl.hpp"

#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "arcbound/errors.hpp"

namespace arcbound {

VarSpace::VarSpace(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second) throw DomainError("duplicate variable '" + n + "'");
  }
}

int VarSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

SpacePtr make_space(std::vector<std::string> names) {
  return std::make_shared<const VarSpace>(std::move(names));
}

Rational AffineForm::eval(const Point& p) const {
  if (p.size() != coeffs.size()) throw DomainError("point dimension mismatch");
  Rational v = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0) v += coeffs[i] * p[i];
  }
  return v;
}

bool AffineForm::is_constant() const {
  for (const auto& c : coeffs) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  if (o.dim() != dim()) throw DomainError("affine form dimension mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  constant += o.constant;
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) {
  if (o.dim() != dim()) throw DomainError("affine form dimension mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  constant -= o.constant;
  return *this;
}

AffineForm& AffineForm::operator*=(const Rational& c) {
  for (auto& a : coeffs) a *= c;
  constant *= c;
  return *this;
}

AffineForm unit_form(std::size_t dim, std::size_t i, const Rational& coeff) {
  AffineForm f(dim);
  f.coeffs.at(i) = coeff;
  return f;
}

namespace {

const SpacePtr& common_space(const std::vector<PwlExpr>& children, const char* what) {
  if (children.empty()) throw DomainError(std::string(what) + " of an empty list");
  const SpacePtr& s = children.front().space();
  for (const auto& c : children) {
    if (c.space() != s && c.space()->names() != s->names()) {
      throw DomainError(std::string(what) + " over mismatched variable spaces");
    }
  }
  return s;
}

}  // namespace

PwlExpr PwlExpr::affine(SpacePtr space, AffineForm form) {
  if (!space) throw DomainError("null variable space");
  if (form.dim() != space->size()) throw DomainError("affine form dimension mismatch");
  return PwlExpr(std::make_shared<const PwlNode>(
      PwlNode{NodeKind::Affine, std::move(space), std::move(form), {}, 0}));
}

PwlExpr PwlExpr::constant(SpacePtr space, const Rational& c) {
  const auto d = space->size();
  return affine(std::move(space), AffineForm(d, c));
}

PwlExpr PwlExpr::variable(SpacePtr space, const std::string& name) {
  const int i = space->index_of(name);
  if (i < 0) throw DomainError("unknown variable '" + name + "'");
  const auto d = space->size();
  return affine(std::move(space), unit_form(d, static_cast<std::size_t>(i)));
}

PwlExpr PwlExpr::max(std::vector<PwlExpr> children) {
  SpacePtr s = common_space(children, "max");
  return PwlExpr(std::make_shared<const PwlNode>(
      PwlNode{NodeKind::Max, s, AffineForm(s->size()), std::move(children), 0}));
}

PwlExpr PwlExpr::min(std::vector<PwlExpr> children) {
  SpacePtr s = common_space(children, "min");
  return PwlExpr(std::make_shared<const PwlNode>(
      PwlNode{NodeKind::Min, s, AffineForm(s->size()), std::move(children), 0}));
}

PwlExpr PwlExpr::sum(std::vector<PwlExpr> children) {
  SpacePtr s = common_space(children, "sum");
  return PwlExpr(std::make_shared<const PwlNode>(
      PwlNode{NodeKind::Sum, s, AffineForm(s->size()), std::move(children), 0}));
}

PwlExpr PwlExpr::scale(const Rational& factor, PwlExpr child) {
  SpacePtr s = child.space();
  std::vector<PwlExpr> kids{std::move(child)};
  return PwlExpr(std::make_shared<const PwlNode>(
      PwlNode{NodeKind::Scale, s, AffineForm(s->size()), std::move(kids), factor}));
}

Rational PwlExpr::eval(const Point& p) const {
  switch (kind()) {
    case NodeKind::Affine:
      return form().eval(p);
    case NodeKind::Max: {
      Rational best = children().front().eval(p);
      for (std::size_t i = 1; i < children().size(); ++i) {
        Rational v = children()[i].eval(p);
        if (v > best) best = std::move(v);
      }
      return best;
    }
    case NodeKind::Min: {
      Rational best = children().front().eval(p);
      for (std::size_t i = 1; i < children().size(); ++i) {
        Rational v = children()[i].eval(p);
        if (v < best) best = std::move(v);
      }
      return best;
    }
    case NodeKind::Sum: {
      Rational total = 0;
      for (const auto& c : children()) total += c.eval(p);
      return total;
    }
    case NodeKind::Scale:
      return factor() * children().front().eval(p);
  }
  throw Error("corrupt expression node");
}

Rational PwlExpr::eval(const Assignment& point) const {
  const VarSpace& sp = *space();
  Point dense(sp.size());
  std::vector<bool> bound(sp.size(), false);
  for (std::size_t i = 0; i < sp.size(); ++i) {
    auto it = point.find(sp.name(i));
    if (it != point.end()) {
      dense[i] = it->second;
      bound[i] = true;
    }
  }
  std::unordered_set<const PwlNode*> seen;
  std::function<void(const PwlExpr&)> check = [&](const PwlExpr& e) {
    if (!seen.insert(e.id()).second) return;
    if (e.kind() == NodeKind::Affine) {
      for (std::size_t i = 0; i < sp.size(); ++i) {
        if (!bound[i] && sgn(e.form().coeffs[i]) != 0) throw UnboundVariableError(sp.name(i));
      }
      return;
    }
    for (const auto& c : e.children()) check(c);
  };
  check(*this);
  return eval(dense);
}

PwlExpr PwlExpr::substitute(const Assignment& bindings) const {
  const VarSpace& sp = *space();
  std::vector<std::pair<std::size_t, Rational>> fixed;
  for (const auto& [name, value] : bindings) {
    const int i = sp.index_of(name);
    if (i >= 0) fixed.emplace_back(static_cast<std::size_t>(i), value);
  }
  std::unordered_map<const PwlNode*, PwlExpr> memo;
  std::function<PwlExpr(const PwlExpr&)> go = [&](const PwlExpr& e) -> PwlExpr {
    if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
    PwlExpr out = e;
    if (e.kind() == NodeKind::Affine) {
      AffineForm f = e.form();
      for (const auto& [i, v] : fixed) {
        f.constant += f.coeffs[i] * v;
        f.coeffs[i] = 0;
      }
      out = affine(e.space(), std::move(f));
    } else {
      std::vector<PwlExpr> kids;
      kids.reserve(e.children().size());
      for (const auto& c : e.children()) kids.push_back(go(c));
      switch (e.kind()) {
        case NodeKind::Max: out = max(std::move(kids)); break;
        case NodeKind::Min: out = min(std::move(kids)); break;
        case NodeKind::Sum: out = sum(std::move(kids)); break;
        case NodeKind::Scale: out = scale(e.factor(), std::move(kids.front())); break;
        case NodeKind::Affine: break;
      }
    }
    memo.emplace(e.id(), out);
    return out;
  };
  return go(*this);
}

std::size_t PwlExpr::branch_node_count() const {
  std::unordered_set<const PwlNode*> seen;
  std::size_t count = 0;
  std::function<void(const PwlExpr&)> walk = [&](const PwlExpr& e) {
    if (!seen.insert(e.id()).second) return;
    if (e.kind() == NodeKind::Max || e.kind() == NodeKind::Min) ++count;
    for (const auto& c : e.children()) walk(c);
  };
  walk(*this);
  return count;
}

Point to_point(const VarSpace& space, const Assignment& a) {
  Point p(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto it = a.find(space.name(i));
    if (it == a.end()) throw UnboundVariableError(space.name(i));
    p[i] = it->second;
  }
  return p;
}

Assignment to_assignment(const VarSpace& space, const Point& p) {
  Assignment a;
  for (std::size_t i = 0; i < space.size(); ++i) a.emplace(space.name(i), p.at(i));
  return a;
}

}  // namespace arcbound
