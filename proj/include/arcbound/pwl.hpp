#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "arcbound/rational.hpp"

namespace arcbound {

/// Ordered variable universe. Points are dense vectors in this order.
class VarSpace {
 public:
  explicit VarSpace(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of `name`, or -1.
  int index_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

using SpacePtr = std::shared_ptr<const VarSpace>;
SpacePtr make_space(std::vector<std::string> names);

using Point = std::vector<Rational>;
using Assignment = std::map<std::string, Rational>;

struct AffineForm {
  std::vector<Rational> coeffs;
  Rational constant;

  AffineForm() = default;
  explicit AffineForm(std::size_t dim, Rational c = 0) : coeffs(dim), constant(std::move(c)) {}

  std::size_t dim() const { return coeffs.size(); }
  Rational eval(const Point& p) const;
  bool is_constant() const;

  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator-=(const AffineForm& o);
  AffineForm& operator*=(const Rational& c);
  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(const Rational& c, AffineForm a) { return a *= c; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// x_i as an affine form.
AffineForm unit_form(std::size_t dim, std::size_t i, const Rational& coeff = 1);

enum class NodeKind { Affine, Max, Min, Sum, Scale };

class PwlExpr;

struct PwlNode {
  NodeKind kind;
  SpacePtr space;
  AffineForm form;                  // Affine
  std::vector<PwlExpr> children;    // Max, Min, Sum, Scale (one child)
  Rational factor;                  // Scale
};

/// Immutable handle to a shared expression node. Copies share the node, so
/// a subexpression reused across several parents is one node in the DAG.
class PwlExpr {
 public:
  static PwlExpr affine(SpacePtr space, AffineForm form);
  static PwlExpr constant(SpacePtr space, const Rational& c);
  static PwlExpr variable(SpacePtr space, const std::string& name);
  static PwlExpr max(std::vector<PwlExpr> children);
  static PwlExpr min(std::vector<PwlExpr> children);
  static PwlExpr sum(std::vector<PwlExpr> children);
  static PwlExpr scale(const Rational& factor, PwlExpr child);

  NodeKind kind() const { return node_->kind; }
  const SpacePtr& space() const { return node_->space; }
  const AffineForm& form() const { return node_->form; }
  const std::vector<PwlExpr>& children() const { return node_->children; }
  const Rational& factor() const { return node_->factor; }
  const PwlNode* id() const { return node_.get(); }

  Rational eval(const Point& p) const;
  /// Throws UnboundVariableError if a variable with a nonzero coefficient is
  /// missing from `point`.
  Rational eval(const Assignment& point) const;

  /// Folds `bindings` into constants. The result keeps the same space; bound
  /// variables simply get coefficient zero everywhere. Sharing is preserved.
  PwlExpr substitute(const Assignment& bindings) const;

  /// Number of distinct Max/Min nodes reachable from this expression.
  std::size_t branch_node_count() const;

  friend PwlExpr operator+(const PwlExpr& a, const PwlExpr& b) { return sum({a, b}); }
  friend PwlExpr operator-(const PwlExpr& a, const PwlExpr& b) { return sum({a, scale(-1, b)}); }
  friend PwlExpr operator*(const Rational& c, const PwlExpr& e) { return scale(c, e); }
  friend PwlExpr operator+(const PwlExpr& a, const Rational& c) {
    return sum({a, constant(a.space(), c)});
  }

 private:
  explicit PwlExpr(std::shared_ptr<const PwlNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const PwlNode> node_;
};

Point to_point(const VarSpace& space, const Assignment& a);
Assignment to_assignment(const VarSpace& space, const Point& p);

}  // namespace arcbound
