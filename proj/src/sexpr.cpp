#include "arcbound/sexpr.hpp"

#include <cctype>

#include "arcbound/errors.hpp"

namespace arcbound {
namespace {

void write(const PwlExpr& e, std::string& out) {
  switch (e.kind()) {
    case NodeKind::Affine: {
      out += "(affine";
      const auto& f = e.form();
      for (std::size_t i = 0; i < f.dim(); ++i) {
        if (sgn(f.coeffs[i]) == 0) continue;
        out += " (" + e.space()->name(i) + " " + to_string(f.coeffs[i]) + ")";
      }
      out += " " + to_string(f.constant) + ")";
      return;
    }
    case NodeKind::Scale:
      out += "(* " + to_string(e.factor()) + " ";
      write(e.children().front(), out);
      out += ")";
      return;
    case NodeKind::Max:
    case NodeKind::Min:
    case NodeKind::Sum: {
      out += e.kind() == NodeKind::Max ? "(max" : e.kind() == NodeKind::Min ? "(min" : "(+";
      for (const auto& c : e.children()) {
        out += " ";
        write(c, out);
      }
      out += ")";
      return;
    }
  }
}

class Parser {
 public:
  Parser(const SpacePtr& space, std::string_view text) : space_(space), text_(text) {}

  PwlExpr parse_all() {
    PwlExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("s-expression: " + msg + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string atom() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') break;
      ++pos_;
    }
    if (start == pos_) fail("expected atom");
    return std::string(text_.substr(start, pos_ - start));
  }

  PwlExpr expr() {
    expect('(');
    const std::string head = atom();
    if (head == "affine") return affine_body();
    if (head == "*") {
      const Rational c = parse_rational(atom());
      PwlExpr child = expr();
      expect(')');
      return PwlExpr::scale(c, std::move(child));
    }
    if (head != "max" && head != "min" && head != "+") fail("unknown operator '" + head + "'");
    std::vector<PwlExpr> kids;
    while (!peek(')')) kids.push_back(expr());
    expect(')');
    if (kids.empty()) fail("'" + head + "' needs at least one operand");
    if (head == "max") return PwlExpr::max(std::move(kids));
    if (head == "min") return PwlExpr::min(std::move(kids));
    return PwlExpr::sum(std::move(kids));
  }

  PwlExpr affine_body() {
    AffineForm f(space_->size());
    while (peek('(')) {
      ++pos_;
      const std::string name = atom();
      const int i = space_->index_of(name);
      if (i < 0) fail("unknown variable '" + name + "'");
      f.coeffs[static_cast<std::size_t>(i)] += parse_rational(atom());
      expect(')');
    }
    f.constant = parse_rational(atom());
    expect(')');
    return PwlExpr::affine(space_, std::move(f));
  }

  const SpacePtr& space_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_sexpr(const PwlExpr& expr) {
  std::string out;
  write(expr, out);
  return out;
}

PwlExpr parse_sexpr(const SpacePtr& space, std::string_view text) {
  return Parser(space, text).parse_all();
}

}  // namespace arcbound
