#include "arcbound/rational.hpp"

#include <cctype>

#include "arcbound/errors.hpp"

namespace arcbound {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) {
    throw ParseError("malformed integer '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  if (text.find_first_of(".eE") != std::string_view::npos) {
    throw ParseError("decimal literal '" + std::string(text) +
                     "' rejected; write an exact fraction such as 1/10000");
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw ParseError("malformed denominator in '" + std::string(text) + "'");
  }
  const Integer den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

}  // namespace arcbound
