#include "arcbound/json_io.hpp"

#include <fstream>
#include <sstream>

#include "arcbound/errors.hpp"

namespace arcbound {

json to_json(const Rational& v) { return to_string(v); }
json to_json(const Integer& v) { return to_string(v); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number()) throw ParseError("decimal number in input; write rationals as strings like \"1/10000\"");
  throw ParseError("expected a rational, got " + j.dump());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

long small_int_from_json(const json& j) {
  const Integer v = integer_from_json(j);
  if (!v.fits_slong_p()) throw ParseError("integer out of range: " + to_string(v));
  return v.get_si();
}

json to_json(const SpacePtr& space, const Point& p) {
  json out = json::object();
  for (std::size_t i = 0; i < p.size(); ++i) out[space->name(i)] = to_json(p[i]);
  return out;
}

json to_json(const SpacePtr& space, const AffineForm& f) {
  json coeffs = json::object();
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (sgn(f.coeffs[i]) != 0) coeffs[space->name(i)] = to_json(f.coeffs[i]);
  }
  return {{"coeffs", coeffs}, {"constant", to_json(f.constant)}};
}

json to_json(const SpacePtr& space, const Constraint& c) {
  json out = to_json(space, c.lhs);
  out["rel"] = relation_symbol(c.rel);
  out["rhs"] = to_json(c.rhs);
  return out;
}

json to_json(const Polytope& p) {
  json cons = json::array();
  for (const auto& c : p.constraints()) cons.push_back(to_json(p.space(), c));
  return {{"variables", p.space()->names()}, {"constraints", cons}};
}

json to_json(const Cell& c) {
  json active = json::array();
  for (const auto& f : c.active) active.push_back(to_json(c.region.space(), f));
  return {{"region", to_json(c.region)}, {"active", active}};
}

std::vector<Constraint> constraints_from_json(const SpacePtr& space, const json& j) {
  if (!j.is_array()) throw ParseError("constraints must be an array");
  std::vector<Constraint> out;
  for (const auto& c : j) {
    if (!c.is_object() || !c.contains("coeffs") || !c.contains("rel") || !c.contains("rhs")) {
      throw ParseError("constraint needs coeffs, rel and rhs: " + c.dump());
    }
    AffineForm f(space->size());
    for (const auto& [name, v] : c.at("coeffs").items()) {
      const int i = space->index_of(name);
      if (i < 0) throw ParseError("unknown variable '" + name + "' in constraint");
      f.coeffs[i] = rational_from_json(v);
    }
    if (c.contains("constant")) f.constant = rational_from_json(c.at("constant"));
    out.push_back({std::move(f), parse_relation(c.at("rel").get<std::string>()),
                   rational_from_json(c.at("rhs"))});
  }
  return out;
}

Polytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("constraints")) {
    throw ParseError("polytope needs variables and constraints");
  }
  const SpacePtr space = make_space(j.at("variables").get<std::vector<std::string>>());
  return Polytope(space, constraints_from_json(space, j.at("constraints")));
}

numlab::CubicPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("monomials")) {
    throw ParseError("polynomial needs n and monomials");
  }
  const long n = small_int_from_json(j.at("n"));
  if (n < 1) throw ParseError("polynomial needs n >= 1");
  numlab::CubicPoly p(static_cast<std::size_t>(n));
  for (const auto& m : j.at("monomials")) {
    if (!m.contains("exps") || !m.contains("coeff")) throw ParseError("monomial needs exps and coeff");
    p.add_term(m.at("exps").get<std::vector<int>>(), integer_from_json(m.at("coeff")));
  }
  return p;
}

json to_json(const numlab::CubicPoly& p) {
  json mons = json::array();
  for (const auto& [e, c] : p.terms()) mons.push_back({{"exps", e}, {"coeff", to_json(c)}});
  return {{"n", p.nvars()}, {"monomials", mons}};
}

numlab::IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<Integer> row;
    for (const auto& v : r) row.push_back(integer_from_json(v));
    rows.push_back(std::move(row));
  }
  return numlab::IntMatrix::from_rows(rows);
}

json to_json(const numlab::IntMatrix& m) {
  json out = json::array();
  for (const auto& r : m.to_rows()) {
    json row = json::array();
    for (const auto& v : r) row.push_back(v.fits_slong_p() ? json(v.get_si()) : to_json(v));
    out.push_back(row);
  }
  return out;
}

json to_json(const numlab::ComplexVal& v) {
  return {{"re", static_cast<double>(v.re)},
          {"im", static_cast<double>(v.im)},
          {"err", static_cast<double>(v.err)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace arcbound
