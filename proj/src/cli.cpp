#include "arcbound/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include "arcbound/bounds.hpp"
#include "arcbound/errors.hpp"
#include "arcbound/json_io.hpp"
#include "arcbound/numlab/analytic.hpp"
#include "arcbound/numlab/expsum.hpp"
#include "arcbound/numlab/modular.hpp"
#include "arcbound/numlab/series.hpp"
#include "arcbound/numlab/smith.hpp"
#include "arcbound/sexpr.hpp"

namespace arcbound::cli {

namespace {

using numlab::CubicPoly;
using numlab::Vec;

struct Common {
  std::string output = "json";
  bool timing = false;
};

struct VerifyOpts {
  long n = 39;
  long n_max = 0;
  std::string delta = "993/7000";
  std::string eps_prime = "1/10000";
  std::string engine = "branch";
  std::string domain = "lemma";
  long samples = 0;
  std::uint64_t seed = 1;
};

struct LabOpts {
  std::string input;
  std::string mode;
  long q = 1;
  std::string method = "both";
  std::string z = "0,0";
  long big_p = 10;
  long m_cut = 40;
  std::string rho = "1/2";
  std::string x0;
  long r_max = 10;
  std::string r = "1/2";
  long grid = 100;
  std::string engine = "branch";
};

json header(const std::string& command, json params) {
  return {{"schema", "1"}, {"tool", kToolName}, {"version", kVersion}, {"command", command},
          {"params", std::move(params)}};
}

void emit(std::ostream& out, const Common& common, const json& report, const std::string& text) {
  if (common.output == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
}

std::vector<Rational> rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string decimal(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string point_text(const SpacePtr& s, const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += s->name(i) + "=" + to_string(p[i]);
  }
  return out + ")";
}

// ---- verify-minor-arcs ------------------------------------------------------

int verify(const Common& common, const VerifyOpts& o, std::ostream& out) {
  BoundParams params;
  params.delta = parse_rational(o.delta);
  params.eps_prime = parse_rational(o.eps_prime);
  params.model = parse_domain_model(o.domain);
  const Engine engine = parse_engine(o.engine);
  const long n_max = o.n_max == 0 ? o.n : o.n_max;
  if (n_max < o.n) throw ParseError("--n-max must be at least --n");
  if (o.samples < 0) throw ParseError("--samples must be non-negative");

  json report = header("verify-minor-arcs",
                       {{"n", o.n}, {"n_max", n_max}, {"delta", to_json(params.delta)},
                        {"eps_prime", to_json(params.eps_prime)}, {"engine", engine_name(engine)},
                        {"domain", domain_model_name(params.model)}, {"samples", o.samples},
                        {"seed", o.seed}});
  json results = json::array();
  std::ostringstream text;
  bool fails = false;
  const SpacePtr space = bound_space();
  for (long n = o.n; n <= n_max; ++n) {
    params.n = n;
    const auto t0 = std::chrono::steady_clock::now();
    const VerificationReport rep = verify_minor_arcs(params, engine);
    const MinMaxResult& win = rep.domain == 1 ? rep.d1 : rep.d2;
    json values = json::object();
    for (std::size_t i = 0; i < rep.bound_values.size(); ++i) values[kBoundNames[i]] = to_json(rep.bound_values[i]);
    const bool holds = sgn(rep.margin) < 0;
    fails = fails || !holds;
    json r = {{"n", n},
              {"value", to_json(rep.value)},
              {"margin", to_json(rep.margin)},
              {"margin_decimal", rep.margin.get_d()},
              {"holds", holds},
              {"argmax", to_json(space, rep.argmax)},
              {"domain", rep.domain == 1 ? "D1" : "D2"},
              {"binding_bound", kBoundNames[rep.min_index]},
              {"bound_values", values},
              {"engine", engine_name(win.engine)},
              {"cells", {{"D1", rep.d1.cells}, {"D2", rep.d2.cells}}},
              {"certificate", to_json(win.certificate)}};
    text << "n=" << n << " margin=" << to_string(rep.margin) << " (" << decimal(rep.margin.get_d())
         << ") argmax " << point_text(space, rep.argmax) << " in D" << rep.domain << " binding "
         << kBoundNames[rep.min_index] << (holds ? "  bound holds" : "  BOUND FAILS") << "\n";
    if (o.samples > 0) {
      const Rational floor = sample_floor(params, o.seed, static_cast<std::size_t>(o.samples));
      if (floor > rep.value) {
        throw ConsistencyError("sampled point exceeds the reported optimum at n = " + std::to_string(n));
      }
      r["samples"] = {{"count", o.samples}, {"seed", o.seed}, {"best_min_of_bounds", to_json(floor)},
                      {"within_optimum", true}};
      text << "  " << o.samples << " samples, best min-of-bounds " << to_string(floor) << "\n";
    }
    if (common.timing) r["seconds"] = seconds_since(t0);
    results.push_back(std::move(r));
  }
  report["results"] = std::move(results);
  report["all_hold"] = !fails;
  emit(out, common, report, text.str());
  return fails ? kBoundFails : kSuccess;
}

// ---- max-min ----------------------------------------------------------------

int max_min_cmd(const Common& common, const LabOpts& o, std::ostream& out) {
  const json in = load_json_file(o.input);
  if (!in.contains("variables") || !in.contains("domain") || !in.contains("expressions")) {
    throw ParseError("max-min input needs variables, domain and expressions");
  }
  const SpacePtr space = make_space(in.at("variables").get<std::vector<std::string>>());
  const Polytope domain(space, constraints_from_json(space, in.at("domain")));
  std::vector<PwlExpr> exprs;
  for (const auto& e : in.at("expressions")) exprs.push_back(parse_sexpr(space, e.get<std::string>()));
  const Engine engine = parse_engine(o.engine);
  const auto t0 = std::chrono::steady_clock::now();
  const MinMaxResult r = max_min(exprs, domain, engine);
  json report = header("max-min", {{"input", o.input}, {"engine", engine_name(engine)}});
  report["value"] = to_json(r.value);
  report["argmax"] = to_json(space, r.argmax);
  report["min_index"] = r.min_index;
  report["cells"] = r.cells;
  report["certificate"] = to_json(r.certificate);
  if (common.timing) report["seconds"] = seconds_since(t0);
  emit(out, common, report,
       "max-min = " + to_string(r.value) + " at " + point_text(space, r.argmax) + "\n");
  return kSuccess;
}

// ---- numlab -----------------------------------------------------------------

std::pair<CubicPoly, CubicPoly> read_pair(const json& in) {
  if (!in.contains("F")) throw ParseError("input needs a polynomial F");
  CubicPoly f = poly_from_json(in.at("F"));
  CubicPoly g = in.contains("G") ? poly_from_json(in.at("G")) : CubicPoly(f.nvars());
  if (g.nvars() != f.nvars()) throw ParseError("F and G have different variable counts");
  return {std::move(f), std::move(g)};
}

Vec read_vec(const json& in, const char* key, std::size_t n) {
  if (!in.contains(key)) return Vec(n, 0);
  Vec v;
  for (const auto& x : in.at(key)) v.push_back(small_int_from_json(x));
  if (v.size() != n) throw ParseError(std::string(key) + " must have " + std::to_string(n) + " entries");
  return v;
}

json prop_json(const numlab::PropCheck& c) {
  return {{"lhs", static_cast<double>(c.lhs)}, {"rhs", static_cast<double>(c.rhs)},
          {"err", static_cast<double>(c.err)}, {"null_count", to_json(c.null_count)},
          {"delta", c.delta}, {"holds", c.holds}};
}

int expsum(const Common& common, const LabOpts& o, std::ostream& out) {
  if (o.mode != "pointwise" && o.mode != "averaged") throw ParseError("expsum mode must be pointwise or averaged");
  const json in = load_json_file(o.input);
  const auto [f, g] = read_pair(in);
  const std::size_t n = f.nvars();
  const long q = in.contains("q") ? small_int_from_json(in.at("q")) : o.q;
  const Vec m = read_vec(in, "m", n);
  json params = {{"input", o.input}, {"mode", o.mode}, {"q", q}, {"m", m}};
  json report;
  std::ostringstream text;
  if (o.mode == "pointwise") {
    const Vec a = read_vec(in, "a", 2);
    params["a"] = a;
    report = header("expsum", params);
    const numlab::ComplexVal s = numlab::exp_sum_pointwise(f, g, a[0], a[1], q, m);
    report["value"] = to_json(s);
    report["abs"] = static_cast<double>(s.abs());
    text << "S(a,q;m) = " << decimal(s.re) << " + " << decimal(s.im) << "i  (|S| = " << decimal(s.abs())
         << ", err <= " << s.err << ")\n";
    if (f.degree() <= 2 && g.degree() <= 2) {
      const auto qf = numlab::quad_form(f), qg = numlab::quad_form(g);
      if (qf.scale == 1 && qg.scale == 1) {
        const auto c = numlab::check_prop_t600(qf.form, qg.form, a[0], a[1], q, m);
        report["prop_bound"] = prop_json(c);
        text << "bound " << decimal(c.rhs) << (c.holds ? " holds" : " VIOLATED") << "\n";
        if (n == 1) report["prop_bound_n1"] = prop_json(numlab::check_prop_n1(qf.form, qg.form, a[0], a[1], q, m[0]));
      } else {
        report["prop_bound"] = "odd cross coefficient: no integer symmetric matrix";
      }
    }
  } else {
    report = header("expsum", params);
    const numlab::ComplexVal s = numlab::exp_sum_averaged(f, g, q, m);
    report["value"] = to_json(s);
    report["abs"] = static_cast<double>(s.abs());
    text << "S(q;m) = " << decimal(s.re) << " + " << decimal(s.im) << "i  (err <= " << s.err << ")\n";
  }
  emit(out, common, report, text.str());
  return kSuccess;
}

numlab::IntMatrix read_matrix(const json& in) {
  return matrix_from_json(in.is_object() && in.contains("matrix") ? in.at("matrix") : in);
}

int snf(const Common& common, const LabOpts& o, std::ostream& out) {
  const numlab::IntMatrix m = read_matrix(load_json_file(o.input));
  const numlab::SmithForm f = numlab::smith_normal_form(m);
  json lambda = json::array();
  std::ostringstream text;
  text << "lambda:";
  for (const auto& l : f.lambda()) {
    lambda.push_back(to_json(l));
    text << " " << to_string(l);
  }
  text << "\n";
  json report = header("snf", {{"input", o.input}});
  report["matrix"] = to_json(m);
  report["S"] = to_json(f.s);
  report["D"] = to_json(f.d);
  report["T"] = to_json(f.t);
  report["lambda"] = lambda;
  emit(out, common, report, text.str());
  return kSuccess;
}

int nullcount(const Common& common, const LabOpts& o, std::ostream& out) {
  const numlab::IntMatrix m = read_matrix(load_json_file(o.input));
  if (o.method != "both") numlab::parse_null_method(o.method);
  json report = header("nullcount", {{"input", o.input}, {"q", o.q}, {"method", o.method}});
  std::optional<Integer> smith, brute;
  if (o.method != "brute") smith = numlab::null_count(m, o.q, numlab::NullMethod::Smith);
  if (o.method != "smith") brute = numlab::null_count(m, o.q, numlab::NullMethod::Brute);
  if (smith) report["smith"] = to_json(*smith);
  if (brute) report["brute"] = to_json(*brute);
  const Integer& value = smith ? *smith : *brute;
  report["null_count"] = to_json(value);
  if (smith && brute) {
    report["agree"] = *smith == *brute;
    if (*smith != *brute) {
      throw ConsistencyError("Smith count " + to_string(*smith) + " differs from brute count " + to_string(*brute));
    }
  }
  emit(out, common, report, "#Null_" + std::to_string(o.q) + " = " + to_string(value) + "\n");
  return kSuccess;
}

numlab::Weight read_weight(const LabOpts& o) {
  numlab::Weight w;
  w.rho = parse_rational(o.rho);
  if (!o.x0.empty()) w.x0 = rational_list(o.x0);
  return w;
}

json weight_json(const numlab::Weight& w) {
  json x0 = json::array();
  for (const auto& v : w.x0) x0.push_back(to_json(v));
  return {{"rho", to_json(w.rho)}, {"x0", x0}};
}

int poisson(const Common& common, const LabOpts& o, std::ostream& out) {
  const auto [f, g] = read_pair(load_json_file(o.input));
  numlab::PoissonConfig cfg;
  cfg.q = o.q;
  const auto z = rational_list(o.z);
  if (z.size() != 2) throw ParseError("--z takes two rationals, e.g. 1/100,0");
  cfg.z1 = z[0];
  cfg.z2 = z[1];
  cfg.big_p = o.big_p;
  cfg.m_cut = o.m_cut;
  cfg.weight = read_weight(o);
  const auto t0 = std::chrono::steady_clock::now();
  const numlab::PoissonResult r = numlab::poisson_check(f, g, cfg);
  json report = header("poisson-check", {{"input", o.input}, {"q", o.q}, {"z", {to_json(z[0]), to_json(z[1])}},
                                         {"big_p", o.big_p}, {"m_cut", o.m_cut}, {"weight", weight_json(cfg.weight)}});
  report["lhs"] = {{"re", r.lhs.real()}, {"im", r.lhs.imag()}};
  report["rhs"] = {{"re", r.rhs.real()}, {"im", r.rhs.imag()}};
  report["abs_diff"] = r.abs_diff;
  report["quadrature"] = {{"points_per_axis", r.quad_points}, {"last_change", r.quad_change}};
  report["sum_error"] = r.sum_error;
  report["lattice_points"] = r.lattice_points;
  if (common.timing) report["seconds"] = seconds_since(t0);
  std::ostringstream text;
  text << "T(q,z) direct = " << r.lhs << "\nPoisson side  = " << r.rhs << "\n|diff| = " << r.abs_diff << "\n";
  emit(out, common, report, text.str());
  return kSuccess;
}

int series(const Common& common, const LabOpts& o, std::ostream& out) {
  const auto [f, g] = read_pair(load_json_file(o.input));
  const auto t0 = std::chrono::steady_clock::now();
  const numlab::SeriesPartial s = numlab::singular_series_partial(f, g, o.r_max);
  json terms = json::array();
  std::ostringstream text;
  Rational running = 0;
  for (const auto& t : s.terms) {
    running += t.a;
    terms.push_back({{"q", t.q}, {"A", to_json(t.a)}, {"A_decimal", t.a.get_d()},
                     {"partial_sum_decimal", running.get_d()}});
    text << "q=" << t.q << " A=" << to_string(t.a) << " partial=" << decimal(running.get_d()) << "\n";
  }
  json report = header("singular-series", {{"input", o.input}, {"r_max", o.r_max}});
  report["terms"] = terms;
  report["value"] = to_json(s.value);
  report["value_decimal"] = s.value.get_d();
  if (common.timing) report["seconds"] = seconds_since(t0);
  emit(out, common, report, text.str());
  return kSuccess;
}

int integral(const Common& common, const LabOpts& o, std::ostream& out) {
  const auto [f, g] = read_pair(load_json_file(o.input));
  const numlab::Weight w = read_weight(o);
  const Rational r = parse_rational(o.r);
  if (o.grid < 2) throw ParseError("--grid must be at least 2");
  const auto t0 = std::chrono::steady_clock::now();
  const numlab::SingularIntegral v = numlab::singular_integral(f, g, r, w, static_cast<std::size_t>(o.grid));
  json report = header("singular-integral", {{"input", o.input}, {"r", to_json(r)}, {"grid", o.grid},
                                             {"weight", weight_json(w)}});
  report["value"] = {{"re", v.value}, {"im", v.imag}};
  report["half_grid_value"] = v.coarse;
  report["refinement_change"] = std::abs(v.value - v.coarse);
  if (common.timing) report["seconds"] = seconds_since(t0);
  emit(out, common, report,
       "J(R) = " + decimal(v.value) + "  (half grid: " + decimal(v.coarse) + ")\n");
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minor-arc bound verification and exponential-sum laboratory", kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Common common;
  VerifyOpts vo;
  LabOpts lo;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", common.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", common.timing, "include wall-clock seconds in the report");
  };

  auto* verify_cmd = app.add_subcommand("verify-minor-arcs", "max over D1 and D2 of the min of the five bounds");
  verify_cmd->add_option("--n", vo.n, "number of variables (default 39)");
  verify_cmd->add_option("--n-max", vo.n_max, "sweep n..n-max");
  verify_cmd->add_option("--delta", vo.delta, "delta as p/q (default 993/7000)");
  verify_cmd->add_option("--eps-prime", vo.eps_prime, "epsilon' as p/q (default 1/10000)");
  verify_cmd->add_option("--engine", vo.engine, "branch, vertex or both (default branch)");
  verify_cmd->add_option("--domain", vo.domain, "lemma or display (default lemma)");
  verify_cmd->add_option("--samples", vo.samples, "random domain points to check against the optimum");
  verify_cmd->add_option("--seed", vo.seed, "sampling seed (default 1)");
  add_common(verify_cmd);

  auto* maxmin_cmd = app.add_subcommand("max-min", "max-min of PWL expressions over a polytope");
  maxmin_cmd->add_option("--input", lo.input)->required();
  maxmin_cmd->add_option("--engine", lo.engine, "branch, vertex or both");
  add_common(maxmin_cmd);

  auto* expsum_cmd = app.add_subcommand("expsum", "complete exponential sums");
  expsum_cmd->add_option("mode", lo.mode, "pointwise or averaged")->required();
  expsum_cmd->add_option("--input", lo.input)->required();
  add_common(expsum_cmd);

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form");
  snf_cmd->add_option("--input", lo.input)->required();
  add_common(snf_cmd);

  auto* null_cmd = app.add_subcommand("nullcount", "#{x mod q : Mx = 0}");
  null_cmd->add_option("--input", lo.input)->required();
  null_cmd->add_option("--q", lo.q)->required();
  null_cmd->add_option("--method", lo.method, "smith, brute or both (default both)");
  add_common(null_cmd);

  auto* poisson_cmd = app.add_subcommand("poisson-check", "direct sum against its Poisson dual");
  poisson_cmd->add_option("--input", lo.input)->required();
  poisson_cmd->add_option("--q", lo.q)->required();
  poisson_cmd->add_option("--z", lo.z, "z1,z2 as p/q (default 0,0)");
  poisson_cmd->add_option("--big-p", lo.big_p, "P (default 10)");
  poisson_cmd->add_option("--m-cut", lo.m_cut, "dual cutoff (default 40)");
  poisson_cmd->add_option("--rho", lo.rho, "weight radius (default 1/2)");
  poisson_cmd->add_option("--x0", lo.x0, "weight centre, comma separated (default origin)");
  add_common(poisson_cmd);

  auto* series_cmd = app.add_subcommand("singular-series", "partial sums of the singular series");
  series_cmd->add_option("--input", lo.input)->required();
  series_cmd->add_option("--r-max", lo.r_max, "largest modulus (default 10)");
  add_common(series_cmd);

  auto* integral_cmd = app.add_subcommand("singular-integral", "truncated singular integral");
  integral_cmd->add_option("--input", lo.input)->required();
  integral_cmd->add_option("--r", lo.r, "R as p/q (default 1/2)");
  integral_cmd->add_option("--rho", lo.rho, "weight radius (default 1/2)");
  integral_cmd->add_option("--x0", lo.x0, "weight centre, comma separated (default origin)");
  integral_cmd->add_option("--grid", lo.grid, "points per axis, at most 200 (default 100)");
  add_common(integral_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (verify_cmd->parsed()) return verify(common, vo, out);
    if (maxmin_cmd->parsed()) return max_min_cmd(common, lo, out);
    if (expsum_cmd->parsed()) return expsum(common, lo, out);
    if (snf_cmd->parsed()) return snf(common, lo, out);
    if (null_cmd->parsed()) return nullcount(common, lo, out);
    if (poisson_cmd->parsed()) return poisson(common, lo, out);
    if (series_cmd->parsed()) return series(common, lo, out);
    if (integral_cmd->parsed()) return integral(common, lo, out);
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return kConsistency;
  } catch (const QuadratureError& e) {
    err << "quadrature error: " << e.what() << "\n";
    return kConsistency;
  } catch (const IndeterminateError& e) {
    err << "indeterminate: " << e.what() << "\n";
    return kConsistency;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace arcbound::cli
