#include "arcbound/minmax.hpp"

#include <functional>
#include <set>
#include <unordered_map>

#include "arcbound/errors.hpp"

namespace arcbound {

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Branch: return "branch";
    case Engine::Vertex: return "vertex";
    case Engine::Both: return "both";
  }
  return "?";
}

Engine parse_engine(const std::string& s) {
  if (s == "branch") return Engine::Branch;
  if (s == "vertex") return Engine::Vertex;
  if (s == "both") return Engine::Both;
  throw ParseError("unknown engine '" + s + "' (expected branch, vertex or both)");
}

namespace {

using Form = AffineForm;
using Emit = std::function<void(const std::vector<Form>&)>;

// Scales g ≤ 0 so that the first nonzero coefficient is ±1; used as a key to
// skip constraints already present on the current branch.
std::vector<Rational> normal_key(const Form& g) {
  Rational s = 0;
  for (const auto& c : g.coeffs) {
    if (sgn(c) != 0) {
      s = abs(c);
      break;
    }
  }
  std::vector<Rational> key;
  key.reserve(g.dim() + 1);
  for (const auto& c : g.coeffs) key.push_back(c / s);
  key.push_back(g.constant / s);
  return key;
}

class Decomposer {
 public:
  explicit Decomposer(const Polytope& domain) : domain_(domain), rows_(domain.halfspaces()) {}

  void run(const std::vector<PwlExpr>& exprs, const Emit& emit) {
    if (!lp_feasible(rows_, domain_.dim())) return;
    std::vector<Form> acc;
    resolve_list(exprs, 0, acc, [&](std::vector<Form>& forms) { emit(forms); });
  }

  Polytope region() const { return domain_.with(extra_); }

  // Branch on which of `forms` is the minimum; calls k(i) inside each feasible branch.
  void branch_min(const std::vector<Form>& forms, const std::function<void(std::size_t)>& k) {
    branch_extreme(forms, false, k);
  }

 private:
  using ListK = std::function<void(std::vector<Form>&)>;
  using FormK = std::function<void(const Form&)>;

  void resolve_list(const std::vector<PwlExpr>& es, std::size_t i, std::vector<Form>& acc,
                    const ListK& k) {
    if (i == es.size()) {
      k(acc);
      return;
    }
    resolve(es[i], [&](const Form& f) {
      acc.push_back(f);
      resolve_list(es, i + 1, acc, k);
      acc.pop_back();
    });
  }

  void resolve(const PwlExpr& e, const FormK& k) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) {
      k(it->second);
      return;
    }
    switch (e.kind()) {
      case NodeKind::Affine:
        k(e.form());
        return;
      case NodeKind::Scale:
        resolve(e.children().front(), [&](const Form& f) { k(e.factor() * f); });
        return;
      case NodeKind::Sum: {
        std::vector<Form> acc;
        resolve_list(e.children(), 0, acc, [&](std::vector<Form>& forms) {
          Form total(domain_.dim());
          for (const auto& f : forms) total += f;
          k(total);
        });
        return;
      }
      case NodeKind::Max:
      case NodeKind::Min: {
        const bool is_max = e.kind() == NodeKind::Max;
        std::vector<Form> acc;
        resolve_list(e.children(), 0, acc, [&](std::vector<Form>& forms) {
          branch_extreme(forms, is_max, [&](std::size_t i) {
            memo_.emplace(e.id(), forms[i]);
            k(forms[i]);
            memo_.erase(e.id());
          });
        });
        return;
      }
    }
  }

  // Branch i assumes forms[i] is the max (or min). Identical forms collapse
  // onto their first occurrence.
  void branch_extreme(const std::vector<Form>& forms, bool is_max,
                      const std::function<void(std::size_t)>& k) {
    for (std::size_t i = 0; i < forms.size(); ++i) {
      bool duplicate = false;
      for (std::size_t j = 0; j < i && !duplicate; ++j) duplicate = forms[j] == forms[i];
      if (duplicate) continue;
      const std::size_t mark_rows = rows_.size();
      const std::size_t mark_extra = extra_.size();
      std::vector<std::vector<Rational>> added_keys;
      bool dead = false;
      for (std::size_t j = 0; j < forms.size() && !dead; ++j) {
        if (j == i) continue;
        Form g = is_max ? forms[j] - forms[i] : forms[i] - forms[j];  // g ≤ 0
        if (g.is_constant()) {
          dead = sgn(g.constant) > 0;
          continue;
        }
        auto key = normal_key(g);
        if (keys_.count(key)) continue;
        keys_.insert(key);
        added_keys.push_back(std::move(key));
        rows_.push_back({g.coeffs, -g.constant});
        extra_.push_back(le(std::move(g)));
      }
      if (!dead && (extra_.size() == mark_extra || lp_feasible(rows_, domain_.dim()))) k(i);
      rows_.resize(mark_rows);
      extra_.resize(mark_extra);
      for (const auto& key : added_keys) keys_.erase(key);
    }
  }

  const Polytope& domain_;
  std::vector<HalfSpace> rows_;
  std::vector<Constraint> extra_;
  std::set<std::vector<Rational>> keys_;
  std::unordered_map<const PwlNode*, Form> memo_;
};

void check_domain(const Polytope& domain) {
  const auto hs = domain.halfspaces();
  const std::size_t d = domain.dim();
  if (!lp_feasible(hs, d)) throw DomainError("max-min over an empty domain");
  for (std::size_t i = 0; i < d; ++i) {
    for (int s : {1, -1}) {
      std::vector<Rational> c(d);
      c[i] = s;
      if (solve_lp(hs, c, d).status == LpStatus::Unbounded) {
        throw DomainError("max-min over an unbounded domain");
      }
    }
  }
}

std::size_t min_index_at(const std::vector<PwlExpr>& exprs, const Point& p, const Rational& value) {
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    if (exprs[i].eval(p) == value) return i;
  }
  throw ConsistencyError("no expression attains the reported value at the argmax");
}

Rational min_of(const std::vector<Form>& forms, const Point& p) {
  Rational best = forms.front().eval(p);
  for (std::size_t i = 1; i < forms.size(); ++i) {
    Rational v = forms[i].eval(p);
    if (v < best) best = std::move(v);
  }
  return best;
}

MinMaxResult run_branch(const std::vector<PwlExpr>& exprs, const Polytope& domain) {
  const std::size_t d = domain.dim();
  std::vector<Cell> cells = joint_cells(exprs, domain);
  if (cells.empty()) throw DomainError("max-min over an empty domain");

  // maximize t subject to t ≤ active_i(x), x ∈ cell, in variables (x, t).
  std::vector<Rational> values;
  values.reserve(cells.size());
  std::vector<Rational> obj(d + 1);
  obj[d] = 1;
  for (const auto& cell : cells) {
    std::vector<HalfSpace> rows;
    for (auto h : cell.region.halfspaces()) {
      h.a.emplace_back(0);
      rows.push_back(std::move(h));
    }
    for (const auto& f : cell.active) {
      HalfSpace h;
      h.a.reserve(d + 1);
      for (const auto& c : f.coeffs) h.a.push_back(-c);
      h.a.emplace_back(1);
      h.b = f.constant;
      rows.push_back(std::move(h));
    }
    LpResult r = solve_lp(rows, obj, d + 1);
    if (r.status != LpStatus::Optimal) throw ConsistencyError("cell LP not optimal");
    values.push_back(r.value);
  }
  Rational best = values.front();
  for (const auto& v : values) {
    if (v > best) best = v;
  }

  MinMaxResult res;
  res.value = best;
  res.engine = Engine::Branch;
  res.cells = cells.size();
  bool have = false;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (values[c] != best) continue;
    std::vector<Constraint> floor;
    for (const auto& f : cells[c].active) floor.push_back(ge(f, best));
    LpResult lex = maximize_lexmin(cells[c].region.with(floor), Form(d));
    if (lex.status != LpStatus::Optimal) throw ConsistencyError("optimal cell lost feasibility");
    if (!have || lex.point < res.argmax) {
      res.argmax = lex.point;
      res.certificate = cells[c];
      have = true;
    }
  }
  return res;
}

MinMaxResult run_vertex(const std::vector<PwlExpr>& exprs, const Polytope& domain) {
  MinMaxResult res;
  res.engine = Engine::Vertex;
  bool have = false;
  Decomposer dec(domain);
  dec.run(exprs, [&](const std::vector<Form>& forms) {
    dec.branch_min(forms, [&](std::size_t i) {
      Polytope region = dec.region();
      ++res.cells;
      for (const auto& v : vertices(region)) {
        const Rational val = forms[i].eval(v);
        if (!have || val > res.value || (val == res.value && v < res.argmax)) {
          res.value = val;
          res.argmax = v;
          res.certificate = Cell{region, forms};
          have = true;
        }
      }
    });
  });
  if (!have) throw DomainError("max-min over an empty domain");
  if (min_of(res.certificate.active, res.argmax) != res.value) {
    throw ConsistencyError("vertex value disagrees with the cell's active forms");
  }
  return res;
}

}  // namespace

std::vector<Cell> joint_cells(const std::vector<PwlExpr>& exprs, const Polytope& domain) {
  for (const auto& e : exprs) {
    if (e.space()->names() != domain.space()->names()) {
      throw DomainError("expression and domain use different variables");
    }
  }
  std::vector<Cell> cells;
  Decomposer dec(domain);
  dec.run(exprs, [&](const std::vector<Form>& forms) { cells.push_back({dec.region(), forms}); });
  return cells;
}

std::vector<std::pair<Polytope, AffineForm>> linear_cells(const PwlExpr& expr,
                                                          const Polytope& domain) {
  std::vector<std::pair<Polytope, AffineForm>> out;
  for (auto& c : joint_cells({expr}, domain)) out.emplace_back(std::move(c.region), c.active.front());
  return out;
}

MinMaxResult max_min(const std::vector<PwlExpr>& exprs, const Polytope& domain, Engine engine) {
  if (exprs.empty()) throw DomainError("max-min of an empty family");
  for (const auto& e : exprs) {
    if (e.space()->names() != domain.space()->names()) {
      throw DomainError("expression and domain use different variables");
    }
  }
  check_domain(domain);
  MinMaxResult res;
  if (engine == Engine::Vertex) {
    res = run_vertex(exprs, domain);
  } else {
    res = run_branch(exprs, domain);
    if (engine == Engine::Both) {
      const MinMaxResult other = run_vertex(exprs, domain);
      if (other.value != res.value) {
        throw ConsistencyError("engines disagree: branch " + to_string(res.value) + ", vertex " +
                               to_string(other.value));
      }
      res.engine = Engine::Both;
    }
  }
  res.min_index = min_index_at(exprs, res.argmax, res.value);
  Rational attained = exprs.front().eval(res.argmax);
  for (const auto& e : exprs) {
    Rational v = e.eval(res.argmax);
    if (v < attained) attained = std::move(v);
  }
  if (attained != res.value || !domain.contains(res.argmax)) {
    throw ConsistencyError("argmax does not attain the reported value");
  }
  return res;
}

}  // namespace arcbound
