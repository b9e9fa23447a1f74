#include <stdexcept>

#include "mvmodal/errors.hpp"
#include "mvmodal/lukdecide.hpp"

namespace mvmodal {

namespace {

struct EncExpr {
  bool is_const = false;
  Rational cval = 0;
  int var = -1;
};

class Encoder {
public:
  MilpEncoding enc;
  std::map<Formula, EncExpr, FormulaLess> cache;

  int new_var(const std::string& name, bool binary) {
    const int id = enc.num_vars++;
    enc.is_binary.push_back(binary);
    enc.var_names.push_back(name);
    if (binary) enc.binary_order.push_back(id);
    enc.rows.push_back({{{id, 1}}, Rel::Le, 1});  // upper bound
    return id;
  }

  int new_cont() { return new_var("z" + std::to_string(enc.num_vars), false); }
  int new_binary() { return new_var("b" + std::to_string(enc.num_vars), true); }

  // row builder folding constant children into the rhs
  struct Row {
    LinearConstraint c;
    void add(const EncExpr& e, const Rational& coeff) {
      if (e.is_const)
        c.rhs -= coeff * e.cval;
      else
        c.terms.push_back({e.var, coeff});
    }
    void add_var(int var, const Rational& coeff) { c.terms.push_back({var, coeff}); }
  };

  void emit(Row row, Rel rel, const Rational& rhs_extra = 0) {
    row.c.rel = rel;
    row.c.rhs += rhs_extra;
    enc.rows.push_back(std::move(row.c));
  }

  static Rational luk_fuse(const Rational& a, const Rational& b) {
    Rational s = a + b - 1;
    return s > 0 ? s : Rational(0);
  }
  static Rational luk_impl(const Rational& a, const Rational& b) {
    Rational s = 1 - a + b;
    return s < 1 ? s : Rational(1);
  }
  static Rational luk_power(const Rational& a, const BigInt& m) {
    if (m == 0) return 1;
    Rational s = 1 - Rational(m) * (1 - a);
    return s > 0 ? s : Rational(0);
  }

  EncExpr encode(const Formula& f) {
    if (auto it = cache.find(f); it != cache.end()) return it->second;
    EncExpr result = encode_fresh(f);
    cache.emplace(f, result);
    return result;
  }

  EncExpr encode_fresh(const Formula& f) {
    switch (f->kind) {
      case FKind::Zero: return {true, 0, -1};
      case FKind::One: return {true, 1, -1};
      case FKind::Var: {
        auto it = enc.var_index.find(f->var);
        if (it != enc.var_index.end()) return {false, 0, it->second};
        const int id = new_var(f->var, false);
        enc.var_index.emplace(f->var, id);
        return {false, 0, id};
      }
      case FKind::Box:
      case FKind::Diamond:
        throw std::logic_error("the MILP encoder takes modality-free input");
      case FKind::Delta:
        throw DeltaNotSupported("Delta has no linear encoding");
      case FKind::Power: {
        if (f->exponent == 0) return {true, 1, -1};
        EncExpr a = encode(f->lhs);
        if (f->exponent == 1) return a;
        if (a.is_const) return {true, luk_power(a.cval, f->exponent), -1};
        // z = max(0, m*a - (m-1)), fuse pattern with big-rational slope
        const Rational m(f->exponent);
        const int z = new_cont();
        const int d = new_binary();
        Row r1;  // z - m*a >= -(m-1)
        r1.add_var(z, 1);
        r1.add(a, -m);
        emit(std::move(r1), Rel::Ge, -(m - 1));
        Row r2;  // z - m*a - (m-1)*d <= -(m-1)
        r2.add_var(z, 1);
        r2.add(a, -m);
        r2.add_var(d, -(m - 1));
        emit(std::move(r2), Rel::Le, -(m - 1));
        Row r3;  // z + d <= 1
        r3.add_var(z, 1);
        r3.add_var(d, 1);
        emit(std::move(r3), Rel::Le, 1);
        return {false, 0, z};
      }
      case FKind::Fuse: {
        EncExpr a = encode(f->lhs);
        EncExpr b = encode(f->rhs);
        if (a.is_const && b.is_const) return {true, luk_fuse(a.cval, b.cval), -1};
        if (a.is_const && a.cval == 1) return b;
        if (b.is_const && b.cval == 1) return a;
        if ((a.is_const && a.cval == 0) || (b.is_const && b.cval == 0)) return {true, 0, -1};
        const int z = new_cont();
        const int d = new_binary();
        Row r1;  // z - a - b >= -1
        r1.add_var(z, 1);
        r1.add(a, -1);
        r1.add(b, -1);
        emit(std::move(r1), Rel::Ge, -1);
        Row r2;  // z - a - b - d <= -1
        r2.add_var(z, 1);
        r2.add(a, -1);
        r2.add(b, -1);
        r2.add_var(d, -1);
        emit(std::move(r2), Rel::Le, -1);
        Row r3;  // z + d <= 1
        r3.add_var(z, 1);
        r3.add_var(d, 1);
        emit(std::move(r3), Rel::Le, 1);
        return {false, 0, z};
      }
      case FKind::Impl: {
        EncExpr a = encode(f->lhs);
        EncExpr b = encode(f->rhs);
        if (a.is_const && b.is_const) return {true, luk_impl(a.cval, b.cval), -1};
        if (a.is_const && a.cval == 0) return {true, 1, -1};
        if (b.is_const && b.cval == 1) return {true, 1, -1};
        if (a.is_const && a.cval == 1) return b;
        if (b.is_const && b.cval == 0) {
          // negation: z = 1 - a, no binary
          const int z = new_cont();
          Row r;  // z + a = 1
          r.add_var(z, 1);
          r.add(a, 1);
          emit(std::move(r), Rel::Eq, 1);
          return {false, 0, z};
        }
        const int z = new_cont();
        const int d = new_binary();
        Row r1;  // z + a - b <= 1
        r1.add_var(z, 1);
        r1.add(a, 1);
        r1.add(b, -1);
        emit(std::move(r1), Rel::Le, 1);
        Row r2;  // z + a - b + d >= 1
        r2.add_var(z, 1);
        r2.add(a, 1);
        r2.add(b, -1);
        r2.add_var(d, 1);
        emit(std::move(r2), Rel::Ge, 1);
        Row r3;  // z - d >= 0
        r3.add_var(z, 1);
        r3.add_var(d, -1);
        emit(std::move(r3), Rel::Ge, 0);
        return {false, 0, z};
      }
      case FKind::Meet: {
        EncExpr a = encode(f->lhs);
        EncExpr b = encode(f->rhs);
        if (a.is_const && b.is_const) return {true, std::min(a.cval, b.cval), -1};
        if (a.is_const && a.cval == 1) return b;
        if (b.is_const && b.cval == 1) return a;
        if ((a.is_const && a.cval == 0) || (b.is_const && b.cval == 0)) return {true, 0, -1};
        const int z = new_cont();
        const int d = new_binary();
        Row r1;  // z <= a
        r1.add_var(z, 1);
        r1.add(a, -1);
        emit(std::move(r1), Rel::Le, 0);
        Row r2;  // z <= b
        r2.add_var(z, 1);
        r2.add(b, -1);
        emit(std::move(r2), Rel::Le, 0);
        Row r3;  // z >= a - d
        r3.add_var(z, 1);
        r3.add(a, -1);
        r3.add_var(d, 1);
        emit(std::move(r3), Rel::Ge, 0);
        Row r4;  // z >= b - (1-d)
        r4.add_var(z, 1);
        r4.add(b, -1);
        r4.add_var(d, -1);
        emit(std::move(r4), Rel::Ge, -1);
        return {false, 0, z};
      }
      case FKind::Join: {
        EncExpr a = encode(f->lhs);
        EncExpr b = encode(f->rhs);
        if (a.is_const && b.is_const) return {true, std::max(a.cval, b.cval), -1};
        if (a.is_const && a.cval == 0) return b;
        if (b.is_const && b.cval == 0) return a;
        if ((a.is_const && a.cval == 1) || (b.is_const && b.cval == 1)) return {true, 1, -1};
        const int z = new_cont();
        const int d = new_binary();
        Row r1;  // z >= a
        r1.add_var(z, 1);
        r1.add(a, -1);
        emit(std::move(r1), Rel::Ge, 0);
        Row r2;  // z >= b
        r2.add_var(z, 1);
        r2.add(b, -1);
        emit(std::move(r2), Rel::Ge, 0);
        Row r3;  // z <= a + d
        r3.add_var(z, 1);
        r3.add(a, -1);
        r3.add_var(d, -1);
        emit(std::move(r3), Rel::Le, 0);
        Row r4;  // z <= b + (1-d)
        r4.add_var(z, 1);
        r4.add(b, -1);
        r4.add_var(d, 1);
        emit(std::move(r4), Rel::Le, 1);
        return {false, 0, z};
      }
    }
    throw std::logic_error("unreachable");
  }

  void mark_infeasible() {
    enc.infeasible_premises = true;
    enc.rows.push_back({{}, Rel::Le, -1});  // 0 <= -1
  }

  // value-1 pinning, propagated structurally where that is exact
  void assert_true(const Formula& f) {
    switch (f->kind) {
      case FKind::One:
        return;
      case FKind::Zero:
        mark_infeasible();
        return;
      case FKind::Var: {
        EncExpr e = encode(f);
        Row r;
        r.add(e, 1);
        emit(std::move(r), Rel::Eq, 1);
        return;
      }
      case FKind::Meet:
      case FKind::Fuse:
        assert_true(f->lhs);
        assert_true(f->rhs);
        return;
      case FKind::Power:
        if (f->exponent >= 1) assert_true(f->lhs);
        return;
      case FKind::Impl: {
        EncExpr a = encode(f->lhs);
        EncExpr b = encode(f->rhs);
        if (a.is_const && b.is_const) {
          if (luk_impl(a.cval, b.cval) != 1) mark_infeasible();
          return;
        }
        Row r;  // a <= b
        r.add(a, 1);
        r.add(b, -1);
        emit(std::move(r), Rel::Le, 0);
        return;
      }
      case FKind::Join: {
        EncExpr a = encode(f->lhs);
        if (a.is_const) {
          if (a.cval == 1) return;
          assert_true(f->rhs);
          return;
        }
        EncExpr b = encode(f->rhs);
        if (b.is_const) {
          if (b.cval == 1) return;
          assert_true(f->lhs);
          return;
        }
        EncExpr z = encode(f);
        Row r;
        r.add(z, 1);
        emit(std::move(r), Rel::Eq, 1);
        return;
      }
      case FKind::Delta:
        throw DeltaNotSupported("Delta has no linear encoding");
      case FKind::Box:
      case FKind::Diamond:
        throw std::logic_error("the MILP encoder takes modality-free input");
    }
  }
};

}  // namespace

MilpEncoding encode_milp(const PropSequent& ps) {
  Encoder e;
  for (const auto& p : ps.premises) e.assert_true(p);
  EncExpr conc = e.encode(ps.conclusion);
  if (conc.is_const) {
    e.enc.conclusion_is_const = true;
    e.enc.conclusion_const = conc.cval;
  } else {
    e.enc.conclusion_var = conc.var;
  }
  std::set<std::string> vars;
  for (const auto& p : ps.premises)
    for (const auto& v : collect_variables(p)) vars.insert(v);
  for (const auto& v : collect_variables(ps.conclusion)) vars.insert(v);
  e.enc.sequent_vars.assign(vars.begin(), vars.end());
  return std::move(e.enc);
}

FormulaEncoding encode_formula(const Formula& modality_free) {
  Encoder e;
  EncExpr root = e.encode(modality_free);
  FormulaEncoding out;
  out.root_is_const = root.is_const;
  out.root_const = root.cval;
  out.root_var = root.var;
  for (const auto& [f, expr] : e.cache) {
    if (expr.is_const)
      out.node_const.emplace(f, expr.cval);
    else
      out.node_var.emplace(f, expr.var);
  }
  out.enc = std::move(e.enc);
  return out;
}

Rational prop_evaluate(const Formula& f, const std::map<std::string, Rational>& assignment) {
  switch (f->kind) {
    case FKind::Zero: return 0;
    case FKind::One: return 1;
    case FKind::Var: {
      auto it = assignment.find(f->var);
      return it == assignment.end() ? Rational(0) : it->second;
    }
    case FKind::Meet:
      return std::min(prop_evaluate(f->lhs, assignment), prop_evaluate(f->rhs, assignment));
    case FKind::Join:
      return std::max(prop_evaluate(f->lhs, assignment), prop_evaluate(f->rhs, assignment));
    case FKind::Fuse: {
      Rational s = prop_evaluate(f->lhs, assignment) + prop_evaluate(f->rhs, assignment) - 1;
      return s > 0 ? s : Rational(0);
    }
    case FKind::Impl: {
      Rational s = 1 - prop_evaluate(f->lhs, assignment) + prop_evaluate(f->rhs, assignment);
      return s < 1 ? s : Rational(1);
    }
    case FKind::Delta:
      return prop_evaluate(f->lhs, assignment) == 1 ? Rational(1) : Rational(0);
    case FKind::Power: {
      if (f->exponent == 0) return 1;
      Rational s = 1 - Rational(f->exponent) * (1 - prop_evaluate(f->lhs, assignment));
      return s > 0 ? s : Rational(0);
    }
    case FKind::Box:
    case FKind::Diamond:
      throw std::logic_error("prop_evaluate takes modality-free input");
  }
  throw std::logic_error("unreachable");
}

namespace {

struct BnbState {
  const MilpEncoding* enc;
  Budget* budget;
  Rational best_gap = 0;
  bool found = false;
  std::vector<int> best_binaries;
  std::vector<Rational> best_point;
  bool feasibility_mode = false;  // constant conclusion: first feasible leaf wins
  Rational const_gap = 0;

  LpSolution relax(const std::vector<int>& fixed) {
    LpProblem lp;
    lp.num_vars = enc->num_vars;
    lp.rows = enc->rows;
    for (std::size_t i = 0; i < enc->binary_order.size(); ++i) {
      if (fixed[i] < 0) continue;
      lp.rows.push_back({{{enc->binary_order[i], 1}}, Rel::Eq, Rational(fixed[i])});
    }
    lp.objective.assign(enc->num_vars, Rational(0));
    if (!enc->conclusion_is_const) lp.objective[enc->conclusion_var] = -1;
    if (budget) budget->charge();
    LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Unbounded)
      throw std::logic_error("encoding LPs are bounded by construction");
    return sol;
  }

  void dfs(std::vector<int>& fixed, std::size_t depth) {
    if (feasibility_mode && found) return;
    LpSolution sol = relax(fixed);
    if (sol.status == LpStatus::Infeasible) return;
    const Rational gap_bound = enc->conclusion_is_const ? const_gap : 1 + sol.value;
    if (!feasibility_mode && gap_bound <= best_gap) return;  // cannot strictly improve
    if (depth == enc->binary_order.size()) {
      if (feasibility_mode) {
        found = true;
        best_gap = const_gap;
        best_binaries = fixed;
        best_point = sol.point;
        return;
      }
      if (gap_bound > best_gap) {
        found = true;
        best_gap = gap_bound;
        best_binaries = fixed;
        best_point = sol.point;
      }
      return;
    }
    for (int v = 0; v <= 1; ++v) {
      fixed[depth] = v;
      dfs(fixed, depth + 1);
      if (feasibility_mode && found) break;
    }
    fixed[depth] = -1;
  }
};

}  // namespace

PropVerdict solve_milp(const MilpEncoding& enc, Budget* budget) {
  PropVerdict verdict;
  if (enc.infeasible_premises) {
    verdict.valid = true;
    return verdict;
  }
  BnbState bnb;
  bnb.enc = &enc;
  bnb.budget = budget;
  if (enc.conclusion_is_const) {
    bnb.feasibility_mode = true;
    bnb.const_gap = 1 - enc.conclusion_const;
    if (bnb.const_gap == 0) {
      verdict.valid = true;
      return verdict;
    }
  }
  std::vector<int> fixed(enc.binary_order.size(), -1);
  bnb.dfs(fixed, 0);
  if (!bnb.found || bnb.best_gap == 0) {
    verdict.valid = true;
    return verdict;
  }
  Countervaluation cv;
  cv.gap = bnb.best_gap;
  cv.binary_choice = bnb.best_binaries;
  for (const auto& name : enc.sequent_vars) {
    auto it = enc.var_index.find(name);
    cv.assignment[name] = it == enc.var_index.end() ? Rational(0) : bnb.best_point[it->second];
  }
  verdict.counter = std::move(cv);
  return verdict;
}

}  // namespace mvmodal
