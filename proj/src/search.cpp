#include <cstdint>
#include <map>
#include <tuple>

#include "mvmodal/errors.hpp"
#include "mvmodal/kripke.hpp"

namespace mvmodal {

namespace {

// Formulas are compiled to a structurally deduplicated DAG evaluated with
// plain int64 index arithmetic; the generic rational evaluator re-verifies
// every hit before it is returned.
struct CNode {
  FKind kind;
  int a = -1;
  int b = -1;
  int var = -1;
  std::int64_t pw = 0;  // Power exponent, clamped to n+1 (exact for MV_n)
};

struct Compiler {
  std::vector<CNode> nodes;
  std::map<std::tuple<FKind, int, int, int, std::int64_t>, int> dedupe;
  std::map<std::string, int> var_ids;
  std::int64_t n;  // MV_n order

  int intern(CNode c) {
    auto key = std::make_tuple(c.kind, c.a, c.b, c.var, c.pw);
    auto it = dedupe.find(key);
    if (it != dedupe.end()) return it->second;
    const int id = static_cast<int>(nodes.size());
    nodes.push_back(c);
    dedupe.emplace(key, id);
    return id;
  }

  int compile(const Formula& f) {
    switch (f->kind) {
      case FKind::Zero: return intern({FKind::Zero});
      case FKind::One: return intern({FKind::One});
      case FKind::Var: {
        auto [it, inserted] = var_ids.try_emplace(f->var, static_cast<int>(var_ids.size()));
        return intern({FKind::Var, -1, -1, it->second});
      }
      case FKind::Power: {
        const int a = compile(f->lhs);
        BigInt clamped = f->exponent;
        if (clamped > n + 1) clamped = n + 1;
        return intern({FKind::Power, a, -1, -1, static_cast<std::int64_t>(clamped)});
      }
      case FKind::Box:
      case FKind::Diamond:
      case FKind::Delta:
        return intern({f->kind, compile(f->lhs)});
      default:
        return intern({f->kind, compile(f->lhs), compile(f->rhs)});
    }
  }
};

// One evaluation arena per world count; memo cells are epoch-stamped so
// successive models skip the clear.
struct Evaluator {
  const std::vector<CNode>& nodes;
  std::int64_t n;
  int num_worlds;
  const std::vector<std::vector<int>>* succ = nullptr;
  const std::vector<std::int64_t>* digits = nullptr;  // [world*nvars + var]
  int nvars = 0;
  std::vector<std::int64_t> memo;
  std::vector<std::uint64_t> stamp;
  std::uint64_t epoch = 0;

  Evaluator(const std::vector<CNode>& ns, std::int64_t order, int worlds)
      : nodes(ns), n(order), num_worlds(worlds) {
    memo.assign(nodes.size() * worlds, 0);
    stamp.assign(nodes.size() * worlds, 0);
  }

  void begin_model() { ++epoch; }

  std::int64_t eval(int node, int w) {
    const std::size_t cell = static_cast<std::size_t>(node) * num_worlds + w;
    if (stamp[cell] == epoch) return memo[cell];
    const CNode& c = nodes[node];
    std::int64_t r = 0;
    switch (c.kind) {
      case FKind::Zero: r = 0; break;
      case FKind::One: r = n; break;
      case FKind::Var: r = (*digits)[static_cast<std::size_t>(w) * nvars + c.var]; break;
      case FKind::Meet: r = std::min(eval(c.a, w), eval(c.b, w)); break;
      case FKind::Join: r = std::max(eval(c.a, w), eval(c.b, w)); break;
      case FKind::Fuse: {
        const std::int64_t s = eval(c.a, w) + eval(c.b, w) - n;
        r = s > 0 ? s : 0;
        break;
      }
      case FKind::Impl: {
        const std::int64_t s = n - eval(c.a, w) + eval(c.b, w);
        r = s < n ? s : n;
        break;
      }
      case FKind::Delta: r = eval(c.a, w) == n ? n : 0; break;
      case FKind::Power: {
        const std::int64_t s = n - c.pw * (n - eval(c.a, w));
        r = s > 0 ? s : 0;
        break;
      }
      case FKind::Box: {
        r = n;
        for (int t : (*succ)[w]) r = std::min(r, eval(c.a, t));
        break;
      }
      case FKind::Diamond: {
        r = 0;
        for (int t : (*succ)[w]) r = std::max(r, eval(c.a, t));
        break;
      }
    }
    stamp[cell] = epoch;
    memo[cell] = r;
    return r;
  }
};

bool mask_transitive(std::uint64_t mask, int w) {
  auto bit = [&](int i, int j) { return (mask >> (i * w + j)) & 1u; };
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) {
      if (!bit(i, j)) continue;
      for (int k = 0; k < w; ++k)
        if (bit(j, k) && !bit(i, k)) return false;
    }
  return true;
}

KripkeModel materialize(const ChainAlgebra& alg, int w, std::uint64_t mask,
                        const std::vector<std::int64_t>& digits,
                        const std::vector<std::string>& vars) {
  KripkeModel m(alg);
  for (int i = 0; i < w; ++i) m.add_world("w" + std::to_string(i));
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j)
      if ((mask >> (i * w + j)) & 1u) m.add_edge(i, j);
  const int nv = static_cast<int>(vars.size());
  for (int i = 0; i < w; ++i)
    for (int v = 0; v < nv; ++v)
      m.set_value(i, vars[v],
                  MvIndex{static_cast<std::uint64_t>(digits[static_cast<std::size_t>(i) * nv + v])});
  return m;
}

// Shared enumeration kernel. hit(r) decides whether candidate world r of the
// current model is a result; invoked in documented deterministic order.
template <typename Hit>
std::optional<Countermodel> enumerate_models(const std::vector<Formula>& formulas,
                                             const std::vector<std::string>& vars,
                                             const ChainAlgebra& alg, int max_worlds,
                                             bool transitive_only, Budget* budget, Hit&& hit) {
  if (alg.kind() != ChainKind::MVn)
    throw DomainError("bounded model search requires a finite chain (mv:<n>)");
  if (max_worlds < 1) throw DomainError("max_worlds must be >= 1");
  if (max_worlds > 5) throw DomainError("bounded search supports at most 5 worlds");
  const std::int64_t n = static_cast<std::int64_t>(alg.mv_order());

  Compiler comp;
  comp.n = n;
  for (const auto& v : vars) comp.var_ids.try_emplace(v, static_cast<int>(comp.var_ids.size()));
  std::vector<int> roots;
  roots.reserve(formulas.size());
  for (const auto& f : formulas) roots.push_back(comp.compile(f));
  const int nv = static_cast<int>(vars.size());

  for (int w = 1; w <= max_worlds; ++w) {
    Evaluator ev(comp.nodes, n, w);
    ev.nvars = nv;
    const std::uint64_t mask_end = 1ull << (w * w);
    std::vector<std::vector<int>> succ(w);
    std::vector<std::int64_t> digits(static_cast<std::size_t>(w) * nv, 0);
    for (std::uint64_t mask = 0; mask < mask_end; ++mask) {
      if (transitive_only && !mask_transitive(mask, w)) continue;
      for (int i = 0; i < w; ++i) {
        succ[i].clear();
        for (int j = 0; j < w; ++j)
          if ((mask >> (i * w + j)) & 1u) succ[i].push_back(j);
      }
      ev.succ = &succ;
      ev.digits = &digits;
      std::fill(digits.begin(), digits.end(), 0);
      while (true) {
        if (budget) budget->charge();
        ev.begin_model();
        for (int r = 0; r < w; ++r) {
          if (hit(ev, roots, r)) {
            KripkeModel model = materialize(alg, w, mask, digits, vars);
            return Countermodel{std::move(model), r};
          }
        }
        // next valuation: rightmost coordinate is least significant
        int pos = static_cast<int>(digits.size()) - 1;
        while (pos >= 0 && digits[pos] == n) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict search_countermodel(const Sequent& s, const ChainAlgebra& alg, int max_worlds,
                            bool transitive_only, Budget* budget) {
  std::vector<Formula> formulas = s.premises;
  formulas.push_back(s.conclusion);
  const std::vector<std::string> vars = collect_variables(s);
  const std::int64_t n = static_cast<std::int64_t>(alg.mv_order());
  auto hit = [&](Evaluator& ev, const std::vector<int>& roots, int r) {
    const int last = static_cast<int>(roots.size()) - 1;
    for (int i = 0; i < last; ++i)
      if (ev.eval(roots[i], r) != n) return false;
    return ev.eval(roots[last], r) != n;
  };
  auto found = enumerate_models(formulas, vars, alg, max_worlds, transitive_only, budget, hit);
  if (found) {
    // the compiled hit must survive the exact evaluator before release
    const LocalCheck check = check_local_consequence_at(found->model, found->world, s);
    if (check.status != LocalStatus::ConclusionFails)
      throw std::logic_error("countermodel failed exact re-verification");
    return *found;
  }
  std::string desc = "no countermodel over " + alg.descriptor() + " with up to " +
                     std::to_string(max_worlds) + (transitive_only ? " worlds, transitive relations only"
                                                                   : " worlds");
  return NoCounterexampleFound{desc};
}

std::optional<Countermodel> local_sat_search(const Formula& f, const ChainAlgebra& alg,
                                             int max_worlds, bool transitive_only,
                                             Budget* budget) {
  const std::vector<std::string> vars = collect_variables(f);
  const std::int64_t n = static_cast<std::int64_t>(alg.mv_order());
  auto hit = [&](Evaluator& ev, const std::vector<int>& roots, int r) {
    return ev.eval(roots[0], r) == n;
  };
  auto found = enumerate_models({f}, vars, alg, max_worlds, transitive_only, budget, hit);
  if (found && !found->model.algebra().is_one(evaluate(found->model, found->world, f)))
    throw std::logic_error("sat witness failed exact re-verification");
  return found;
}

}  // namespace mvmodal
