#include "mvmodal/kripke.hpp"

#include <algorithm>

#include "mvmodal/errors.hpp"

namespace mvmodal {

void Budget::charge(std::uint64_t n) {
  if (steps < n) throw BudgetExceeded("node budget exhausted");
  steps -= n;
}

int KripkeModel::add_world(const std::string& id) {
  if (index_.count(id)) throw DomainError("duplicate world id '" + id + "'");
  const int w = static_cast<int>(world_ids_.size());
  world_ids_.push_back(id);
  index_[id] = w;
  succ_.emplace_back();
  return w;
}

int KripkeModel::world_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown world id '" + id + "'");
  return it->second;
}

void KripkeModel::add_edge(int from, int to) {
  if (from < 0 || from >= world_count() || to < 0 || to >= world_count())
    throw DomainError("edge endpoint out of range");
  auto& s = succ_[from];
  if (std::find(s.begin(), s.end(), to) == s.end()) {
    s.push_back(to);
    std::sort(s.begin(), s.end());
  }
}

bool KripkeModel::related(int from, int to) const {
  const auto& s = succ_[from];
  return std::binary_search(s.begin(), s.end(), to);
}

std::vector<std::pair<int, int>> KripkeModel::relation() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < world_count(); ++i)
    for (int j : succ_[i]) out.emplace_back(i, j);
  return out;
}

void KripkeModel::set_value(int world, const std::string& var, AlgebraElement value) {
  algebra_.require_carrier(value);
  valuation_[{world, var}] = std::move(value);
}

AlgebraElement KripkeModel::value(int world, const std::string& var) const {
  auto it = valuation_.find({world, var});
  if (it == valuation_.end()) return algebra_.zero();
  return it->second;
}

namespace {

using Memo = std::map<std::pair<const FormulaNode*, int>, AlgebraElement>;

AlgebraElement eval_rec(const KripkeModel& m, int world, const Formula& f, Memo& memo) {
  const auto key = std::make_pair(f.get(), world);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const ChainAlgebra& alg = m.algebra();
  AlgebraElement result = alg.zero();
  switch (f->kind) {
    case FKind::Zero: result = alg.zero(); break;
    case FKind::One: result = alg.one(); break;
    case FKind::Var: result = m.value(world, f->var); break;
    case FKind::Meet:
      result = alg.meet(eval_rec(m, world, f->lhs, memo), eval_rec(m, world, f->rhs, memo));
      break;
    case FKind::Join:
      result = alg.join(eval_rec(m, world, f->lhs, memo), eval_rec(m, world, f->rhs, memo));
      break;
    case FKind::Fuse:
      result = alg.fuse(eval_rec(m, world, f->lhs, memo), eval_rec(m, world, f->rhs, memo));
      break;
    case FKind::Impl:
      result = alg.impl(eval_rec(m, world, f->lhs, memo), eval_rec(m, world, f->rhs, memo));
      break;
    case FKind::Delta:
      result = alg.delta(eval_rec(m, world, f->lhs, memo));
      break;
    case FKind::Power:
      result = alg.power(eval_rec(m, world, f->lhs, memo), f->exponent);
      break;
    case FKind::Box: {
      result = alg.one();
      for (int t : m.successors(world))
        result = alg.meet(result, eval_rec(m, t, f->lhs, memo));
      break;
    }
    case FKind::Diamond: {
      result = alg.zero();
      for (int t : m.successors(world))
        result = alg.join(result, eval_rec(m, t, f->lhs, memo));
      break;
    }
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

AlgebraElement evaluate(const KripkeModel& m, int world, const Formula& f) {
  if (world < 0 || world >= m.world_count()) throw DomainError("world index out of range");
  Memo memo;
  return eval_rec(m, world, f, memo);
}

bool is_transitive(const KripkeModel& m) {
  const int n = m.world_count();
  for (int u = 0; u < n; ++u)
    for (int v : m.successors(u))
      for (int w : m.successors(v))
        if (!m.related(u, w)) return false;
  return true;
}

KripkeModel transitive_closure(const KripkeModel& m) {
  const int n = m.world_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j : m.successors(i)) reach[i][j] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (reach[k][j]) reach[i][j] = true;
    }
  KripkeModel out(m.algebra());
  for (const auto& id : m.worlds()) out.add_world(id);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (reach[i][j]) out.add_edge(i, j);
  for (const auto& [key, val] : m.valuation()) out.set_value(key.first, key.second, val);
  return out;
}

Depth depth(const KripkeModel& m, int world) {
  if (world < 0 || world >= m.world_count()) throw DomainError("world index out of range");
  const int n = m.world_count();
  // detect a reachable cycle, otherwise longest path in the induced DAG
  enum { White, Grey, Black };
  std::vector<int> color(n, White);
  bool cyclic = false;
  std::vector<std::int64_t> longest(n, -1);
  auto dfs = [&](auto&& self, int u) -> std::int64_t {
    if (color[u] == Grey) {
      cyclic = true;
      return 0;
    }
    if (color[u] == Black) return longest[u];
    color[u] = Grey;
    std::int64_t best = 0;
    for (int v : m.successors(u)) {
      const std::int64_t d = self(self, v);
      if (cyclic) break;
      best = std::max(best, d + 1);
    }
    color[u] = Black;
    longest[u] = best;
    return best;
  };
  const std::int64_t d = dfs(dfs, world);
  if (cyclic) return {true, 0};
  return {false, static_cast<std::uint64_t>(d)};
}

LocalCheck check_local_consequence_at(const KripkeModel& m, int world, const Sequent& s) {
  for (const auto& p : s.premises)
    if (!m.algebra().is_one(evaluate(m, world, p)))
      return {LocalStatus::PremisesNotSatisfied, std::nullopt};
  AlgebraElement c = evaluate(m, world, s.conclusion);
  if (m.algebra().is_one(c)) return {LocalStatus::ConclusionHolds, std::nullopt};
  return {LocalStatus::ConclusionFails, c};
}

namespace {
void collect_modal_subformulas(const Formula& f, FormulaSet& out) {
  if (f->kind == FKind::Box || f->kind == FKind::Diamond) out.insert(f);
  if (f->lhs) collect_modal_subformulas(f->lhs, out);
  if (f->rhs) collect_modal_subformulas(f->rhs, out);
}
}  // namespace

bool is_witnessed(const KripkeModel& m, const FormulaSet& formulas) {
  FormulaSet modal;
  for (const auto& f : formulas) collect_modal_subformulas(f, modal);
  for (const auto& mf : modal) {
    for (int v = 0; v < m.world_count(); ++v) {
      if (m.successors(v).empty()) continue;  // vacuous meet/join attained by convention
      const AlgebraElement val = evaluate(m, v, mf);
      bool attained = false;
      for (int t : m.successors(v))
        if (evaluate(m, t, mf->lhs) == val) {
          attained = true;
          break;
        }
      if (!attained) return false;
    }
  }
  return true;
}

}  // namespace mvmodal
