#include <stdexcept>

#include "mvmodal/errors.hpp"
#include "mvmodal/lukdecide.hpp"

namespace mvmodal {

namespace {

int sigma_index(const std::vector<Formula>& sigma, const Formula& dia) {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (equal(sigma[i], dia)) return static_cast<int>(i);
  throw std::logic_error("diamond formula not registered at this level");
}

std::vector<Formula> diamonds_of(const FormulaSet& set) {
  std::vector<Formula> out;
  for (const auto& f : set)
    if (f->kind == FKind::Diamond) out.push_back(f);
  return out;  // FormulaSet iterates in structural order
}

}  // namespace

std::string Unfolding::var_name(int world, const std::string& base) const {
  return base + "_" + tree.worlds[world].name;
}

std::string Unfolding::dia_name(int world, const Formula& dia) const {
  const int level = tree.worlds[world].level;
  if (level >= static_cast<int>(tree.sigma.size()))
    throw std::logic_error("no diamonds live at a leaf level");
  const int idx = sigma_index(tree.sigma[level], dia);
  return "d" + std::to_string(level) + "_" + std::to_string(idx + 1) + "_" +
         tree.worlds[world].name;
}

Formula Unfolding::sharp(int world, const Formula& f) const {
  switch (f->kind) {
    case FKind::Zero:
    case FKind::One:
      return f;
    case FKind::Var:
      return fm::var(var_name(world, f->var));
    case FKind::Diamond:
      return fm::var(dia_name(world, f));
    case FKind::Box:
      throw std::logic_error("sharp translation expects diamond-only input");
    case FKind::Delta:
      throw DeltaNotSupported("Delta cannot be unfolded");
    case FKind::Power:
      return fm::power(sharp(world, f->lhs), f->exponent);
    case FKind::Meet:
      return fm::meet(sharp(world, f->lhs), sharp(world, f->rhs));
    case FKind::Join:
      return fm::join(sharp(world, f->lhs), sharp(world, f->rhs));
    case FKind::Fuse:
      return fm::fuse(sharp(world, f->lhs), sharp(world, f->rhs));
    case FKind::Impl:
      return fm::impl(sharp(world, f->lhs), sharp(world, f->rhs));
  }
  throw std::logic_error("unreachable");
}

namespace {

// Everything translated at a world belongs to its closure; diamond bodies
// belong to the child that witnesses them.
void record_closure(std::map<int, FormulaSet>& closure, int world, const Formula& f) {
  closure[world].insert(f);
  switch (f->kind) {
    case FKind::Zero:
    case FKind::One:
    case FKind::Var:
    case FKind::Diamond:
      return;
    case FKind::Power:
    case FKind::Delta:
    case FKind::Box:
      record_closure(closure, world, f->lhs);
      return;
    default:
      record_closure(closure, world, f->lhs);
      record_closure(closure, world, f->rhs);
      return;
  }
}

}  // namespace

Unfolding unfold(const Sequent& s) {
  for (const auto& p : s.premises)
    if (contains_delta(p))
      throw DeltaNotSupported("Delta breaks the piecewise-linear unfolding; "
                              "use the bounded MV_n search instead");
  if (contains_delta(s.conclusion))
    throw DeltaNotSupported("Delta breaks the piecewise-linear unfolding; "
                            "use the bounded MV_n search instead");

  Unfolding u;
  u.original = s;
  for (const auto& p : s.premises) u.normalized.premises.push_back(normalize_to_diamond(p));
  u.normalized.conclusion = normalize_to_diamond(s.conclusion);
  u.base_vars = collect_variables(s);

  // Sigma levels
  std::vector<Formula> all = u.normalized.premises;
  all.push_back(u.normalized.conclusion);
  std::vector<Formula> current = diamonds_of(psfm(all));
  while (!current.empty()) {
    u.tree.sigma.push_back(current);
    std::vector<Formula> bodies;
    bodies.reserve(current.size());
    for (const auto& d : current) bodies.push_back(d->lhs);
    current = diamonds_of(psfm(bodies));
  }

  // witness worlds, level-major
  u.tree.worlds.push_back(WitnessWorld{-1, nullptr, 0, "w0"});
  u.tree.levels.push_back({0});
  u.tree.children.push_back({});
  for (std::size_t i = 0; i < u.tree.sigma.size(); ++i) {
    std::vector<int> next;
    for (int w : u.tree.levels[i]) {
      u.tree.children[w].resize(u.tree.sigma[i].size());
      for (std::size_t j = 0; j < u.tree.sigma[i].size(); ++j) {
        const int idx = static_cast<int>(u.tree.worlds.size());
        u.tree.worlds.push_back(WitnessWorld{w, u.tree.sigma[i][j], static_cast<int>(i) + 1,
                                             u.tree.worlds[w].name + "_" + std::to_string(j + 1)});
        u.tree.children.push_back({});
        u.tree.children[w][j] = idx;
        next.push_back(idx);
      }
    }
    u.tree.levels.push_back(next);
  }

  // translated premises
  for (const auto& g : u.normalized.premises) {
    u.prop.premises.push_back(u.sharp(0, g));
    record_closure(u.closure_, 0, g);
  }

  // Psi: per diamond variable one biconditional plus one implication per
  // sibling witness (conjunctive reading)
  for (std::size_t i = 0; i < u.tree.sigma.size(); ++i) {
    for (int w : u.tree.levels[i]) {
      for (std::size_t j = 0; j < u.tree.sigma[i].size(); ++j) {
        const Formula& dia = u.tree.sigma[i][j];
        const Formula& psi = dia->lhs;
        const int c = u.tree.children[w][j];
        u.prop.premises.push_back(fm::iff(fm::var(u.dia_name(w, dia)), u.sharp(c, psi)));
        record_closure(u.closure_, w, dia);
        record_closure(u.closure_, c, psi);
        for (std::size_t j2 = 0; j2 < u.tree.sigma[i].size(); ++j2) {
          if (j2 == j) continue;
          const int c2 = u.tree.children[w][j2];
          u.prop.premises.push_back(fm::impl(u.sharp(c2, psi), u.sharp(c, psi)));
          record_closure(u.closure_, c2, psi);
        }
      }
    }
  }

  u.prop.conclusion = u.sharp(0, u.normalized.conclusion);
  record_closure(u.closure_, 0, u.normalized.conclusion);
  return u;
}

}  // namespace mvmodal
