#include "mvmodal/formula.hpp"

#include <algorithm>
#include <cctype>

#include "mvmodal/errors.hpp"

namespace mvmodal {

namespace fm {

namespace {
Formula make(FKind k, std::string v, Formula l, Formula r, BigInt e) {
  return std::make_shared<const FormulaNode>(k, std::move(v), std::move(l), std::move(r),
                                             std::move(e));
}

bool valid_var_name(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}
}  // namespace

Formula zero() {
  static const Formula f = make(FKind::Zero, "", nullptr, nullptr, 0);
  return f;
}

Formula one() {
  static const Formula f = make(FKind::One, "", nullptr, nullptr, 0);
  return f;
}

Formula var(const std::string& name) {
  if (!valid_var_name(name))
    throw DomainError("invalid variable name: '" + name + "'");
  return make(FKind::Var, name, nullptr, nullptr, 0);
}

Formula meet(Formula l, Formula r) { return make(FKind::Meet, "", std::move(l), std::move(r), 0); }
Formula join(Formula l, Formula r) { return make(FKind::Join, "", std::move(l), std::move(r), 0); }
Formula fuse(Formula l, Formula r) { return make(FKind::Fuse, "", std::move(l), std::move(r), 0); }
Formula impl(Formula l, Formula r) { return make(FKind::Impl, "", std::move(l), std::move(r), 0); }
Formula box(Formula f) { return make(FKind::Box, "", std::move(f), nullptr, 0); }
Formula diamond(Formula f) { return make(FKind::Diamond, "", std::move(f), nullptr, 0); }
Formula delta(Formula f) { return make(FKind::Delta, "", std::move(f), nullptr, 0); }

Formula power(Formula f, BigInt m) {
  if (m < 0) throw DomainError("power exponent must be >= 0");
  return make(FKind::Power, "", std::move(f), nullptr, std::move(m));
}

Formula neg(Formula f) { return impl(std::move(f), zero()); }

Formula iff(Formula l, Formula r) { return fuse(impl(l, r), impl(r, l)); }

Formula big_join(const std::vector<Formula>& fs) {
  if (fs.empty()) throw DomainError("big_join of an empty list");
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = join(acc, fs[i]);
  return acc;
}

Formula big_fuse(const std::vector<Formula>& fs) {
  if (fs.empty()) throw DomainError("big_fuse of an empty list");
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = fuse(acc, fs[i]);
  return acc;
}

}  // namespace fm

int compare(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case FKind::Zero:
    case FKind::One:
      return 0;
    case FKind::Var:
      return a->var.compare(b->var);
    case FKind::Box:
    case FKind::Diamond:
    case FKind::Delta:
      return compare(a->lhs, b->lhs);
    case FKind::Power: {
      if (a->exponent != b->exponent) return a->exponent < b->exponent ? -1 : 1;
      return compare(a->lhs, b->lhs);
    }
    default: {
      int c = compare(a->lhs, b->lhs);
      if (c != 0) return c;
      return compare(a->rhs, b->rhs);
    }
  }
}

bool equal(const Formula& a, const Formula& b) { return compare(a, b) == 0; }

namespace {
void psfm_into(const Formula& f, FormulaSet& out) {
  switch (f->kind) {
    case FKind::Zero:
    case FKind::One:
    case FKind::Var:
      out.insert(f);
      return;
    case FKind::Box:
    case FKind::Diamond:
      out.insert(f);  // modal subformulas are atomic here
      return;
    case FKind::Delta:
    case FKind::Power:
      psfm_into(f->lhs, out);
      out.insert(f);
      return;
    default:
      psfm_into(f->lhs, out);
      psfm_into(f->rhs, out);
      out.insert(f);
      return;
  }
}
}  // namespace

FormulaSet psfm(const Formula& f) {
  FormulaSet out;
  psfm_into(f, out);
  return out;
}

FormulaSet psfm(const std::vector<Formula>& fs) {
  FormulaSet out;
  for (const auto& f : fs) psfm_into(f, out);
  return out;
}

std::uint64_t modal_depth(const Formula& f) {
  switch (f->kind) {
    case FKind::Zero:
    case FKind::One:
    case FKind::Var:
      return 0;
    case FKind::Box:
    case FKind::Diamond:
      return 1 + modal_depth(f->lhs);
    case FKind::Delta:
    case FKind::Power:
      return modal_depth(f->lhs);
    default:
      return std::max(modal_depth(f->lhs), modal_depth(f->rhs));
  }
}

Formula normalize_to_diamond(const Formula& f) {
  switch (f->kind) {
    case FKind::Zero:
    case FKind::One:
    case FKind::Var:
      return f;
    case FKind::Box:
      return fm::neg(fm::diamond(fm::neg(normalize_to_diamond(f->lhs))));
    case FKind::Diamond:
      return fm::diamond(normalize_to_diamond(f->lhs));
    case FKind::Delta:
      return fm::delta(normalize_to_diamond(f->lhs));
    case FKind::Power:
      return fm::power(normalize_to_diamond(f->lhs), f->exponent);
    case FKind::Meet:
      return fm::meet(normalize_to_diamond(f->lhs), normalize_to_diamond(f->rhs));
    case FKind::Join:
      return fm::join(normalize_to_diamond(f->lhs), normalize_to_diamond(f->rhs));
    case FKind::Fuse:
      return fm::fuse(normalize_to_diamond(f->lhs), normalize_to_diamond(f->rhs));
    case FKind::Impl:
      return fm::impl(normalize_to_diamond(f->lhs), normalize_to_diamond(f->rhs));
  }
  throw DomainError("unreachable");
}

bool contains_delta(const Formula& f) {
  if (f->kind == FKind::Delta) return true;
  if (f->lhs && contains_delta(f->lhs)) return true;
  if (f->rhs && contains_delta(f->rhs)) return true;
  return false;
}

bool is_modality_free(const Formula& f) {
  if (f->kind == FKind::Box || f->kind == FKind::Diamond) return false;
  if (f->lhs && !is_modality_free(f->lhs)) return false;
  if (f->rhs && !is_modality_free(f->rhs)) return false;
  return true;
}

namespace {
void collect_vars_into(const Formula& f, std::set<std::string>& out) {
  if (f->kind == FKind::Var) {
    out.insert(f->var);
    return;
  }
  if (f->lhs) collect_vars_into(f->lhs, out);
  if (f->rhs) collect_vars_into(f->rhs, out);
}
}  // namespace

std::vector<std::string> collect_variables(const Formula& f) {
  std::set<std::string> s;
  collect_vars_into(f, s);
  return {s.begin(), s.end()};
}

std::vector<std::string> collect_variables(const Sequent& seq) {
  std::set<std::string> s;
  for (const auto& p : seq.premises) collect_vars_into(p, s);
  collect_vars_into(seq.conclusion, s);
  return {s.begin(), s.end()};
}

}  // namespace mvmodal
