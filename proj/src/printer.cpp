#include "mvmodal/errors.hpp"
#include "mvmodal/formula.hpp"

namespace mvmodal {

namespace {

// Precedence levels, loosest to tightest. Atoms sit above unary so that
// power bodies and unary arguments get parenthesized exactly when needed.
constexpr int kIff = 1, kImpl = 2, kJoin = 3, kMeet = 4, kFuse = 5, kUnary = 6, kPower = 7,
              kAtom = 8;

struct Rendered {
  std::string text;
  int level;
};

bool is_neg(const Formula& f) {
  return f->kind == FKind::Impl && f->rhs->kind == FKind::Zero;
}

// Fuse((a -> b), (b -> a)) prints back as the <-> it desugared from.
bool is_iff(const Formula& f, Formula& a, Formula& b) {
  if (f->kind != FKind::Fuse) return false;
  const Formula& l = f->lhs;
  const Formula& r = f->rhs;
  if (l->kind != FKind::Impl || r->kind != FKind::Impl) return false;
  if (!equal(l->lhs, r->rhs) || !equal(l->rhs, r->lhs)) return false;
  a = l->lhs;
  b = l->rhs;
  return true;
}

Rendered render(const Formula& f);

std::string render_at(const Formula& f, int min_level) {
  Rendered r = render(f);
  if (r.level < min_level) return "(" + r.text + ")";
  return r.text;
}

Rendered render(const Formula& f) {
  switch (f->kind) {
    case FKind::Zero: return {"0", kAtom};
    case FKind::One: return {"1", kAtom};
    case FKind::Var: return {f->var, kAtom};
    case FKind::Box: return {"[]" + render_at(f->lhs, kUnary), kUnary};
    case FKind::Diamond: return {"<>" + render_at(f->lhs, kUnary), kUnary};
    case FKind::Delta: return {"D" + render_at(f->lhs, kUnary), kUnary};
    case FKind::Power:
      return {render_at(f->lhs, kAtom) + "^" + f->exponent.str(), kPower};
    case FKind::Meet:
      return {render_at(f->lhs, kMeet) + " /\\ " + render_at(f->rhs, kFuse), kMeet};
    case FKind::Join:
      return {render_at(f->lhs, kJoin) + " \\/ " + render_at(f->rhs, kMeet), kJoin};
    case FKind::Fuse: {
      Formula a, b;
      if (is_iff(f, a, b))
        return {render_at(a, kIff) + " <-> " + render_at(b, kImpl), kIff};
      return {render_at(f->lhs, kFuse) + " & " + render_at(f->rhs, kUnary), kFuse};
    }
    case FKind::Impl: {
      if (is_neg(f)) return {"~" + render_at(f->lhs, kUnary), kUnary};
      return {render_at(f->lhs, kJoin) + " -> " + render_at(f->rhs, kImpl), kImpl};
    }
  }
  throw DomainError("unreachable");
}

}  // namespace

std::string print_formula(const Formula& f) { return render(f).text; }

}  // namespace mvmodal
