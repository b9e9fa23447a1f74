#include <stdexcept>

#include "mvmodal/lukdecide.hpp"

namespace mvmodal {

DecideOutcome decide(const Sequent& s, Budget* budget) {
  DecideOutcome out;
  out.unfolding = unfold(s);
  const MilpEncoding enc = encode_milp(out.unfolding.prop);
  PropVerdict pv = solve_milp(enc, budget);
  if (pv.valid) {
    out.holds = true;
    return out;
  }

  // Kripke countermodel over the witness tree: edges parent -> witness,
  // world values read off the countervaluation.
  const Unfolding& u = out.unfolding;
  KripkeModel m(ChainAlgebra::luk());
  for (const auto& w : u.tree.worlds) m.add_world(w.name);
  for (std::size_t i = 0; i < u.tree.worlds.size(); ++i)
    if (u.tree.worlds[i].parent >= 0)
      m.add_edge(u.tree.worlds[i].parent, static_cast<int>(i));
  for (std::size_t w = 0; w < u.tree.worlds.size(); ++w) {
    for (const auto& x : u.base_vars) {
      auto it = pv.counter->assignment.find(u.var_name(static_cast<int>(w), x));
      const Rational val = it == pv.counter->assignment.end() ? Rational(0) : it->second;
      m.set_value(static_cast<int>(w), x, AlgebraElement(val));
    }
  }
  const LocalCheck check = check_local_consequence_at(m, 0, s);
  if (check.status != LocalStatus::ConclusionFails)
    throw std::logic_error("reconstructed countermodel failed exact re-verification");
  out.countermodel = Countermodel{std::move(m), 0};
  out.prop_counter = std::move(pv.counter);
  return out;
}

}  // namespace mvmodal
