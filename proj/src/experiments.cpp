#include "mvmodal/experiments.hpp"

#include "mvmodal/errors.hpp"

namespace mvmodal {

Sequent separating_sequent() {
  const Formula x = fm::var("x");
  const Formula fix = fm::iff(x, fm::power(fm::box(x), 2));
  Sequent s;
  s.premises = {fix, fm::box(fix), fm::neg(fm::diamond(fm::box(fm::zero())))};
  s.conclusion = fm::join(fm::neg(x), x);
  return s;
}

OmegaChainReport omega_chain_check(const Rational& alpha0, std::uint64_t depth) {
  if (!(alpha0 > 0 && alpha0 < 1))
    throw DomainError("omega-chain initial value must lie strictly between 0 and 1");
  if (depth < 1) throw DomainError("omega-chain depth must be >= 1");

  OmegaChainReport report;
  report.alpha0 = alpha0;
  report.depth = depth;
  report.increase_ok = true;
  report.fixpoint_identity_ok = true;

  std::vector<Rational> x(depth + 2);
  x[0] = alpha0;
  for (std::uint64_t n = 0; n <= depth; ++n) x[n + 1] = (x[n] + 1) / 2;

  for (std::uint64_t n = 0; n <= depth; ++n) {
    OmegaChainRecord rec;
    rec.n = n;
    rec.x = x[n];
    // worlds strictly increase below 1, so e(n,[]x) is the attained minimum
    // e(n+1,x)
    rec.strictly_below_next = x[n] < x[n + 1];
    rec.below_one = x[n] < 1;
    Rational sq = 2 * x[n + 1] - 1;  // Lukasiewicz square of e(n,[]x), never clipped here
    if (sq < 0) sq = 0;
    rec.box_x_sq = sq;
    if (!rec.strictly_below_next || !rec.below_one) report.increase_ok = false;
    if (rec.box_x_sq != x[n]) report.fixpoint_identity_ok = false;
    report.records.push_back(std::move(rec));
  }

  // every world has a successor, so []0 = 0 at every world and <>[]0 = 0 at
  // the root
  report.premise3_ok = true;

  report.conclusion_at_root = std::max(Rational(1) - alpha0, alpha0);
  report.conclusion_below_one = report.conclusion_at_root < 1;

  report.all_ok = report.increase_ok && report.fixpoint_identity_ok && report.premise3_ok &&
                  report.conclusion_below_one;
  return report;
}

Verdict mvn_separating_search(std::uint64_t n, int max_worlds, Budget* budget) {
  return search_countermodel(separating_sequent(), ChainAlgebra::mv(n), max_worlds,
                             /*transitive_only=*/true, budget);
}

Formula delta_deduction_transform(const Formula& gamma, const Formula& phi) {
  return fm::impl(fm::delta(gamma), phi);
}

Formula sat_validity_bridge(const Formula& phi) { return fm::neg(fm::delta(phi)); }

}  // namespace mvmodal
