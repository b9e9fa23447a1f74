#pragma once

#include <cstdint>
#include <vector>

#include "mvmodal/kripke.hpp"

namespace mvmodal {

/// x <-> ([]x)^2,  [](x <-> ([]x)^2),  ~<>[]0  |-  ~x \/ x
Sequent separating_sequent();

struct OmegaChainRecord {
  std::uint64_t n = 0;
  Rational x;          // e(n, x)
  Rational box_x_sq;   // e(n, ([]x)^2)
  bool strictly_below_next = false;  // e(n,x) < e(n+1,x)
  bool below_one = false;            // e(n,x) < 1
};

/// Symbolic verification of the omega-chain model <omega, <, e> with
/// e(0,x) = alpha0 and e(n+1,x) = (e(n,x)+1)/2, up to depth K:
/// (i) strict increase below 1 (so e(n,[]x) = e(n+1,x)),
/// (ii) e(n,([]x)^2) = e(n,x),
/// (iii) []0 = 0 everywhere, hence ~<>[]0 = 1 at world 0,
/// (iv) e(0, ~x \/ x) < 1.
struct OmegaChainReport {
  Rational alpha0;
  std::uint64_t depth = 0;
  std::vector<OmegaChainRecord> records;  // n = 0..K
  bool increase_ok = false;
  bool fixpoint_identity_ok = false;
  bool premise3_ok = false;
  Rational conclusion_at_root;
  bool conclusion_below_one = false;
  bool all_ok = false;
};

/// Throws DomainError unless 0 < alpha0 < 1 and K >= 1.
OmegaChainReport omega_chain_check(const Rational& alpha0, std::uint64_t depth);

/// Bounded transitive MV_n countermodel search for the separating sequent;
/// a hit would falsify the finite-chain side of the separation.
Verdict mvn_separating_search(std::uint64_t n, int max_worlds, Budget* budget = nullptr);

/// Delta gamma -> phi.
Formula delta_deduction_transform(const Formula& gamma, const Formula& phi);

/// ~Delta phi: valid phi <=> this is not locally satisfiable.
Formula sat_validity_bridge(const Formula& phi);

}  // namespace mvmodal
