#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "mvmodal/kripke.hpp"

namespace mvmodal {

/// A Post correspondence instance: pairs of positive naturals in some base
/// s >= 2, duplicate-free. Indices into `pairs` are 1-based throughout, as
/// in index sequences.
class PcpInstance {
public:
  static PcpInstance create(BigInt base, std::vector<std::pair<BigInt, BigInt>> pairs);
  const BigInt& base() const { return base_; }
  const std::vector<std::pair<BigInt, BigInt>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

private:
  BigInt base_;
  std::vector<std::pair<BigInt, BigInt>> pairs_;
};

using IndexSequence = std::vector<std::size_t>;  // 1-based, nonempty

/// Concatenation of base-s numerals: x * s^{digits(y)} + y.
BigInt concat(const BigInt& x, const BigInt& y, const BigInt& base);

/// Left folds of concat over the v- and w-components along seq; entry j-1
/// holds the fold of the first j indices.
std::vector<BigInt> prefix_folds_v(const PcpInstance& p, const IndexSequence& seq);
std::vector<BigInt> prefix_folds_w(const PcpInstance& p, const IndexSequence& seq);

bool is_solution(const PcpInstance& p, const IndexSequence& seq);

struct NotFoundWithinBound {
  std::uint64_t max_len = 0;
};

/// Shortest solution, lexicographically least within a length; breadth-first
/// up to max_len indices.
std::variant<IndexSequence, NotFoundWithinBound> brute_force_solve(const PcpInstance& p,
                                                                   std::uint64_t max_len);

/// The three premise formulas over variables {y, v, w}:
///   (1) []y <-> <>y
///   (2) [](big-or over pairs of (v <-> ([]v)^{s^|v_i|} & y^{v_i})
///                             /\ (w <-> ([]w)^{s^|w_i|} & y^{w_i}))
///   (3) []([](v & w) -> []v & []w)
std::array<Formula, 3> encode_gamma(const PcpInstance& p);

/// (v <-> w) -> (y \/ (v & w -> v & w & y))
Formula encode_phi(const PcpInstance& p);

/// The reduction target: (Gamma_P, [] phi_P).
Sequent reduction_sequent(const PcpInstance& p);

struct PcpCountermodel {
  KripkeModel model;
  int root;  // world "u"
  AlgebraElement alpha;
  IndexSequence solution;
};

/// Builds the chain-frame countermodel for a solution of p over alg and
/// re-verifies it with the exact evaluator before returning:
/// all of Gamma_P = 1 at the root, items (2) and (3) = 1 at every u_j,
/// item (1) = 1 at every u_j with successors, and [] phi_P < 1 at the root.
/// (At the terminal world u_1 item (1) is 1<->0 = 0 by the empty meet/join
/// conventions; only the root is quantified by local consequence.)
/// Throws NotASolution, PrefixSolution, AlgebraTooContractive.
PcpCountermodel build_countermodel(const PcpInstance& p, const IndexSequence& sol,
                                   const ChainAlgebra& alg);

/// Power-of-alpha characterization of v and w along the chain: e(u_j, v) =
/// alpha^{fold of v-prefix}, same for w, and value equality at u_j iff the
/// concatenated prefixes are equal numbers.
bool verify_characterization(const KripkeModel& model, const PcpInstance& p,
                             const IndexSequence& sol);

}  // namespace mvmodal
