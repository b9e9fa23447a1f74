#include "mvmodal/pcp.hpp"

#include "mvmodal/errors.hpp"

namespace mvmodal {

PcpInstance PcpInstance::create(BigInt base, std::vector<std::pair<BigInt, BigInt>> pairs) {
  if (base < 2) throw DomainError("PCP base must be >= 2");
  if (pairs.empty()) throw DomainError("PCP instance needs at least one pair");
  for (const auto& [v, w] : pairs)
    if (v < 1 || w < 1) throw DomainError("PCP words must be positive naturals");
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i] == pairs[j]) throw DomainError("PCP pairs must be duplicate-free");
  PcpInstance p;
  p.base_ = std::move(base);
  p.pairs_ = std::move(pairs);
  return p;
}

BigInt concat(const BigInt& x, const BigInt& y, const BigInt& base) {
  return x * pow_bigint(base, digit_count(y, base)) + y;
}

namespace {
std::vector<BigInt> prefix_folds(const PcpInstance& p, const IndexSequence& seq, bool first) {
  if (seq.empty()) throw DomainError("index sequence must be nonempty");
  std::vector<BigInt> out;
  out.reserve(seq.size());
  for (std::size_t idx : seq) {
    if (idx < 1 || idx > p.size()) throw DomainError("index out of range in sequence");
    const BigInt& word = first ? p.pairs()[idx - 1].first : p.pairs()[idx - 1].second;
    if (out.empty())
      out.push_back(word);
    else
      out.push_back(concat(out.back(), word, p.base()));
  }
  return out;
}
}  // namespace

std::vector<BigInt> prefix_folds_v(const PcpInstance& p, const IndexSequence& seq) {
  return prefix_folds(p, seq, true);
}

std::vector<BigInt> prefix_folds_w(const PcpInstance& p, const IndexSequence& seq) {
  return prefix_folds(p, seq, false);
}

bool is_solution(const PcpInstance& p, const IndexSequence& seq) {
  if (seq.empty()) return false;
  return prefix_folds_v(p, seq).back() == prefix_folds_w(p, seq).back();
}

std::variant<IndexSequence, NotFoundWithinBound> brute_force_solve(const PcpInstance& p,
                                                                   std::uint64_t max_len) {
  if (max_len < 1) throw DomainError("max_len must be >= 1");
  // breadth-first over (v-fold, w-fold) states; lexicographic within a length
  struct State {
    IndexSequence seq;
    BigInt v, w;
  };
  std::vector<State> frontier;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    State s{{i}, p.pairs()[i - 1].first, p.pairs()[i - 1].second};
    if (s.v == s.w) return s.seq;
    frontier.push_back(std::move(s));
  }
  for (std::uint64_t len = 2; len <= max_len; ++len) {
    std::vector<State> next;
    next.reserve(frontier.size() * p.size());
    for (const auto& s : frontier) {
      for (std::size_t i = 1; i <= p.size(); ++i) {
        State t{s.seq, concat(s.v, p.pairs()[i - 1].first, p.base()),
                concat(s.w, p.pairs()[i - 1].second, p.base())};
        t.seq.push_back(i);
        if (t.v == t.w) return t.seq;
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return NotFoundWithinBound{max_len};
}

std::array<Formula, 3> encode_gamma(const PcpInstance& p) {
  const Formula y = fm::var("y");
  const Formula v = fm::var("v");
  const Formula w = fm::var("w");
  const Formula gamma1 = fm::iff(fm::box(y), fm::diamond(y));

  std::vector<Formula> disjuncts;
  disjuncts.reserve(p.size());
  for (const auto& [vi, wi] : p.pairs()) {
    const BigInt sv = pow_bigint(p.base(), digit_count(vi, p.base()));
    const BigInt sw = pow_bigint(p.base(), digit_count(wi, p.base()));
    Formula v_clause = fm::iff(v, fm::fuse(fm::power(fm::box(v), sv), fm::power(y, vi)));
    Formula w_clause = fm::iff(w, fm::fuse(fm::power(fm::box(w), sw), fm::power(y, wi)));
    disjuncts.push_back(fm::meet(v_clause, w_clause));
  }
  const Formula gamma2 = fm::box(fm::big_join(disjuncts));

  const Formula gamma3 =
      fm::box(fm::impl(fm::box(fm::fuse(v, w)), fm::fuse(fm::box(v), fm::box(w))));
  return {gamma1, gamma2, gamma3};
}

Formula encode_phi(const PcpInstance&) {
  const Formula y = fm::var("y");
  const Formula v = fm::var("v");
  const Formula w = fm::var("w");
  const Formula vw = fm::fuse(v, w);
  const Formula vwy = fm::fuse(vw, y);
  return fm::impl(fm::iff(v, w), fm::join(y, fm::impl(vw, vwy)));
}

Sequent reduction_sequent(const PcpInstance& p) {
  const auto gamma = encode_gamma(p);
  return Sequent{{gamma[0], gamma[1], gamma[2]}, fm::box(encode_phi(p))};
}

PcpCountermodel build_countermodel(const PcpInstance& p, const IndexSequence& sol,
                                   const ChainAlgebra& alg) {
  if (!is_solution(p, sol))
    throw NotASolution("the index sequence is not a solution of the instance");
  for (std::size_t j = 1; j < sol.size(); ++j)
    if (is_solution(p, IndexSequence(sol.begin(), sol.begin() + j)))
      throw PrefixSolution("a proper prefix of the sequence is already a solution");

  const std::vector<BigInt> vf = prefix_folds_v(p, sol);
  const std::vector<BigInt> wf = prefix_folds_w(p, sol);
  const BigInt contr = 2 * vf.back();
  AlgebraElement alpha;
  try {
    alpha = alg.pick_noncontractive_element(contr);
  } catch (const NoSuchElement& e) {
    throw AlgebraTooContractive(std::string("cannot build the countermodel: ") + e.what());
  }

  const std::size_t k = sol.size();
  KripkeModel m(alg);
  const int root = m.add_world("u");
  for (std::size_t j = 1; j <= k; ++j) m.add_world("u" + std::to_string(j));
  for (std::size_t j = 1; j <= k; ++j) m.add_edge(root, static_cast<int>(j));
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j < i; ++j)
      m.add_edge(static_cast<int>(i), static_cast<int>(j));

  // root-world values are irrelevant to the reduction; fixed to alpha for
  // determinism
  m.set_value(root, "y", alpha);
  m.set_value(root, "v", alpha);
  m.set_value(root, "w", alpha);
  for (std::size_t j = 1; j <= k; ++j) {
    const int wj = static_cast<int>(j);
    m.set_value(wj, "y", alpha);
    m.set_value(wj, "v", alg.power(alpha, vf[j - 1]));
    m.set_value(wj, "w", alg.power(alpha, wf[j - 1]));
  }

  // re-verify before returning; failure here is an internal error, not a
  // reportable verdict
  const auto gamma = encode_gamma(p);
  const Formula box_phi = fm::box(encode_phi(p));
  for (const auto& g : gamma)
    if (!alg.is_one(evaluate(m, root, g)))
      throw std::logic_error("constructed model does not satisfy Gamma_P at the root");
  for (std::size_t j = 1; j <= k; ++j) {
    const int wj = static_cast<int>(j);
    if (!alg.is_one(evaluate(m, wj, gamma[1])) || !alg.is_one(evaluate(m, wj, gamma[2])))
      throw std::logic_error("items (2)/(3) of Gamma_P fail at a chain world");
    if (!m.successors(wj).empty() && !alg.is_one(evaluate(m, wj, gamma[0])))
      throw std::logic_error("item (1) of Gamma_P fails at a non-terminal chain world");
  }
  if (alg.is_one(evaluate(m, root, box_phi)))
    throw std::logic_error("constructed model does not refute []phi_P at the root");

  return PcpCountermodel{std::move(m), root, alpha, sol};
}

bool verify_characterization(const KripkeModel& model, const PcpInstance& p,
                             const IndexSequence& sol) {
  if (model.world_count() != static_cast<int>(sol.size()) + 1) return false;
  const ChainAlgebra& alg = model.algebra();
  const AlgebraElement alpha = model.value(1, "y");
  const std::vector<BigInt> vf = prefix_folds_v(p, sol);
  const std::vector<BigInt> wf = prefix_folds_w(p, sol);
  for (std::size_t j = 1; j <= sol.size(); ++j) {
    const int wj = static_cast<int>(j);
    const AlgebraElement ev = model.value(wj, "v");
    const AlgebraElement ew = model.value(wj, "w");
    if (!(ev == alg.power(alpha, vf[j - 1]))) return false;
    if (!(ew == alg.power(alpha, wf[j - 1]))) return false;
    const bool values_equal = ev == ew;
    const bool folds_equal = vf[j - 1] == wf[j - 1];
    if (values_equal != folds_equal) return false;
  }
  return true;
}

}  // namespace mvmodal
