#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mvmodal/algebra.hpp"
#include "mvmodal/formula.hpp"

namespace mvmodal {

/// Deadline/step budget shared by the long-running searches. A default
/// constructed budget is effectively unlimited.
struct Budget {
  std::uint64_t steps = UINT64_MAX;
  void charge(std::uint64_t n = 1);
};

/// Finite valued Kripke model. Worlds are addressed by index; ids are kept
/// for I/O. Unmentioned variables evaluate to 0.
class KripkeModel {
public:
  explicit KripkeModel(ChainAlgebra algebra) : algebra_(std::move(algebra)) {}

  const ChainAlgebra& algebra() const { return algebra_; }

  int add_world(const std::string& id);
  int world_index(const std::string& id) const;  // throws DomainError if absent
  const std::vector<std::string>& worlds() const { return world_ids_; }
  int world_count() const { return static_cast<int>(world_ids_.size()); }

  void add_edge(int from, int to);
  bool related(int from, int to) const;
  const std::vector<int>& successors(int w) const { return succ_[w]; }
  std::vector<std::pair<int, int>> relation() const;  // sorted

  void set_value(int world, const std::string& var, AlgebraElement value);
  AlgebraElement value(int world, const std::string& var) const;
  const std::map<std::pair<int, std::string>, AlgebraElement>& valuation() const {
    return valuation_;
  }

private:
  ChainAlgebra algebra_;
  std::vector<std::string> world_ids_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> succ_;
  std::map<std::pair<int, std::string>, AlgebraElement> valuation_;
};

/// World-wise homomorphic extension; Box = meet over successors (1 when
/// none), Diamond = join (0 when none).
AlgebraElement evaluate(const KripkeModel& m, int world, const Formula& f);

bool is_transitive(const KripkeModel& m);
KripkeModel transitive_closure(const KripkeModel& m);

struct Depth {
  bool infinite = false;
  std::uint64_t value = 0;
};
Depth depth(const KripkeModel& m, int world);

enum class LocalStatus { PremisesNotSatisfied, ConclusionHolds, ConclusionFails };
struct LocalCheck {
  LocalStatus status;
  std::optional<AlgebraElement> conclusion_value;  // set on ConclusionFails
};
LocalCheck check_local_consequence_at(const KripkeModel& m, int world, const Sequent& s);

/// Every finite model is witnessed; checked constructively per modal
/// subformula (empty successor sets witness vacuously).
bool is_witnessed(const KripkeModel& m, const FormulaSet& formulas);

struct Holds {};
struct Countermodel {
  KripkeModel model;
  int world;
};
struct NoCounterexampleFound {
  std::string bound_description;
};
using Verdict = std::variant<Holds, Countermodel, NoCounterexampleFound>;

/// Bounded countermodel search over an MV_n chain by exhaustive model
/// enumeration. Deterministic order: world count ascending, then relation
/// bitmask ascending (bit i*W+j = edge from world i to world j), then
/// valuations in lexicographic index order over the flattened
/// (world-major, variables sorted by name) tuple, then candidate world
/// ascending. Never returns Holds.
Verdict search_countermodel(const Sequent& s, const ChainAlgebra& alg, int max_worlds,
                            bool transitive_only, Budget* budget = nullptr);

/// First (model, world) in the same enumeration order whose world evaluates
/// f to 1, if any within bounds.
std::optional<Countermodel> local_sat_search(const Formula& f, const ChainAlgebra& alg,
                                             int max_worlds, bool transitive_only,
                                             Budget* budget = nullptr);

}  // namespace mvmodal
