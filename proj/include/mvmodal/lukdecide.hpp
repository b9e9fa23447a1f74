#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvmodal/kripke.hpp"
#include "mvmodal/simplex.hpp"

namespace mvmodal {

struct WitnessWorld {
  int parent = -1;        // -1 for the root
  Formula generator;      // the <>chi this world witnesses; null for the root
  int level = 0;
  std::string name;       // "w0", "w0_2", ...
};

/// The level-wise witness skeleton: W_0 = {w0}, W_{i+1} has one world per
/// (world of W_i, diamond of Sigma_i); Sigma_i is global per level.
struct WitnessTree {
  std::vector<WitnessWorld> worlds;          // index 0 = root, level-major order
  std::vector<std::vector<Formula>> sigma;   // Sigma_0.. (trailing empties trimmed)
  std::vector<std::vector<int>> levels;      // world indices per level
  std::vector<std::vector<int>> children;    // children[w][j] = witness of sigma[level(w)][j]
};

/// Modality-free sequent over the extended variable set.
struct PropSequent {
  std::vector<Formula> premises;
  Formula conclusion;
};

class Unfolding {
public:
  Sequent original;
  Sequent normalized;  // diamond-only form
  WitnessTree tree;
  PropSequent prop;
  std::vector<std::string> base_vars;

  /// x at world w -> "x_<worldname>".
  std::string var_name(int world, const std::string& base) const;
  /// <>psi (member of Sigma at w's level) at w -> "d<level>_<index>_<worldname>".
  std::string dia_name(int world, const Formula& dia) const;
  /// The #-translation of f at world w; f must live in w's closure.
  Formula sharp(int world, const Formula& f) const;
  /// All (world, formula) pairs translated while building the prop sequent.
  const std::map<int, FormulaSet>& closure() const { return closure_; }

  std::map<int, FormulaSet> closure_;
};

/// Witnessed unfolding of a Lukasiewicz modal sequent into a propositional
/// one (premises get the Psi glue: one biconditional per diamond variable
/// plus one implication per sibling witness). Throws DeltaNotSupported.
Unfolding unfold(const Sequent& s);

/// Exact MILP-style encoding: one continuous variable per distinct
/// subformula, one binary per non-degenerate Fuse/Impl/Meet/Join/Power node,
/// premises pinned to 1, objective = maximize 1 - value(conclusion).
/// Continuous and binary variables share one id space; is_binary tells them
/// apart. All variables carry an upper-bound row (<= 1); >= 0 is implicit.
struct MilpEncoding {
  int num_vars = 0;
  std::vector<bool> is_binary;
  std::vector<std::string> var_names;
  std::vector<int> binary_order;       // allocation order, used for branching
  std::vector<LinearConstraint> rows;
  std::map<std::string, int> var_index;  // propositional variable -> its id
  bool conclusion_is_const = false;
  Rational conclusion_const = 0;
  int conclusion_var = -1;
  bool infeasible_premises = false;
  std::vector<std::string> sequent_vars;  // all variables of the prop sequent
};

MilpEncoding encode_milp(const PropSequent& ps);

/// Single-formula encoding (no pinning); used by the encoding-faithfulness
/// checks. nodes maps each encoded subformula to its continuous variable
/// (-1 when it folded to a constant).
struct FormulaEncoding {
  MilpEncoding enc;
  std::map<Formula, int, FormulaLess> node_var;
  std::map<Formula, Rational, FormulaLess> node_const;
  int root_var = -1;
  bool root_is_const = false;
  Rational root_const = 0;
};

FormulaEncoding encode_formula(const Formula& modality_free);

struct Countervaluation {
  std::map<std::string, Rational> assignment;
  Rational gap;  // 1 - value(conclusion) > 0
  std::vector<int> binary_choice;
};

struct PropVerdict {
  bool valid = false;
  std::optional<Countervaluation> counter;
};

/// Branch-and-bound over the binaries; each node solves the exact LP
/// relaxation. Deterministic: branch on the first unfixed binary, 0 before
/// 1, keep the first maximizer (lexicographically least binary choice).
PropVerdict solve_milp(const MilpEncoding& enc, Budget* budget = nullptr);

/// Exact propositional Lukasiewicz value of a modality-free formula.
/// Unassigned variables read as 0.
Rational prop_evaluate(const Formula& f, const std::map<std::string, Rational>& assignment);

struct DecideOutcome {
  bool holds = false;
  std::optional<Countermodel> countermodel;  // re-verified against the input sequent
  std::optional<Countervaluation> prop_counter;
  Unfolding unfolding;
};

/// unfold -> encode -> solve; countervaluations are turned back into Kripke
/// countermodels over the witness tree and re-verified exactly.
DecideOutcome decide(const Sequent& s, Budget* budget = nullptr);

/// SMT-LIB 2 rendering of the encoding (QF_LRA, binaries as Bools) in
/// satisfiability-of-countermodel mode: premises pinned, conclusion must be
/// strictly below 1.
std::string emit_smtlib(const MilpEncoding& enc);

/// Syntactic sanity of an emitted file: balanced s-expressions, known
/// top-level commands, declared-before-use symbols.
bool smtlib_well_formed(const std::string& text, std::string* error = nullptr);

}  // namespace mvmodal
