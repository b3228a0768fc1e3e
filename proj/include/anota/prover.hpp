#pragma once

// Refutation prover: smallest-first given-clause binary resolution with
// factoring and subsumption over two-sorted clauses, plus a closure step that
// sends sets of variable-free degree-order clauses through a DPLL split into
// the difference-logic solver. Order axioms for ge (reflexivity, totality,
// transitivity) join the clause set when ge-literals occur; ground degree
// equality substitutivity clauses join per gradable predicate.

#include <variant>

#include "anota/clauses.hpp"

namespace anota {

struct Budget {
  double timeout_s = 10.0;
  int max_clauses = 50000;
  int max_entities = 3;
  int max_degree_points = 5;
};

struct ProofStep {
  int id;
  std::string rule;
  std::vector<int> parents;
  std::string label;
  std::string text;
};

struct Proof {
  std::vector<ProofStep> steps;           // derivation DAG ending in []
  std::map<int, Clause> clauses;          // clauses referenced by the steps
  std::vector<std::string> used_labels;   // input labels the refutation relies on
  std::string to_string() const;
};

struct Proved {
  Proof proof;
};
struct GaveUp {
  std::string reason;  // budget:time | budget:clauses | saturation
};
using ProveResult = std::variant<Proved, GaveUp>;

// Refutes the conjunction of the formulas.
ProveResult refute(const std::vector<LabeledFormula>& formulas, const Lexicon& lex,
                   const Budget& budget);

// Proves axioms, premises |- goal by refuting the set plus ~goal.
ProveResult prove_entailment(const std::vector<LabeledFormula>& axioms,
                             const std::vector<LabeledFormula>& premises, const TermPtr& goal,
                             const Lexicon& lex, const Budget& budget);

// Re-derives every inference step; true when the whole trace checks out.
bool replay_proof(const Proof& proof, const Lexicon& lex);

}  // namespace anota
