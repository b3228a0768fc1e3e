#pragma once

// Bounded search for finite measure-backed countermodels. Interpretations
// assign a small entity domain, entity constants (including choice constants),
// unary and binary predicate tables, threshold values, and one measure table
// per dimension; gradable atoms are evaluated through the measures, so the
// comparison axiom schemata valid in every such interpretation are filtered
// by label rather than evaluated. Degree quantifiers range over finite grids
// containing every breakpoint the body can distinguish, which keeps the
// evaluation exact; integral dimensions use integer grids.

#include <variant>

#include "anota/prover.hpp"
#include "anota/signature.hpp"

namespace anota {

struct Interpretation {
  int domain_size = 0;
  std::map<std::string, int> entity_of;                  // constants to elements
  std::map<std::string, std::vector<bool>> unary;        // predicate tables
  std::map<std::string, std::vector<bool>> binary;       // row-major n*n tables
  std::map<std::pair<std::string, std::string>, Rational> theta;  // (adj, class)
  std::map<std::string, std::vector<Rational>> mu;       // dimension to per-element value
  std::string to_string() const;
};

struct NoModel {
  std::string reason;  // exhausted | budget:time
};
using ModelResult = std::variant<Interpretation, NoModel>;

// Searches for an interpretation satisfying every formula whose label is not
// one of the measure-guaranteed axiom schemata. Enumeration is deterministic:
// domain sizes ascending, then assignment slots in odometer order.
ModelResult find_countermodel(const std::vector<LabeledFormula>& formulas, const Lexicon& lex,
                              const Budget& budget);

// True when the interpretation satisfies the formula (replay and tests).
bool interpretation_satisfies(const Interpretation& m, const TermPtr& formula, const Lexicon& lex);

}  // namespace anota
