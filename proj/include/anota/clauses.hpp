#pragma once

// Clausal form for the two-sorted resolution prover. Comparisons normalize to
// the single weak-order atom ge(a,b): a > b becomes ~ge(b,a), a < b becomes
// ~ge(a,b), a <= b becomes ge(b,a), a >= b stays, a = b splits into both
// directions. Clause terms reuse the lambda term structure restricted to
// first-order shapes: variables, constants, applied function symbols, degree
// literals and degree addition; ge atoms are Cmp nodes with op Ge.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anota/lexicon.hpp"
#include "anota/signature.hpp"
#include "anota/term.hpp"

namespace anota {

struct ClauseLit {
  bool pos = true;
  TermPtr atom;
};

struct Clause {
  std::vector<ClauseLit> lits;
  int id = -1;
  std::string rule;           // input | resolve | factor | theory
  std::vector<int> parents;
  std::string label;          // for input clauses: axiom/premise/goal label
  bool support = false;       // descends from a premise or the negated goal
};

std::string literal_to_string(const ClauseLit& l);
std::string clause_to_string(const Clause& c);

// Sort of a clause term (E or D).
TypePtr term_sort(const TermPtr& t);

bool lit_equal(const ClauseLit& a, const ClauseLit& b);

// CNF of one closed formula; Skolem symbols draw from `skolem_counter`.
// Tautologies and literals decidable by ground literal arithmetic are
// simplified away.
std::vector<Clause> clausify(const TermPtr& formula, const std::string& label,
                             int& skolem_counter);

using Subst = std::map<std::string, TermPtr>;

TermPtr apply_subst(const TermPtr& t, const Subst& s);
bool unify(const TermPtr& a, const TermPtr& b, Subst& s);
// One-way matching: only variables of `pattern` may bind.
bool match_terms(const TermPtr& pattern, const TermPtr& onto, Subst& s);

// Renames clause variables apart with a numbered suffix.
Clause rename_clause(const Clause& c, int salt);

// True when `a` subsumes `b` (a substitution maps a's literals into b's).
bool subsumes(const Clause& a, const Clause& b);

// Ground evaluation of a literal whose atom compares two literal degree
// values; nullopt when not decidable.
std::optional<bool> eval_ground_lit(const ClauseLit& l);

// Simplification: drops false ground literals and duplicate literals; returns
// nullopt for tautologies (a true ground literal or complementary pair).
std::optional<Clause> simplify_clause(const Clause& c);

// True when every literal is a ge atom over variable-free degree terms.
bool is_ground_degree_clause(const Clause& c);

}  // namespace anota
