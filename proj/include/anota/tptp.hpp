#pragma once

// First-order TPTP (fof) export of an entailment problem, for cross-checking
// with off-the-shelf provers. Degree arithmetic has no native TPTP encoding
// here, so the export adds a weak-order theory for geq, ordering facts between
// the degree literals of each dimension, monotonicity of plus, and integer
// step facts for integral dimensions.

#include <optional>
#include <string>
#include <vector>

#include "anota/lexicon.hpp"
#include "anota/signature.hpp"

namespace anota {

std::string to_tptp(const std::vector<LabeledFormula>& axioms,
                    const std::vector<LabeledFormula>& premises, const TermPtr& goal,
                    const Lexicon& lex);

// Locates vampire or eprover on PATH; empty when neither is installed.
std::string external_prover_command();

// Runs the prover on the given TPTP text and returns its SZS status word
// (for example "Theorem"); nullopt when no prover is available or no status
// line was produced.
std::optional<std::string> run_external_prover(const std::string& tptp_text, double timeout_s);

}  // namespace anota
