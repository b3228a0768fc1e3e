#pragma once

// End-to-end decision pipeline: derivation files in, verdict out. A problem
// file names its premise and hypothesis derivations, the gold answer, and
// optionally the expected system answer where the two differ. Decisions try
// to prove the hypothesis, then its negation, then search for a countermodel;
// a completed search with no model is reported as error:model-bound.

#include <optional>
#include <string>
#include <vector>

#include "anota/model.hpp"
#include "anota/prover.hpp"

namespace anota {

struct ProblemSpec {
  std::string id;
  std::vector<std::string> premise_paths;  // resolved against the file's directory
  std::string hypothesis_path;
  std::string gold;                        // yes | no | unknown
  std::string expected;                    // defaults to gold
  std::string engine = "comp";             // comp | measure
  std::string dir;
};

struct PipelineError : std::runtime_error {
  explicit PipelineError(const std::string& what) : std::runtime_error(what) {}
};

ProblemSpec parse_problem_file(const std::string& path);

struct DecideOptions {
  std::string engine;           // overrides the problem's engine when nonempty
  std::string emit_tptp_path;   // write the exported problem here when nonempty
};

struct Decision {
  std::string verdict;  // yes | no | unknown | error:model-bound | error:mixed-dimension
  std::string detail;   // proof trace, interpretation, or failure reasons
  std::vector<std::string> used_axioms;
  std::vector<std::string> premises;  // canonical premise formulas
  std::string hypothesis;             // canonical hypothesis formula
  double millis = 0;
};

Decision decide(const ProblemSpec& spec, const Lexicon& lex, const Budget& budget,
                const DecideOptions& opts = {});

struct CorpusRow {
  std::string id;
  std::string verdict;
  std::string expected;
  std::string gold;
  bool match = false;
  double millis = 0;
};

struct CorpusResult {
  std::vector<CorpusRow> rows;
  int matched = 0;
};

// Runs every .prob file under `dir` (sorted by name). When `report_path` is
// nonempty, writes one JSON object per problem plus a trailing summary line.
// When `trace_dir` is nonempty, writes one trace file per problem.
CorpusResult run_corpus(const std::string& dir, const Lexicon& lex, const Budget& budget,
                        const std::string& report_path = "", const std::string& trace_dir = "");

}  // namespace anota
