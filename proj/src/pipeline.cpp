#include "anota/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "anota/composer.hpp"
#include "anota/degree.hpp"
#include "anota/derivation.hpp"
#include "anota/formula_text.hpp"
#include "anota/tptp.hpp"

namespace anota {

namespace {

using Clock = std::chrono::steady_clock;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string resolve(const std::string& dir, const std::string& path) {
  if (!path.empty() && path[0] == '/') return path;
  return dir.empty() ? path : dir + "/" + path;
}

// Axioms that stay meaningful after gradable atoms compile into measure
// comparisons: threshold order, privatives, choice facts. The comparison
// schemata become valid under the measure reading and are dropped.
bool survives_measure_compilation(const std::string& label) {
  return label.rfind("TH[", 0) == 0 || label.rfind("privative[", 0) == 0 ||
         label.rfind("choice[", 0) == 0;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

ProblemSpec parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PipelineError("cannot open problem file " + path);
  ProblemSpec spec;
  spec.dir = std::filesystem::path(path).parent_path().string();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t colon = t.find(':');
    if (colon == std::string::npos) {
      throw PipelineError(path + ":" + std::to_string(lineno) + ": expected 'key: value'");
    }
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    if (key == "id") {
      spec.id = value;
    } else if (key == "premise") {
      spec.premise_paths.push_back(resolve(spec.dir, value));
    } else if (key == "hypothesis") {
      spec.hypothesis_path = resolve(spec.dir, value);
    } else if (key == "gold") {
      spec.gold = value;
    } else if (key == "expected") {
      spec.expected = value;
    } else if (key == "engine") {
      spec.engine = value;
    } else {
      throw PipelineError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (spec.id.empty()) throw PipelineError(path + ": missing id");
  if (spec.hypothesis_path.empty()) throw PipelineError(path + ": missing hypothesis");
  if (spec.gold != "yes" && spec.gold != "no" && spec.gold != "unknown") {
    throw PipelineError(path + ": gold must be yes, no or unknown");
  }
  if (spec.expected.empty()) spec.expected = spec.gold;
  return spec;
}

Decision decide(const ProblemSpec& spec, const Lexicon& lex, const Budget& budget,
                const DecideOptions& opts) {
  Clock::time_point t0 = Clock::now();
  Decision d;
  auto finish = [&](Decision& out) -> Decision& {
    out.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return out;
  };

  std::vector<TermPtr> premises;
  for (const auto& p : spec.premise_paths) {
    premises.push_back(compose_semantics(parse_derivation_file(p), lex));
  }
  TermPtr goal = compose_semantics(parse_derivation_file(spec.hypothesis_path), lex);

  std::vector<TermPtr> all = premises;
  all.push_back(goal);
  Signature sig = signature_of(all, lex);
  std::vector<LabeledFormula> axioms = instantiate_axioms(sig, lex);

  std::string engine = opts.engine.empty() ? spec.engine : opts.engine;
  if (engine == "measure") {
    for (auto& p : premises) p = compile_to_measures(p, lex);
    goal = compile_to_measures(goal, lex);
    std::vector<LabeledFormula> kept;
    for (const auto& a : axioms) {
      if (survives_measure_compilation(a.label)) kept.push_back(a);
    }
    axioms = std::move(kept);
  } else if (engine != "comp") {
    throw PipelineError("unknown engine '" + engine + "'");
  }

  std::vector<LabeledFormula> labeled;
  for (size_t i = 0; i < premises.size(); ++i) {
    labeled.push_back({"premise" + std::to_string(i + 1), premises[i]});
    d.premises.push_back(term_to_string(premises[i]));
  }
  d.hypothesis = term_to_string(goal);

  if (!opts.emit_tptp_path.empty()) {
    std::ofstream out(opts.emit_tptp_path);
    if (!out) throw PipelineError("cannot write " + opts.emit_tptp_path);
    out << to_tptp(axioms, labeled, goal, lex);
  }

  // budget split: prove the hypothesis, prove its negation, then search for
  // a countermodel with the remainder
  Budget prove_budget = budget;
  prove_budget.timeout_s = budget.timeout_s * 0.35;
  Budget model_budget = budget;
  model_budget.timeout_s = budget.timeout_s * 0.3;

  try {
    ProveResult pos = prove_entailment(axioms, labeled, goal, lex, prove_budget);
    if (const Proved* p = std::get_if<Proved>(&pos)) {
      d.verdict = "yes";
      d.detail = p->proof.to_string();
      d.used_axioms = p->proof.used_labels;
      return finish(d);
    }
    ProveResult neg = prove_entailment(axioms, labeled, mk_not(goal), lex, prove_budget);
    if (const Proved* p = std::get_if<Proved>(&neg)) {
      d.verdict = "no";
      d.detail = p->proof.to_string();
      d.used_axioms = p->proof.used_labels;
      return finish(d);
    }
    std::vector<LabeledFormula> search = axioms;
    search.insert(search.end(), labeled.begin(), labeled.end());
    search.push_back({"negated-goal", mk_not(goal)});
    ModelResult m = find_countermodel(search, lex, model_budget);
    if (const Interpretation* interp = std::get_if<Interpretation>(&m)) {
      d.verdict = "unknown";
      d.detail = "countermodel:\n" + interp->to_string();
      return finish(d);
    }
    d.verdict = "error:model-bound";
    d.detail = "prove hypothesis: " + std::get<GaveUp>(pos).reason +
               "; prove negation: " + std::get<GaveUp>(neg).reason +
               "; countermodel search: " + std::get<NoModel>(m).reason;
    return finish(d);
  } catch (const MixedDimensionError& e) {
    d.verdict = "error:mixed-dimension";
    d.detail = e.what();
    return finish(d);
  }
}

CorpusResult run_corpus(const std::string& dir, const Lexicon& lex, const Budget& budget,
                        const std::string& report_path, const std::string& trace_dir) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".prob") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw PipelineError("no .prob files under " + dir);

  std::ofstream report;
  if (!report_path.empty()) {
    report.open(report_path);
    if (!report) throw PipelineError("cannot write " + report_path);
  }

  CorpusResult result;
  for (const auto& f : files) {
    ProblemSpec spec = parse_problem_file(f);
    CorpusRow row;
    row.id = spec.id;
    row.gold = spec.gold;
    row.expected = spec.expected;
    std::string detail;
    try {
      Decision d = decide(spec, lex, budget);
      row.verdict = d.verdict;
      row.millis = d.millis;
      detail = d.detail;
      if (!trace_dir.empty()) {
        std::ofstream trace(trace_dir + "/" + spec.id + ".trace");
        trace << "problem: " << spec.id << "\n";
        for (size_t i = 0; i < d.premises.size(); ++i) {
          trace << "premise " << i + 1 << ": " << d.premises[i] << "\n";
        }
        trace << "hypothesis: " << d.hypothesis << "\n";
        trace << "verdict: " << d.verdict << " (gold " << spec.gold << ", expected "
              << spec.expected << ")\n";
        trace << d.detail;
      }
    } catch (const std::exception& e) {
      row.verdict = "error:exception";
      detail = e.what();
    }
    row.match = row.verdict == row.expected;
    if (row.match) ++result.matched;
    if (report.is_open()) {
      report << "{\"id\": \"" << json_escape(row.id) << "\", \"verdict\": \""
             << json_escape(row.verdict) << "\", \"gold\": \"" << json_escape(row.gold)
             << "\", \"expected\": \"" << json_escape(row.expected) << "\", \"match\": "
             << (row.match ? "true" : "false") << ", \"millis\": " << row.millis << "}\n";
    }
    result.rows.push_back(std::move(row));
  }
  if (report.is_open()) {
    report << "{\"total\": " << result.rows.size() << ", \"matched\": " << result.matched
           << ", \"accuracy\": "
           << (result.rows.empty() ? 0.0
                                   : static_cast<double>(result.matched) / result.rows.size())
           << "}\n";
  }
  return result;
}

}  // namespace anota
