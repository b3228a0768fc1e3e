// Command line front end: semantic composition, axiom listing, single
// decisions, corpus runs, and FraCaS section summaries.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "anota/composer.hpp"
#include "anota/derivation.hpp"
#include "anota/formula_text.hpp"
#include "anota/fracas.hpp"
#include "anota/pipeline.hpp"
#include "anota/signature.hpp"
#include "anota/tptp.hpp"

namespace {

int cmd_semantics(const std::string& drv_path, const std::string& lexicon_path, bool show_tree) {
  anota::Lexicon lex = anota::Lexicon::builtin();
  if (!lexicon_path.empty()) lex.load_extension_file(lexicon_path);
  anota::DerivPtr tree = anota::parse_derivation_file(drv_path);
  if (show_tree) std::cout << anota::serialize_derivation(tree);
  anota::TermPtr sem = anota::compose_semantics(tree, lex);
  std::cout << anota::term_to_string(sem) << "\n";
  return 0;
}

int cmd_axioms(const std::string& prob_path, const std::string& lexicon_path) {
  anota::Lexicon lex = anota::Lexicon::builtin();
  if (!lexicon_path.empty()) lex.load_extension_file(lexicon_path);
  anota::ProblemSpec spec = anota::parse_problem_file(prob_path);
  std::vector<anota::TermPtr> all;
  for (const auto& p : spec.premise_paths) {
    all.push_back(anota::compose_semantics(anota::parse_derivation_file(p), lex));
  }
  all.push_back(anota::compose_semantics(anota::parse_derivation_file(spec.hypothesis_path), lex));
  anota::Signature sig = anota::signature_of(all, lex);
  for (const auto& ax : anota::instantiate_axioms(sig, lex)) {
    std::cout << ax.label << ": " << anota::term_to_string(ax.formula) << "\n";
  }
  return 0;
}

int cmd_decide(const std::string& prob_path, const std::string& lexicon_path,
               const anota::Budget& budget, const std::string& engine,
               const std::string& emit_tptp, bool json, bool trace) {
  anota::Lexicon lex = anota::Lexicon::builtin();
  if (!lexicon_path.empty()) lex.load_extension_file(lexicon_path);
  anota::ProblemSpec spec = anota::parse_problem_file(prob_path);
  anota::DecideOptions opts;
  opts.engine = engine;
  opts.emit_tptp_path = emit_tptp;
  anota::Decision d = anota::decide(spec, lex, budget, opts);
  if (json) {
    std::cout << "{\"id\": \"" << spec.id << "\", \"verdict\": \"" << d.verdict
              << "\", \"gold\": \"" << spec.gold << "\", \"expected\": \"" << spec.expected
              << "\", \"millis\": " << d.millis << "}\n";
  } else {
    for (size_t i = 0; i < d.premises.size(); ++i) {
      std::cout << "premise " << i + 1 << ": " << d.premises[i] << "\n";
    }
    std::cout << "hypothesis: " << d.hypothesis << "\n";
    std::cout << "verdict: " << d.verdict << " (gold " << spec.gold << ", expected "
              << spec.expected << ", " << d.millis << " ms)\n";
    if (!d.used_axioms.empty()) {
      std::cout << "axioms used:";
      for (size_t i = 0; i < d.used_axioms.size(); ++i) {
        std::cout << (i ? ", " : " ") << d.used_axioms[i];
      }
      std::cout << "\n";
    }
    if (trace && !d.detail.empty()) std::cout << d.detail;
  }
  return d.verdict == spec.expected ? 0 : 1;
}

int cmd_corpus(const std::string& dir, const std::string& lexicon_path,
               const anota::Budget& budget, const std::string& report,
               const std::string& trace_dir) {
  anota::Lexicon lex = anota::Lexicon::builtin();
  if (!lexicon_path.empty()) lex.load_extension_file(lexicon_path);
  if (!trace_dir.empty()) std::filesystem::create_directories(trace_dir);
  anota::CorpusResult res = anota::run_corpus(dir, lex, budget, report, trace_dir);
  for (const auto& row : res.rows) {
    std::cout << row.id << ": " << row.verdict << " (expected " << row.expected << ", gold "
              << row.gold << ") " << (row.match ? "ok" : "MISMATCH") << " " << row.millis
              << " ms\n";
  }
  std::cout << res.matched << "/" << res.rows.size() << " matched\n";
  return res.matched == static_cast<int>(res.rows.size()) ? 0 : 1;
}

int cmd_fracas(const std::string& xml_path, const std::string& problems_dir,
               const std::string& lexicon_path, const anota::Budget& budget) {
  std::vector<anota::FracasProblem> all = anota::parse_fracas_xml(xml_path);
  struct Section {
    const char* name;
    int lo, hi;
  };
  for (const Section& s : {Section{"adjectives", 197, 219}, Section{"comparatives", 220, 250}}) {
    std::vector<anota::FracasProblem> sec = anota::fracas_range(all, s.lo, s.hi);
    std::map<std::string, int> counts = anota::fracas_answer_counts(sec);
    int definite = 0;
    for (const auto& [k, v] : counts) definite += v;
    std::cout << s.name << ": " << sec.size() << " problems, " << definite << " definite (";
    bool first = true;
    for (const auto& [k, v] : counts) {
      std::cout << (first ? "" : ", ") << k << " " << v;
      first = false;
    }
    std::cout << ")\n";
  }
  if (problems_dir.empty()) return 0;

  anota::Lexicon lex = anota::Lexicon::builtin();
  if (!lexicon_path.empty()) lex.load_extension_file(lexicon_path);
  int ran = 0, matched = 0;
  for (const auto& p : all) {
    std::string prob = problems_dir + "/fracas-" + std::to_string(p.id) + ".prob";
    if (!std::filesystem::exists(prob)) continue;
    anota::ProblemSpec spec = anota::parse_problem_file(prob);
    if (p.answer != "undef" && spec.gold != p.answer) {
      std::cout << "fracas-" << p.id << ": gold mismatch between xml (" << p.answer
                << ") and problem file (" << spec.gold << ")\n";
      return 1;
    }
    anota::Decision d = anota::decide(spec, lex, budget);
    bool ok = d.verdict == spec.expected;
    std::cout << "fracas-" << p.id << ": " << d.verdict << " (expected " << spec.expected << ") "
              << (ok ? "ok" : "MISMATCH") << "\n";
    ++ran;
    if (ok) ++matched;
  }
  std::cout << matched << "/" << ran << " matched\n";
  return matched == ran ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-semantics pipeline for comparatives"};
  app.require_subcommand(1);

  std::string lexicon_path;
  app.add_option("--lexicon", lexicon_path, "gradable adjective extension file")
      ->envname("ANOTA_LEXICON");

  anota::Budget budget;
  auto add_budget = [&budget](CLI::App* cmd) {
    cmd->add_option("--timeout", budget.timeout_s, "seconds per decision");
    cmd->add_option("--max-clauses", budget.max_clauses, "clause budget for the prover");
    cmd->add_option("--max-entities", budget.max_entities, "countermodel domain bound");
    cmd->add_option("--max-degrees", budget.max_degree_points, "degree points per dimension");
  };

  auto* sem = app.add_subcommand("semantics", "compose a derivation into its formula");
  std::string drv_path;
  bool show_tree = false;
  sem->add_option("derivation", drv_path, "derivation file")->required();
  sem->add_flag("--tree", show_tree, "echo the validated derivation first");

  auto* ax = app.add_subcommand("axioms", "print the axioms instantiated for a problem");
  std::string ax_prob;
  ax->add_option("problem", ax_prob, "problem file")->required();

  auto* dec = app.add_subcommand("decide", "decide one entailment problem");
  std::string dec_prob, engine, emit_tptp;
  bool json = false, trace = false;
  dec->add_option("problem", dec_prob, "problem file")->required();
  dec->add_option("--engine", engine, "comp or measure")
      ->check(CLI::IsMember({"comp", "measure"}));
  dec->add_option("--emit-tptp", emit_tptp, "write the problem in TPTP fof syntax");
  dec->add_flag("--json", json, "one JSON line instead of text");
  dec->add_flag("--trace", trace, "print the proof or countermodel");
  add_budget(dec);

  auto* cor = app.add_subcommand("corpus", "run every problem in a directory");
  std::string cor_dir, report, trace_dir;
  cor->add_option("dir", cor_dir, "directory of .prob files")->required();
  cor->add_option("--report", report, "write a JSON-lines report here");
  cor->add_option("--trace-dir", trace_dir, "write per-problem traces here");
  add_budget(cor);

  auto* fr = app.add_subcommand("fracas", "summarize a FraCaS XML file");
  std::string xml_path, problems_dir;
  fr->add_option("xml", xml_path, "FraCaS XML file")->required();
  fr->add_option("--problems", problems_dir, "directory of fracas-<id>.prob files to run");
  add_budget(fr);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sem->parsed()) return cmd_semantics(drv_path, lexicon_path, show_tree);
    if (ax->parsed()) return cmd_axioms(ax_prob, lexicon_path);
    if (dec->parsed()) {
      return cmd_decide(dec_prob, lexicon_path, budget, engine, emit_tptp, json, trace);
    }
    if (cor->parsed()) return cmd_corpus(cor_dir, lexicon_path, budget, report, trace_dir);
    if (fr->parsed()) return cmd_fracas(xml_path, problems_dir, lexicon_path, budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
