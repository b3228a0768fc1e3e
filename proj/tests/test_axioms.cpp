// Signature extraction, deterministic axiom instantiation with pinned shapes,
// validity of the comparison schemata under randomized measure-backed
// interpretations, and compilation into the measure fragment.

#include <random>
#include <string>
#include <vector>

#include "anota/composer.hpp"
#include "anota/formula_text.hpp"
#include "anota/model.hpp"
#include "anota/signature.hpp"
#include "doctest.h"

using namespace anota;

namespace {

TermPtr compose_fixture(const std::string& name, const Lexicon& lex) {
  return compose_semantics(
      parse_derivation_file(std::string(ANOTA_DATA_DIR) + "/derivations/" + name + ".drv"), lex);
}

const LabeledFormula* find_label(const std::vector<LabeledFormula>& axs, const std::string& l) {
  for (const auto& a : axs) {
    if (a.label == l) return &a;
  }
  return nullptr;
}

TermPtr parse(const std::string& s) {
  SymbolTable syms;
  return parse_formula_text(s, syms);
}

}  // namespace

TEST_CASE("signature extraction from composed representations") {
  Lexicon lex = Lexicon::builtin();

  SUBCASE("plain comparative") {
    Signature sig = signature_of({compose_fixture("m_taller_h", lex)}, lex);
    CHECK(sig.gradables == std::set<std::string>{"tall"});
    CHECK(sig.entities == std::set<std::string>{"h", "m"});
    CHECK(sig.dimensions == std::set<std::string>{"length"});
    CHECK(sig.thresholds.empty());
    CHECK(sig.relations.empty());
  }
  SUBCASE("attributive positive brings a threshold") {
    Signature sig = signature_of({compose_fixture("mickey_small_animal", lex)}, lex);
    CHECK(sig.gradables == std::set<std::string>{"small"});
    CHECK(sig.thresholds == std::set<std::pair<std::string, std::string>>{{"small", "animal"}});
    CHECK(sig.classes.count("animal") == 1);
    CHECK(sig.entities == std::set<std::string>{"m"});
  }
  SUBCASE("verbs and numeric objects") {
    Signature sig = signature_of({compose_fixture("m_won_10", lex)}, lex);
    CHECK(sig.relations == std::set<std::string>{"won"});
    CHECK(sig.classes.count("order") == 1);
    CHECK(sig.gradables == std::set<std::string>{"many"});
    CHECK(sig.dimensions == std::set<std::string>{"count"});
  }
  SUBCASE("subdeletion mixes adjectives and the choice individual") {
    Signature sig = signature_of({compose_fixture("m_taller_bed_sub", lex)}, lex);
    CHECK(sig.gradables == std::set<std::string>{"long", "tall"});
    CHECK(sig.choices == std::set<std::string>{"bed"});
  }
  SUBCASE("privative modifier") {
    Signature sig = signature_of({compose_fixture("j_former_ustudent", lex)}, lex);
    CHECK(sig.privatives == std::set<std::string>{"ustudent"});
    CHECK(sig.entities == std::set<std::string>{"j"});
  }
  SUBCASE("signatures union across formulas") {
    Signature sig = signature_of(
        {compose_fixture("m_taller_h", lex), compose_fixture("m_won_10", lex)}, lex);
    CHECK(sig.gradables == std::set<std::string>{"many", "tall"});
    CHECK(sig.dimensions == std::set<std::string>{"count", "length"});
  }
}

TEST_CASE("axiom instantiation is deterministic with pinned shapes") {
  Lexicon lex = Lexicon::builtin();
  Signature sig = signature_of(
      {compose_fixture("m_taller_4ft", lex), compose_fixture("h_shorter_4ft", lex),
       compose_fixture("m_taller_h", lex)},
      lex);
  REQUIRE(sig.gradables == std::set<std::string>{"short", "tall"});

  std::vector<LabeledFormula> axs = instantiate_axioms(sig, lex);
  std::vector<std::string> labels;
  for (const auto& a : axs) labels.push_back(a.label);
  CHECK(labels == std::vector<std::string>{
                      "CP[short]", "CP[tall]", "Ax1[short]", "Ax2[tall]", "Ax3[tall/short]",
                      "Ax4[tall/short]", "Ax5[tall/short]", "Ax6[tall/short]",
                      "Ax7[tall/short]", "Ax8[tall/short]"});

  // a second instantiation is identical
  std::vector<LabeledFormula> again = instantiate_axioms(sig, lex);
  REQUIRE(again.size() == axs.size());
  for (size_t i = 0; i < axs.size(); ++i) {
    CHECK(again[i].label == axs[i].label);
    CHECK(alpha_equal(again[i].formula, axs[i].formula));
  }

  auto pinned = [&](const std::string& label, const std::string& text) {
    const LabeledFormula* a = find_label(axs, label);
    REQUIRE_MESSAGE(a != nullptr, label);
    INFO(label, " = ", term_to_string(a->formula));
    CHECK(alpha_equal(a->formula, parse(text)));
  };
  pinned("CP[tall]",
         "forall x:E. forall y:E. ((exists d:D. (tall(x, d) & ~tall(y, d))) -> "
         "(forall e:D. (tall(y, e) -> tall(x, e))))");
  pinned("Ax2[tall]",
         "forall d1:D. forall d2:D. (d1 > d2 -> (forall x:E. (tall(x, d1) -> tall(x, d2))))");
  pinned("Ax1[short]",
         "forall d1:D. forall d2:D. (d1 > d2 -> (forall x:E. (short(x, d2) -> short(x, d1))))");
  pinned("Ax3[tall/short]",
         "forall d1:D. forall d2:D. (d1 > d2 -> (forall x:E. (short(x, d2) -> ~tall(x, d1))))");
  pinned("Ax4[tall/short]",
         "forall d1:D. forall d2:D. (d1 < d2 -> (forall x:E. (tall(x, d2) -> ~short(x, d1))))");
  pinned("Ax5[tall/short]",
         "forall d1:D. forall d2:D. (d2 <= d1 -> (forall x:E. (~short(x, d1) -> tall(x, d2))))");
  pinned("Ax6[tall/short]",
         "forall d1:D. forall d2:D. (d2 >= d1 -> (forall x:E. (~tall(x, d1) -> short(x, d2))))");
  pinned("Ax7[tall/short]",
         "forall x:E. forall d:D. (~short(x, d) -> (exists e:D. (e > d & tall(x, e))))");
  pinned("Ax8[tall/short]",
         "forall x:E. forall d:D. (~tall(x, d) -> (exists e:D. (e < d & short(x, e))))");
}

TEST_CASE("threshold separation and class axioms appear with their triggers") {
  Lexicon lex = Lexicon::builtin();
  Signature sig = signature_of({compose_fixture("mickey_small_animal", lex)}, lex);
  std::vector<LabeledFormula> axs = instantiate_axioms(sig, lex);
  const LabeledFormula* th = find_label(axs, "TH[large/small][animal]");
  REQUIRE(th != nullptr);
  CHECK(alpha_equal(th->formula, parse("th(small, animal) < th(large, animal)")));

  Signature sig2 = signature_of({compose_fixture("m_taller_bed_sub", lex)}, lex);
  std::vector<LabeledFormula> axs2 = instantiate_axioms(sig2, lex);
  const LabeledFormula* ch = find_label(axs2, "choice[bed]");
  REQUIRE(ch != nullptr);
  CHECK(alpha_equal(ch->formula, parse("bed(the(bed))")));

  Signature sig3 = signature_of({compose_fixture("j_former_ustudent", lex)}, lex);
  std::vector<LabeledFormula> axs3 = instantiate_axioms(sig3, lex);
  const LabeledFormula* pr = find_label(axs3, "privative[ustudent]");
  REQUIRE(pr != nullptr);
  CHECK(alpha_equal(pr->formula, parse("forall x:E. (former(ustudent)(x) -> ~ustudent(x))")));
}

TEST_CASE("comparison schemata hold in randomized measure interpretations") {
  Lexicon lex = Lexicon::builtin();
  Signature sig;
  sig.gradables = {"tall", "short"};
  sig.dimensions = {"length"};
  std::vector<LabeledFormula> axs = instantiate_axioms(sig, lex);
  REQUIRE(axs.size() == 10);

  // the control schema is invalid: upward monotonicity for a positive adjective
  TermPtr control = parse(
      "forall d1:D. forall d2:D. (d1 > d2 -> (forall x:E. (tall(x, d2) -> tall(x, d1))))");

  std::mt19937 rng(811);
  const Rational pool[] = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                           Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                           Rational(3)};
  int control_violations = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Interpretation m;
    m.domain_size = 1 + static_cast<int>(rng() % 3);
    std::vector<Rational> mus;
    for (int i = 0; i < m.domain_size; ++i) mus.push_back(pool[rng() % 9]);
    m.mu["length"] = mus;
    for (const auto& a : axs) {
      INFO("iteration ", iter, " axiom ", a.label, " over ", m.to_string());
      CHECK(interpretation_satisfies(m, a.formula, lex));
    }
    if (!interpretation_satisfies(m, control, lex)) ++control_violations;
  }
  // the harness can tell valid from invalid schemata
  CHECK(control_violations > 50);
}

TEST_CASE("cardinality schemata hold on integral measure grids") {
  Lexicon lex = Lexicon::builtin();
  Signature sig;
  sig.gradables = {"many"};
  sig.dimensions = {"count"};
  std::vector<LabeledFormula> axs = instantiate_axioms(sig, lex);
  REQUIRE(find_label(axs, "CP[many]") != nullptr);
  REQUIRE(find_label(axs, "Ax2[many]") != nullptr);
  std::mt19937 rng(812);
  for (int iter = 0; iter < 200; ++iter) {
    Interpretation m;
    m.domain_size = 1 + static_cast<int>(rng() % 3);
    std::vector<Rational> mus;
    for (int i = 0; i < m.domain_size; ++i) mus.push_back(Rational(static_cast<int>(rng() % 12)));
    m.mu["count"] = mus;
    for (const auto& a : axs) {
      INFO("iteration ", iter, " axiom ", a.label);
      CHECK(interpretation_satisfies(m, a.formula, lex));
    }
  }
}

TEST_CASE("compilation into the measure fragment") {
  Lexicon lex = Lexicon::builtin();
  SUBCASE("positive adjectives become lower bounds") {
    TermPtr c = compile_to_measures(compose_fixture("m_taller_h", lex), lex);
    CHECK(alpha_equal(c, parse("exists d:D. (mu_length(m) >= d & ~(mu_length(h) >= d))")));
  }
  SUBCASE("negative adjectives become upper bounds") {
    TermPtr c = compile_to_measures(compose_fixture("m_shorter_h", lex), lex);
    CHECK(alpha_equal(c, parse("exists d:D. (mu_length(m) <= d & ~(mu_length(h) <= d))")));
  }
  SUBCASE("non-gradable structure is untouched") {
    TermPtr f = compose_fixture("itel_won_c", lex);
    CHECK(alpha_equal(compile_to_measures(f, lex), f));
  }
  SUBCASE("measure comparisons survive text round-trips") {
    TermPtr c = compile_to_measures(compose_fixture("m_taller_4ft", lex), lex);
    SymbolTable syms;
    CHECK(alpha_equal(parse_formula_text(term_to_string(c), syms), c));
  }
}
