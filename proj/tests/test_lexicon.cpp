// Lexicon integrity: every template's type matches its category, the gradable
// registry keeps antonymy symmetric, measures normalize, extensions load.

#include <cstdio>
#include <fstream>

#include "anota/lexicon.hpp"
#include "doctest.h"

using namespace anota;

TEST_CASE("every builtin template type matches its category") {
  Lexicon lex = Lexicon::builtin();
  CHECK(lex.entries().size() > 80);
  for (const auto& [key, entry] : lex.entries()) {
    INFO("entry ", key, " : ", cat_to_string(entry.cat));
    TypePtr want = cat_to_semtype(entry.cat);
    TypePtr got = type_of(entry.tpl);
    CHECK(type_equal(got, want));
    CHECK(free_vars(entry.tpl).empty());
  }
}

TEST_CASE("lookup and require") {
  Lexicon lex = Lexicon::builtin();
  REQUIRE(lex.lookup("mary") != nullptr);
  CHECK(lex.lookup("mary")->key == "mary");
  CHECK(cat_equal(lex.lookup("mary")->cat, cat_np()));
  CHECK(lex.lookup("definitely_absent") == nullptr);
  CHECK_NOTHROW(lex.require("tall"));
  CHECK_THROWS_AS(lex.require("definitely_absent"), LexiconError);
}

TEST_CASE("gradable registry") {
  Lexicon lex = Lexicon::builtin();
  const GradableInfo* tall = lex.gradable("tall");
  REQUIRE(tall != nullptr);
  CHECK(tall->positive);
  CHECK(tall->dimension == "length");
  CHECK(tall->antonym == "short");
  CHECK(tall->base_unit == "inch");

  // antonymy is symmetric with flipped polarity and a shared dimension
  const GradableInfo* shrt = lex.gradable("short");
  REQUIRE(shrt != nullptr);
  CHECK_FALSE(shrt->positive);
  CHECK(shrt->dimension == "length");
  CHECK(shrt->antonym == "tall");
  for (const auto& [name, info] : lex.gradables()) {
    if (info.antonym.empty()) continue;
    const GradableInfo* other = lex.gradable(info.antonym);
    REQUIRE(other != nullptr);
    CHECK(other->antonym == name);
    CHECK(other->dimension == info.dimension);
    CHECK(other->positive != info.positive);
  }

  // cardinality is gradable on an integral dimension; length is dense
  const GradableInfo* many = lex.gradable("many");
  REQUIRE(many != nullptr);
  CHECK(many->dimension == "count");
  CHECK(lex.dimension_integral("count"));
  CHECK_FALSE(lex.dimension_integral("length"));

  // unregistered words are not gradable
  CHECK(lex.gradable("person") == nullptr);
  CHECK(lex.gradable("mary") == nullptr);
}

TEST_CASE("measure normalization") {
  Lexicon lex = Lexicon::builtin();
  CHECK(lex.normalize_measure(Rational(4), "foot") == Rational(48));
  CHECK(lex.normalize_measure(Rational(2), "inch") == Rational(2));
  CHECK(lex.normalize_measure(Rational(1, 2), "foot") == Rational(6));
  REQUIRE(lex.unit("foot") != nullptr);
  CHECK(lex.unit("foot")->dimension == "length");
  CHECK_THROWS_AS(lex.normalize_measure(Rational(1), "furlong"), LexiconError);
}

TEST_CASE("gradable template shape") {
  TermPtr tpl = Lexicon::gradable_template("tall");
  // \d:D. \x:E. tall(x, d)
  CHECK(type_equal(type_of(tpl), ty_fun(ty_d(), ty_fun(ty_e(), ty_t()))));
  TermPtr applied = beta_normalize(
      mk_app(mk_app(tpl, mk_deglit(Rational(48), "length")), mk_const("m", ty_e())));
  TermPtr want = mk_app(mk_const("tall", ty_fun(ty_e(), ty_fun(ty_d(), ty_t()))),
                        mk_const("m", ty_e()), mk_deglit(Rational(48), "length"));
  CHECK(alpha_equal(applied, want));
}

TEST_CASE("add_entry type checks against the category") {
  Lexicon lex = Lexicon::builtin();
  lex.add_entry("sings", "(S\\NP)", "\\x:E. sings(x)");
  const LexEntry* e = lex.lookup("sings");
  REQUIRE(e != nullptr);
  CHECK(type_equal(type_of(e->tpl), ty_fun(ty_e(), ty_t())));
  // template type must match the category's semantic type
  CHECK_THROWS_AS(lex.add_entry("broken", "(S\\NP)", "\\d:D. d"), LexiconError);
  // duplicate keys are conflicts
  CHECK_THROWS_AS(lex.add_entry("sings", "(S\\NP)", "\\x:E. sings(x)"), LexiconError);
}

TEST_CASE("register_gradable guards its invariants") {
  Lexicon lex = Lexicon::builtin();
  lex.register_gradable("heavy", "light", "weight", "pound", false);
  const GradableInfo* heavy = lex.gradable("heavy");
  REQUIRE(heavy != nullptr);
  CHECK(heavy->antonym == "light");
  CHECK_FALSE(lex.gradable("light")->positive);
  // generated entries exist and type check
  REQUIRE(lex.lookup("heavy") != nullptr);
  CHECK(type_equal(type_of(lex.lookup("heavy")->tpl), cat_to_semtype(lex.lookup("heavy")->cat)));
  // re-registration with a conflicting dimension throws
  CHECK_THROWS_AS(lex.register_gradable("heavy", "", "length", "", false), LexiconError);
  // flipping polarity of an existing lexeme throws
  CHECK_THROWS_AS(lex.register_gradable("light", "", "weight", "", false), LexiconError);
}

TEST_CASE("extension files load gradable lines") {
  std::string path = "lexicon_ext_test.txt";
  {
    std::ofstream out(path);
    out << "# extra adjectives\n"
        << "\n"
        << "gradable wide narrow width meter 0\n"
        << "gradable busy - busyness - 0\n";
  }
  Lexicon lex = Lexicon::builtin();
  lex.load_extension_file(path);
  REQUIRE(lex.gradable("wide") != nullptr);
  CHECK(lex.gradable("wide")->antonym == "narrow");
  CHECK(lex.gradable("wide")->dimension == "width");
  REQUIRE(lex.gradable("busy") != nullptr);
  CHECK(lex.gradable("busy")->antonym.empty());
  CHECK(lex.lookup("busy") != nullptr);
  std::remove(path.c_str());

  {
    std::ofstream out(path);
    out << "gradable broken\n";
  }
  Lexicon lex2 = Lexicon::builtin();
  CHECK_THROWS_AS(lex2.load_extension_file(path), LexiconError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(lex.load_extension_file("no_such_extension_file.txt"), LexiconError);
}
