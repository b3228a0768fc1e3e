// Category parsing, printing, abbreviation expansion, and the category-to-type
// homomorphism.

#include "anota/category.hpp"
#include "doctest.h"

using namespace anota;

TEST_CASE("atoms and slashes parse and print") {
  CHECK(cat_to_string(parse_category("S")) == "S");
  CHECK(cat_to_string(parse_category("NP")) == "NP");
  CHECK(cat_to_string(parse_category("(S\\NP)")) == "(S\\NP)");
  CHECK(cat_to_string(parse_category("((S\\NP)/NP)")) == "((S\\NP)/NP)");
  CHECK(cat_equal(parse_category("(S\\NP)"), cat_backward(cat_s(), cat_np())));
  CHECK(cat_equal(parse_category("((S/NP)\\(S/NP))"),
                  cat_backward(cat_forward(cat_s(), cat_np()),
                               cat_forward(cat_s(), cat_np()))));
  CHECK_FALSE(cat_equal(parse_category("(S/NP)"), parse_category("(S\\NP)")));
}

TEST_CASE("abbreviations expand at parse time") {
  CHECK(cat_equal(parse_category("AP"), cat_backward(cat_backward(cat_s(), cat_np()), cat_d())));
  CHECK(cat_equal(parse_category("NP^"), cat_forward(cat_s(), cat_backward(cat_s(), cat_np()))));
  CHECK(cat_to_string(parse_category("AP")) == "((S\\NP)\\D)");
  CHECK(cat_to_string(parse_category("NP^")) == "(S/(S\\NP))");
  CHECK(cat_equal(cat_ap(), parse_category("((S\\NP)\\D)")));
  CHECK(cat_equal(cat_np_lift(), parse_category("(S/(S\\NP))")));
  // abbreviations nest like any category
  CHECK(cat_equal(parse_category("(AP/NP^)"), cat_forward(cat_ap(), cat_np_lift())));
  CHECK(cat_equal(parse_category("((NP^\\NP^)/NP^)"),
                  cat_forward(cat_backward(cat_np_lift(), cat_np_lift()), cat_np_lift())));
}

TEST_CASE("round-trip through text is stable") {
  const char* samples[] = {
      "S", "NP", "N", "D", "AP", "NP^",
      "((S\\NP)/NP^)", "(((S\\NP)/NP^)\\((S\\NP)/NP^))",
      "((((S\\NP)/NP^)\\((S\\NP)/NP^))/N)",
  };
  for (const char* s : samples) {
    CatPtr c = parse_category(s);
    CHECK(cat_equal(parse_category(cat_to_string(c)), c));
  }
}

TEST_CASE("category to semantic type") {
  CHECK(type_equal(cat_to_semtype(cat_s()), ty_t()));
  CHECK(type_equal(cat_to_semtype(cat_np()), ty_e()));
  CHECK(type_equal(cat_to_semtype(cat_n()), ty_fun(ty_e(), ty_t())));
  CHECK(type_equal(cat_to_semtype(cat_d()), ty_d()));
  // S\NP : E->T, AP : D->(E->T), NP^ : (E->T)->T
  CHECK(type_equal(cat_to_semtype(parse_category("(S\\NP)")), ty_fun(ty_e(), ty_t())));
  CHECK(type_equal(cat_to_semtype(cat_ap()), ty_fun(ty_d(), ty_fun(ty_e(), ty_t()))));
  CHECK(type_equal(cat_to_semtype(cat_np_lift()), ty_fun(ty_fun(ty_e(), ty_t()), ty_t())));
  // slash direction does not matter for the type
  CHECK(type_equal(cat_to_semtype(parse_category("(S/NP)")),
                   cat_to_semtype(parse_category("(S\\NP)"))));
}

TEST_CASE("malformed category text is rejected") {
  CHECK_THROWS_AS(parse_category(""), CategoryError);
  CHECK_THROWS_AS(parse_category("S\\NP"), CategoryError);  // slash needs parens
  CHECK_THROWS_AS(parse_category("(S//NP)"), CategoryError);
  CHECK_THROWS_AS(parse_category("(S\\NP"), CategoryError);
  CHECK_THROWS_AS(parse_category("(S)"), CategoryError);
  CHECK_THROWS_AS(parse_category("VP"), CategoryError);
  CHECK_THROWS_AS(parse_category("S NP"), CategoryError);
  CHECK_THROWS_AS(parse_category("(S\\NP)extra"), CategoryError);
}
