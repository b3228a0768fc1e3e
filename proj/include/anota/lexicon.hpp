#pragma once

// Lexical entries pairing CCG categories with typed lambda templates, plus the
// registry of gradable adjectives (polarity, dimension, antonymy, measure
// units, integrality of the dimension).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anota/category.hpp"
#include "anota/term.hpp"

namespace anota {

struct LexiconError : std::runtime_error {
  explicit LexiconError(const std::string& what) : std::runtime_error(what) {}
};

struct LexEntry {
  std::string key;
  CatPtr cat;
  TermPtr tpl;
};

struct GradableInfo {
  std::string lexeme;
  bool positive = true;
  std::string dimension;
  std::string antonym;    // empty when none registered
  std::string base_unit;  // empty when the dimension has no unit system
};

struct UnitInfo {
  std::string name;
  std::string dimension;
  Rational factor;  // multiplier into the dimension's base unit
};

class Lexicon {
 public:
  // Full built-in lexicon: names, nouns, verbs, determiners, the copula,
  // comparative and equative morphemes, numeral and attributive determiners,
  // degree phrases, and the gradable adjective registry.
  static Lexicon builtin();

  // Registers a positive adjective, optionally its antonym, on a dimension.
  // Generates predicative (AP), subdeletion and attributive entries for each
  // registered lexeme. Antonymy is symmetric and a lexeme keeps one polarity
  // and one dimension for life; conflicts throw.
  void register_gradable(const std::string& positive, const std::string& negative,
                         const std::string& dimension, const std::string& base_unit,
                         bool integral);

  void register_unit(const std::string& name, const std::string& dimension,
                     const Rational& factor);

  // Adds an entry after checking type_of(template) == cat_to_semtype(cat).
  void add_entry(const std::string& key, const CatPtr& cat, const TermPtr& tpl);
  void add_entry(const std::string& key, const std::string& cat_text,
                 const std::string& tpl_text);

  const LexEntry* lookup(const std::string& key) const;
  const LexEntry& require(const std::string& key) const;

  const GradableInfo* gradable(const std::string& lexeme) const;
  bool dimension_integral(const std::string& dim) const;
  const std::map<std::string, LexEntry>& entries() const { return entries_; }
  const std::map<std::string, GradableInfo>& gradables() const { return gradables_; }

  // Value in `unit` converted to the unit's dimension base. Unknown units throw.
  Rational normalize_measure(const Rational& value, const std::string& unit) const;
  const UnitInfo* unit(const std::string& name) const;

  // Loads `gradable <pos> <neg|-> <dimension> <unit|-> <integral>` lines.
  // '#' starts a comment; blank lines are ignored.
  void load_extension_file(const std::string& path);

  // Template for a gradable adjective: \d:D. \x:E. F(x, d).
  static TermPtr gradable_template(const std::string& lexeme);

 private:
  std::map<std::string, LexEntry> entries_;
  std::map<std::string, GradableInfo> gradables_;
  std::map<std::string, UnitInfo> units_;
  std::map<std::string, bool> dim_integral_;

  void add_gradable_entries(const std::string& lexeme);
};

// Operator constants used inside templates before folding.
TermPtr theta_operator();     // (D->(E->T)) -> ((E->T) -> D)
TermPtr choice_operator();    // (E->T) -> E
TermPtr privative_operator(); // (E->T) -> (E->T)

}  // namespace anota
