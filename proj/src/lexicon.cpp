#include "anota/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "anota/formula_text.hpp"

namespace anota {

namespace {

TypePtr cls_type() { return ty_fun(ty_e(), ty_t()); }                 // E->T
TypePtr adj_type() { return ty_fun(ty_d(), cls_type()); }             // D->(E->T)
TypePtr gq_type() { return ty_fun(cls_type(), ty_t()); }              // (E->T)->T

}  // namespace

TermPtr theta_operator() {
  return mk_const("theta", ty_fun(adj_type(), ty_fun(cls_type(), ty_d())));
}
TermPtr choice_operator() { return mk_const("the", ty_fun(cls_type(), ty_e())); }
TermPtr privative_operator() { return mk_const("former", ty_fun(cls_type(), cls_type())); }

TermPtr Lexicon::gradable_template(const std::string& lexeme) {
  TermPtr pred = mk_const(lexeme, ty_fun(ty_e(), ty_fun(ty_d(), ty_t())));
  return mk_abs("d", ty_d(),
                mk_abs("x", ty_e(), mk_app(pred, mk_var("x", ty_e()), mk_var("d", ty_d()))));
}

void Lexicon::add_entry(const std::string& key, const CatPtr& cat, const TermPtr& tpl) {
  TypePtr want = cat_to_semtype(cat);
  TypePtr got = type_of(tpl);
  if (!type_equal(want, got))
    throw LexiconError("entry '" + key + "': template type " + type_to_string(got) +
                       " does not match category " + cat_to_string(cat) + " with type " +
                       type_to_string(want));
  if (entries_.count(key)) throw LexiconError("duplicate entry key '" + key + "'");
  entries_[key] = LexEntry{key, cat, tpl};
}

void Lexicon::add_entry(const std::string& key, const std::string& cat_text,
                        const std::string& tpl_text) {
  SymbolTable syms;
  add_entry(key, parse_category(cat_text), parse_term_text(tpl_text, syms));
}

const LexEntry* Lexicon::lookup(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

const LexEntry& Lexicon::require(const std::string& key) const {
  const LexEntry* e = lookup(key);
  if (!e) throw LexiconError("unknown lexicon entry '" + key + "'");
  return *e;
}

const GradableInfo* Lexicon::gradable(const std::string& lexeme) const {
  auto it = gradables_.find(lexeme);
  return it == gradables_.end() ? nullptr : &it->second;
}

bool Lexicon::dimension_integral(const std::string& dim) const {
  auto it = dim_integral_.find(dim);
  return it != dim_integral_.end() && it->second;
}

void Lexicon::register_unit(const std::string& name, const std::string& dimension,
                            const Rational& factor) {
  auto it = units_.find(name);
  if (it != units_.end()) {
    if (it->second.dimension != dimension || it->second.factor != factor)
      throw LexiconError("conflicting unit registration for '" + name + "'");
    return;
  }
  units_[name] = UnitInfo{name, dimension, factor};
}

const UnitInfo* Lexicon::unit(const std::string& name) const {
  auto it = units_.find(name);
  return it == units_.end() ? nullptr : &it->second;
}

Rational Lexicon::normalize_measure(const Rational& value, const std::string& unit) const {
  const UnitInfo* u = this->unit(unit);
  if (!u) throw LexiconError("unknown unit '" + unit + "'");
  return value * u->factor;
}

void Lexicon::add_gradable_entries(const std::string& lexeme) {
  // predicative: AP
  add_entry(lexeme, cat_ap(), gradable_template(lexeme));
  // subdeletion clause form: (S\D)\NP, \x:E. \d:D. F(x, d)
  TermPtr pred = mk_const(lexeme, ty_fun(ty_e(), ty_fun(ty_d(), ty_t())));
  TermPtr sd = mk_abs("x", ty_e(), mk_abs("d", ty_d(),
                      mk_app(pred, mk_var("x", ty_e()), mk_var("d", ty_d()))));
  add_entry(lexeme + "_sd", cat_backward(cat_backward(cat_s(), cat_d()), cat_np()), sd);
  // attributive: N/N, \N:(E->T). \x:E. (F(x, theta(F)(N)) & N(x))
  TermPtr th = mk_app(mk_app(theta_operator(), gradable_template(lexeme)),
                      mk_var("N", cls_type()));
  TermPtr attr = mk_abs(
      "N", cls_type(),
      mk_abs("x", ty_e(),
             mk_and(mk_app(pred, mk_var("x", ty_e()), th),
                    mk_app(mk_var("N", cls_type()), mk_var("x", ty_e())))));
  add_entry(lexeme + "_attr", cat_forward(cat_n(), cat_n()), attr);
}

void Lexicon::register_gradable(const std::string& positive, const std::string& negative,
                                const std::string& dimension, const std::string& base_unit,
                                bool integral) {
  if (positive.empty()) throw LexiconError("gradable registration needs a positive lexeme");
  auto check_merge = [&](const std::string& lexeme, bool pos, const std::string& anto) {
    auto it = gradables_.find(lexeme);
    if (it != gradables_.end()) {
      const GradableInfo& g = it->second;
      if (g.positive != pos || g.dimension != dimension ||
          (!g.antonym.empty() && !anto.empty() && g.antonym != anto))
        throw LexiconError("conflicting gradable registration for '" + lexeme + "'");
      if (g.antonym.empty() && !anto.empty()) gradables_[lexeme].antonym = anto;
      return false;
    }
    gradables_[lexeme] = GradableInfo{lexeme, pos, dimension, anto, base_unit};
    return true;
  };
  auto di = dim_integral_.find(dimension);
  if (di != dim_integral_.end() && di->second != integral)
    throw LexiconError("conflicting integrality for dimension '" + dimension + "'");
  dim_integral_[dimension] = integral;
  if (check_merge(positive, true, negative)) add_gradable_entries(positive);
  if (!negative.empty()) {
    if (check_merge(negative, false, positive)) add_gradable_entries(negative);
  }
}

void Lexicon::load_extension_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open lexicon extension file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string kw;
    if (!(ss >> kw)) continue;
    if (kw != "gradable")
      throw LexiconError("extension line " + std::to_string(lineno) +
                         ": expected 'gradable', got '" + kw + "'");
    std::string pos, neg, dim, unit, integral;
    if (!(ss >> pos >> neg >> dim >> unit >> integral))
      throw LexiconError("extension line " + std::to_string(lineno) +
                         ": expected 'gradable <pos> <neg|-> <dimension> <unit|-> <integral>'");
    bool integ;
    if (integral == "integral" || integral == "true" || integral == "1") integ = true;
    else if (integral == "-" || integral == "false" || integral == "0") integ = false;
    else
      throw LexiconError("extension line " + std::to_string(lineno) +
                         ": bad integrality flag '" + integral + "'");
    register_gradable(pos, neg == "-" ? "" : neg, dim, unit == "-" ? "" : unit, integ);
  }
}

Lexicon Lexicon::builtin() {
  Lexicon lx;

  // units
  for (const char* n : {"inch", "inches", "in"}) lx.register_unit(n, "length", Rational(1));
  for (const char* n : {"foot", "feet", "ft"}) lx.register_unit(n, "length", Rational(12));

  // gradable adjectives
  lx.register_gradable("tall", "short", "length", "inch", false);
  lx.register_gradable("long", "", "length", "inch", false);
  lx.register_gradable("fast", "slow", "speed", "", false);
  lx.register_gradable("large", "small", "size", "", false);
  lx.register_gradable("important", "", "importance", "", false);
  lx.register_gradable("many", "", "count", "", true);

  // proper names
  auto name = [&](const std::string& key, const std::string& c) {
    lx.add_entry(key, cat_np(), mk_const(c, ty_e()));
  };
  name("mary", "m");
  name("mickey", "m");
  name("harry", "h");
  name("bob", "b");
  name("john", "j");
  name("itel", "i");
  name("apcom", "a");
  name("pc6082", "p");
  name("itelxz", "ix");
  name("apcom_contract", "c");
  name("dumbo", "du");

  // common nouns
  for (const char* n : {"person", "order", "customer", "animal", "bed", "contract",
                        "student", "ustudent", "company", "mouse"}) {
    lx.add_entry(n, "N", std::string("\\x:E. ") + n + "(x)");
  }

  // copula and argument-taking verbs; transitive verbs take a lifted object
  lx.add_entry("is", "((S\\NP)/(S\\NP))", "\\P:(E->T). P");
  lx.add_entry("is_sd", "(((S\\D)\\NP)/((S\\D)\\NP))", "\\P:(E->(D->T)). P");
  lx.add_entry("runs", "(S\\NP)", "\\x:E. run(x)");
  for (const char* v : {"won", "has"}) {
    lx.add_entry(v, "((S\\NP)/NP^)",
                 std::string("\\Q:((E->T)->T). \\z:E. Q(\\y:E. ") + v + "(z, y))");
  }

  // determiners
  lx.add_entry("a", "((S\\NP)/N)", "\\N:(E->T). \\x:E. N(x)");
  lx.add_entry("every", "(NP^/N)",
               "\\N:(E->T). \\P:(E->T). forall y:E. (N(y) -> P(y))");
  lx.add_entry("some", "(NP^/N)",
               "\\N:(E->T). \\P:(E->T). exists y:E. (N(y) & P(y))");
  lx.add_entry("everyone", "NP^", "\\P:(E->T). forall y:E. (person(y) -> P(y))");
  lx.add_entry("someone", "NP^", "\\P:(E->T). exists y:E. (person(y) & P(y))");
  lx.add_entry("the", cat_forward(cat_np(), cat_n()),
               mk_abs("N", cls_type(), mk_app(choice_operator(), mk_var("N", cls_type()))));
  lx.add_entry("former", cat_forward(cat_n(), cat_n()),
               mk_abs("N", cls_type(), mk_app(privative_operator(), mk_var("N", cls_type()))));

  // object determiners over transitive verbs
  const std::string od_cat = "(((S\\NP)\\((S\\NP)/NP^))/N)";
  lx.add_entry("some_obj", od_cat,
               "\\N:(E->T). \\G:(((E->T)->T)->(E->T)). \\z:E. "
               "exists x:E. (N(x) & G(\\P:(E->T). P(x))(z))");
  for (int n = 0; n <= 30; ++n) {
    std::string lit = "lit(" + std::to_string(n) + ", count)";
    lx.add_entry("num_" + std::to_string(n), od_cat,
                 "\\N:(E->T). \\G:(((E->T)->T)->(E->T)). \\z:E. "
                 "exists x:E. (N(x) & G(\\P:(E->T). P(x))(z) & many(x, " + lit + "))");
    lx.add_entry("num_gt_" + std::to_string(n), od_cat,
                 "\\N:(E->T). \\G:(((E->T)->T)->(E->T)). \\z:E. "
                 "exists x:E. (N(x) & G(\\P:(E->T). P(x))(z) & "
                 "exists d:D. (many(x, d) & d > " + lit + "))");
  }
  {
    // many as object determiner: degree above the class threshold
    SymbolTable syms;
    TermPtr body = parse_term_text(
        "\\N:(E->T). \\G:(((E->T)->T)->(E->T)). \\z:E. "
        "exists d:D. exists x:E. (N(x) & G(\\P:(E->T). P(x))(z) & many(x, d))", syms);
    // splice the threshold comparison into the innermost conjunction
    TermPtr th = mk_app(mk_app(theta_operator(), gradable_template("many")),
                        mk_var("N", cls_type()));
    // rebuild: ... & many(x, d) & th(many, N) < d
    // walk: Abs N. Abs G. Abs z. Exists d. Exists x. And(chain)
    auto splice = [&](const TermPtr& t, auto&& self) -> TermPtr {
      if (t->kind == TermKind::Abs || t->kind == TermKind::Exists)
        return t->kind == TermKind::Abs
                   ? mk_abs(t->name, t->type, self(t->child0, self))
                   : mk_exists(t->name, t->type, self(t->child0, self));
      return mk_and(t, mk_cmp(CmpOp::Lt, th, mk_var("d", ty_d())));
    };
    lx.add_entry("many_det", parse_category(od_cat), splice(body, splice));
  }

  // comparative and equative morphemes
  lx.add_entry("er_simp", "(((S\\NP)/NP^)\\AP)",
               "\\A:(D->(E->T)). \\Q:((E->T)->T). \\x:E. "
               "exists d:D. (A(d)(x) & ~Q(A(d)))");
  lx.add_entry("er_less", "(((S\\NP)/NP^)\\AP)",
               "\\A:(D->(E->T)). \\Q:((E->T)->T). \\x:E. "
               "exists d:D. (~A(d)(x) & Q(A(d)))");
  lx.add_entry("er_sub", "(((S\\NP)/(S\\D))\\AP)",
               "\\A:(D->(E->T)). \\K:(D->T). \\x:E. "
               "exists d:D. (A(d)(x) & ~K(d))");
  lx.add_entry("er_mea", "(((S\\NP)/D)\\AP)",
               "\\A:(D->(E->T)). \\m:D. \\x:E. "
               "exists d:D. (A(d)(x) & d > m)");
  lx.add_entry("er_mea_neg", "(((S\\NP)/D)\\AP)",
               "\\A:(D->(E->T)). \\m:D. \\x:E. "
               "exists d:D. (A(d)(x) & d < m)");
  lx.add_entry("er_diff", "((((S\\NP)/NP^)\\D)\\AP)",
               "\\A:(D->(E->T)). \\dd:D. \\Q:((E->T)->T). \\x:E. "
               "forall d:D. (Q(A(d)) -> A(d + dd)(x))");
  lx.add_entry("as_simp", "(((S\\NP)/NP^)/AP)",
               "\\A:(D->(E->T)). \\Q:((E->T)->T). \\x:E. "
               "forall d:D. (Q(A(d)) -> A(d)(x))");
  lx.add_entry("as_cl", "(S/S)", "\\p:T. p");
  lx.add_entry("than_simp", "(S/S)", "\\p:T. p");
  lx.add_entry("than_np", "(NP^/NP^)", "\\Q:((E->T)->T). Q");
  lx.add_entry("as_np", "(NP^/NP^)", "\\Q:((E->T)->T). Q");
  lx.add_entry("than_deg", "(D/D)", "\\d:D. d");
  lx.add_entry("than_sd", "((S\\D)/(S\\D))", "\\K:(D->T). K");
  lx.add_entry("than_gq", "(((S\\NP)\\((S\\NP)/NP^))/NP^)",
               "\\Q:((E->T)->T). \\W:(((E->T)->T)->(E->T)). \\x:E. "
               "Q(\\y:E. W(\\P:(E->T). P(y))(x))");

  // positive form: empty morpheme applying the class-relative threshold
  {
    TermPtr A = mk_var("A", adj_type());
    TermPtr U = mk_const("U", cls_type());
    TermPtr body = mk_app(mk_app(A, mk_app(mk_app(theta_operator(), A), U)),
                          mk_var("x", ty_e()));
    lx.add_entry("pos", parse_category("((S\\NP)/AP)"),
                 mk_abs("A", adj_type(), mk_abs("x", ty_e(), body)));
  }

  // noun-phrase coordination over lifted NPs
  lx.add_entry("and_np", "((NP^\\NP^)/NP^)",
               "\\Q2:((E->T)->T). \\Q1:((E->T)->T). \\P:(E->T). (Q1(P) & Q2(P))");
  lx.add_entry("or_np", "((NP^\\NP^)/NP^)",
               "\\Q2:((E->T)->T). \\Q1:((E->T)->T). \\P:(E->T). (Q1(P) | Q2(P))");

  // attributive comparatives: more N than / more ADJ N than (clause and
  // possessive variants)
  const std::string tvtv = "((((S\\NP)/NP^)\\((S\\NP)/NP^))/N)";
  lx.add_entry("more_num", tvtv,
               "\\N:(E->T). \\G:(((E->T)->T)->(E->T)). \\Q:((E->T)->T). \\z:E. "
               "exists d:D. ((exists x:E. (N(x) & G(\\P:(E->T). P(x))(z) & many(x, d))) & "
               "~(exists y:E. (N(y) & Q(G(\\P:(E->T). P(y))) & many(y, d))))");
  lx.add_entry("more_is", "(" + tvtv + "/AP)",
               "\\A:(D->(E->T)). \\N:(E->T). \\G:(((E->T)->T)->(E->T)). "
               "\\Q:((E->T)->T). \\z:E. "
               "exists d:D. ((exists x:E. (N(x) & G(\\P:(E->T). P(x))(z) & A(d)(x))) & "
               "~Q(\\y:E. (N(y) & A(d)(y))))");
  lx.add_entry("more_has", "(" + tvtv + "/AP)",
               "\\A:(D->(E->T)). \\N:(E->T). \\G:(((E->T)->T)->(E->T)). "
               "\\Q:((E->T)->T). \\z:E. "
               "exists d:D. ((exists x:E. (N(x) & G(\\P:(E->T). P(x))(z) & A(d)(x))) & "
               "~(exists y:E. (N(y) & Q(G(\\P:(E->T). P(y))) & A(d)(y))))");

  // degree phrases in base units
  auto deg = [&](const std::string& key, int value, const std::string& unit) {
    lx.add_entry(key, cat_d(),
                 mk_deglit(lx.normalize_measure(Rational(value), unit), "length"));
  };
  deg("deg_2in", 2, "inches");
  deg("deg_3ft", 3, "feet");
  deg("deg_4ft", 4, "feet");
  deg("deg_5ft", 5, "feet");
  deg("deg_6ft", 6, "feet");

  return lx;
}

}  // namespace anota
