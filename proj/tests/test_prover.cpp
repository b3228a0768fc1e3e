// Clausification shapes and the order-atom encoding, unification and
// subsumption, refutation proofs across the consequence-preservation,
// instantiation and degree-arithmetic routes, and proof replay.

#include <algorithm>
#include <string>
#include <vector>

#include "anota/composer.hpp"
#include "anota/formula_text.hpp"
#include "anota/prover.hpp"
#include "anota/signature.hpp"
#include "doctest.h"

using namespace anota;

namespace {

TermPtr compose_fixture(const std::string& name, const Lexicon& lex) {
  return compose_semantics(
      parse_derivation_file(std::string(ANOTA_DATA_DIR) + "/derivations/" + name + ".drv"), lex);
}

TermPtr parse(const std::string& s) {
  SymbolTable syms;
  return parse_formula_text(s, syms);
}

Budget quick() {
  Budget b;
  b.timeout_s = 5.0;
  return b;
}

// counts literals matching a predicate-name/polarity pair
int count_lits(const Clause& c, const std::string& head, bool pos) {
  int n = 0;
  for (const ClauseLit& l : c.lits) {
    TermPtr h = l.atom;
    while (h->kind == TermKind::App) h = h->child0;
    bool is_ge = l.atom->kind == TermKind::Cmp;
    if (head == "ge" ? is_ge : (!is_ge && h->kind == TermKind::Const && h->name == head)) {
      if (l.pos == pos) ++n;
    }
  }
  return n;
}

const ClauseLit* find_lit(const Clause& c, const std::string& head, bool pos) {
  for (const ClauseLit& l : c.lits) {
    TermPtr h = l.atom;
    while (h->kind == TermKind::App) h = h->child0;
    bool is_ge = l.atom->kind == TermKind::Cmp;
    if ((head == "ge" ? is_ge : (!is_ge && h->kind == TermKind::Const && h->name == head)) &&
        l.pos == pos)
      return &l;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("clausification of the downward monotonicity schema") {
  int sk = 0;
  TermPtr f = parse(
      "forall d1:D. forall d2:D. (d1 > d2 -> (forall x:E. (tall(x, d1) -> tall(x, d2))))");
  std::vector<Clause> cs = clausify(f, "mono", sk);
  REQUIRE(cs.size() == 1);
  const Clause& c = cs[0];
  CHECK(c.label == "mono");
  CHECK(c.rule == "input");
  REQUIRE(c.lits.size() == 3);
  // shape: ge(d2, d1) | ~tall(x, d1) | tall(x, d2)
  const ClauseLit* ge = find_lit(c, "ge", true);
  const ClauseLit* neg = find_lit(c, "tall", false);
  const ClauseLit* pos = find_lit(c, "tall", true);
  REQUIRE(ge != nullptr);
  REQUIRE(neg != nullptr);
  REQUIRE(pos != nullptr);
  REQUIRE(ge->atom->kind == TermKind::Cmp);
  CHECK(ge->atom->cmp == CmpOp::Ge);
  // the ge upper side is the degree of the positive literal, the lower side
  // the degree of the negative one, all of them variables
  const TermPtr& hi = ge->atom->child0;
  const TermPtr& lo = ge->atom->child1;
  CHECK(hi->kind == TermKind::Var);
  CHECK(lo->kind == TermKind::Var);
  CHECK(pos->atom->child1->name == hi->name);
  CHECK(neg->atom->child1->name == lo->name);
}

TEST_CASE("existentials skolemize over the universals in scope") {
  Lexicon lex = Lexicon::builtin();
  int sk = 0;
  // closed existential: shared fresh constant
  std::vector<Clause> cs = clausify(compose_fixture("m_taller_h", lex), "p", sk);
  REQUIRE(cs.size() == 2);
  REQUIRE(cs[0].lits.size() == 1);
  REQUIRE(cs[1].lits.size() == 1);
  CHECK(cs[0].lits[0].pos);
  CHECK_FALSE(cs[1].lits[0].pos);
  TermPtr d0 = cs[0].lits[0].atom->child1;
  TermPtr d1 = cs[1].lits[0].atom->child1;
  REQUIRE(d0->kind == TermKind::Const);
  CHECK(term_identical(d0, d1));
  CHECK(type_equal(d0->type, ty_d()));

  // existential under a universal: skolem function of the bound variable
  int sk2 = 0;
  std::vector<Clause> cs2 = clausify(compose_fixture("m_taller_everyone", lex), "p", sk2);
  REQUIRE(cs2.size() == 2);
  bool saw_fn = false;
  for (const Clause& c : cs2) {
    CHECK(count_lits(c, "person", false) == 1);
    for (const ClauseLit& l : c.lits) {
      if (l.atom->kind == TermKind::App && l.atom->child1->kind == TermKind::App) {
        TermPtr head = l.atom->child1->child0;
        if (head->kind == TermKind::Const && head->name.rfind("sk", 0) == 0) {
          CHECK(l.atom->child1->child1->kind == TermKind::Var);
          saw_fn = true;
        }
      }
    }
  }
  CHECK(saw_fn);
}

TEST_CASE("comparisons normalize onto the weak order") {
  int sk = 0;
  auto one = [&](const std::string& text) {
    std::vector<Clause> cs = clausify(parse(text), "t", sk);
    REQUIRE(cs.size() == 1);
    return cs[0];
  };
  // a <= b becomes ge(b, a); negated in the implication body
  Clause le = one("forall d:D. (d <= th(tall, person) -> qd(d))");
  REQUIRE(le.lits.size() == 2);
  const ClauseLit* l1 = find_lit(le, "ge", false);
  REQUIRE(l1 != nullptr);
  CHECK(l1->atom->child0->kind == TermKind::Const);  // th above
  CHECK(l1->atom->child1->kind == TermKind::Var);

  // a >= b stays in place
  Clause ge = one("forall d:D. (d >= th(tall, person) -> qd(d))");
  const ClauseLit* l2 = find_lit(ge, "ge", false);
  REQUIRE(l2 != nullptr);
  CHECK(l2->atom->child0->kind == TermKind::Var);
  CHECK(l2->atom->child1->kind == TermKind::Const);

  // a < b becomes ~ge(a, b); negation flips it positive
  Clause lt = one("forall d:D. (d < th(tall, person) -> qd(d))");
  const ClauseLit* l3 = find_lit(lt, "ge", true);
  REQUIRE(l3 != nullptr);
  CHECK(l3->atom->child0->kind == TermKind::Var);

  // a > b becomes ~ge(b, a)
  Clause gt = one("forall d:D. (d > th(tall, person) -> qd(d))");
  const ClauseLit* l4 = find_lit(gt, "ge", true);
  REQUIRE(l4 != nullptr);
  CHECK(l4->atom->child0->kind == TermKind::Const);

  // equality splits into both weak directions
  std::vector<Clause> eq = clausify(parse("forall d:D. (qd(d) -> d = th(tall, person))"), "t", sk);
  REQUIRE(eq.size() == 2);
  CHECK(count_lits(eq[0], "ge", true) == 1);
  CHECK(count_lits(eq[1], "ge", true) == 1);
}

TEST_CASE("ground arithmetic simplifies during clausification") {
  int sk = 0;
  // a true ground comparison makes the clause a tautology
  CHECK(clausify(parse("(lit(1, length) < lit(2, length)) | p0(m)"), "t", sk).empty());
  CHECK(clausify(parse("forall d:D. (tall(m, d) | ~tall(m, d))"), "t", sk).empty());
  // a false ground comparison simply drops out
  std::vector<Clause> cs = clausify(parse("(lit(2, length) < lit(1, length)) | p0(m)"), "t", sk);
  REQUIRE(cs.size() == 1);
  REQUIRE(cs[0].lits.size() == 1);
  CHECK(count_lits(cs[0], "p0", true) == 1);
  // ...leaving the empty clause when nothing else remains
  std::vector<Clause> bot = clausify(parse("(lit(2, length) < lit(1, length))"), "t", sk);
  REQUIRE(bot.size() == 1);
  CHECK(bot[0].lits.empty());
}

TEST_CASE("unification and matching") {
  TypePtr rel = ty_fun(ty_e(), ty_fun(ty_d(), ty_t()));
  TermPtr tall = mk_const("tall", rel);
  TermPtr X = mk_var("X", ty_e());
  TermPtr Y = mk_var("Y", ty_d());
  TermPtr m = mk_const("m", ty_e());
  TermPtr d0 = mk_const("d0", ty_d());

  SUBCASE("two-sided unification binds both sides") {
    Subst s;
    REQUIRE(unify(mk_app(tall, X, d0), mk_app(tall, m, Y), s));
    CHECK(term_identical(apply_subst(X, s), m));
    CHECK(term_identical(apply_subst(Y, s), d0));
  }
  SUBCASE("clashing constants fail") {
    Subst s;
    CHECK_FALSE(unify(mk_app(tall, m, d0), mk_app(tall, mk_const("h", ty_e()), d0), s));
  }
  SUBCASE("sorts are respected") {
    Subst s;
    CHECK_FALSE(unify(X, d0, s));  // entity variable, degree term
  }
  SUBCASE("occurs check") {
    TermPtr f = mk_const("f", ty_fun(ty_d(), ty_d()));
    Subst s;
    CHECK_FALSE(unify(Y, mk_app(f, Y), s));
  }
  SUBCASE("matching binds only pattern variables") {
    Subst s;
    REQUIRE(match_terms(mk_app(tall, X, Y), mk_app(tall, m, d0), s));
    CHECK(term_identical(apply_subst(X, s), m));
    Subst s2;
    CHECK_FALSE(match_terms(mk_app(tall, m, d0), mk_app(tall, X, Y), s2));
  }
}

TEST_CASE("subsumption") {
  TypePtr pt = ty_fun(ty_e(), ty_t());
  TermPtr p = mk_const("p", pt);
  TermPtr q = mk_const("q", pt);
  TermPtr X = mk_var("X", ty_e());
  TermPtr a = mk_const("a", ty_e());
  TermPtr b = mk_const("b", ty_e());
  auto cl = [](std::vector<ClauseLit> ls) {
    Clause c;
    c.lits = std::move(ls);
    return c;
  };
  // p(X) subsumes p(a) | q(b)
  CHECK(subsumes(cl({{true, mk_app(p, X)}}), cl({{true, mk_app(p, a)}, {true, mk_app(q, b)}})));
  // polarity matters
  CHECK_FALSE(subsumes(cl({{false, mk_app(p, X)}}), cl({{true, mk_app(p, a)}})));
  // a longer clause does not subsume a shorter unrelated one
  CHECK_FALSE(subsumes(cl({{true, mk_app(p, X)}, {true, mk_app(q, X)}}),
                       cl({{true, mk_app(p, a)}})));
  // renaming-equivalent clauses subsume each other
  TermPtr Z = mk_var("Z", ty_e());
  CHECK(subsumes(cl({{true, mk_app(p, X)}}), cl({{true, mk_app(p, Z)}})));
}

TEST_CASE("consequence preservation closes the comparative-to-positive gap") {
  Lexicon lex = Lexicon::builtin();
  std::vector<LabeledFormula> premises = {
      {"premise[0]", compose_fixture("m_taller_h", lex)},
      {"premise[1]", compose_fixture("h_tall", lex)},
  };
  TermPtr goal = compose_fixture("m_tall", lex);
  std::vector<TermPtr> all = {premises[0].formula, premises[1].formula, goal};
  std::vector<LabeledFormula> axioms = instantiate_axioms(signature_of(all, lex), lex);

  ProveResult r = prove_entailment(axioms, premises, goal, lex, quick());
  REQUIRE(std::holds_alternative<Proved>(r));
  const Proof& proof = std::get<Proved>(r).proof;
  CHECK(std::find(proof.used_labels.begin(), proof.used_labels.end(), "premise[0]") !=
        proof.used_labels.end());
  CHECK(replay_proof(proof, lex));
  // the trace ends in the empty clause
  REQUIRE_FALSE(proof.steps.empty());
  CHECK(proof.clauses.at(proof.steps.back().id).lits.empty());
  CHECK(proof.to_string().find("uses:") != std::string::npos);

  // restricted to consequence preservation alone, the proof must cite it
  std::vector<LabeledFormula> cp_only;
  for (const LabeledFormula& a : axioms) {
    if (a.label == "CP[tall]") cp_only.push_back(a);
  }
  REQUIRE(cp_only.size() == 1);
  ProveResult r2 = prove_entailment(cp_only, premises, goal, lex, quick());
  REQUIRE(std::holds_alternative<Proved>(r2));
  const Proof& proof2 = std::get<Proved>(r2).proof;
  CHECK(std::find(proof2.used_labels.begin(), proof2.used_labels.end(), "CP[tall]") !=
        proof2.used_labels.end());
  CHECK(replay_proof(proof2, lex));
}

TEST_CASE("universal premises instantiate to named individuals") {
  Lexicon lex = Lexicon::builtin();
  std::vector<LabeledFormula> premises = {
      {"premise[0]", compose_fixture("m_taller_everyone", lex)},
      {"premise[1]", compose_fixture("h_person", lex)},
  };
  TermPtr goal = compose_fixture("m_taller_h", lex);
  std::vector<LabeledFormula> axioms;  // pure first-order reasoning suffices
  ProveResult r = prove_entailment(axioms, premises, goal, lex, quick());
  REQUIRE(std::holds_alternative<Proved>(r));
  CHECK(replay_proof(std::get<Proved>(r).proof, lex));
}

TEST_CASE("degree arithmetic closes through the theory step") {
  Lexicon lex = Lexicon::builtin();
  std::vector<LabeledFormula> premises = {
      {"premise[0]", compose_fixture("m_taller_4ft", lex)},
  };
  TermPtr goal = compose_fixture("m_taller_3ft", lex);
  ProveResult r = prove_entailment({}, premises, goal, lex, quick());
  REQUIRE(std::holds_alternative<Proved>(r));
  const Proof& proof = std::get<Proved>(r).proof;
  bool has_theory = false;
  for (const ProofStep& s : proof.steps) {
    if (s.rule == "theory") has_theory = true;
  }
  CHECK(has_theory);
  CHECK(replay_proof(proof, lex));
}

TEST_CASE("non-entailments saturate") {
  Lexicon lex = Lexicon::builtin();
  std::vector<LabeledFormula> premises = {
      {"premise[0]", compose_fixture("itel_won_c", lex)},
  };
  TermPtr goal = parse("won(i, a)");
  ProveResult r = prove_entailment({}, premises, goal, lex, quick());
  REQUIRE(std::holds_alternative<GaveUp>(r));
  CHECK(std::get<GaveUp>(r).reason == "saturation");
}

TEST_CASE("replay rejects tampered proofs") {
  Lexicon lex = Lexicon::builtin();
  std::vector<LabeledFormula> premises = {
      {"premise[0]", compose_fixture("m_taller_h", lex)},
      {"premise[1]", compose_fixture("h_tall", lex)},
  };
  TermPtr goal = compose_fixture("m_tall", lex);
  std::vector<TermPtr> all = {premises[0].formula, premises[1].formula, goal};
  std::vector<LabeledFormula> axioms = instantiate_axioms(signature_of(all, lex), lex);
  ProveResult r = prove_entailment(axioms, premises, goal, lex, quick());
  REQUIRE(std::holds_alternative<Proved>(r));
  Proof good = std::get<Proved>(r).proof;
  REQUIRE(replay_proof(good, lex));

  // find a non-input step and corrupt its recorded conclusion
  int victim = -1;
  for (const ProofStep& s : good.steps) {
    if (s.rule == "resolve" && !good.clauses.at(s.id).lits.empty()) victim = s.id;
  }
  REQUIRE(victim >= 0);
  {
    Proof bad = good;
    Clause& c = bad.clauses[victim];
    c.lits.push_back(ClauseLit{true, mk_app(mk_const("p9", ty_fun(ty_e(), ty_t())),
                                            mk_const("m", ty_e()))});
    CHECK_FALSE(replay_proof(bad, lex));
  }
  {
    Proof bad = good;
    bad.clauses[victim].lits.clear();
    CHECK_FALSE(replay_proof(bad, lex));
  }
  {
    // rewiring a resolve step to unrelated parents must fail
    Proof bad = good;
    for (ProofStep& s : bad.steps) {
      if (s.id == victim) {
        REQUIRE(s.parents.size() == 2);
        s.parents = {s.parents[0], s.parents[0]};
      }
    }
    CHECK_FALSE(replay_proof(bad, lex));
  }
}
