#include "anota/signature.hpp"

#include <algorithm>

#include "anota/formula_text.hpp"

namespace anota {

namespace {

bool is_entity_type(const TypePtr& t) { return t->kind == SemType::Kind::E; }

bool is_class_type(const TypePtr& t) {
  return t->kind == SemType::Kind::Fun && t->arg->kind == SemType::Kind::E &&
         t->res->kind == SemType::Kind::T;
}

bool is_relation_type(const TypePtr& t) {
  return t->kind == SemType::Kind::Fun && t->arg->kind == SemType::Kind::E &&
         is_class_type(t->res);
}

void scan(const TermPtr& t, const Lexicon& lex, Signature& sig) {
  if (t->kind == TermKind::Const) {
    std::string a, b;
    if (split_theta_const(t->name, a, b)) {
      sig.thresholds.insert({a, b});
      sig.gradables.insert(a);
      if (const GradableInfo* g = lex.gradable(a)) sig.dimensions.insert(g->dimension);
      if (b != "U") sig.classes.insert(b);
      return;
    }
    if (split_choice_const(t->name, a)) {
      sig.choices.insert(a);
      sig.classes.insert(a);
      return;
    }
    if (split_privative_const(t->name, a)) {
      sig.privatives.insert(a);
      sig.classes.insert(a);
      return;
    }
    if (split_measure_const(t->name, a)) {
      sig.dimensions.insert(a);
      return;
    }
    if (!t->type) return;
    if (lex.gradable(t->name)) {
      sig.gradables.insert(t->name);
      sig.dimensions.insert(lex.gradable(t->name)->dimension);
      return;
    }
    if (is_entity_type(t->type)) sig.entities.insert(t->name);
    else if (is_class_type(t->type)) sig.classes.insert(t->name);
    else if (is_relation_type(t->type)) sig.relations.insert(t->name);
    return;
  }
  if (t->kind == TermKind::DegLit) {
    sig.dimensions.insert(t->dim);
    return;
  }
  if (t->child0) scan(t->child0, lex, sig);
  if (t->child1) scan(t->child1, lex, sig);
}

TermPtr grad_atom(const std::string& lexeme, const TermPtr& x, const TermPtr& d) {
  return mk_app(mk_const(lexeme, ty_fun(ty_e(), ty_fun(ty_d(), ty_t()))), x, d);
}

}  // namespace

Signature signature_of(const std::vector<TermPtr>& formulas, const Lexicon& lex) {
  Signature sig;
  for (const TermPtr& f : formulas) scan(f, lex, sig);
  return sig;
}

std::vector<LabeledFormula> instantiate_axioms(const Signature& sig, const Lexicon& lex) {
  std::vector<LabeledFormula> out;
  TermPtr x = mk_var("x", ty_e());
  TermPtr y = mk_var("y", ty_e());
  TermPtr d = mk_var("d", ty_d());
  TermPtr e = mk_var("e", ty_d());
  TermPtr d1 = mk_var("d1", ty_d());
  TermPtr d2 = mk_var("d2", ty_d());

  // consequence preservation for every gradable in the signature:
  // if x strictly exceeds y then everything y reaches, x reaches
  for (const std::string& f : sig.gradables) {
    TermPtr above = mk_exists("d", ty_d(),
                              mk_and(grad_atom(f, x, d), mk_not(grad_atom(f, y, d))));
    TermPtr covers = mk_forall("e", ty_d(),
                               mk_implies(grad_atom(f, y, e), grad_atom(f, x, e)));
    out.push_back({"CP[" + f + "]",
                   mk_forall("x", ty_e(), mk_forall("y", ty_e(), mk_implies(above, covers)))});
  }

  // polarity monotonicity
  for (const std::string& f : sig.gradables) {
    const GradableInfo* g = lex.gradable(f);
    if (!g) continue;
    if (g->positive) {
      // downward: holding at a higher degree forces all lower degrees
      TermPtr body = mk_implies(
          mk_cmp(CmpOp::Gt, d1, d2),
          mk_forall("x", ty_e(), mk_implies(grad_atom(f, x, d1), grad_atom(f, x, d2))));
      out.push_back({"Ax2[" + f + "]",
                     mk_forall("d1", ty_d(), mk_forall("d2", ty_d(), body))});
    } else {
      // upward: holding at a lower degree forces all higher degrees
      TermPtr body = mk_implies(
          mk_cmp(CmpOp::Gt, d1, d2),
          mk_forall("x", ty_e(), mk_implies(grad_atom(f, x, d2), grad_atom(f, x, d1))));
      out.push_back({"Ax1[" + f + "]",
                     mk_forall("d1", ty_d(), mk_forall("d2", ty_d(), body))});
    }
  }

  // antonym pair axioms, once per pair present in the lexicon and touched by
  // the signature
  std::set<std::pair<std::string, std::string>> pairs;
  for (const std::string& f : sig.gradables) {
    const GradableInfo* g = lex.gradable(f);
    if (!g || g->antonym.empty()) continue;
    const GradableInfo* anto = lex.gradable(g->antonym);
    if (!anto) continue;
    std::string pos = g->positive ? f : g->antonym;
    std::string neg = g->positive ? g->antonym : f;
    pairs.insert({pos, neg});
  }
  for (const auto& [pos, neg] : pairs) {
    std::string tag = "[" + pos + "/" + neg + "]";
    // exclusion: a negative reach below excludes the positive above
    out.push_back(
        {"Ax3" + tag,
         mk_forall("d1", ty_d(),
                   mk_forall("d2", ty_d(),
                             mk_implies(mk_cmp(CmpOp::Gt, d1, d2),
                                        mk_forall("x", ty_e(),
                                                  mk_implies(grad_atom(neg, x, d2),
                                                             mk_not(grad_atom(pos, x, d1)))))))});
    out.push_back(
        {"Ax4" + tag,
         mk_forall("d1", ty_d(),
                   mk_forall("d2", ty_d(),
                             mk_implies(mk_cmp(CmpOp::Lt, d1, d2),
                                        mk_forall("x", ty_e(),
                                                  mk_implies(grad_atom(pos, x, d2),
                                                             mk_not(grad_atom(neg, x, d1)))))))});
    // coverage: failing one polarity forces the other on the far side
    out.push_back(
        {"Ax5" + tag,
         mk_forall("d1", ty_d(),
                   mk_forall("d2", ty_d(),
                             mk_implies(mk_cmp(CmpOp::Le, d2, d1),
                                        mk_forall("x", ty_e(),
                                                  mk_implies(mk_not(grad_atom(neg, x, d1)),
                                                             grad_atom(pos, x, d2))))))});
    out.push_back(
        {"Ax6" + tag,
         mk_forall("d1", ty_d(),
                   mk_forall("d2", ty_d(),
                             mk_implies(mk_cmp(CmpOp::Ge, d2, d1),
                                        mk_forall("x", ty_e(),
                                                  mk_implies(mk_not(grad_atom(pos, x, d1)),
                                                             grad_atom(neg, x, d2))))))});
    // witnesses: failing a polarity at a degree yields the other polarity at
    // a witness degree strictly beyond it
    out.push_back(
        {"Ax7" + tag,
         mk_forall("x", ty_e(),
                   mk_forall("d", ty_d(),
                             mk_implies(mk_not(grad_atom(neg, x, d)),
                                        mk_exists("e", ty_d(),
                                                  mk_and(mk_cmp(CmpOp::Gt, e, d),
                                                         grad_atom(pos, x, e))))))});
    out.push_back(
        {"Ax8" + tag,
         mk_forall("x", ty_e(),
                   mk_forall("d", ty_d(),
                             mk_implies(mk_not(grad_atom(pos, x, d)),
                                        mk_exists("e", ty_d(),
                                                  mk_and(mk_cmp(CmpOp::Lt, e, d),
                                                         grad_atom(neg, x, e))))))});
    // threshold separation per comparison class seen with either member
    std::set<std::string> classes;
    for (const auto& [adj, cls] : sig.thresholds)
      if (adj == pos || adj == neg) classes.insert(cls);
    for (const std::string& cls : classes) {
      out.push_back({"TH" + tag + "[" + cls + "]",
                     mk_cmp(CmpOp::Lt, mk_const(theta_const_name(neg, cls), ty_d()),
                            mk_const(theta_const_name(pos, cls), ty_d()))});
    }
  }

  // privative modifiers never apply to actual members
  for (const std::string& n : sig.privatives) {
    TermPtr fx = mk_app(mk_const(privative_const_name(n), ty_fun(ty_e(), ty_t())),
                        mk_var("x", ty_e()));
    TermPtr nx = mk_app(mk_const(n, ty_fun(ty_e(), ty_t())), mk_var("x", ty_e()));
    out.push_back({"privative[" + n + "]",
                   mk_forall("x", ty_e(), mk_implies(fx, mk_not(nx)))});
  }

  // choice individuals fall under their noun
  for (const std::string& n : sig.choices) {
    TermPtr cn = mk_const(choice_const_name(n), ty_e());
    out.push_back({"choice[" + n + "]",
                   mk_app(mk_const(n, ty_fun(ty_e(), ty_t())), cn)});
  }

  return out;
}

namespace {

TermPtr compile_rec(const TermPtr& t, const Lexicon& lex) {
  if (t->kind == TermKind::App && t->child0->kind == TermKind::App &&
      t->child0->child0->kind == TermKind::Const) {
    const std::string& head = t->child0->child0->name;
    if (const GradableInfo* g = lex.gradable(head)) {
      TermPtr x = compile_rec(t->child0->child1, lex);
      TermPtr d = compile_rec(t->child1, lex);
      TermPtr mu = mk_app(mk_const(measure_const_name(g->dimension), ty_fun(ty_e(), ty_d())), x);
      return mk_cmp(g->positive ? CmpOp::Ge : CmpOp::Le, mu, d);
    }
  }
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
    case TermKind::DegLit:
      return t;
    default: {
      Term r = *t;
      if (t->child0) r.child0 = compile_rec(t->child0, lex);
      if (t->child1) r.child1 = compile_rec(t->child1, lex);
      return std::make_shared<Term>(std::move(r));
    }
  }
}

}  // namespace

TermPtr compile_to_measures(const TermPtr& formula, const Lexicon& lex) {
  return compile_rec(formula, lex);
}

}  // namespace anota
