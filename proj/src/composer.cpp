#include "anota/composer.hpp"

#include "anota/formula_text.hpp"

namespace anota {

namespace {

TermPtr compose_checked(const DerivPtr& t, const Lexicon& lex) {
  TermPtr sem;
  switch (t->rule) {
    case RuleName::Lex: {
      const LexEntry* e = lex.lookup(t->entry_key);
      if (!e)
        throw ComposeError("unknown lexicon entry '" + t->entry_key + "' for token \"" +
                           t->token + "\"");
      if (!cat_equal(e->cat, t->cat))
        throw ComposeError("leaf \"" + t->token + "\" uses entry '" + t->entry_key +
                           "' of category " + cat_to_string(e->cat) +
                           " but the derivation says " + cat_to_string(t->cat));
      sem = e->tpl;
      break;
    }
    case RuleName::ForwardApp:
      sem = mk_app(compose_checked(t->left, lex), compose_checked(t->right, lex));
      break;
    case RuleName::BackwardApp:
      sem = mk_app(compose_checked(t->right, lex), compose_checked(t->left, lex));
      break;
    case RuleName::ForwardComp: {
      TermPtr f = compose_checked(t->left, lex);
      TermPtr g = compose_checked(t->right, lex);
      TypePtr zt = cat_to_semtype(t->right->cat->arg);
      std::set<std::string> avoid = free_vars(f);
      avoid.merge(free_vars(g));
      std::string z = fresh_name("z", avoid);
      sem = mk_abs(z, zt, mk_app(f, mk_app(g, mk_var(z, zt))));
      break;
    }
    case RuleName::BackwardComp: {
      TermPtr g = compose_checked(t->left, lex);
      TermPtr f = compose_checked(t->right, lex);
      TypePtr zt = cat_to_semtype(t->left->cat->arg);
      std::set<std::string> avoid = free_vars(f);
      avoid.merge(free_vars(g));
      std::string z = fresh_name("z", avoid);
      sem = mk_abs(z, zt, mk_app(f, mk_app(g, mk_var(z, zt))));
      break;
    }
    case RuleName::TypeRaise: {
      TermPtr a = compose_checked(t->left, lex);
      TypePtr pt = cat_to_semtype(t->cat->arg);  // T\X
      std::string p = fresh_name("P", free_vars(a));
      sem = mk_abs(p, pt, mk_app(mk_var(p, pt), a));
      break;
    }
  }
  TypePtr want = cat_to_semtype(t->cat);
  TypePtr got;
  try {
    got = type_of(sem);
  } catch (const TypeError& e) {
    throw ComposeError(std::string("ill-typed representation at ") + rule_to_string(t->rule) +
                       " node: " + e.what());
  }
  if (!type_equal(want, got))
    throw ComposeError("representation type " + type_to_string(got) + " at " +
                       rule_to_string(t->rule) + " node does not match category " +
                       cat_to_string(t->cat) + " with type " + type_to_string(want));
  return sem;
}

// \d. \x. F(x, d) up to alpha; returns F.
bool gradable_pattern(const TermPtr& t, std::string& out) {
  if (t->kind != TermKind::Abs || t->type->kind != SemType::Kind::D) return false;
  const TermPtr& inner = t->child0;
  if (inner->kind != TermKind::Abs || inner->type->kind != SemType::Kind::E) return false;
  const TermPtr& body = inner->child0;
  if (body->kind != TermKind::App || body->child0->kind != TermKind::App) return false;
  const TermPtr& head = body->child0->child0;
  const TermPtr& a1 = body->child0->child1;
  const TermPtr& a2 = body->child1;
  if (head->kind != TermKind::Const) return false;
  if (a1->kind != TermKind::Var || a1->name != inner->name) return false;
  if (a2->kind != TermKind::Var || a2->name != t->name) return false;
  out = head->name;
  return true;
}

// Const n of type E->T, or \x. n(x); returns n.
bool class_pattern(const TermPtr& t, std::string& out) {
  if (t->kind == TermKind::Const) {
    out = t->name;
    return true;
  }
  if (t->kind == TermKind::Abs && t->type->kind == SemType::Kind::E) {
    const TermPtr& b = t->child0;
    if (b->kind == TermKind::App && b->child0->kind == TermKind::Const &&
        b->child1->kind == TermKind::Var && b->child1->name == t->name) {
      out = b->child0->name;
      return true;
    }
  }
  return false;
}

}  // namespace

TermPtr fold_operator_constants(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
    case TermKind::DegLit:
      return t;
    case TermKind::App: {
      TermPtr f = fold_operator_constants(t->child0);
      TermPtr a = fold_operator_constants(t->child1);
      // theta(A)(C)
      if (f->kind == TermKind::App && f->child0->kind == TermKind::Const &&
          f->child0->name == "theta") {
        std::string adj, cls;
        if (gradable_pattern(f->child1, adj) && class_pattern(a, cls))
          return mk_const(theta_const_name(adj, cls), ty_d());
      }
      if (f->kind == TermKind::Const) {
        std::string cls;
        if (f->name == "the" && class_pattern(a, cls))
          return mk_const(choice_const_name(cls), ty_e());
        if (f->name == "former" && class_pattern(a, cls))
          return mk_const(privative_const_name(cls), ty_fun(ty_e(), ty_t()));
      }
      return mk_app(f, a);
    }
    default: {
      Term r = *t;
      if (t->child0) r.child0 = fold_operator_constants(t->child0);
      if (t->child1) r.child1 = fold_operator_constants(t->child1);
      return std::make_shared<Term>(std::move(r));
    }
  }
}

TermPtr compose_node(const DerivPtr& t, const Lexicon& lex) {
  return compose_checked(t, lex);
}

TermPtr compose_semantics(const DerivPtr& t, const Lexicon& lex) {
  std::vector<Violation> vs = validate_derivation(t);
  if (!vs.empty()) {
    std::string msg = "invalid derivation:";
    for (const Violation& v : vs) msg += "\n  " + v.where + ": " + v.message;
    throw ComposeError(msg);
  }
  TermPtr raw = compose_checked(t, lex);
  TermPtr normal = beta_normalize(raw);
  TermPtr folded = fold_operator_constants(normal);
  type_of(folded);  // final consistency check
  return folded;
}

}  // namespace anota
