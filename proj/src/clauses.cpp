#include "anota/clauses.hpp"

#include <algorithm>
#include <functional>

#include "anota/formula_text.hpp"

namespace anota {

std::string literal_to_string(const ClauseLit& l) {
  return (l.pos ? "" : "~") + term_to_string(l.atom);
}

std::string clause_to_string(const Clause& c) {
  if (c.lits.empty()) return "[]";
  std::string out = "{";
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i) out += ", ";
    out += literal_to_string(c.lits[i]);
  }
  return out + "}";
}

TypePtr term_sort(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      if (t->type->kind == SemType::Kind::Fun) {
        // applied below; callers only ask for fully applied terms
        TypePtr ty = t->type;
        return ty;
      }
      return t->type;
    case TermKind::DegLit:
    case TermKind::DegAdd:
      return ty_d();
    case TermKind::App: {
      TypePtr f = term_sort(t->child0);
      if (f->kind != SemType::Kind::Fun) throw TypeError("application of non-function sort");
      return f->res;
    }
    default:
      throw TypeError("no first-order sort for term");
  }
}

bool lit_equal(const ClauseLit& a, const ClauseLit& b) {
  return a.pos == b.pos && term_identical(a.atom, b.atom);
}

// ---------------------------------------------------------------- clausify

namespace {

// Rewrites comparisons into ge-literals under a polarity.
TermPtr cmp_to_ge(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Cmp: {
      TermPtr a = t->child0, b = t->child1;
      switch (t->cmp) {
        case CmpOp::Ge: return mk_cmp(CmpOp::Ge, a, b);
        case CmpOp::Le: return mk_cmp(CmpOp::Ge, b, a);
        case CmpOp::Gt: return mk_not(mk_cmp(CmpOp::Ge, b, a));
        case CmpOp::Lt: return mk_not(mk_cmp(CmpOp::Ge, a, b));
        case CmpOp::Eq:
          return mk_and(mk_cmp(CmpOp::Ge, a, b), mk_cmp(CmpOp::Ge, b, a));
      }
      return t;
    }
    case TermKind::Var:
    case TermKind::Const:
    case TermKind::DegLit:
      return t;
    default: {
      Term r = *t;
      if (t->child0) r.child0 = cmp_to_ge(t->child0);
      if (t->child1) r.child1 = cmp_to_ge(t->child1);
      return std::make_shared<Term>(std::move(r));
    }
  }
}

struct Clausifier {
  int& skolem;
  int var_counter = 0;

  explicit Clausifier(int& sk) : skolem(sk) {}

  std::string fresh_var(const std::string& base) {
    std::string b;
    for (char c : base)
      if (isalnum((unsigned char)c)) b.push_back((char)toupper((unsigned char)c));
    if (b.empty() || !isalpha((unsigned char)b[0])) b = "V";
    return b + std::to_string(++var_counter);
  }

  // NNF + standardize apart + Skolemize. `univ` holds the universally
  // quantified variables in scope.
  TermPtr transform(const TermPtr& t, bool positive, Subst& renaming,
                    std::vector<TermPtr>& univ) {
    switch (t->kind) {
      case TermKind::Not:
        return transform(t->child0, !positive, renaming, univ);
      case TermKind::And:
      case TermKind::Or: {
        TermPtr a = transform(t->child0, positive, renaming, univ);
        TermPtr b = transform(t->child1, positive, renaming, univ);
        bool conj = (t->kind == TermKind::And) == positive;
        return conj ? mk_and(a, b) : mk_or(a, b);
      }
      case TermKind::Implies: {
        TermPtr a = transform(t->child0, !positive, renaming, univ);
        TermPtr b = transform(t->child1, positive, renaming, univ);
        return positive ? mk_or(a, b) : mk_and(a, b);
      }
      case TermKind::Forall:
      case TermKind::Exists: {
        bool universal = (t->kind == TermKind::Forall) == positive;
        if (universal) {
          std::string v = fresh_var(t->name);
          TermPtr var = mk_var(v, t->type);
          TermPtr saved;
          auto it = renaming.find(t->name);
          if (it != renaming.end()) saved = it->second;
          renaming[t->name] = var;
          univ.push_back(var);
          TermPtr body = transform(t->child0, positive, renaming, univ);
          univ.pop_back();
          if (saved) renaming[t->name] = saved;
          else renaming.erase(t->name);
          return body;
        }
        // Skolem term over the universal variables in scope
        TypePtr sk_ty = t->type;
        for (auto it = univ.rbegin(); it != univ.rend(); ++it)
          sk_ty = ty_fun((*it)->type, sk_ty);
        TermPtr sk = mk_const("sk" + std::to_string(++skolem), sk_ty);
        for (const TermPtr& u : univ) sk = mk_app(sk, u);
        TermPtr saved;
        auto it = renaming.find(t->name);
        if (it != renaming.end()) saved = it->second;
        renaming[t->name] = sk;
        TermPtr body = transform(t->child0, positive, renaming, univ);
        if (saved) renaming[t->name] = saved;
        else renaming.erase(t->name);
        return body;
      }
      case TermKind::Var: {
        auto it = renaming.find(t->name);
        if (it != renaming.end()) return positive ? it->second : mk_not(it->second);
        return positive ? t : mk_not(t);
      }
      default: {
        // atom: rename variables inside
        TermPtr a = rename_free(t, renaming);
        return positive ? a : mk_not(a);
      }
    }
  }

  static TermPtr rename_free(const TermPtr& t, const Subst& renaming) {
    switch (t->kind) {
      case TermKind::Var: {
        auto it = renaming.find(t->name);
        return it != renaming.end() ? it->second : t;
      }
      case TermKind::Const:
      case TermKind::DegLit:
        return t;
      default: {
        Term r = *t;
        if (t->child0) r.child0 = rename_free(t->child0, renaming);
        if (t->child1) r.child1 = rename_free(t->child1, renaming);
        return std::make_shared<Term>(std::move(r));
      }
    }
  }

  // Distributes the NNF matrix into a set of literal lists.
  void cnf(const TermPtr& t, std::vector<std::vector<ClauseLit>>& out) {
    if (t->kind == TermKind::And) {
      cnf(t->child0, out);
      cnf(t->child1, out);
      return;
    }
    std::vector<std::vector<ClauseLit>> left, right;
    if (t->kind == TermKind::Or) {
      cnf(t->child0, left);
      cnf(t->child1, right);
      for (const auto& l : left)
        for (const auto& r : right) {
          std::vector<ClauseLit> c = l;
          c.insert(c.end(), r.begin(), r.end());
          out.push_back(std::move(c));
        }
      return;
    }
    if (t->kind == TermKind::Not) {
      out.push_back({ClauseLit{false, t->child0}});
      return;
    }
    out.push_back({ClauseLit{true, t}});
  }
};

}  // namespace

std::optional<bool> eval_ground_lit(const ClauseLit& l) {
  const TermPtr& a = l.atom;
  if (a->kind != TermKind::Cmp) return std::nullopt;
  if (a->child0->kind != TermKind::DegLit || a->child1->kind != TermKind::DegLit)
    return std::nullopt;
  if (a->child0->dim != a->child1->dim) return std::nullopt;
  bool ge = a->child0->value >= a->child1->value;
  return l.pos ? ge : !ge;
}

std::optional<Clause> simplify_clause(const Clause& c) {
  Clause out;
  out.id = c.id;
  out.rule = c.rule;
  out.parents = c.parents;
  out.label = c.label;
  out.support = c.support;
  for (const ClauseLit& l : c.lits) {
    if (auto v = eval_ground_lit(l)) {
      if (*v) return std::nullopt;  // clause is true
      continue;                     // literal is false; drop it
    }
    bool dup = false;
    for (const ClauseLit& k : out.lits) {
      if (lit_equal(k, l)) {
        dup = true;
        break;
      }
      if (k.pos != l.pos && term_identical(k.atom, l.atom)) return std::nullopt;  // tautology
    }
    if (!dup) out.lits.push_back(l);
  }
  return out;
}

std::vector<Clause> clausify(const TermPtr& formula, const std::string& label,
                             int& skolem_counter) {
  Clausifier cl(skolem_counter);
  Subst renaming;
  std::vector<TermPtr> univ;
  TermPtr nnf = cl.transform(cmp_to_ge(formula), true, renaming, univ);
  std::vector<std::vector<ClauseLit>> lists;
  cl.cnf(nnf, lists);
  std::vector<Clause> out;
  for (auto& lits : lists) {
    Clause c;
    c.lits = std::move(lits);
    c.rule = "input";
    c.label = label;
    if (auto s = simplify_clause(c)) out.push_back(std::move(*s));
  }
  return out;
}

// ---------------------------------------------------------------- substitution

TermPtr apply_subst(const TermPtr& t, const Subst& s) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = s.find(t->name);
      if (it == s.end()) return t;
      return apply_subst(it->second, s);
    }
    case TermKind::Const:
    case TermKind::DegLit:
      return t;
    default: {
      Term r = *t;
      if (t->child0) r.child0 = apply_subst(t->child0, s);
      if (t->child1) r.child1 = apply_subst(t->child1, s);
      return std::make_shared<Term>(std::move(r));
    }
  }
}

namespace {

bool occurs(const std::string& v, const TermPtr& t, const Subst& s) {
  switch (t->kind) {
    case TermKind::Var: {
      if (t->name == v) return true;
      auto it = s.find(t->name);
      return it != s.end() && occurs(v, it->second, s);
    }
    case TermKind::Const:
    case TermKind::DegLit:
      return false;
    default:
      return (t->child0 && occurs(v, t->child0, s)) || (t->child1 && occurs(v, t->child1, s));
  }
}

TermPtr walk(const TermPtr& t, const Subst& s) {
  TermPtr cur = t;
  while (cur->kind == TermKind::Var) {
    auto it = s.find(cur->name);
    if (it == s.end()) return cur;
    cur = it->second;
  }
  return cur;
}

bool bind_var(const TermPtr& var, const TermPtr& t, Subst& s) {
  if (t->kind == TermKind::Var && t->name == var->name) return true;
  if (occurs(var->name, t, s)) return false;
  TypePtr vs = var->type;
  TypePtr ts;
  try {
    ts = term_sort(t);
  } catch (const TypeError&) {
    return false;
  }
  if (!type_equal(vs, ts)) return false;
  s[var->name] = t;
  return true;
}

}  // namespace

bool unify(const TermPtr& a0, const TermPtr& b0, Subst& s) {
  TermPtr a = walk(a0, s), b = walk(b0, s);
  if (a->kind == TermKind::Var) return bind_var(a, b, s);
  if (b->kind == TermKind::Var) return bind_var(b, a, s);
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Const:
      return a->name == b->name && type_equal(a->type, b->type);
    case TermKind::DegLit:
      return a->value == b->value && a->dim == b->dim;
    case TermKind::App:
    case TermKind::DegAdd:
      return unify(a->child0, b->child0, s) && unify(a->child1, b->child1, s);
    case TermKind::Cmp:
      return a->cmp == b->cmp && unify(a->child0, b->child0, s) &&
             unify(a->child1, b->child1, s);
    default:
      return false;
  }
}

bool match_terms(const TermPtr& pattern, const TermPtr& onto, Subst& s) {
  if (pattern->kind == TermKind::Var) {
    auto it = s.find(pattern->name);
    if (it != s.end()) return term_identical(it->second, onto);
    TypePtr ts;
    try {
      ts = term_sort(onto);
    } catch (const TypeError&) {
      return false;
    }
    if (!type_equal(pattern->type, ts)) return false;
    s[pattern->name] = onto;
    return true;
  }
  if (pattern->kind != onto->kind) return false;
  switch (pattern->kind) {
    case TermKind::Const:
      return pattern->name == onto->name;
    case TermKind::DegLit:
      return pattern->value == onto->value && pattern->dim == onto->dim;
    case TermKind::App:
    case TermKind::DegAdd:
      return match_terms(pattern->child0, onto->child0, s) &&
             match_terms(pattern->child1, onto->child1, s);
    case TermKind::Cmp:
      return pattern->cmp == onto->cmp && match_terms(pattern->child0, onto->child0, s) &&
             match_terms(pattern->child1, onto->child1, s);
    default:
      return false;
  }
}

Clause rename_clause(const Clause& c, int salt) {
  Subst s;
  std::function<void(const TermPtr&)> collect = [&](const TermPtr& t) {
    if (t->kind == TermKind::Var) {
      if (!s.count(t->name)) s[t->name] = mk_var(t->name + "_" + std::to_string(salt), t->type);
      return;
    }
    if (t->child0) collect(t->child0);
    if (t->child1) collect(t->child1);
  };
  for (const ClauseLit& l : c.lits) collect(l.atom);
  Clause out = c;
  for (ClauseLit& l : out.lits) l.atom = apply_subst(l.atom, s);
  return out;
}

bool subsumes(const Clause& a, const Clause& b) {
  if (a.lits.size() > b.lits.size()) return false;
  // backtracking match of each literal of a onto some literal of b
  std::function<bool(size_t, const Subst&)> go = [&](size_t i, const Subst& s) {
    if (i == a.lits.size()) return true;
    for (const ClauseLit& bl : b.lits) {
      if (bl.pos != a.lits[i].pos) continue;
      Subst s2 = s;
      if (match_terms(a.lits[i].atom, bl.atom, s2) && go(i + 1, s2)) return true;
    }
    return false;
  };
  return go(0, Subst{});
}

bool is_ground_degree_clause(const Clause& c) {
  for (const ClauseLit& l : c.lits) {
    if (l.atom->kind != TermKind::Cmp) return false;
    if (!free_vars(l.atom).empty()) return false;
  }
  return !c.lits.empty();
}

}  // namespace anota
