#include "anota/term.hpp"

#include <cassert>
#include <map>

#include "anota/formula_text.hpp"

namespace anota {

// ---------------------------------------------------------------- types

TypePtr ty_e() {
  static TypePtr t = std::make_shared<SemType>(SemType{SemType::Kind::E, nullptr, nullptr});
  return t;
}
TypePtr ty_d() {
  static TypePtr t = std::make_shared<SemType>(SemType{SemType::Kind::D, nullptr, nullptr});
  return t;
}
TypePtr ty_t() {
  static TypePtr t = std::make_shared<SemType>(SemType{SemType::Kind::T, nullptr, nullptr});
  return t;
}
TypePtr ty_fun(TypePtr arg, TypePtr res) {
  return std::make_shared<SemType>(SemType{SemType::Kind::Fun, std::move(arg), std::move(res)});
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind != SemType::Kind::Fun) return true;
  return type_equal(a->arg, b->arg) && type_equal(a->res, b->res);
}

std::string type_to_string(const TypePtr& t) {
  switch (t->kind) {
    case SemType::Kind::E: return "E";
    case SemType::Kind::D: return "D";
    case SemType::Kind::T: return "T";
    case SemType::Kind::Fun:
      return "(" + type_to_string(t->arg) + "->" + type_to_string(t->res) + ")";
  }
  return "?";
}

namespace {

TypePtr parse_type_at(const std::string& s, size_t& i) {
  auto skip = [&] { while (i < s.size() && isspace((unsigned char)s[i])) ++i; };
  skip();
  if (i >= s.size()) throw TypeError("type syntax: unexpected end in '" + s + "'");
  if (s[i] == '(') {
    ++i;
    TypePtr a = parse_type_at(s, i);
    skip();
    if (i + 1 >= s.size() || s[i] != '-' || s[i + 1] != '>')
      throw TypeError("type syntax: expected '->' in '" + s + "'");
    i += 2;
    TypePtr r = parse_type_at(s, i);
    skip();
    if (i >= s.size() || s[i] != ')') throw TypeError("type syntax: expected ')' in '" + s + "'");
    ++i;
    return ty_fun(a, r);
  }
  char c = s[i++];
  switch (c) {
    case 'E': return ty_e();
    case 'D': return ty_d();
    case 'T': return ty_t();
    default: throw TypeError(std::string("type syntax: unknown sort '") + c + "' in '" + s + "'");
  }
}

}  // namespace

TypePtr parse_type(const std::string& text) {
  size_t i = 0;
  TypePtr t = parse_type_at(text, i);
  while (i < text.size() && isspace((unsigned char)text[i])) ++i;
  if (i != text.size()) throw TypeError("type syntax: trailing input in '" + text + "'");
  return t;
}

// ---------------------------------------------------------------- builders

namespace {
TermPtr node(Term t) { return std::make_shared<Term>(std::move(t)); }
}  // namespace

TermPtr mk_var(std::string name, TypePtr type) {
  Term t;
  t.kind = TermKind::Var;
  t.name = std::move(name);
  t.type = std::move(type);
  return node(std::move(t));
}
TermPtr mk_const(std::string name, TypePtr type) {
  Term t;
  t.kind = TermKind::Const;
  t.name = std::move(name);
  t.type = std::move(type);
  return node(std::move(t));
}
TermPtr mk_abs(std::string var, TypePtr var_type, TermPtr body) {
  Term t;
  t.kind = TermKind::Abs;
  t.name = std::move(var);
  t.type = std::move(var_type);
  t.child0 = std::move(body);
  return node(std::move(t));
}
TermPtr mk_app(TermPtr fun, TermPtr arg) {
  Term t;
  t.kind = TermKind::App;
  t.child0 = std::move(fun);
  t.child1 = std::move(arg);
  return node(std::move(t));
}
TermPtr mk_app(TermPtr fun, TermPtr a1, TermPtr a2) {
  return mk_app(mk_app(std::move(fun), std::move(a1)), std::move(a2));
}
TermPtr mk_not(TermPtr a) {
  Term t;
  t.kind = TermKind::Not;
  t.child0 = std::move(a);
  return node(std::move(t));
}
TermPtr mk_and(TermPtr a, TermPtr b) {
  Term t;
  t.kind = TermKind::And;
  t.child0 = std::move(a);
  t.child1 = std::move(b);
  return node(std::move(t));
}
TermPtr mk_or(TermPtr a, TermPtr b) {
  Term t;
  t.kind = TermKind::Or;
  t.child0 = std::move(a);
  t.child1 = std::move(b);
  return node(std::move(t));
}
TermPtr mk_implies(TermPtr a, TermPtr b) {
  Term t;
  t.kind = TermKind::Implies;
  t.child0 = std::move(a);
  t.child1 = std::move(b);
  return node(std::move(t));
}
TermPtr mk_forall(std::string var, TypePtr sort, TermPtr body) {
  Term t;
  t.kind = TermKind::Forall;
  t.name = std::move(var);
  t.type = std::move(sort);
  t.child0 = std::move(body);
  return node(std::move(t));
}
TermPtr mk_exists(std::string var, TypePtr sort, TermPtr body) {
  Term t;
  t.kind = TermKind::Exists;
  t.name = std::move(var);
  t.type = std::move(sort);
  t.child0 = std::move(body);
  return node(std::move(t));
}
TermPtr mk_deglit(Rational value, std::string dim) {
  Term t;
  t.kind = TermKind::DegLit;
  t.value = std::move(value);
  t.dim = std::move(dim);
  return node(std::move(t));
}
TermPtr mk_degadd(TermPtr a, TermPtr b) {
  Term t;
  t.kind = TermKind::DegAdd;
  t.child0 = std::move(a);
  t.child1 = std::move(b);
  return node(std::move(t));
}
TermPtr mk_cmp(CmpOp op, TermPtr lhs, TermPtr rhs) {
  Term t;
  t.kind = TermKind::Cmp;
  t.cmp = op;
  t.child0 = std::move(lhs);
  t.child1 = std::move(rhs);
  return node(std::move(t));
}

// ---------------------------------------------------------------- free vars

static void free_vars_rec(const TermPtr& t, std::set<std::string>& bound,
                          std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case TermKind::Const:
    case TermKind::DegLit:
      return;
    case TermKind::Abs:
    case TermKind::Forall:
    case TermKind::Exists: {
      bool was = bound.count(t->name) != 0;
      bound.insert(t->name);
      free_vars_rec(t->child0, bound, out);
      if (!was) bound.erase(t->name);
      return;
    }
    default:
      if (t->child0) free_vars_rec(t->child0, bound, out);
      if (t->child1) free_vars_rec(t->child1, bound, out);
      return;
  }
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  free_vars_rec(t, bound, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

// ---------------------------------------------------------------- substitution

TermPtr substitute(const TermPtr& t, const std::string& name, const TermPtr& value) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == name ? value : t;
    case TermKind::Const:
    case TermKind::DegLit:
      return t;
    case TermKind::Abs:
    case TermKind::Forall:
    case TermKind::Exists: {
      if (t->name == name) return t;  // shadowed
      std::set<std::string> fv_value = free_vars(value);
      if (fv_value.count(t->name)) {
        // rename binder to dodge capture
        std::set<std::string> avoid = fv_value;
        for (const auto& v : free_vars(t->child0)) avoid.insert(v);
        avoid.insert(name);
        std::string nn = fresh_name(t->name, avoid);
        TermPtr body = substitute(t->child0, t->name, mk_var(nn, t->type));
        body = substitute(body, name, value);
        Term r = *t;
        r.name = nn;
        r.child0 = body;
        return node(std::move(r));
      }
      Term r = *t;
      r.child0 = substitute(t->child0, name, value);
      return node(std::move(r));
    }
    default: {
      Term r = *t;
      if (t->child0) r.child0 = substitute(t->child0, name, value);
      if (t->child1) r.child1 = substitute(t->child1, name, value);
      return node(std::move(r));
    }
  }
}

// ---------------------------------------------------------------- typing

namespace {

using TypeEnv = std::map<std::string, std::vector<TypePtr>>;

TypePtr type_of_rec(const TermPtr& t, TypeEnv& env) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = env.find(t->name);
      if (it == env.end() || it->second.empty()) {
        if (!t->type) throw TypeError("unbound variable without annotation: " + t->name);
        return t->type;
      }
      return it->second.back();
    }
    case TermKind::Const:
      if (!t->type) throw TypeError("constant without type: " + t->name);
      return t->type;
    case TermKind::Abs: {
      env[t->name].push_back(t->type);
      TypePtr body = type_of_rec(t->child0, env);
      env[t->name].pop_back();
      return ty_fun(t->type, body);
    }
    case TermKind::App: {
      TypePtr f = type_of_rec(t->child0, env);
      TypePtr a = type_of_rec(t->child1, env);
      if (f->kind != SemType::Kind::Fun)
        throw TypeError("application of non-function in: " + term_to_string(t));
      if (!type_equal(f->arg, a))
        throw TypeError("argument type mismatch in: " + term_to_string(t) + " (expected " +
                        type_to_string(f->arg) + ", got " + type_to_string(a) + ")");
      return f->res;
    }
    case TermKind::Not: {
      TypePtr a = type_of_rec(t->child0, env);
      if (a->kind != SemType::Kind::T)
        throw TypeError("negation of non-formula in: " + term_to_string(t));
      return ty_t();
    }
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Implies: {
      TypePtr a = type_of_rec(t->child0, env);
      TypePtr b = type_of_rec(t->child1, env);
      if (a->kind != SemType::Kind::T || b->kind != SemType::Kind::T)
        throw TypeError("connective over non-formula in: " + term_to_string(t));
      return ty_t();
    }
    case TermKind::Forall:
    case TermKind::Exists: {
      if (t->type->kind != SemType::Kind::E && t->type->kind != SemType::Kind::D)
        throw TypeError("quantifier over non-individual sort in: " + term_to_string(t));
      env[t->name].push_back(t->type);
      TypePtr body = type_of_rec(t->child0, env);
      env[t->name].pop_back();
      if (body->kind != SemType::Kind::T)
        throw TypeError("quantifier body is not a formula in: " + term_to_string(t));
      return ty_t();
    }
    case TermKind::DegLit:
      return ty_d();
    case TermKind::DegAdd: {
      TypePtr a = type_of_rec(t->child0, env);
      TypePtr b = type_of_rec(t->child1, env);
      if (a->kind != SemType::Kind::D || b->kind != SemType::Kind::D)
        throw TypeError("degree addition over non-degrees in: " + term_to_string(t));
      return ty_d();
    }
    case TermKind::Cmp: {
      TypePtr a = type_of_rec(t->child0, env);
      TypePtr b = type_of_rec(t->child1, env);
      if (a->kind != SemType::Kind::D || b->kind != SemType::Kind::D)
        throw TypeError("comparison over non-degrees in: " + term_to_string(t));
      return ty_t();
    }
  }
  throw TypeError("malformed term");
}

}  // namespace

TypePtr type_of(const TermPtr& t) {
  TypeEnv env;
  return type_of_rec(t, env);
}

// ---------------------------------------------------------------- alpha equality

namespace {

bool alpha_rec(const TermPtr& a, const TermPtr& b,
               std::vector<std::pair<std::string, std::string>>& env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool la = it->first == a->name, lb = it->second == b->name;
        if (la || lb) return la && lb;
      }
      return a->name == b->name;
    }
    case TermKind::Const:
      return a->name == b->name && type_equal(a->type, b->type);
    case TermKind::DegLit:
      return a->value == b->value && a->dim == b->dim;
    case TermKind::Abs:
    case TermKind::Forall:
    case TermKind::Exists: {
      if (!type_equal(a->type, b->type)) return false;
      env.emplace_back(a->name, b->name);
      bool ok = alpha_rec(a->child0, b->child0, env);
      env.pop_back();
      return ok;
    }
    case TermKind::Cmp:
      if (a->cmp != b->cmp) return false;
      [[fallthrough]];
    default: {
      if (!!a->child0 != !!b->child0 || !!a->child1 != !!b->child1) return false;
      if (a->child0 && !alpha_rec(a->child0, b->child0, env)) return false;
      if (a->child1 && !alpha_rec(a->child1, b->child1, env)) return false;
      return true;
    }
  }
}

}  // namespace

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  std::vector<std::pair<std::string, std::string>> env;
  return alpha_rec(a, b, env);
}

bool term_identical(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->name != b->name || a->cmp != b->cmp) return false;
  if (!!a->type != !!b->type || (a->type && !type_equal(a->type, b->type))) return false;
  if (a->kind == TermKind::DegLit && (a->value != b->value || a->dim != b->dim)) return false;
  if (!!a->child0 != !!b->child0 || !!a->child1 != !!b->child1) return false;
  if (a->child0 && !term_identical(a->child0, b->child0)) return false;
  if (a->child1 && !term_identical(a->child1, b->child1)) return false;
  return true;
}

// ---------------------------------------------------------------- normalization

namespace {

TermPtr norm(const TermPtr& t, int& fuel) {
  if (--fuel < 0) throw std::runtime_error("beta_normalize: step budget exhausted");
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
    case TermKind::DegLit:
      return t;
    case TermKind::Abs: {
      Term r = *t;
      r.child0 = norm(t->child0, fuel);
      return node(std::move(r));
    }
    case TermKind::App: {
      TermPtr f = norm(t->child0, fuel);
      if (f->kind == TermKind::Abs)
        return norm(substitute(f->child0, f->name, t->child1), fuel);
      Term r = *t;
      r.child0 = f;
      r.child1 = norm(t->child1, fuel);
      return node(std::move(r));
    }
    case TermKind::DegAdd: {
      TermPtr a = norm(t->child0, fuel);
      TermPtr b = norm(t->child1, fuel);
      if (a->kind == TermKind::DegLit && b->kind == TermKind::DegLit && a->dim == b->dim)
        return mk_deglit(a->value + b->value, a->dim);
      return mk_degadd(a, b);
    }
    default: {
      Term r = *t;
      if (t->child0) r.child0 = norm(t->child0, fuel);
      if (t->child1) r.child1 = norm(t->child1, fuel);
      return node(std::move(r));
    }
  }
}

}  // namespace

TermPtr beta_normalize(const TermPtr& t) {
  int fuel = 1000000;
  return norm(t, fuel);
}

}  // namespace anota
