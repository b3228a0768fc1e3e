#include "anota/formula_text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace anota {

// ---------------------------------------------------------------- name encodings

std::string theta_const_name(const std::string& adj, const std::string& cls) {
  return "th." + adj + "." + cls;
}
std::string choice_const_name(const std::string& noun) { return "the." + noun; }
std::string privative_const_name(const std::string& noun) { return "former." + noun; }
std::string measure_const_name(const std::string& dim) { return "mu." + dim; }

bool split_theta_const(const std::string& name, std::string& adj, std::string& cls) {
  if (name.rfind("th.", 0) != 0) return false;
  size_t dot = name.find('.', 3);
  if (dot == std::string::npos) return false;
  adj = name.substr(3, dot - 3);
  cls = name.substr(dot + 1);
  return !adj.empty() && !cls.empty();
}
bool split_choice_const(const std::string& name, std::string& noun) {
  if (name.rfind("the.", 0) != 0) return false;
  noun = name.substr(4);
  return !noun.empty();
}
bool split_privative_const(const std::string& name, std::string& noun) {
  if (name.rfind("former.", 0) != 0) return false;
  noun = name.substr(7);
  return !noun.empty();
}
bool split_measure_const(const std::string& name, std::string& dim) {
  if (name.rfind("mu.", 0) != 0) return false;
  dim = name.substr(3);
  return !dim.empty();
}

// ---------------------------------------------------------------- printer

namespace {

// Precedence: implies 1 (right), or 2, and 3, not 4, atoms 5.

void collect_names(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind == TermKind::Const) out.insert(t->name);
  if (t->child0) collect_names(t->child0, out);
  if (t->child1) collect_names(t->child1, out);
}

std::string sort_letter(const TypePtr& ty) {
  switch (ty->kind) {
    case SemType::Kind::E: return "E";
    case SemType::Kind::D: return "D";
    case SemType::Kind::T: return "T";
    default: return type_to_string(ty);
  }
}

struct Printer {
  std::set<std::string> taken;  // free vars and constants of the whole term
  std::map<std::string, std::vector<std::string>> display;  // binder renames

  std::string var_display(const std::string& name) {
    auto it = display.find(name);
    if (it != display.end() && !it->second.empty()) return it->second.back();
    return name;
  }

  std::string special_const(const std::string& name) {
    std::string a, b;
    if (split_theta_const(name, a, b)) return "th(" + a + ", " + b + ")";
    if (split_choice_const(name, a)) return "the(" + a + ")";
    return name;
  }

  // Collects an application spine f(a1)(a2).. into head + args.
  void spine(const TermPtr& t, TermPtr& head, std::vector<TermPtr>& args) {
    if (t->kind == TermKind::App) {
      spine(t->child0, head, args);
      args.push_back(t->child1);
    } else {
      head = t;
    }
  }

  std::string print(const TermPtr& t, int prec) {
    switch (t->kind) {
      case TermKind::Var:
        return var_display(t->name);
      case TermKind::Const:
        return special_const(t->name);
      case TermKind::DegLit:
        return "lit(" + rat_to_string(t->value) + ", " + t->dim + ")";
      case TermKind::DegAdd:
        return print(t->child0, 5) + " + " + print(t->child1, 6);
      case TermKind::Cmp: {
        const char* op = "";
        switch (t->cmp) {
          case CmpOp::Gt: op = ">"; break;
          case CmpOp::Ge: op = ">="; break;
          case CmpOp::Lt: op = "<"; break;
          case CmpOp::Le: op = "<="; break;
          case CmpOp::Eq: op = "="; break;
        }
        return print(t->child0, 5) + " " + op + " " + print(t->child1, 5);
      }
      case TermKind::Not: {
        std::string s = "~" + print(t->child0, 4);
        return s;
      }
      case TermKind::And: {
        std::string s = print(t->child0, 3) + " & " + print(t->child1, 4);
        return prec > 3 ? "(" + s + ")" : s;
      }
      case TermKind::Or: {
        std::string s = print(t->child0, 2) + " | " + print(t->child1, 3);
        return prec > 2 ? "(" + s + ")" : s;
      }
      case TermKind::Implies: {
        std::string s = print(t->child0, 2) + " -> " + print(t->child1, 1);
        return prec > 1 ? "(" + s + ")" : s;
      }
      case TermKind::Forall:
      case TermKind::Exists: {
        std::string shown = t->name;
        bool shadow = taken.count(shown) != 0;
        if (shadow) shown = fresh_name(shown, taken);
        taken.insert(shown);
        display[t->name].push_back(shown);
        TermPtr body = t->child0;
        std::string b = print(body, 0);
        bool wrap_body = body->kind == TermKind::And || body->kind == TermKind::Or ||
                         body->kind == TermKind::Implies;
        display[t->name].pop_back();
        taken.erase(shown);
        std::string s = (t->kind == TermKind::Forall ? "forall " : "exists ") + shown + ":" +
                        sort_letter(t->type) + ". " + (wrap_body ? "(" + b + ")" : b);
        return prec > 0 ? "(" + s + ")" : s;
      }
      case TermKind::Abs: {
        std::string shown = t->name;
        if (taken.count(shown)) shown = fresh_name(shown, taken);
        taken.insert(shown);
        display[t->name].push_back(shown);
        std::string b = print(t->child0, 0);
        display[t->name].pop_back();
        taken.erase(shown);
        std::string s = "\\" + shown + ":" + type_to_string(t->type) + ". " + b;
        return prec > 0 ? "(" + s + ")" : s;
      }
      case TermKind::App: {
        TermPtr head;
        std::vector<TermPtr> args;
        spine(t, head, args);
        std::string h;
        if (head->kind == TermKind::Var) {
          h = var_display(head->name);
        } else if (head->kind == TermKind::Const) {
          std::string noun, dim;
          if (split_privative_const(head->name, noun)) {
            h = "former(" + noun + ")";
          } else if (split_measure_const(head->name, dim)) {
            h = "mu_" + dim;
          } else {
            h = special_const(head->name);
          }
        } else {
          h = "(" + print(head, 0) + ")";
        }
        std::string s = h + "(";
        for (size_t i = 0; i < args.size(); ++i) {
          if (i) s += ", ";
          s += print(args[i], 0);
        }
        s += ")";
        return s;
      }
    }
    return "?";
  }
};

}  // namespace

std::string term_to_string(const TermPtr& t) {
  Printer p;
  collect_names(t, p.taken);
  for (const auto& v : free_vars(t)) p.taken.insert(v);
  return p.print(t, 0);
}

// ---------------------------------------------------------------- tokenizer

namespace {

enum class Tok {
  LParen, RParen, Comma, Dot, Colon, Backslash, Tilde, Amp, Bar, Arrow,
  Gt, Ge, Lt, Le, Eq, Plus, Minus, Ident, Number, End,
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  auto push = [&](Tok k, std::string t, size_t p) { out.push_back({k, std::move(t), p}); };
  while (i < s.size()) {
    char c = s[i];
    if (isspace((unsigned char)c)) {
      ++i;
      continue;
    }
    size_t p = i;
    if (isalpha((unsigned char)c) || c == '_') {
      size_t j = i;
      while (j < s.size() && (isalnum((unsigned char)s[j]) || s[j] == '_' || s[j] == '\'')) ++j;
      push(Tok::Ident, s.substr(i, j - i), p);
      i = j;
      continue;
    }
    if (isdigit((unsigned char)c)) {
      size_t j = i;
      while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
      if (j < s.size() && s[j] == '/' && j + 1 < s.size() && isdigit((unsigned char)s[j + 1])) {
        ++j;
        while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
      }
      push(Tok::Number, s.substr(i, j - i), p);
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, "(", p); ++i; break;
      case ')': push(Tok::RParen, ")", p); ++i; break;
      case ',': push(Tok::Comma, ",", p); ++i; break;
      case '.': push(Tok::Dot, ".", p); ++i; break;
      case ':': push(Tok::Colon, ":", p); ++i; break;
      case '\\': push(Tok::Backslash, "\\", p); ++i; break;
      case '~': push(Tok::Tilde, "~", p); ++i; break;
      case '&': push(Tok::Amp, "&", p); ++i; break;
      case '|': push(Tok::Bar, "|", p); ++i; break;
      case '+': push(Tok::Plus, "+", p); ++i; break;
      case '=': push(Tok::Eq, "=", p); ++i; break;
      case '>':
        if (i + 1 < s.size() && s[i + 1] == '=') { push(Tok::Ge, ">=", p); i += 2; }
        else { push(Tok::Gt, ">", p); ++i; }
        break;
      case '<':
        if (i + 1 < s.size() && s[i + 1] == '=') { push(Tok::Le, "<=", p); i += 2; }
        else { push(Tok::Lt, "<", p); ++i; }
        break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') { push(Tok::Arrow, "->", p); i += 2; }
        else { push(Tok::Minus, "-", p); ++i; }
        break;
      default:
        throw ParseError("formula syntax: unexpected character '" + std::string(1, c) +
                         "' at offset " + std::to_string(p));
    }
  }
  push(Tok::End, "", s.size());
  return out;
}

// ---------------------------------------------------------------- parser

struct FormulaParser {
  std::vector<Token> toks;
  size_t pos = 0;
  SymbolTable& syms;
  std::map<std::string, std::vector<TypePtr>> bound;
  std::string source;

  FormulaParser(const std::string& text, SymbolTable& s) : toks(lex(text)), syms(s), source(text) {}

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("formula syntax: " + msg + " at offset " + std::to_string(peek().pos) +
                     " in '" + source + "'");
  }

  const Token& peek() const { return toks[pos]; }
  Token take() { return toks[pos++]; }
  bool at(Tok k) const { return toks[pos].kind == k; }
  Token expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return take();
  }

  TypePtr lookup_bound(const std::string& n) {
    auto it = bound.find(n);
    if (it == bound.end() || it->second.empty()) return nullptr;
    return it->second.back();
  }

  // Registers or checks an inferred constant type.
  TermPtr constant(const std::string& name, const TypePtr& want) {
    auto it = syms.consts.find(name);
    if (it != syms.consts.end()) {
      if (!type_equal(it->second, want))
        fail("constant '" + name + "' used at type " + type_to_string(want) +
             " but previously " + type_to_string(it->second));
      return mk_const(name, it->second);
    }
    syms.consts[name] = want;
    return mk_const(name, want);
  }

  TypePtr parse_sort() {
    Token t = expect(Tok::Ident, "sort");
    if (t.text == "E") return ty_e();
    if (t.text == "D") return ty_d();
    if (t.text == "T") return ty_t();
    fail("unknown sort '" + t.text + "'");
  }

  TypePtr parse_type_syntax() {
    if (at(Tok::LParen)) {
      take();
      TypePtr a = parse_type_syntax();
      expect(Tok::Arrow, "'->'");
      TypePtr r = parse_type_syntax();
      expect(Tok::RParen, "')'");
      return ty_fun(a, r);
    }
    return parse_sort();
  }

  Rational parse_number() {
    bool neg = false;
    if (at(Tok::Minus)) {
      take();
      neg = true;
    }
    Token t = expect(Tok::Number, "number");
    Rational q;
    size_t slash = t.text.find('/');
    if (slash == std::string::npos) {
      q = Rational(Integer(t.text));
    } else {
      q = Rational(Integer(t.text.substr(0, slash)), Integer(t.text.substr(slash + 1)));
    }
    return neg ? -q : q;
  }

  TermPtr parse_formula() { return parse_implies(); }

  TermPtr parse_implies() {
    TermPtr l = parse_or();
    if (at(Tok::Arrow)) {
      take();
      return mk_implies(l, parse_implies());
    }
    return l;
  }

  TermPtr parse_or() {
    TermPtr l = parse_and();
    while (at(Tok::Bar)) {
      take();
      l = mk_or(l, parse_and());
    }
    return l;
  }

  TermPtr parse_and() {
    TermPtr l = parse_unary();
    while (at(Tok::Amp)) {
      take();
      l = mk_and(l, parse_unary());
    }
    return l;
  }

  TermPtr parse_unary() {
    if (at(Tok::Tilde)) {
      take();
      return mk_not(parse_unary());
    }
    if (at(Tok::Backslash)) {
      take();
      Token v = expect(Tok::Ident, "binder variable");
      expect(Tok::Colon, "':'");
      TypePtr ty = parse_type_syntax();
      expect(Tok::Dot, "'.'");
      bound[v.text].push_back(ty);
      TermPtr body = parse_formula();
      bound[v.text].pop_back();
      return mk_abs(v.text, ty, body);
    }
    if (at(Tok::Ident) && (peek().text == "forall" || peek().text == "exists")) {
      bool uni = take().text == "forall";
      Token v = expect(Tok::Ident, "quantified variable");
      expect(Tok::Colon, "':'");
      TypePtr ty = parse_sort();
      expect(Tok::Dot, "'.'");
      bound[v.text].push_back(ty);
      TermPtr body = parse_formula();
      bound[v.text].pop_back();
      return uni ? mk_forall(v.text, ty, body) : mk_exists(v.text, ty, body);
    }
    if (at(Tok::LParen)) {
      take();
      TermPtr e = parse_formula();
      expect(Tok::RParen, "')'");
      return maybe_term_continuation(e);
    }
    TermPtr t = parse_sum();
    return maybe_cmp(t);
  }

  TermPtr maybe_term_continuation(TermPtr e) {
    if (at(Tok::Plus)) {
      while (at(Tok::Plus)) {
        take();
        e = mk_degadd(e, parse_factor());
      }
    }
    return maybe_cmp(e);
  }

  TermPtr maybe_cmp(TermPtr l) {
    CmpOp op;
    switch (peek().kind) {
      case Tok::Gt: op = CmpOp::Gt; break;
      case Tok::Ge: op = CmpOp::Ge; break;
      case Tok::Lt: op = CmpOp::Lt; break;
      case Tok::Le: op = CmpOp::Le; break;
      case Tok::Eq: op = CmpOp::Eq; break;
      default: return l;
    }
    take();
    return mk_cmp(op, l, parse_sum());
  }

  TermPtr parse_sum() {
    TermPtr f = parse_factor();
    while (at(Tok::Plus)) {
      take();
      f = mk_degadd(f, parse_factor());
    }
    return f;
  }

  TermPtr parse_factor() {
    if (at(Tok::LParen)) {
      take();
      TermPtr e = parse_formula();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (!at(Tok::Ident)) fail("expected term");
    Token h = take();

    if (h.text == "lit") {
      expect(Tok::LParen, "'('");
      Rational v = parse_number();
      expect(Tok::Comma, "','");
      Token d = expect(Tok::Ident, "dimension");
      expect(Tok::RParen, "')'");
      return mk_deglit(v, d.text);
    }
    if (h.text == "th") {
      expect(Tok::LParen, "'('");
      Token a = expect(Tok::Ident, "adjective");
      expect(Tok::Comma, "','");
      Token c = expect(Tok::Ident, "comparison class");
      expect(Tok::RParen, "')'");
      return mk_const(theta_const_name(a.text, c.text), ty_d());
    }
    if (h.text == "the") {
      expect(Tok::LParen, "'('");
      Token n = expect(Tok::Ident, "noun");
      expect(Tok::RParen, "')'");
      return mk_const(choice_const_name(n.text), ty_e());
    }

    TermPtr base;
    if (TypePtr bt = lookup_bound(h.text)) {
      base = mk_var(h.text, bt);
    } else if (h.text == "former") {
      expect(Tok::LParen, "'('");
      Token n = expect(Tok::Ident, "noun");
      expect(Tok::RParen, "')'");
      base = mk_const(privative_const_name(n.text), ty_fun(ty_e(), ty_t()));
    } else if (h.text.rfind("mu_", 0) == 0 && h.text.size() > 3) {
      base = mk_const(measure_const_name(h.text.substr(3)), ty_fun(ty_e(), ty_d()));
    } else if (!at(Tok::LParen)) {
      // bare identifier: entity constant unless previously known otherwise
      auto it = syms.consts.find(h.text);
      if (it != syms.consts.end()) return mk_const(h.text, it->second);
      return constant(h.text, ty_e());
    } else {
      // applied head: parse arguments first, infer predicate type
      std::vector<TermPtr> args = parse_args();
      TypePtr res = ty_t();
      TypePtr want = res;
      for (auto it = args.rbegin(); it != args.rend(); ++it) want = ty_fun(type_of(*it), want);
      auto known = syms.consts.find(h.text);
      TermPtr head;
      if (known != syms.consts.end()) {
        head = mk_const(h.text, known->second);
      } else {
        head = constant(h.text, want);
      }
      TermPtr app = head;
      for (auto& a : args) app = mk_app(app, a);
      return finish_calls(app);
    }
    return finish_calls(base);
  }

  std::vector<TermPtr> parse_args() {
    expect(Tok::LParen, "'('");
    std::vector<TermPtr> args;
    if (!at(Tok::RParen)) {
      args.push_back(parse_formula());
      while (at(Tok::Comma)) {
        take();
        args.push_back(parse_formula());
      }
    }
    expect(Tok::RParen, "')'");
    return args;
  }

  TermPtr finish_calls(TermPtr t) {
    while (at(Tok::LParen)) {
      for (TermPtr a : parse_args()) t = mk_app(t, a);
    }
    return t;
  }
};

}  // namespace

TermPtr parse_term_text(const std::string& text, SymbolTable& syms) {
  FormulaParser p(text, syms);
  TermPtr t = p.parse_formula();
  if (!p.at(Tok::End)) p.fail("trailing input");
  return t;
}

TermPtr parse_term_text(const std::string& text) {
  SymbolTable syms;
  return parse_term_text(text, syms);
}

TermPtr parse_formula_text(const std::string& text, SymbolTable& syms) {
  TermPtr t = parse_term_text(text, syms);
  TypePtr ty = type_of(t);
  if (ty->kind != SemType::Kind::T)
    throw ParseError("expected a formula but '" + text + "' has type " + type_to_string(ty));
  return t;
}

TermPtr parse_formula_text(const std::string& text) {
  SymbolTable syms;
  return parse_formula_text(text, syms);
}

}  // namespace anota
