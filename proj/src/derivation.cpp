#include "anota/derivation.hpp"

#include <fstream>
#include <sstream>

namespace anota {

std::string rule_to_string(RuleName r) {
  switch (r) {
    case RuleName::Lex: return "lex";
    case RuleName::ForwardApp: return "fa";
    case RuleName::BackwardApp: return "ba";
    case RuleName::ForwardComp: return "fc";
    case RuleName::BackwardComp: return "bc";
    case RuleName::TypeRaise: return "tr";
  }
  return "?";
}

namespace {

struct Scanner {
  std::string src;
  size_t i = 0;
  int line = 1, col = 1;

  explicit Scanner(std::string s) : src(std::move(s)) {}

  [[noreturn]] void fail(const std::string& msg) { throw DerivationError(msg, line, col); }

  char peek() const { return i < src.size() ? src[i] : '\0'; }

  char advance() {
    char c = src[i++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (i < src.size()) {
      char c = peek();
      if (isspace((unsigned char)c)) {
        advance();
      } else if (c == ';') {  // comment to end of line
        while (i < src.size() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string word() {
    skip_ws();
    size_t start = i;
    while (i < src.size() && !isspace((unsigned char)peek()) && peek() != '(' && peek() != ')' &&
           peek() != '"')
      advance();
    if (i == start) fail("expected a word");
    return src.substr(start, i - start);
  }

  std::string quoted() {
    skip_ws();
    if (peek() != '"') fail("expected a quoted token");
    advance();
    std::string out;
    while (i < src.size() && peek() != '"') out.push_back(advance());
    if (i >= src.size()) fail("unterminated quoted token");
    advance();
    return out;
  }

  // Category text: a bare atom or a balanced parenthesized group without
  // internal whitespace requirements.
  std::string category_text() {
    skip_ws();
    if (peek() == '(') {
      size_t start = i;
      int depth = 0;
      while (i < src.size()) {
        char c = advance();
        if (c == '(') ++depth;
        if (c == ')') {
          --depth;
          if (depth == 0) break;
        }
      }
      if (depth != 0) fail("unbalanced category parentheses");
      return src.substr(start, i - start);
    }
    return word();
  }

  DerivPtr parse_tree() {
    skip_ws();
    int l = line, c = col;
    expect('(');
    std::string head = word();
    auto mk = [&](DerivationTree t) {
      t.line = l;
      t.col = c;
      return std::make_shared<DerivationTree>(std::move(t));
    };
    if (head == "lex") {
      DerivationTree t;
      t.rule = RuleName::Lex;
      t.token = quoted();
      t.entry_key = word();
      std::string cat = category_text();
      try {
        t.cat = parse_category(cat);
      } catch (const CategoryError& e) {
        fail(e.what());
      }
      expect(')');
      return mk(std::move(t));
    }
    if (head == "u") {
      std::string rule = word();
      if (rule != "tr") fail("unknown unary rule '" + rule + "'");
      DerivationTree t;
      t.rule = RuleName::TypeRaise;
      std::string cat = category_text();
      try {
        t.cat = parse_category(cat);
      } catch (const CategoryError& e) {
        fail(e.what());
      }
      t.left = parse_tree();
      expect(')');
      return mk(std::move(t));
    }
    if (head == "b") {
      std::string rule = word();
      DerivationTree t;
      if (rule == "fa") t.rule = RuleName::ForwardApp;
      else if (rule == "ba") t.rule = RuleName::BackwardApp;
      else if (rule == "fc") t.rule = RuleName::ForwardComp;
      else if (rule == "bc") t.rule = RuleName::BackwardComp;
      else fail("unknown binary rule '" + rule + "'");
      std::string cat = category_text();
      try {
        t.cat = parse_category(cat);
      } catch (const CategoryError& e) {
        fail(e.what());
      }
      t.left = parse_tree();
      t.right = parse_tree();
      expect(')');
      return mk(std::move(t));
    }
    fail("unknown node head '" + head + "'");
  }
};

void serialize_rec(const DerivPtr& t, std::ostringstream& out, int indent) {
  std::string pad(indent, ' ');
  switch (t->rule) {
    case RuleName::Lex:
      out << pad << "(lex \"" << t->token << "\" " << t->entry_key << " "
          << cat_to_string(t->cat) << ")";
      return;
    case RuleName::TypeRaise:
      out << pad << "(u tr " << cat_to_string(t->cat) << "\n";
      serialize_rec(t->left, out, indent + 2);
      out << ")";
      return;
    default:
      out << pad << "(b " << rule_to_string(t->rule) << " " << cat_to_string(t->cat) << "\n";
      serialize_rec(t->left, out, indent + 2);
      out << "\n";
      serialize_rec(t->right, out, indent + 2);
      out << ")";
      return;
  }
}

}  // namespace

DerivPtr parse_derivation(const std::string& text) {
  Scanner s(text);
  DerivPtr t = s.parse_tree();
  s.skip_ws();
  if (s.i != s.src.size()) s.fail("trailing input after derivation");
  return t;
}

DerivPtr parse_derivation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open derivation file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_derivation(ss.str());
}

std::string serialize_derivation(const DerivPtr& t) {
  std::ostringstream out;
  serialize_rec(t, out, 0);
  out << "\n";
  return out.str();
}

namespace {

void validate_rec(const DerivPtr& t, const std::string& path, std::vector<Violation>& out) {
  auto bad = [&](const std::string& msg) { out.push_back({path, msg}); };
  switch (t->rule) {
    case RuleName::Lex:
      return;
    case RuleName::TypeRaise: {
      validate_rec(t->left, path + ".child", out);
      // child X must lift to T/(T\X)
      const CatPtr& c = t->cat;
      if (c->kind != Category::Kind::Forward || c->arg->kind != Category::Kind::Backward ||
          !cat_equal(c->res, c->arg->res) || !cat_equal(c->arg->arg, t->left->cat)) {
        bad("type raising must produce T/(T\\X) from X; got " + cat_to_string(c) + " from " +
            cat_to_string(t->left->cat));
      }
      return;
    }
    case RuleName::ForwardApp: {
      validate_rec(t->left, path + ".left", out);
      validate_rec(t->right, path + ".right", out);
      const CatPtr& f = t->left->cat;
      if (f->kind != Category::Kind::Forward)
        bad("forward application requires X/Y on the left; got " + cat_to_string(f));
      else if (!cat_equal(f->arg, t->right->cat))
        bad("forward application argument mismatch: " + cat_to_string(f) + " applied to " +
            cat_to_string(t->right->cat));
      else if (!cat_equal(f->res, t->cat))
        bad("forward application result should be " + cat_to_string(f->res) + "; node says " +
            cat_to_string(t->cat));
      return;
    }
    case RuleName::BackwardApp: {
      validate_rec(t->left, path + ".left", out);
      validate_rec(t->right, path + ".right", out);
      const CatPtr& f = t->right->cat;
      if (f->kind != Category::Kind::Backward)
        bad("backward application requires X\\Y on the right; got " + cat_to_string(f));
      else if (!cat_equal(f->arg, t->left->cat))
        bad("backward application argument mismatch: " + cat_to_string(f) + " applied to " +
            cat_to_string(t->left->cat));
      else if (!cat_equal(f->res, t->cat))
        bad("backward application result should be " + cat_to_string(f->res) + "; node says " +
            cat_to_string(t->cat));
      return;
    }
    case RuleName::ForwardComp: {
      validate_rec(t->left, path + ".left", out);
      validate_rec(t->right, path + ".right", out);
      const CatPtr& f = t->left->cat;   // X/Y
      const CatPtr& g = t->right->cat;  // Y/Z
      if (f->kind != Category::Kind::Forward || g->kind != Category::Kind::Forward)
        bad("forward composition requires X/Y and Y/Z");
      else if (!cat_equal(f->arg, g->res))
        bad("forward composition middle category mismatch: " + cat_to_string(f) + " with " +
            cat_to_string(g));
      else if (!cat_equal(t->cat, cat_forward(f->res, g->arg)))
        bad("forward composition result should be " +
            cat_to_string(cat_forward(f->res, g->arg)) + "; node says " + cat_to_string(t->cat));
      return;
    }
    case RuleName::BackwardComp: {
      validate_rec(t->left, path + ".left", out);
      validate_rec(t->right, path + ".right", out);
      const CatPtr& g = t->left->cat;   // Y\Z
      const CatPtr& f = t->right->cat;  // X\Y
      if (f->kind != Category::Kind::Backward || g->kind != Category::Kind::Backward)
        bad("backward composition requires Y\\Z and X\\Y");
      else if (!cat_equal(f->arg, g->res))
        bad("backward composition middle category mismatch: " + cat_to_string(g) + " with " +
            cat_to_string(f));
      else if (!cat_equal(t->cat, cat_backward(f->res, g->arg)))
        bad("backward composition result should be " +
            cat_to_string(cat_backward(f->res, g->arg)) + "; node says " + cat_to_string(t->cat));
      return;
    }
  }
}

void tokens_rec(const DerivPtr& t, std::vector<std::string>& out) {
  if (t->rule == RuleName::Lex) {
    if (!t->token.empty()) out.push_back(t->token);
    return;
  }
  if (t->left) tokens_rec(t->left, out);
  if (t->right) tokens_rec(t->right, out);
}

}  // namespace

std::vector<Violation> validate_derivation(const DerivPtr& t) {
  std::vector<Violation> out;
  validate_rec(t, "root", out);
  return out;
}

std::vector<std::string> derivation_tokens(const DerivPtr& t) {
  std::vector<std::string> out;
  tokens_rec(t, out);
  return out;
}

}  // namespace anota
