#include "anota/category.hpp"

namespace anota {

CatPtr cat_atom(std::string name) {
  return std::make_shared<Category>(Category{Category::Kind::Atom, std::move(name), nullptr, nullptr});
}
CatPtr cat_forward(CatPtr res, CatPtr arg) {
  return std::make_shared<Category>(Category{Category::Kind::Forward, "", std::move(res), std::move(arg)});
}
CatPtr cat_backward(CatPtr res, CatPtr arg) {
  return std::make_shared<Category>(Category{Category::Kind::Backward, "", std::move(res), std::move(arg)});
}

CatPtr cat_s() { static CatPtr c = cat_atom("S"); return c; }
CatPtr cat_np() { static CatPtr c = cat_atom("NP"); return c; }
CatPtr cat_n() { static CatPtr c = cat_atom("N"); return c; }
CatPtr cat_d() { static CatPtr c = cat_atom("D"); return c; }
CatPtr cat_ap() {
  static CatPtr c = cat_backward(cat_backward(cat_s(), cat_np()), cat_d());
  return c;
}
CatPtr cat_np_lift() {
  static CatPtr c = cat_forward(cat_s(), cat_backward(cat_s(), cat_np()));
  return c;
}

bool cat_equal(const CatPtr& a, const CatPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == Category::Kind::Atom) return a->atom == b->atom;
  return cat_equal(a->res, b->res) && cat_equal(a->arg, b->arg);
}

std::string cat_to_string(const CatPtr& c) {
  switch (c->kind) {
    case Category::Kind::Atom:
      return c->atom;
    case Category::Kind::Forward:
      return "(" + cat_to_string(c->res) + "/" + cat_to_string(c->arg) + ")";
    case Category::Kind::Backward:
      return "(" + cat_to_string(c->res) + "\\" + cat_to_string(c->arg) + ")";
  }
  return "?";
}

namespace {

CatPtr parse_cat_at(const std::string& s, size_t& i) {
  auto skip = [&] { while (i < s.size() && isspace((unsigned char)s[i])) ++i; };
  skip();
  if (i >= s.size()) throw CategoryError("category syntax: unexpected end in '" + s + "'");
  if (s[i] == '(') {
    ++i;
    CatPtr res = parse_cat_at(s, i);
    skip();
    if (i >= s.size() || (s[i] != '/' && s[i] != '\\'))
      throw CategoryError("category syntax: expected slash in '" + s + "'");
    char slash = s[i++];
    CatPtr arg = parse_cat_at(s, i);
    skip();
    if (i >= s.size() || s[i] != ')')
      throw CategoryError("category syntax: expected ')' in '" + s + "'");
    ++i;
    return slash == '/' ? cat_forward(res, arg) : cat_backward(res, arg);
  }
  size_t j = i;
  while (j < s.size() && (isalnum((unsigned char)s[j]) || s[j] == '^')) ++j;
  if (j == i) throw CategoryError("category syntax: expected category at offset " +
                                  std::to_string(i) + " in '" + s + "'");
  std::string name = s.substr(i, j - i);
  i = j;
  if (name == "S") return cat_s();
  if (name == "NP") return cat_np();
  if (name == "N") return cat_n();
  if (name == "D") return cat_d();
  if (name == "AP") return cat_ap();
  if (name == "NP^") return cat_np_lift();
  throw CategoryError("category syntax: unknown atom '" + name + "' in '" + s + "'");
}

}  // namespace

CatPtr parse_category(const std::string& text) {
  size_t i = 0;
  CatPtr c = parse_cat_at(text, i);
  while (i < text.size() && isspace((unsigned char)text[i])) ++i;
  if (i != text.size())
    throw CategoryError("category syntax: trailing input in '" + text + "'");
  return c;
}

TypePtr cat_to_semtype(const CatPtr& c) {
  switch (c->kind) {
    case Category::Kind::Atom:
      if (c->atom == "S") return ty_t();
      if (c->atom == "NP") return ty_e();
      if (c->atom == "N") return ty_fun(ty_e(), ty_t());
      if (c->atom == "D") return ty_d();
      throw CategoryError("no semantic type for atom '" + c->atom + "'");
    case Category::Kind::Forward:
    case Category::Kind::Backward:
      return ty_fun(cat_to_semtype(c->arg), cat_to_semtype(c->res));
  }
  throw CategoryError("malformed category");
}

}  // namespace anota
