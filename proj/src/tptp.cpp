#include "anota/tptp.hpp"

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "anota/formula_text.hpp"

namespace anota {

namespace {

std::string mangle(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      out += '_';
    }
  }
  return out;
}

std::string mangle_value(const Rational& v) {
  Rational a = v < 0 ? -v : v;
  std::string s = (v < 0 ? std::string("m") : std::string());
  std::ostringstream os;
  os << numerator(a);
  s += os.str();
  if (denominator(a) != 1) {
    std::ostringstream od;
    od << denominator(a);
    s += "_over_" + od.str();
  }
  return s;
}

std::string lit_const(const std::string& dim, const Rational& v) {
  return "d_" + mangle(dim) + "_" + mangle_value(v);
}

class Translator {
 public:
  explicit Translator(const Lexicon& lex) : lex_(lex) {}

  std::string formula(const TermPtr& t) {
    var_names_.clear();
    var_counter_ = 0;
    return go(t);
  }

  const std::map<std::string, std::set<Rational>>& literals() const { return lits_; }
  bool uses_plus() const { return uses_plus_; }
  bool uses_geq() const { return uses_geq_; }

 private:
  std::string go(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Not:
        return "~ " + paren(t->child0);
      case TermKind::And:
        return paren(t->child0) + " & " + paren(t->child1);
      case TermKind::Or:
        return paren(t->child0) + " | " + paren(t->child1);
      case TermKind::Implies:
        return paren(t->child0) + " => " + paren(t->child1);
      case TermKind::Forall:
      case TermKind::Exists: {
        std::string v = "V" + std::to_string(++var_counter_);
        var_names_.push_back({t->name, v});
        std::string body = paren(t->child0);
        var_names_.pop_back();
        return std::string(t->kind == TermKind::Forall ? "!" : "?") + "[" + v + "]: " + body;
      }
      case TermKind::Cmp: {
        uses_geq_ = true;
        std::string a = term(t->child0);
        std::string b = term(t->child1);
        switch (t->cmp) {
          case CmpOp::Ge: return "geq(" + a + ", " + b + ")";
          case CmpOp::Le: return "geq(" + b + ", " + a + ")";
          case CmpOp::Gt: return "(geq(" + a + ", " + b + ") & ~ geq(" + b + ", " + a + "))";
          case CmpOp::Lt: return "(geq(" + b + ", " + a + ") & ~ geq(" + a + ", " + b + "))";
          case CmpOp::Eq: return "(geq(" + a + ", " + b + ") & geq(" + b + ", " + a + "))";
        }
        throw std::logic_error("comparison operator");
      }
      case TermKind::App:
        return atom(t);
      default:
        throw std::logic_error("unexpected formula node in export: " + term_to_string(t));
    }
  }

  std::string paren(const TermPtr& t) {
    std::string s = go(t);
    bool atom_like = t->kind == TermKind::App || t->kind == TermKind::Cmp ||
                     t->kind == TermKind::Not;
    return atom_like ? s : "(" + s + ")";
  }

  std::string atom(const TermPtr& t) {
    std::vector<const TermPtr*> args;
    const TermPtr* head = &t;
    while ((*head)->kind == TermKind::App) {
      args.push_back(&(*head)->child1);
      head = &(*head)->child0;
    }
    std::reverse(args.begin(), args.end());
    if ((*head)->kind != TermKind::Const) throw std::logic_error("non-constant head in export");
    std::string s = "p_" + mangle((*head)->name) + "(";
    for (size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + term(*args[i]);
    return s + ")";
  }

  std::string term(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Var: {
        for (auto it = var_names_.rbegin(); it != var_names_.rend(); ++it) {
          if (it->first == t->name) return it->second;
        }
        throw std::logic_error("free variable in export: " + t->name);
      }
      case TermKind::Const:
        return "c_" + mangle(t->name);
      case TermKind::DegLit:
        lits_[t->dim].insert(t->value);
        return lit_const(t->dim, t->value);
      case TermKind::DegAdd:
        uses_plus_ = true;
        return "plus(" + term(t->child0) + ", " + term(t->child1) + ")";
      case TermKind::App: {
        std::vector<const TermPtr*> args;
        const TermPtr* head = &t;
        while ((*head)->kind == TermKind::App) {
          args.push_back(&(*head)->child1);
          head = &(*head)->child0;
        }
        std::reverse(args.begin(), args.end());
        if ((*head)->kind != TermKind::Const) throw std::logic_error("non-constant head in export");
        std::string s = "f_" + mangle((*head)->name) + "(";
        for (size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + term(*args[i]);
        return s + ")";
      }
      default:
        throw std::logic_error("unexpected term node in export: " + term_to_string(t));
    }
  }

  const Lexicon& lex_;
  std::vector<std::pair<std::string, std::string>> var_names_;
  int var_counter_ = 0;
  std::map<std::string, std::set<Rational>> lits_;
  bool uses_plus_ = false;
  bool uses_geq_ = false;
};

}  // namespace

std::string to_tptp(const std::vector<LabeledFormula>& axioms,
                    const std::vector<LabeledFormula>& premises, const TermPtr& goal,
                    const Lexicon& lex) {
  Translator tr(lex);
  std::ostringstream os;
  os << "% degree-semantics entailment problem\n";
  std::vector<std::pair<std::string, std::string>> lines;
  int i = 0;
  for (const auto& a : axioms) {
    lines.push_back({"ax_" + std::to_string(++i) + "_" + mangle(a.label), tr.formula(a.formula)});
  }
  int j = 0;
  for (const auto& p : premises) {
    lines.push_back({"premise_" + std::to_string(++j), tr.formula(p.formula)});
  }
  std::string goal_text = tr.formula(goal);

  if (tr.uses_geq()) {
    os << "fof(geq_refl, axiom, ![X]: geq(X, X)).\n";
    os << "fof(geq_total, axiom, ![X, Y]: (geq(X, Y) | geq(Y, X))).\n";
    os << "fof(geq_trans, axiom, ![X, Y, Z]: ((geq(X, Y) & geq(Y, Z)) => geq(X, Z))).\n";
  }
  if (tr.uses_plus()) {
    os << "fof(plus_mono, axiom, ![X, Y, O]: (geq(X, Y) => geq(plus(X, O), plus(Y, O)))).\n";
  }
  // total order on the degree literals of each dimension, then integer steps
  for (const auto& [dim, vals] : tr.literals()) {
    std::vector<Rational> v(vals.begin(), vals.end());
    int k = 0;
    for (size_t a = 0; a < v.size(); ++a) {
      for (size_t b = a + 1; b < v.size(); ++b) {
        os << "fof(lit_" << mangle(dim) << "_" << ++k << ", axiom, geq(" << lit_const(dim, v[b])
           << ", " << lit_const(dim, v[a]) << ")).\n";
        os << "fof(lit_" << mangle(dim) << "_" << ++k << ", axiom, ~ geq(" << lit_const(dim, v[a])
           << ", " << lit_const(dim, v[b]) << ")).\n";
      }
    }
    if (lex.dimension_integral(dim)) {
      for (const Rational& a : v) {
        if (!rat_is_integer(a)) continue;
        os << "fof(step_" << mangle(dim) << "_" << mangle_value(a) << ", axiom, ![X]: ((geq(X, "
           << lit_const(dim, a) << ") & ~ geq(" << lit_const(dim, a) << ", X)) => geq(X, "
           << lit_const(dim, a + 1) << "))).\n";
      }
    }
  }
  for (const auto& [name, text] : lines) {
    os << "fof(" << name << ", axiom, " << text << ").\n";
  }
  os << "fof(goal, conjecture, " << goal_text << ").\n";
  return os.str();
}

std::string external_prover_command() {
  for (const char* cand : {"vampire", "eprover"}) {
    std::string cmd = "command -v " + std::string(cand) + " >/dev/null 2>&1";
    if (std::system(cmd.c_str()) == 0) return cand;
  }
  return "";
}

std::optional<std::string> run_external_prover(const std::string& tptp_text, double timeout_s) {
  std::string prover = external_prover_command();
  if (prover.empty()) return std::nullopt;
  char path[] = "/tmp/anota_tptp_XXXXXX";
  int fd = mkstemp(path);
  if (fd < 0) return std::nullopt;
  {
    std::ofstream out(path);
    out << tptp_text;
  }
  close(fd);
  int secs = std::max(1, static_cast<int>(timeout_s));
  std::string cmd;
  if (prover == "vampire") {
    cmd = "vampire -t " + std::to_string(secs) + " " + path + " 2>/dev/null";
  } else {
    cmd = "eprover --auto --cpu-limit=" + std::to_string(secs) + " " + path + " 2>/dev/null";
  }
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::remove(path);
    return std::nullopt;
  }
  std::string output;
  char buf[512];
  while (fgets(buf, sizeof buf, pipe)) output += buf;
  pclose(pipe);
  std::remove(path);
  const std::string marker = "SZS status ";
  size_t pos = output.find(marker);
  if (pos == std::string::npos) return std::nullopt;
  size_t start = pos + marker.size();
  size_t end = start;
  while (end < output.size() && !std::isspace(static_cast<unsigned char>(output[end]))) ++end;
  return output.substr(start, end - start);
}

}  // namespace anota
