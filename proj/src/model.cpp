#include "anota/model.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "anota/formula_text.hpp"

namespace anota {

namespace {

using Clock = std::chrono::steady_clock;

bool measure_guaranteed(const std::string& label) {
  // axiom schemata valid in every measure-backed interpretation
  static const char* prefixes[] = {"CP[", "Ax1[", "Ax2[", "Ax3[", "Ax4[",
                                   "Ax5[", "Ax6[", "Ax7[", "Ax8["};
  for (const char* p : prefixes) {
    if (label.rfind(p, 0) == 0) return true;
  }
  return false;
}

bool mentions_var(const TermPtr& t, const std::string& name) {
  if (!t) return false;
  if (t->kind == TermKind::Var) return t->name == name;
  if ((t->kind == TermKind::Abs || t->kind == TermKind::Forall || t->kind == TermKind::Exists) &&
      t->name == name) {
    return false;
  }
  return mentions_var(t->child0, name) || mentions_var(t->child1, name);
}

std::string cmp_side_dim(const TermPtr& t, const Lexicon& lex) {
  if (t->kind == TermKind::DegLit) return t->dim;
  if (t->kind == TermKind::Const) {
    std::string adj, cls;
    if (split_theta_const(t->name, adj, cls)) {
      if (const GradableInfo* g = lex.gradable(adj)) return g->dimension;
    }
  }
  if (t->kind == TermKind::App && t->child0->kind == TermKind::Const) {
    std::string dim;
    if (split_measure_const(t->child0->name, dim)) return dim;
  }
  return "";
}

// Static facts about one degree quantifier: the dimension its variable flows
// into, additive offsets applied to it, and the literals in its body.
struct QuantInfo {
  std::string dim;
  bool integral = false;
  std::vector<Rational> offsets;
  std::vector<std::pair<std::string, Rational>> body_lits;  // (dim, value)
};

void analyze_quant(const TermPtr& t, const std::string& var, const Lexicon& lex, QuantInfo& out) {
  if (!t) return;
  if ((t->kind == TermKind::Abs || t->kind == TermKind::Forall || t->kind == TermKind::Exists) &&
      t->name == var) {
    return;
  }
  if (t->kind == TermKind::DegLit) {
    out.body_lits.push_back({t->dim, t->value});
    return;
  }
  if (t->kind == TermKind::DegAdd) {
    const TermPtr& a = t->child0;
    const TermPtr& b = t->child1;
    if (a->kind == TermKind::DegLit && mentions_var(b, var)) out.offsets.push_back(a->value);
    if (b->kind == TermKind::DegLit && mentions_var(a, var)) out.offsets.push_back(b->value);
  }
  if (t->kind == TermKind::Cmp) {
    if (mentions_var(t->child0, var) && out.dim.empty()) {
      std::string d = cmp_side_dim(t->child1, lex);
      if (!d.empty()) out.dim = d;
    }
    if (mentions_var(t->child1, var) && out.dim.empty()) {
      std::string d = cmp_side_dim(t->child0, lex);
      if (!d.empty()) out.dim = d;
    }
  }
  if (t->kind == TermKind::App && t->child0 && t->child0->kind == TermKind::App &&
      t->child0->child0->kind == TermKind::Const) {
    if (const GradableInfo* g = lex.gradable(t->child0->child0->name)) {
      if (mentions_var(t->child1, var) && out.dim.empty()) out.dim = g->dimension;
    }
  }
  analyze_quant(t->child0, var, lex, out);
  analyze_quant(t->child1, var, lex, out);
}

using Val = std::variant<bool, int, Rational>;

class Evaluator {
 public:
  Evaluator(const Lexicon& lex) : lex_(lex) {}

  void bind_model(const Interpretation* m) { model_ = m; }

  bool eval_formula(const TermPtr& t) {
    env_.clear();
    return std::get<bool>(eval(t));
  }

 private:
  Val eval(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Var: {
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
          if (it->first == t->name) return it->second;
        }
        throw std::logic_error("unbound variable in evaluation: " + t->name);
      }
      case TermKind::Const:
        return const_val(t);
      case TermKind::DegLit:
        return Val{t->value};
      case TermKind::DegAdd:
        return Val{std::get<Rational>(eval(t->child0)) + std::get<Rational>(eval(t->child1))};
      case TermKind::Cmp: {
        Rational a = std::get<Rational>(eval(t->child0));
        Rational b = std::get<Rational>(eval(t->child1));
        switch (t->cmp) {
          case CmpOp::Gt: return Val{a > b};
          case CmpOp::Ge: return Val{a >= b};
          case CmpOp::Lt: return Val{a < b};
          case CmpOp::Le: return Val{a <= b};
          case CmpOp::Eq: return Val{a == b};
        }
        throw std::logic_error("comparison operator");
      }
      case TermKind::Not:
        return Val{!std::get<bool>(eval(t->child0))};
      case TermKind::And:
        return Val{std::get<bool>(eval(t->child0)) && std::get<bool>(eval(t->child1))};
      case TermKind::Or:
        return Val{std::get<bool>(eval(t->child0)) || std::get<bool>(eval(t->child1))};
      case TermKind::Implies:
        return Val{!std::get<bool>(eval(t->child0)) || std::get<bool>(eval(t->child1))};
      case TermKind::Forall:
      case TermKind::Exists:
        return quantifier(t);
      case TermKind::App:
        return apply(t);
      case TermKind::Abs:
        throw std::logic_error("lambda in first-order evaluation");
    }
    throw std::logic_error("term kind");
  }

  Val const_val(const TermPtr& t) {
    std::string a, b;
    if (split_theta_const(t->name, a, b)) return Val{model_->theta.at({a, b})};
    auto it = model_->entity_of.find(t->name);
    if (it != model_->entity_of.end()) return Val{it->second};
    throw std::logic_error("uninterpreted constant: " + t->name);
  }

  Val apply(const TermPtr& t) {
    std::vector<const TermPtr*> args;
    const TermPtr* head = &t;
    while ((*head)->kind == TermKind::App) {
      args.push_back(&(*head)->child1);
      head = &(*head)->child0;
    }
    std::reverse(args.begin(), args.end());
    if ((*head)->kind != TermKind::Const) throw std::logic_error("non-constant predicate head");
    const std::string& name = (*head)->name;
    std::string sub;
    if (split_measure_const(name, sub)) {
      int e = std::get<int>(eval(*args[0]));
      return Val{model_->mu.at(sub)[e]};
    }
    if (const GradableInfo* g = lex_.gradable(name); g && args.size() == 2) {
      int e = std::get<int>(eval(*args[0]));
      Rational d = std::get<Rational>(eval(*args[1]));
      const Rational& m = model_->mu.at(g->dimension)[e];
      return Val{g->positive ? m >= d : m <= d};
    }
    if (args.size() == 1) {
      auto it = model_->unary.find(name);
      if (it != model_->unary.end()) {
        int e = std::get<int>(eval(*args[0]));
        return Val{it->second[e]};
      }
    }
    if (args.size() == 2) {
      auto it = model_->binary.find(name);
      if (it != model_->binary.end()) {
        int e1 = std::get<int>(eval(*args[0]));
        int e2 = std::get<int>(eval(*args[1]));
        return Val{it->second[e1 * model_->domain_size + e2]};
      }
    }
    throw std::logic_error("uninterpreted predicate: " + name);
  }

  Val quantifier(const TermPtr& t) {
    bool universal = t->kind == TermKind::Forall;
    if (t->type->kind == SemType::Kind::E) {
      for (int e = 0; e < model_->domain_size; ++e) {
        env_.push_back({t->name, Val{e}});
        bool v = std::get<bool>(eval(t->child0));
        env_.pop_back();
        if (v != universal) return Val{!universal};
      }
      return Val{universal};
    }
    if (t->type->kind != SemType::Kind::D) throw std::logic_error("quantifier sort");
    for (const Rational& d : degree_grid(t)) {
      env_.push_back({t->name, Val{d}});
      bool v = std::get<bool>(eval(t->child0));
      env_.pop_back();
      if (v != universal) return Val{!universal};
    }
    return Val{universal};
  }

  // Grid of candidate values for a degree quantifier: every breakpoint of the
  // body (measure values, thresholds, literals, each shifted by the additive
  // offsets), midpoints of adjacent breakpoints, and outer sentinels. The
  // body's truth value is constant between breakpoints, so the grid is exact.
  std::vector<Rational> degree_grid(const TermPtr& t) {
    auto it = quants_.find(t.get());
    if (it == quants_.end()) {
      QuantInfo info;
      analyze_quant(t->child0, t->name, lex_, info);
      if (!info.dim.empty()) info.integral = lex_.dimension_integral(info.dim);
      it = quants_.emplace(t.get(), std::move(info)).first;
    }
    const QuantInfo& q = it->second;
    std::vector<Rational> anchors;
    for (const auto& [dim, tab] : model_->mu) {
      if (q.dim.empty() || dim == q.dim) anchors.insert(anchors.end(), tab.begin(), tab.end());
    }
    for (const auto& [key, v] : model_->theta) {
      const GradableInfo* g = lex_.gradable(key.first);
      if (q.dim.empty() || (g && g->dimension == q.dim)) anchors.push_back(v);
    }
    for (const auto& [dim, v] : q.body_lits) {
      if (q.dim.empty() || dim.empty() || dim == q.dim) anchors.push_back(v);
    }
    std::vector<Rational> shifted = anchors;
    for (const Rational& o : q.offsets) {
      for (const Rational& a : anchors) {
        shifted.push_back(a - o);
        shifted.push_back(a + o);
      }
    }
    if (shifted.empty()) shifted.push_back(Rational(0));
    std::vector<Rational> grid;
    if (q.integral) {
      for (const Rational& a : shifted) {
        grid.push_back(Rational(rat_floor(a)));
        grid.push_back(Rational(rat_ceil(a)));
      }
    } else {
      grid = shifted;
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<Rational> full;
    full.push_back(grid.front() - 1);
    for (size_t i = 0; i < grid.size(); ++i) {
      if (i > 0) {
        if (q.integral) {
          Rational mid(rat_floor((grid[i - 1] + grid[i]) / 2));
          if (mid > grid[i - 1] && mid < grid[i]) full.push_back(mid);
        } else {
          full.push_back((grid[i - 1] + grid[i]) / 2);
        }
      }
      full.push_back(grid[i]);
    }
    full.push_back(grid.back() + 1);
    full.erase(std::unique(full.begin(), full.end()), full.end());
    return full;
  }

  const Lexicon& lex_;
  const Interpretation* model_ = nullptr;
  std::vector<std::pair<std::string, Val>> env_;
  std::map<const Term*, QuantInfo> quants_;
};

void collect_deglits(const TermPtr& t, std::map<std::string, std::vector<Rational>>& out) {
  if (!t) return;
  if (t->kind == TermKind::DegLit) {
    out[t->dim].push_back(t->value);
    return;
  }
  collect_deglits(t->child0, out);
  collect_deglits(t->child1, out);
}

// Candidate degree values for one dimension: the observed literals, their
// unit-step neighbours, zero, then midpoints; truncated to the budget.
std::vector<Rational> candidate_values(const std::vector<Rational>& lits, bool integral,
                                       int max_points) {
  std::vector<Rational> ordered;
  auto push = [&ordered](const Rational& v) {
    if (std::find(ordered.begin(), ordered.end(), v) == ordered.end()) ordered.push_back(v);
  };
  std::vector<Rational> sorted = lits;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Rational& l : sorted) push(l);
  for (const Rational& l : sorted) {
    push(l - 1);
    push(l + 1);
  }
  push(Rational(0));
  for (size_t i = 1; i < sorted.size(); ++i) {
    Rational mid = (sorted[i - 1] + sorted[i]) / 2;
    if (integral) mid = Rational(rat_floor(mid));
    if (mid > sorted[i - 1] && mid < sorted[i]) push(mid);
  }
  if (sorted.empty()) {
    ordered = {Rational(0), Rational(1), Rational(2)};
  }
  if (static_cast<int>(ordered.size()) > max_points) ordered.resize(max_points);
  return ordered;
}

}  // namespace

std::string Interpretation::to_string() const {
  std::ostringstream os;
  os << "domain size " << domain_size << "\n";
  for (const auto& [c, e] : entity_of) os << "  " << c << " = e" << e << "\n";
  for (const auto& [p, tab] : unary) {
    os << "  " << p << " = {";
    bool first = true;
    for (int e = 0; e < domain_size; ++e) {
      if (tab[e]) {
        os << (first ? "" : ", ") << "e" << e;
        first = false;
      }
    }
    os << "}\n";
  }
  for (const auto& [r, tab] : binary) {
    os << "  " << r << " = {";
    bool first = true;
    for (int i = 0; i < domain_size; ++i) {
      for (int j = 0; j < domain_size; ++j) {
        if (tab[i * domain_size + j]) {
          os << (first ? "" : ", ") << "(e" << i << ", e" << j << ")";
          first = false;
        }
      }
    }
    os << "}\n";
  }
  for (const auto& [k, v] : theta) {
    os << "  th(" << k.first << ", " << k.second << ") = " << rat_to_string(v) << "\n";
  }
  for (const auto& [dim, tab] : mu) {
    os << "  mu_" << dim << ":";
    for (int e = 0; e < domain_size; ++e) os << " e" << e << "=" << rat_to_string(tab[e]);
    os << "\n";
  }
  return os.str();
}

bool interpretation_satisfies(const Interpretation& m, const TermPtr& formula, const Lexicon& lex) {
  Evaluator ev(lex);
  ev.bind_model(&m);
  return ev.eval_formula(formula);
}

ModelResult find_countermodel(const std::vector<LabeledFormula>& formulas, const Lexicon& lex,
                              const Budget& budget) {
  Clock::time_point start = Clock::now();
  std::vector<TermPtr> evaluated;
  for (const auto& f : formulas) {
    if (!measure_guaranteed(f.label)) evaluated.push_back(f.formula);
  }
  Signature sig = signature_of(evaluated, lex);

  std::vector<std::string> ent_consts(sig.entities.begin(), sig.entities.end());
  for (const auto& n : sig.choices) ent_consts.push_back(choice_const_name(n));
  std::sort(ent_consts.begin(), ent_consts.end());

  std::vector<std::string> unary_preds(sig.classes.begin(), sig.classes.end());
  for (const auto& n : sig.privatives) unary_preds.push_back(privative_const_name(n));
  std::sort(unary_preds.begin(), unary_preds.end());

  std::vector<std::string> binary_preds(sig.relations.begin(), sig.relations.end());
  std::vector<std::pair<std::string, std::string>> thresholds(sig.thresholds.begin(),
                                                              sig.thresholds.end());
  std::vector<std::string> dims(sig.dimensions.begin(), sig.dimensions.end());

  std::map<std::string, std::vector<Rational>> lits;
  for (const auto& t : evaluated) collect_deglits(t, lits);
  if (dims.empty() && !thresholds.empty()) dims.push_back("");
  std::map<std::string, std::vector<Rational>> values;
  for (const auto& d : dims) {
    values[d] = candidate_values(lits[d], lex.dimension_integral(d), budget.max_degree_points);
  }

  Evaluator ev(lex);
  long long leaves = 0;

  for (int n = 1; n <= budget.max_entities; ++n) {
    // odometer slots: entity constants, binary masks, unary masks, thresholds,
    // measures; the rightmost slot varies fastest
    std::vector<size_t> sizes;
    for (size_t i = 0; i < ent_consts.size(); ++i) sizes.push_back(n);
    size_t bin_base = sizes.size();
    for (size_t i = 0; i < binary_preds.size(); ++i) sizes.push_back(size_t{1} << (n * n));
    size_t un_base = sizes.size();
    for (size_t i = 0; i < unary_preds.size(); ++i) sizes.push_back(size_t{1} << n);
    size_t th_base = sizes.size();
    for (const auto& th : thresholds) {
      const GradableInfo* g = lex.gradable(th.first);
      sizes.push_back(values.at(g ? g->dimension : dims.front()).size());
    }
    size_t mu_base = sizes.size();
    for (const auto& d : dims) {
      for (int e = 0; e < n; ++e) sizes.push_back(values.at(d).size());
    }

    std::vector<size_t> idx(sizes.size(), 0);
    bool exhausted = sizes.empty() && n > 1;
    while (!exhausted) {
      if ((++leaves & 0x1ff) == 0) {
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (elapsed > budget.timeout_s) return NoModel{"budget:time"};
      }
      Interpretation m;
      m.domain_size = n;
      for (size_t i = 0; i < ent_consts.size(); ++i) {
        m.entity_of[ent_consts[i]] = static_cast<int>(idx[i]);
      }
      for (size_t i = 0; i < binary_preds.size(); ++i) {
        size_t mask = idx[bin_base + i];
        std::vector<bool> tab(n * n);
        for (int b = 0; b < n * n; ++b) tab[b] = (mask >> b) & 1;
        m.binary[binary_preds[i]] = std::move(tab);
      }
      for (size_t i = 0; i < unary_preds.size(); ++i) {
        size_t mask = idx[un_base + i];
        std::vector<bool> tab(n);
        for (int b = 0; b < n; ++b) tab[b] = (mask >> b) & 1;
        m.unary[unary_preds[i]] = std::move(tab);
      }
      for (size_t i = 0; i < thresholds.size(); ++i) {
        const GradableInfo* g = lex.gradable(thresholds[i].first);
        const auto& vs = values.at(g ? g->dimension : dims.front());
        m.theta[thresholds[i]] = vs[idx[th_base + i]];
      }
      size_t slot = mu_base;
      for (const auto& d : dims) {
        std::vector<Rational> tab(n);
        for (int e = 0; e < n; ++e) tab[e] = values.at(d)[idx[slot++]];
        m.mu[d] = std::move(tab);
      }

      ev.bind_model(&m);
      bool ok = true;
      for (const auto& t : evaluated) {
        if (!ev.eval_formula(t)) {
          ok = false;
          break;
        }
      }
      if (ok) return m;

      // advance the odometer
      exhausted = true;
      for (size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < sizes[i]) {
          exhausted = false;
          break;
        }
        idx[i] = 0;
      }
    }
  }
  return NoModel{"exhausted"};
}

}  // namespace anota
