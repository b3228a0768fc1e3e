#include "anota/prover.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <chrono>
#include <deque>
#include <optional>
#include <queue>
#include <unordered_set>
#include <set>
#include <sstream>

#include "anota/degree.hpp"
#include "anota/formula_text.hpp"

namespace anota {

namespace {

using Clock = std::chrono::steady_clock;

int term_weight(const TermPtr& t) {
  if (!t) return 0;
  return 1 + term_weight(t->child0) + term_weight(t->child1);
}

int clause_weight(const Clause& c) {
  int w = 0;
  for (const auto& l : c.lits) w += 1 + term_weight(l.atom);
  return w;
}

// Dimension hints for named degree terms, harvested from gradable atoms,
// threshold constants and measure applications in the input clause set.
class DimHints {
 public:
  explicit DimHints(const Lexicon& lex) : lex_(lex) {}

  void scan(const TermPtr& t) {
    if (!t) return;
    if (t->kind == TermKind::App && t->child0 && t->child0->kind == TermKind::App) {
      const TermPtr& head = t->child0->child0;
      if (head->kind == TermKind::Const) {
        if (const GradableInfo* g = lex_.gradable(head->name)) note(t->child1, g->dimension);
      }
    }
    scan(t->child0);
    scan(t->child1);
  }

  std::string dim_of(const TermPtr& t) const {
    if (t->kind == TermKind::DegLit) return t->dim;
    if (t->kind == TermKind::Const) {
      std::string adj, cls;
      if (split_theta_const(t->name, adj, cls)) {
        if (const GradableInfo* g = lex_.gradable(adj)) return g->dimension;
      }
    }
    if (t->kind == TermKind::App && t->child0->kind == TermKind::Const) {
      std::string dim;
      if (split_measure_const(t->child0->name, dim)) return dim;
    }
    auto it = dims_.find(term_to_string(t));
    return it == dims_.end() ? std::string() : it->second;
  }

 private:
  void note(const TermPtr& t, const std::string& dim) {
    if (t->kind == TermKind::DegLit || t->kind == TermKind::Var) return;
    dims_.emplace(term_to_string(t), dim);
  }

  const Lexicon& lex_;
  std::map<std::string, std::string> dims_;
};

DegSide side_of(const TermPtr& t, const DimHints& hints) {
  if (t->kind == TermKind::DegLit) return DegSide{"", t->value, t->dim};
  if (t->kind == TermKind::DegAdd) {
    DegSide a = side_of(t->child0, hints);
    DegSide b = side_of(t->child1, hints);
    if (a.atom.empty() && b.atom.empty()) {
      return DegSide{"", a.offset + b.offset, a.dim.empty() ? b.dim : a.dim};
    }
    if (a.atom.empty()) {
      b.offset += a.offset;
      if (b.dim.empty()) b.dim = a.dim;
      return b;
    }
    if (b.atom.empty()) {
      a.offset += b.offset;
      if (a.dim.empty()) a.dim = b.dim;
      return a;
    }
    // sum of two named degree terms: opaque atom
  }
  return DegSide{term_to_string(t), Rational(0), hints.dim_of(t)};
}

DegConstraint constraint_of(const ClauseLit& l, const DimHints& hints) {
  // atom is ge(a, b); the negation is a < b.
  DegConstraint c;
  c.op = l.pos ? CmpOp::Ge : CmpOp::Lt;
  c.lhs = side_of(l.atom->child0, hints);
  c.rhs = side_of(l.atom->child1, hints);
  return c;
}

// DPLL split over ground degree clauses with difference-logic pruning at
// every decision. `used` collects the ids of clauses contributing to pruned
// branches; capped searches make no unsatisfiability claim.
class TheoryChecker {
 public:
  TheoryChecker(const Lexicon& lex, const DimHints& hints)
      : hints_(hints), integral_([&lex](const std::string& d) { return lex.dimension_integral(d); }) {}

  bool unsat(const std::vector<const Clause*>& clauses, std::set<int>* used) {
    clauses_ = &clauses;
    used_ = used;
    checks_ = 0;
    capped_ = false;
    cs_.clear();
    src_.clear();
    bool dead = all_dead(0);
    return dead && !capped_;
  }

 private:
  bool all_dead(size_t i) {
    if (capped_) return false;
    if (i == clauses_->size()) return false;  // every split satisfied consistently
    const Clause* c = (*clauses_)[i];
    for (const auto& lit : c->lits) {
      cs_.push_back(constraint_of(lit, hints_));
      src_.push_back(c->id);
      if (++checks_ > kCheckCap) capped_ = true;
      bool dead = false;
      if (!capped_) {
        DegreeResult r = check_constraints(cs_, integral_);
        if (const DegreeCore* core = std::get_if<DegreeCore>(&r)) {
          if (used_) {
            for (size_t k : core->constraints) used_->insert(src_[k]);
          }
          dead = true;
        } else {
          dead = all_dead(i + 1);
        }
      }
      cs_.pop_back();
      src_.pop_back();
      if (!dead) return false;
    }
    return true;
  }

  static constexpr int kCheckCap = 4096;
  const DimHints& hints_;
  IntegralFn integral_;
  const std::vector<const Clause*>* clauses_ = nullptr;
  std::set<int>* used_ = nullptr;
  std::vector<DegConstraint> cs_;
  std::vector<int> src_;
  int checks_ = 0;
  bool capped_ = false;
};

bool clause_has_ge(const Clause& c) {
  for (const auto& l : c.lits) {
    if (l.atom->kind == TermKind::Cmp) return true;
  }
  return false;
}

void collect_gradables(const TermPtr& t, const Lexicon& lex, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == TermKind::Const && lex.gradable(t->name)) out.insert(t->name);
  collect_gradables(t->child0, lex, out);
  collect_gradables(t->child1, lex, out);
}

struct FoundEmpty {
  int id;
};

class Saturation {
 public:
  Saturation(const Lexicon& lex, const Budget& budget)
      : lex_(lex), budget_(budget), hints_(lex), checker_(lex, hints_), start_(Clock::now()) {}

  ProveResult run(const std::vector<LabeledFormula>& formulas) {
    int skolem_counter = 0;
    std::vector<Clause> inputs;
    for (const auto& f : formulas) {
      std::vector<Clause> cs = clausify(f.formula, f.label, skolem_counter);
      // set of support: the axiom theory is satisfiable on its own, so every
      // inference must involve a premise or goal descendant
      bool sup = f.label.rfind("premise", 0) == 0 || f.label == "negated-goal";
      for (auto& c : cs) c.support = sup;
      inputs.insert(inputs.end(), cs.begin(), cs.end());
    }

    bool any_ge = false;
    std::set<std::string> grads;
    for (const auto& c : inputs) {
      any_ge = any_ge || clause_has_ge(c);
      for (const auto& l : c.lits) {
        collect_gradables(l.atom, lex_, grads);
        hints_.scan(l.atom);
      }
    }
    if (any_ge) {
      for (const auto& t : order_axioms()) inputs.push_back(t);
      for (const auto& g : grads) inputs.push_back(eq_subst_clause(g));
    }

    try {
      for (auto& c : inputs) {
        c.rule = "input";
        add_clause(std::move(c));
      }
      while (has_passive()) {
        check_budget();
        int given_id = pop_passive();
        if (given_id < 0) continue;
        const Clause given = store_.at(given_id);
        active_ids_.push_back(given_id);
        const Clause given_r = rename_clause(given, given_id);
        for (int aid : active_ids_) {
          const Clause& partner = store_.at(aid);
          resolve_pair(given_r, given_id, partner, aid);
        }
        factors(given_r, given_id);
      }
      return GaveUp{"saturation"};
    } catch (const FoundEmpty& e) {
      return Proved{extract_proof(e.id)};
    } catch (const GaveUp& g) {
      return g;
    }
  }

 private:
  void check_budget() {
    double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
    if (elapsed > budget_.timeout_s) throw GaveUp{"budget:time"};
    if (next_id_ > budget_.max_clauses) throw GaveUp{"budget:clauses"};
  }

  std::vector<Clause> order_axioms() {
    std::vector<std::pair<std::string, std::string>> texts = {
        {"order:refl", "forall d:D. d >= d"},
        {"order:total", "forall a:D. forall b:D. (a >= b | b >= a)"},
        {"order:trans", "forall a:D. forall b:D. forall c:D. ((a >= b & b >= c) -> a >= c)"},
    };
    std::vector<Clause> out;
    int sk = 0;
    for (const auto& [label, text] : texts) {
      SymbolTable syms;
      std::vector<Clause> cs = clausify(parse_formula_text(text, syms), label, sk);
      out.insert(out.end(), cs.begin(), cs.end());
    }
    return out;
  }

  Clause eq_subst_clause(const std::string& grad) {
    SymbolTable syms;
    std::string text = "forall d1:D. forall d2:D. forall x:E. ((d1 >= d2 & d2 >= d1) -> (" +
                       grad + "(x, d1) -> " + grad + "(x, d2)))";
    int sk = 0;
    std::vector<Clause> cs = clausify(parse_formula_text(text, syms), "eq-subst[" + grad + "]", sk);
    if (cs.size() != 1) throw std::logic_error("eq-subst clausification");
    return cs[0];
  }

  void add_clause(Clause&& c) {
    static const bool dbg = std::getenv("ANOTA_PROVER_DEBUG") != nullptr;
    std::optional<Clause> s = simplify_clause(c);
    if (!s) {
      if (dbg) std::cerr << "[drop simplify] " << clause_to_string(c) << "\n";
      return;
    }
    for (int aid : active_ids_) {
      if (subsumes(store_.at(aid), *s)) {
        if (dbg) {
          std::cerr << "[drop subsumed by " << aid << "] " << clause_to_string(*s) << "\n";
        }
        return;
      }
    }
    s->id = next_id_++;
    if ((s->id & 0xff) == 0) check_budget();
    int id = s->id;
    bool empty = s->lits.empty();
    bool ground_deg = !empty && is_ground_degree_clause(*s);
    int w = clause_weight(*s);
    if (dbg) {
      std::cerr << "[add " << id << " w=" << w << " " << s->rule
                << (s->label.empty() ? "" : " " + s->label) << "] "
                << clause_to_string(*s) << "\n";
    }
    store_.emplace(id, std::move(*s));
    if (empty) throw FoundEmpty{id};
    passive_.emplace(w, id);
    age_queue_.push_back(id);
    if (ground_deg) {
      theory_ids_.push_back(id);
      theory_close();
    }
  }

  bool has_passive() {
    while (!passive_.empty() && taken_.count(passive_.top().second)) passive_.pop();
    return !passive_.empty();
  }

  int pop_passive() {
    // age-weight interleave: every fourth pick takes the oldest clause so
    // heavy inputs stay reachable under a flood of light resolvents
    int id = -1;
    if (pick_count_++ % 4 == 3) {
      while (!age_queue_.empty() && taken_.count(age_queue_.front())) age_queue_.pop_front();
      if (!age_queue_.empty()) {
        id = age_queue_.front();
        age_queue_.pop_front();
      }
    }
    if (id < 0) {
      if (!has_passive()) return -1;
      id = passive_.top().second;
      passive_.pop();
    }
    taken_.insert(id);
    const Clause& c = store_.at(id);
    for (int aid : active_ids_) {
      if (subsumes(store_.at(aid), c)) return -1;
    }
    return id;
  }

  void resolve_pair(const Clause& ar, int aid, const Clause& b, int bid) {
    if (!ar.support && !b.support) return;
    for (size_t i = 0; i < ar.lits.size(); ++i) {
      for (size_t j = 0; j < b.lits.size(); ++j) {
        if (ar.lits[i].pos == b.lits[j].pos) continue;
        Subst s;
        if (!unify(ar.lits[i].atom, b.lits[j].atom, s)) continue;
        Clause child;
        child.rule = "resolve";
        child.parents = {aid, bid};
        child.support = true;
        for (size_t k = 0; k < ar.lits.size(); ++k) {
          if (k != i) child.lits.push_back({ar.lits[k].pos, apply_subst(ar.lits[k].atom, s)});
        }
        for (size_t k = 0; k < b.lits.size(); ++k) {
          if (k != j) child.lits.push_back({b.lits[k].pos, apply_subst(b.lits[k].atom, s)});
        }
        add_clause(std::move(child));
      }
    }
  }

  void factors(const Clause& ar, int aid) {
    if (!ar.support) return;
    for (size_t i = 0; i < ar.lits.size(); ++i) {
      for (size_t j = i + 1; j < ar.lits.size(); ++j) {
        if (ar.lits[i].pos != ar.lits[j].pos) continue;
        Subst s;
        if (!unify(ar.lits[i].atom, ar.lits[j].atom, s)) continue;
        Clause child;
        child.rule = "factor";
        child.parents = {aid};
        child.support = true;
        for (size_t k = 0; k < ar.lits.size(); ++k) {
          if (k != j) child.lits.push_back({ar.lits[k].pos, apply_subst(ar.lits[k].atom, s)});
        }
        add_clause(std::move(child));
      }
    }
  }

  void theory_close() {
    std::vector<const Clause*> cs;
    for (int id : theory_ids_) cs.push_back(&store_.at(id));
    std::set<int> used;
    if (!checker_.unsat(cs, &used)) return;
    // shrink to the clauses the conflicts touched, verified unsat on their own
    std::vector<const Clause*> sub;
    for (int id : theory_ids_) {
      if (used.count(id)) sub.push_back(&store_.at(id));
    }
    std::vector<int> parents;
    if (!sub.empty() && checker_.unsat(sub, nullptr)) {
      parents.assign(used.begin(), used.end());
    } else {
      parents = theory_ids_;
    }
    Clause empty;
    empty.rule = "theory";
    empty.parents = parents;
    empty.id = next_id_++;
    int id = empty.id;
    store_.emplace(id, std::move(empty));
    throw FoundEmpty{id};
  }

  Proof extract_proof(int empty_id) {
    std::set<int> reach;
    std::vector<int> stack{empty_id};
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      if (!reach.insert(id).second) continue;
      for (int p : store_.at(id).parents) stack.push_back(p);
    }
    Proof proof;
    std::set<std::string> seen;
    for (int id : reach) {
      const Clause& c = store_.at(id);
      proof.steps.push_back({id, c.rule, c.parents, c.label, clause_to_string(c)});
      proof.clauses.emplace(id, c);
      if (c.rule == "input" && !c.label.empty() && seen.insert(c.label).second) {
        proof.used_labels.push_back(c.label);
      }
    }
    return proof;
  }

  const Lexicon& lex_;
  Budget budget_;
  DimHints hints_;
  TheoryChecker checker_;
  Clock::time_point start_;
  int next_id_ = 1;
  std::map<int, Clause> store_;
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                      std::greater<std::pair<int, int>>>
      passive_;
  std::deque<int> age_queue_;
  std::unordered_set<int> taken_;
  long pick_count_ = 0;
  std::vector<int> active_ids_;
  std::vector<int> theory_ids_;
};

bool clause_variant(const Clause& a, const Clause& b) {
  return a.lits.size() == b.lits.size() && subsumes(a, b) && subsumes(b, a);
}

bool replay_matches(const Clause& derived, const Clause& recorded) {
  std::optional<Clause> s = simplify_clause(derived);
  if (!s) return false;
  return clause_variant(*s, recorded);
}

}  // namespace

std::string Proof::to_string() const {
  std::ostringstream os;
  for (const auto& st : steps) {
    os << "  " << st.id << ". " << st.text << "  [" << st.rule;
    for (size_t i = 0; i < st.parents.size(); ++i) os << (i ? ", " : " ") << st.parents[i];
    os << "]";
    if (!st.label.empty()) os << " (" << st.label << ")";
    os << "\n";
  }
  os << "  uses:";
  for (size_t i = 0; i < used_labels.size(); ++i) os << (i ? ", " : " ") << used_labels[i];
  os << "\n";
  return os.str();
}

ProveResult refute(const std::vector<LabeledFormula>& formulas, const Lexicon& lex,
                   const Budget& budget) {
  Saturation sat(lex, budget);
  return sat.run(formulas);
}

ProveResult prove_entailment(const std::vector<LabeledFormula>& axioms,
                             const std::vector<LabeledFormula>& premises, const TermPtr& goal,
                             const Lexicon& lex, const Budget& budget) {
  std::vector<LabeledFormula> all = axioms;
  all.insert(all.end(), premises.begin(), premises.end());
  all.push_back({"negated-goal", mk_not(goal)});
  return refute(all, lex, budget);
}

bool replay_proof(const Proof& proof, const Lexicon& lex) {
  DimHints hints(lex);
  for (const auto& [id, c] : proof.clauses) {
    for (const auto& l : c.lits) hints.scan(l.atom);
  }
  TheoryChecker checker(lex, hints);
  for (const auto& st : proof.steps) {
    auto it = proof.clauses.find(st.id);
    if (it == proof.clauses.end()) return false;
    const Clause& rec = it->second;
    if (st.rule == "input") continue;
    if (st.rule == "theory") {
      if (!rec.lits.empty()) return false;
      std::vector<const Clause*> parents;
      for (int p : st.parents) {
        auto pit = proof.clauses.find(p);
        if (pit == proof.clauses.end()) return false;
        if (!is_ground_degree_clause(pit->second)) return false;
        parents.push_back(&pit->second);
      }
      if (!checker.unsat(parents, nullptr)) return false;
      continue;
    }
    if (st.rule == "resolve") {
      if (st.parents.size() != 2) return false;
      auto a_it = proof.clauses.find(st.parents[0]);
      auto b_it = proof.clauses.find(st.parents[1]);
      if (a_it == proof.clauses.end() || b_it == proof.clauses.end()) return false;
      Clause ar = rename_clause(a_it->second, st.parents[0]);
      const Clause& b = b_it->second;
      bool ok = false;
      for (size_t i = 0; i < ar.lits.size() && !ok; ++i) {
        for (size_t j = 0; j < b.lits.size() && !ok; ++j) {
          if (ar.lits[i].pos == b.lits[j].pos) continue;
          Subst s;
          if (!unify(ar.lits[i].atom, b.lits[j].atom, s)) continue;
          Clause child;
          for (size_t k = 0; k < ar.lits.size(); ++k) {
            if (k != i) child.lits.push_back({ar.lits[k].pos, apply_subst(ar.lits[k].atom, s)});
          }
          for (size_t k = 0; k < b.lits.size(); ++k) {
            if (k != j) child.lits.push_back({b.lits[k].pos, apply_subst(b.lits[k].atom, s)});
          }
          ok = replay_matches(child, rec);
        }
      }
      if (!ok) return false;
      continue;
    }
    if (st.rule == "factor") {
      if (st.parents.size() != 1) return false;
      auto a_it = proof.clauses.find(st.parents[0]);
      if (a_it == proof.clauses.end()) return false;
      Clause ar = rename_clause(a_it->second, st.parents[0]);
      bool ok = false;
      for (size_t i = 0; i < ar.lits.size() && !ok; ++i) {
        for (size_t j = i + 1; j < ar.lits.size() && !ok; ++j) {
          if (ar.lits[i].pos != ar.lits[j].pos) continue;
          Subst s;
          if (!unify(ar.lits[i].atom, ar.lits[j].atom, s)) continue;
          Clause child;
          for (size_t k = 0; k < ar.lits.size(); ++k) {
            if (k != j) child.lits.push_back({ar.lits[k].pos, apply_subst(ar.lits[k].atom, s)});
          }
          ok = replay_matches(child, rec);
        }
      }
      if (!ok) return false;
      continue;
    }
    return false;
  }
  return true;
}

}  // namespace anota
