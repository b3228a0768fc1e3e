// Degree-order constraint solving checked against brute-force enumeration
// over a small rational grid, plus integrality and unsat-core behavior.

#include <random>
#include <vector>

#include "anota/degree.hpp"
#include "doctest.h"

using namespace anota;

namespace {

const IntegralFn kDense = [](const std::string&) { return false; };
const IntegralFn kIntegral = [](const std::string&) { return true; };

DegSide atom(const std::string& name, int offset = 0) {
  return DegSide{name, Rational(offset), ""};
}
DegSide lit(int v) { return DegSide{"", Rational(v), ""}; }

// Ground truth for offset-free systems over <= 4 atoms with literals 0..5,
// by exhaustive assignment over a finite grid. Values are scaled by 10 so the
// grid is integral. Soundness of the grid: constraints only compare atom
// values with each other and with the literals, so any solution can be mapped
// by an order isomorphism fixing the literals onto grid points; four atoms
// need at most four distinct values inside any gap, and the grid provides
// four per unit literal gap (dense) or four beyond each extreme (integral).
bool brute_force_sat(const std::vector<DegConstraint>& cs,
                     const std::vector<std::string>& atoms, bool integral) {
  std::vector<int> grid;
  if (integral) {
    for (int v = -50; v <= 100; v += 10) grid.push_back(v);  // -5..10
  } else {
    for (int v = -8; v <= 58; v += 2) grid.push_back(v);  // -0.8..5.8 step 0.2
  }
  std::vector<int> val(atoms.size(), 0);
  auto idx_of = [&](const std::string& name) {
    for (size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i] == name) return i;
    }
    REQUIRE(false);
    return size_t{0};
  };
  struct Scaled {
    int l_atom, r_atom;  // -1 for literal
    int l_lit, r_lit;
    CmpOp op;
  };
  std::vector<Scaled> scs;
  for (const DegConstraint& c : cs) {
    Scaled s;
    s.op = c.op;
    s.l_atom = c.lhs.atom.empty() ? -1 : static_cast<int>(idx_of(c.lhs.atom));
    s.r_atom = c.rhs.atom.empty() ? -1 : static_cast<int>(idx_of(c.rhs.atom));
    s.l_lit = static_cast<int>(c.lhs.offset) * 10;
    s.r_lit = static_cast<int>(c.rhs.offset) * 10;
    scs.push_back(s);
  }
  auto ok_upto = [&](size_t assigned) {
    for (const Scaled& s : scs) {
      if (s.l_atom >= static_cast<int>(assigned) || s.r_atom >= static_cast<int>(assigned))
        continue;
      int l = s.l_atom < 0 ? s.l_lit : val[static_cast<size_t>(s.l_atom)];
      int r = s.r_atom < 0 ? s.r_lit : val[static_cast<size_t>(s.r_atom)];
      bool h = s.op == CmpOp::Gt   ? l > r
               : s.op == CmpOp::Ge ? l >= r
               : s.op == CmpOp::Lt ? l < r
               : s.op == CmpOp::Le ? l <= r
                                   : l == r;
      if (!h) return false;
    }
    return true;
  };
  std::function<bool(size_t)> rec = [&](size_t i) {
    if (!ok_upto(i)) return false;
    if (i == atoms.size()) return true;
    for (int g : grid) {
      val[i] = g;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("single constraints and simple chains") {
  std::vector<DegConstraint> cs = {
      {CmpOp::Gt, atom("a"), atom("b")},
      {CmpOp::Gt, atom("b"), atom("c")},
  };
  auto r = check_constraints(cs, kDense);
  REQUIRE(std::holds_alternative<DegreeModel>(r));
  const DegreeModel& m = std::get<DegreeModel>(r);
  CHECK(model_satisfies(m, cs));
  CHECK(m.values.at("a") > m.values.at("c"));

  cs.push_back({CmpOp::Ge, atom("c"), atom("a")});
  auto r2 = check_constraints(cs, kDense);
  REQUIRE(std::holds_alternative<DegreeCore>(r2));
}

TEST_CASE("offsets participate in the difference bounds") {
  // a >= b + 2 and b >= 5 forces a >= 7
  std::vector<DegConstraint> cs = {
      {CmpOp::Ge, atom("a"), atom("b", 2)},
      {CmpOp::Ge, atom("b"), lit(5)},
      {CmpOp::Lt, atom("a"), lit(7)},
  };
  auto r = check_constraints(cs, kDense);
  CHECK(std::holds_alternative<DegreeCore>(r));
  cs[2] = {CmpOp::Ge, atom("a"), lit(7)};
  auto r2 = check_constraints(cs, kDense);
  REQUIRE(std::holds_alternative<DegreeModel>(r2));
  CHECK(model_satisfies(std::get<DegreeModel>(r2), cs));
}

TEST_CASE("equalities tie atoms together") {
  std::vector<DegConstraint> cs = {
      {CmpOp::Eq, atom("a"), atom("b", 3)},
      {CmpOp::Gt, atom("b"), lit(0)},
      {CmpOp::Le, atom("a"), lit(3)},
  };
  auto r = check_constraints(cs, kDense);
  REQUIRE(std::holds_alternative<DegreeCore>(r));
  cs[2] = {CmpOp::Le, atom("a"), lit(4)};
  auto r2 = check_constraints(cs, kDense);
  REQUIRE(std::holds_alternative<DegreeModel>(r2));
  const DegreeModel& m = std::get<DegreeModel>(r2);
  CHECK(m.values.at("a") == m.values.at("b") + 3);
}

TEST_CASE("integral dimensions exclude fractional gaps") {
  // integrality is keyed on the component's dimension hint
  auto catom = [](const std::string& n) { return DegSide{n, Rational(0), "count"}; };
  auto clit = [](int v) { return DegSide{"", Rational(v), "count"}; };

  // 0 < x < 1 has rational solutions but no integer ones
  std::vector<DegConstraint> cs = {
      {CmpOp::Gt, catom("x"), clit(0)},
      {CmpOp::Lt, catom("x"), clit(1)},
  };
  CHECK(std::holds_alternative<DegreeModel>(check_constraints(cs, kDense)));
  CHECK(std::holds_alternative<DegreeCore>(check_constraints(cs, kIntegral)));
  // without a dimension hint the component stays dense
  std::vector<DegConstraint> hintless = {
      {CmpOp::Gt, atom("x"), lit(0)},
      {CmpOp::Lt, atom("x"), lit(1)},
  };
  CHECK(std::holds_alternative<DegreeModel>(check_constraints(hintless, kIntegral)));

  // x > 10 and x < 12 pins the integer solution to 11
  std::vector<DegConstraint> cs2 = {
      {CmpOp::Gt, catom("x"), clit(10)},
      {CmpOp::Lt, catom("x"), clit(12)},
  };
  auto r = check_constraints(cs2, kIntegral);
  REQUIRE(std::holds_alternative<DegreeModel>(r));
  CHECK(std::get<DegreeModel>(r).values.at("x") == Rational(11));
}

TEST_CASE("dimension hints must agree within a component") {
  std::vector<DegConstraint> cs = {
      {CmpOp::Gt, DegSide{"a", Rational(0), "length"}, DegSide{"b", Rational(0), "count"}},
  };
  CHECK_THROWS_AS(check_constraints(cs, kDense), MixedDimensionError);
  // disconnected components may use different dimensions
  std::vector<DegConstraint> cs2 = {
      {CmpOp::Gt, DegSide{"a", Rational(0), "length"}, DegSide{"", Rational(0), "length"}},
      {CmpOp::Gt, DegSide{"b", Rational(0), "count"}, DegSide{"", Rational(0), "count"}},
  };
  CHECK(std::holds_alternative<DegreeModel>(check_constraints(cs2, kDense)));
}

TEST_CASE("cores name an actually infeasible subset") {
  std::vector<DegConstraint> cs = {
      {CmpOp::Ge, atom("p"), lit(3)},       // irrelevant
      {CmpOp::Gt, atom("a"), atom("b")},
      {CmpOp::Le, atom("q"), lit(0)},       // irrelevant
      {CmpOp::Gt, atom("b"), atom("a")},
  };
  auto r = check_constraints(cs, kDense);
  REQUIRE(std::holds_alternative<DegreeCore>(r));
  const DegreeCore& core = std::get<DegreeCore>(r);
  std::vector<DegConstraint> sub;
  for (size_t idx : core.constraints) {
    REQUIRE(idx < cs.size());
    sub.push_back(cs[idx]);
  }
  CHECK(std::holds_alternative<DegreeCore>(check_constraints(sub, kDense)));
  // the core stays within the contradictory pair
  for (size_t idx : core.constraints) {
    CHECK(idx != 0);
    CHECK(idx != 2);
  }
}

TEST_CASE("solver agrees with brute force on random small systems") {
  std::mt19937 rng(20260822);
  const std::vector<std::string> atom_pool = {"a", "b", "c", "d"};
  int sat_seen = 0, unsat_seen = 0;
  for (int iter = 0; iter < 4000; ++iter) {
    bool integral = (iter % 4 == 0);
    size_t natoms = 2 + rng() % 3;  // 2..4
    std::vector<std::string> atoms(atom_pool.begin(), atom_pool.begin() + natoms);
    size_t ncs = 1 + rng() % 5;  // 1..5
    std::vector<DegConstraint> cs;
    for (size_t i = 0; i < ncs; ++i) {
      auto side = [&]() -> DegSide {
        DegSide s = rng() % 4 == 0 ? lit(static_cast<int>(rng() % 6))
                                   : atom(atoms[rng() % natoms]);
        s.dim = "k";  // integrality is keyed on the component's dimension
        return s;
      };
      cs.push_back({static_cast<CmpOp>(rng() % 5), side(), side()});
    }
    auto r = check_constraints(cs, integral ? kIntegral : kDense);
    bool expect = brute_force_sat(cs, atoms, integral);
    if (std::holds_alternative<DegreeModel>(r)) {
      ++sat_seen;
      INFO("iteration ", iter);
      CHECK(expect);
      CHECK(model_satisfies(std::get<DegreeModel>(r), cs));
      if (integral) {
        for (const auto& [name, v] : std::get<DegreeModel>(r).values) {
          CHECK(rat_is_integer(v));
        }
      }
    } else {
      ++unsat_seen;
      INFO("iteration ", iter);
      CHECK_FALSE(expect);
      // the reported core is itself infeasible
      const DegreeCore& core = std::get<DegreeCore>(r);
      std::vector<DegConstraint> sub;
      for (size_t idx : core.constraints) sub.push_back(cs.at(idx));
      CHECK(std::holds_alternative<DegreeCore>(
          check_constraints(sub, integral ? kIntegral : kDense)));
    }
  }
  // the generator must exercise both outcomes heavily
  CHECK(sat_seen > 500);
  CHECK(unsat_seen > 500);
}

TEST_CASE("model_satisfies rejects wrong assignments") {
  std::vector<DegConstraint> cs = {{CmpOp::Gt, atom("a"), atom("b")}};
  DegreeModel good{{{"a", Rational(2)}, {"b", Rational(1)}}};
  DegreeModel bad{{{"a", Rational(1)}, {"b", Rational(2)}}};
  CHECK(model_satisfies(good, cs));
  CHECK_FALSE(model_satisfies(bad, cs));
}
