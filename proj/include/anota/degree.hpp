#pragma once

// Conjunctions of degree-order constraints between atoms (named degree terms)
// and rational literals, decided as difference logic: each constraint becomes
// an edge x - y <= c (possibly strict), plus a per-component origin node
// anchoring absolute literal bounds. Infeasibility is a cycle with negative
// weight, or zero weight containing a strict edge. Components whose dimension
// is integral are decided over the integers by strengthening strict edges.

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "anota/rational.hpp"
#include "anota/term.hpp"

namespace anota {

// atom + offset, or a pure literal when atom is empty.
struct DegSide {
  std::string atom;
  Rational offset;
  std::string dim;  // optional dimension hint
};

struct DegConstraint {
  CmpOp op;
  DegSide lhs, rhs;
};

struct DegreeModel {
  std::map<std::string, Rational> values;
};

struct DegreeCore {
  std::vector<size_t> constraints;  // indices into the input vector
};

using DegreeResult = std::variant<DegreeModel, DegreeCore>;

struct MixedDimensionError : std::runtime_error {
  MixedDimensionError(const std::string& a, const std::string& b)
      : std::runtime_error("mixed-dimension comparison: '" + a + "' against '" + b + "'") {}
};

using IntegralFn = std::function<bool(const std::string&)>;

// Decides the conjunction. `integral` says whether a dimension ranges over
// the integers. Returns a satisfying assignment or the constraint indices of
// an infeasible cycle. Conflicting dimension hints within one connected
// component throw MixedDimensionError.
DegreeResult check_constraints(const std::vector<DegConstraint>& cs, const IntegralFn& integral);

// Verifies a model against the constraints (replay used by tests and traces).
bool model_satisfies(const DegreeModel& m, const std::vector<DegConstraint>& cs);

}  // namespace anota
