#pragma once

// Reader for the FraCaS test-suite XML layout: <problem> elements carrying an
// id and a fracas_answer attribute, with <p> premises and an <h> hypothesis.
// Section membership goes by id range; problems marked undef have no definite
// gold answer and are excluded from scored summaries.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace anota {

struct FracasProblem {
  int id = 0;
  std::string answer;  // yes | no | unknown | undef
  std::vector<std::string> premises;
  std::string hypothesis;
};

struct FracasError : std::runtime_error {
  explicit FracasError(const std::string& what) : std::runtime_error(what) {}
};

std::vector<FracasProblem> parse_fracas_xml(const std::string& path);

// Problems with lo <= id <= hi, in id order.
std::vector<FracasProblem> fracas_range(const std::vector<FracasProblem>& all, int lo, int hi);

// Answer counts over the definite (non-undef) problems of the list.
std::map<std::string, int> fracas_answer_counts(const std::vector<FracasProblem>& problems);

}  // namespace anota
