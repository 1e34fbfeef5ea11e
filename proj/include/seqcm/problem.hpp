#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqcm/monomial_ideal.hpp"

namespace seqcm {

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> c{"filtration", "goodsop", "paramdecomp", "seqcm", "hilbert-samuel",
                                          "verify-all"};
  return c;
}

/// Verdicts a problem file expects; absent fields are not compared.
struct ExpectedVerdict {
  std::optional<bool> seq_cm;
  std::optional<bool> cohen_macaulay;
  std::optional<int> exit_code;
};

struct ProblemSpec {
  std::string name;
  std::vector<std::string> vars;
  std::uint32_t characteristic = 32003;
  std::vector<std::string> ideal;
  std::optional<std::vector<std::string>> sop;
  int n_max = 4;
  int sop_samples = 3;
  std::uint64_t rng_seed = 1;
  std::vector<std::string> commands;
  ExpectedVerdict expected;
};

/// Parses and validates a JSON problem. Unknown fields, malformed JSON and
/// bad values raise ParseError (with line and column for JSON syntax) or
/// InvalidArgument.
ProblemSpec parse_problem(const std::string& text);

std::string problem_to_json(const ProblemSpec& spec);

/// The spec instantiated in its ring. Ideal generators must be monomials and
/// sop elements homogeneous.
struct Problem {
  ProblemSpec spec;
  RingPtr ring;
  MonomialIdeal ideal;
  std::optional<std::vector<Polynomial>> sop;
};

Problem build_problem(const ProblemSpec& spec);

}  // namespace seqcm
