#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fgeq/word.hpp"

namespace fgeq {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RawToken {
  bool is_variable = false;
  int sign = 1;  // variable tokens only
  Word word;     // constant tokens only
};

struct RawEquation {
  std::vector<RawToken> tokens;  // the left-hand side of tokens ≈ ε
};

/// X^{p1} u1 ... X^{pm} um ≈ ε.
struct Equation {
  std::vector<int> exponents;
  std::vector<Word> words;

  std::size_t m() const { return exponents.size(); }
  std::size_t n() const;
  friend bool operator==(const Equation&, const Equation&) = default;
};

enum class EquationKind { proper, trivially_true, trivially_false };

struct NormalizedEquation {
  EquationKind kind = EquationKind::proper;
  Equation eq;    // meaningful for proper equations
  Word constant;  // the residual constant when m = 0
};

/// Grammar: tokens X, X', [a-zA-Z]+ words and at most one '='; '#' starts a comment.
RawEquation parse_equation(std::string_view text);
NormalizedEquation normalize(const RawEquation& raw);
NormalizedEquation normalize(const Equation& eq);
/// Parses and normalizes; throws ParseError.
NormalizedEquation read_equation(std::string_view text);

RawEquation to_raw(const Equation& eq);
std::string format_equation(const Equation& eq);
bool satisfies_invariants(const Equation& eq);

/// nf of the left-hand side with X := x.
Word substitute(const RawEquation& raw, WordView x);
Word substitute(const Equation& eq, WordView x);
bool is_solution(const Equation& eq, WordView x);

}  // namespace fgeq
