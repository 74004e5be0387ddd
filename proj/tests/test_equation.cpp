#include "test_main.hpp"

#include "fgeq/equation.hpp"

using namespace fgeq;
using testing_util::W;

TEST_CASE("parse") {
  auto raw = parse_equation("X ab X' c");
  auto n = normalize(raw);
  REQUIRE(n.kind == EquationKind::proper);
  CHECK(n.eq.exponents == std::vector<int>{1, -1});
  CHECK(format_equation(n.eq) == "X ab X' c");
  CHECK(format_equation(read_equation("X a = a X").eq) == "X a X' A");
  CHECK_THROWS_AS(parse_equation("a b"), ParseError);
  CHECK_THROWS_AS(parse_equation("X a = b = X"), ParseError);
  CHECK_THROWS_AS(parse_equation("X a1"), ParseError);
  CHECK(format_equation(read_equation("X a X' A  # centralizer").eq) == "X a X' A");
}

TEST_CASE("normalize") {
  CHECK(format_equation(read_equation("ab X c").eq) == "X cab");
  CHECK(read_equation("X X' a").kind == EquationKind::trivially_false);
  CHECK(read_equation("X X'").kind == EquationKind::trivially_true);
  CHECK(read_equation("a X X' A").kind == EquationKind::trivially_true);
  // Cancellation cascades: X a X X' A X' -> X a A X' -> X X' -> ε.
  CHECK(read_equation("X a X X' A X'").kind == EquationKind::trivially_true);
  // Wrap-around cancellation through the rotation.
  CHECK(format_equation(read_equation("X' b X a X").eq) == "X ab");
  CHECK(format_equation(read_equation("X abB").eq) == "X a");
}

TEST_CASE("normalize preserves solutions and is idempotent") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    RawEquation raw;
    std::size_t count = 1 + rng() % 6;
    bool any_var = false;
    for (std::size_t t = 0; t < count; ++t) {
      if (rng() % 2) {
        raw.tokens.push_back({true, rng() % 2 ? 1 : -1, {}});
        any_var = true;
      } else {
        raw.tokens.push_back({false, 1, testing_util::random_word(rng, 2, rng() % 3)});
      }
    }
    if (!any_var) raw.tokens.push_back({true, 1, {}});
    auto n = normalize(raw);
    for (int s = 0; s < 10; ++s) {
      Word x = testing_util::random_reduced(rng, 2, rng() % 4);
      bool raw_sol = substitute(raw, x).empty();
      bool norm_sol = n.kind == EquationKind::trivially_true ||
                      (n.kind == EquationKind::proper && is_solution(n.eq, x));
      CHECK(raw_sol == norm_sol);
    }
    if (n.kind == EquationKind::proper) {
      CHECK(satisfies_invariants(n.eq));
      auto again = normalize(n.eq);
      REQUIRE(again.kind == EquationKind::proper);
      CHECK(again.eq == n.eq);
    }
  }
}
