#include "test_main.hpp"

#include "fgeq/oracle.hpp"
#include "fgeq/solver.hpp"

using namespace fgeq;
using testing_util::W;

namespace {

SolutionSet run(const char* text) { return solve(read_equation(text)); }

Family fam(const char* a, const char* w, const char* b) { return canonicalize_family(W(a), W(w), W(b)); }

}  // namespace

TEST_CASE("known answers") {
  auto s = run("X a X' A");
  CHECK(s.finite.empty());
  REQUIRE(s.families.size() == 1);
  CHECK(s.families[0] == Family{W(""), W("a"), W("")});

  s = run("X ab X' BA");
  CHECK(s.finite.empty());
  REQUIRE(s.families.size() == 1);
  CHECK(s.families[0] == Family{W(""), W("ab"), W("")});

  s = run("X X");
  CHECK(s.families.empty());
  CHECK(s.finite == std::vector<Word>{W("")});

  s = run("X a X' B");
  CHECK(s.families.empty());
  CHECK(s.finite.empty());

  s = run("X X a");
  CHECK(s.families.empty());
  CHECK(s.finite.empty());

  s = run("X X = aa");
  CHECK(s.families.empty());
  CHECK(s.finite == std::vector<Word>{W("a")});

  for (const auto& sol : {run("X a X' A"), run("X ab X' BA"), run("X X")}) CHECK(sol.diagnostics.empty());
}

TEST_CASE("trivial equations") {
  auto t = solve(read_equation("X X'"));
  CHECK(t.all_words());
  CHECK(t.contains(W("abAB")));
  NormalizedEquation no_var;
  no_var.kind = EquationKind::trivially_false;
  auto f = solve(no_var);
  CHECK(!f.all_words());
  CHECK(f.finite.empty());
  CHECK(f.families.empty());
}

TEST_CASE("canonical families") {
  CHECK(fam("a", "ba", "") == fam("", "ab", "a"));
  CHECK(fam("", "abab", "") == Family{W(""), W("ab"), W("")});
  CHECK(fam("ab", "ab", "") == Family{W(""), W("ab"), W("")});
  CHECK(!families_equal(fam("", "a", ""), fam("", "b", "")));
  CHECK(families_equal(fam("a", "ba", ""), fam("", "ab", "a")));
  CHECK(fam("", "BA", "") == fam("", "ab", ""));
  // conjugated base moves into alpha and beta
  CHECK(fam("", "cabC", "") == fam("c", "ab", "C"));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    Word a = testing_util::random_reduced(rng, 2, rng() % 4);
    Word w = testing_util::random_reduced(rng, 2, 1 + rng() % 4);
    Word b = testing_util::random_reduced(rng, 2, rng() % 4);
    if (nf(w).empty()) continue;
    Family f = canonicalize_family(a, w, b);
    CHECK(canonicalize_family(f.alpha, f.w, f.beta) == f);
    CHECK(is_primitive(f.w));
    CHECK(is_cyclically_reduced(f.w));
    CHECK(power_suffix(f.w, f.alpha) == 0);
    CHECK(power_prefix(f.w, f.beta) == 0);
    for (long k = -4; k <= 4; ++k) CHECK(family_member(f, family_word(Family{a, w, b}, k)).has_value());
    // index shift and rotation invariance
    Family shifted = canonicalize_family(family_word(Family{a, w, {}}, 2), w, b);
    INFO(to_string(a), " ", to_string(w), " ", to_string(b));
    CHECK(shifted == f);
  }
}

TEST_CASE("family membership") {
  Family a{W(""), W("a"), W("")};
  CHECK(family_member(a, W("aaa")) == 3);
  CHECK(!family_member(a, W("b")).has_value());
  CHECK(family_member(Family{W(""), W("ab"), W("")}, W("BA")) == -1);
  CHECK(family_member(a, W("")) == 0);
}

TEST_CASE("solver agrees with the oracle on random equations") {
  std::size_t families = 0;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    Equation eq = oracle::random_equation(2, 4, 5, seed);
    SolutionSet s = solve(eq);
    CHECK(s.diagnostics.empty());
    families += s.families.size();
    auto brute = oracle::brute_solutions(eq, 5);
    for (const Word& x : brute) {
      INFO(format_equation(eq), " x=", to_string(x));
      CHECK(s.contains(x));
    }
    for (const Word& x : s.finite) CHECK(is_solution(eq, x));
    for (const Family& f : s.families)
      for (long k = -3; k <= 3; ++k) CHECK(is_solution(eq, family_word(f, k)));
  }
  CHECK(families > 0);
}
