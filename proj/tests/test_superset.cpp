#include "test_main.hpp"

#include <set>

#include "fgeq/oracle.hpp"
#include "fgeq/superset.hpp"

using namespace fgeq;
using index::RepWord;

namespace {

bool covered(const SupersetResult& r, const Word& x, long bound) {
  for (const RepWord& w : r.finite_candidates)
    if (w.materialize() == x) return true;
  for (const ParamFamily& f : r.families) {
    Word a = f.alpha.materialize(), u = f.u.materialize(), v = f.v.materialize(), b = f.beta.materialize();
    long jb = v.empty() ? 0 : bound;
    for (long i = -bound; i <= bound; ++i)
      for (long j = -jb; j <= jb; ++j) {
        Word w = a;
        for (long k = 0; k < (i < 0 ? -i : i); ++k) {
          Word piece = i < 0 ? involute(u) : u;
          w.insert(w.end(), piece.begin(), piece.end());
        }
        for (long k = 0; k < (j < 0 ? -j : j); ++k) {
          Word piece = j < 0 ? involute(v) : v;
          w.insert(w.end(), piece.begin(), piece.end());
        }
        w.insert(w.end(), b.begin(), b.end());
        if (nf(w) == x) return true;
      }
  }
  return false;
}

void check_families(const SupersetResult& r) {
  for (const ParamFamily& f : r.families) {
    Word u = f.u.materialize(), v = f.v.materialize();
    CHECK(!u.empty());
    CHECK(is_cyclically_reduced(u));
    CHECK(is_primitive(u));
    if (!v.empty()) {
      CHECK(is_cyclically_reduced(v));
      CHECK(is_primitive(v));
    }
    CHECK(is_reduced(f.alpha.materialize()));
    CHECK(is_reduced(f.beta.materialize()));
    CHECK(power_suffix(u, f.alpha.materialize()) == 0);
    CHECK(power_prefix(v.empty() ? u : v, f.beta.materialize()) == 0);
  }
}

}  // namespace

TEST_CASE("known equations") {
  auto eq = read_equation("X a X' A").eq;
  auto r = build_superset(index::IndexedEquation::build(eq));
  bool has_a = false;
  for (const auto& f : r.families)
    if (f.alpha.empty() && f.beta.empty() && to_string(f.u.materialize()) == "a" && f.v.empty()) has_a = true;
  CHECK(has_a);
  bool has_eps = false;
  for (const auto& w : r.finite_candidates) has_eps = has_eps || w.empty();
  CHECK(has_eps);
  check_families(r);

  auto sq = build_superset(index::IndexedEquation::build(read_equation("X X").eq));
  CHECK(sq.families.empty());
  REQUIRE(sq.finite_candidates.size() == 1);
  CHECK(sq.finite_candidates[0].empty());
}

TEST_CASE("finite shapes per triple are bounded") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    auto eq = oracle::random_equation(2, 5, 6, rng());
    auto ie = index::IndexedEquation::build(eq);
    std::size_t m = eq.m();
    for (std::size_t h = 0; h < m; ++h) {
      std::size_t h1 = (h + 1) % m;
      auto tc = triple_candidates(eq.exponents[h], ie.words[h], eq.exponents[h1], ie.words[h1], eq.exponents[(h + 2) % m]);
      std::set<Word> distinct;
      for (auto& w : tc.finite) distinct.insert(w.materialize());
      std::size_t bound = eq.words[h].size() + eq.words[h1].size() + 2;
      CHECK(distinct.size() <= 3 * bound * bound);
    }
    std::size_t n = eq.n();
    auto r = build_superset(ie);
    CHECK(r.finite_candidates.size() <= 4 * n * n);
  }
}

TEST_CASE("superset covers every bounded solution") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    auto eq = oracle::random_equation(2, 4, 5, rng());
    auto r = build_superset(index::IndexedEquation::build(eq));
    check_families(r);
    for (const Word& x : oracle::brute_solutions(eq, 5, 2)) {
      INFO(format_equation(eq), " x=", to_string(x));
      CHECK(covered(r, x, 7));
    }
  }
}
