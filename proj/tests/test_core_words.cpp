#include "test_main.hpp"

#include <numeric>

using namespace fgeq;
using testing_util::W;

TEST_CASE("involute and nf") {
  CHECK(to_string(involute(W("ab"))) == "BA");
  CHECK(involute(W("")).empty());
  CHECK(to_string(involute(W("aA"))) == "aA");
  CHECK(to_string(nf(W("abB"))) == "a");
  CHECK(nf(W("aA")).empty());
  CHECK(to_string(nf(W("abAB"))) == "abAB");
  CHECK(is_reduced(W("ab")));
  CHECK_FALSE(is_reduced(W("aAb")));
  CHECK(is_reduced(W("")));
  CHECK_THROWS_AS(parse_word("a1"), std::invalid_argument);
}

TEST_CASE("cyclic_reduce") {
  auto d = cyclic_reduce(W("abA"));
  CHECK(to_string(d.conjugator) == "a");
  CHECK(to_string(d.core) == "b");
  d = cyclic_reduce(W("ab"));
  CHECK(d.conjugator.empty());
  CHECK(to_string(d.core) == "ab");
  d = cyclic_reduce(W("abcBA"));
  CHECK(to_string(d.conjugator) == "ab");
  CHECK(to_string(d.core) == "c");
}

TEST_CASE("primitive_root") {
  auto r = primitive_root(W("abab"));
  CHECK(to_string(r.root) == "ab");
  CHECK(r.exponent == 2);
  r = primitive_root(W("aba"));
  CHECK(to_string(r.root) == "aba");
  CHECK(r.exponent == 1);
  r = primitive_root(W("aaa"));
  CHECK(to_string(r.root) == "a");
  CHECK(r.exponent == 3);
  CHECK_THROWS_AS(primitive_root(W("")), std::invalid_argument);
  r = primitive_root(W("abbA"));  // conjugate of b^2
  CHECK(to_string(r.root) == "abA");
  CHECK(r.exponent == 2);
}

TEST_CASE("conj_shift_equiv") {
  CHECK(conj_shift_equiv(W("ab"), W("ba")));
  CHECK(conj_shift_equiv(W("ab"), W("AB")));
  CHECK_FALSE(conj_shift_equiv(W("ab"), W("ac")));
}

TEST_CASE("periodic prefix") {
  CHECK(longest_periodic_prefix_naive(W("ababab"), 2) == 6);
  CHECK(longest_periodic_prefix_naive(W("ab"), 5) == 2);
  // Independent scan oracle for ("abcabd", 3).
  Word w = W("abcabd");
  std::size_t len = 3;
  while (len < w.size() && w[len] == w[len - 3]) ++len;
  CHECK(len == 5);
  CHECK(longest_periodic_prefix_naive(w, 3) == len);
}

TEST_CASE("power prefix and suffix") {
  CHECK(power_prefix(W("ab"), W("ababAB")) == 2);
  CHECK(power_prefix(W("ab"), W("BABAc")) == -2);
  CHECK(power_prefix(W("ab"), W("ba")) == 0);
  CHECK(power_suffix(W("ab"), W("cabab")) == 2);
  CHECK(power_suffix(W("ab"), W("cBA")) == -1);
  CHECK(power_suffix(W("ab"), W("")) == 0);
}

TEST_CASE("maximal_powers") {
  auto mp = maximal_powers(W("a"), W("aaababaa"));
  std::vector<MaximalPower> expect{{3, 0}, {1, 4}, {2, 6}};
  CHECK(mp == expect);
  mp = maximal_powers(W("ab"), W("aaababaa"));
  REQUIRE(mp.size() == 1);
  CHECK(mp[0] == MaximalPower{2, 2});
  CHECK(maximal_powers(W("a"), W("b")).empty());
  mp = maximal_powers(W("ab"), W("cBABAc"));
  REQUIRE(mp.size() == 1);
  CHECK(mp[0] == MaximalPower{-2, 1});
}

TEST_CASE("common_root") {
  CHECK(to_string(*common_root(W("abab"), W("ab"))) == "ab");
  CHECK(to_string(*common_root(W("aa"), W("aaa"))) == "a");
  CHECK_FALSE(common_root(W("ab"), W("ba")).has_value());
}

TEST_CASE("reduction pairing") {
  auto f = reduction_pairing(W("aA"));
  REQUIRE(f);
  CHECK((*f)[0] == 1);
  CHECK((*f)[1] == 0);
  CHECK_FALSE(reduction_pairing(W("ab")));
  f = reduction_pairing(W("aAaA"));
  REQUIRE(f);
  CHECK(is_valid_pairing(W("aAaA"), *f));
  Pairing crossing{2, 3, 0, 1};
  CHECK_FALSE(is_valid_pairing(W("aAaA"), crossing));
}

TEST_CASE("find_pseudosolution") {
  std::vector<Word> fs{W("a"), W("A"), W("")};
  auto f = *reduction_pairing(W("aA"));
  CHECK(find_pseudosolution(fs, f) == 1);
  std::vector<Word> gs{W(""), W("ab"), W(""), W("BA"), W("")};
  auto g = *reduction_pairing(W("abBA"));
  std::size_t i = find_pseudosolution(gs, g);
  CHECK((i == 1 || i == 2));
  CHECK(is_pseudosolution(gs, g, i));
}

TEST_CASE("find_pseudosolution randomized") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    // Build an ε-equivalent word, then cut it into factors at random points.
    Word half = testing_util::random_reduced(rng, 2, rng() % 8);
    Word w;
    for (int part = 0; part < 3; ++part) {
      Word h = testing_util::random_reduced(rng, 2, rng() % 5);
      w.insert(w.end(), h.begin(), h.end());
      Word hb = involute(h);
      w.insert(w.end(), hb.begin(), hb.end());
    }
    w.insert(w.begin(), half.begin(), half.end());
    Word hb = involute(half);
    w.insert(w.end(), hb.begin(), hb.end());
    auto f = reduction_pairing(w);
    REQUIRE(f);
    std::size_t k = 1 + rng() % 4;
    std::vector<std::size_t> cuts{0, w.size()};
    for (std::size_t c = 0; c < 2 * k; ++c) cuts.push_back(w.empty() ? 0 : rng() % (w.size() + 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<Word> factors;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c)
      factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(cuts[c]), w.begin() + static_cast<std::ptrdiff_t>(cuts[c + 1]));
    std::size_t i = find_pseudosolution(factors, *f);
    CHECK(is_pseudosolution(factors, *f, i));
  }
}

TEST_CASE("nf properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    Word u = testing_util::random_word(rng, 3, rng() % 12);
    Word v = testing_util::random_word(rng, 3, rng() % 12);
    CHECK(nf(nf(u)) == nf(u));
    CHECK(involute(nf(concat(u, v))) == nf(concat(involute(v), involute(u))));
    Word r = nf(u);
    CHECK(is_reduced(r));
  }
}
