#include <random>

#include "fgeq/oracle.hpp"

namespace fgeq::oracle {

std::uint64_t reduced_word_count(std::uint32_t sigma, std::size_t max_len) {
  std::uint64_t total = 1, level = 2ull * sigma;
  for (std::size_t l = 1; l <= max_len; ++l) {
    total += level;
    level *= 2ull * sigma - 1;
  }
  return total;
}

namespace {

void extend(std::uint32_t sigma, std::size_t max_len, Word& w, const std::function<void(WordView)>& visit) {
  visit(w);
  if (w.size() == max_len) return;
  for (Letter a = 0; a < 2 * sigma; ++a) {
    if (!w.empty() && w.back() == inverse(a)) continue;
    w.push_back(a);
    extend(sigma, max_len, w, visit);
    w.pop_back();
  }
}

}  // namespace

void enumerate_reduced(std::uint32_t sigma, std::size_t max_len, const std::function<void(WordView)>& visit) {
  Word w;
  extend(sigma, max_len, w, visit);
}

std::vector<Word> enumerate_reduced(std::uint32_t sigma, std::size_t max_len) {
  std::vector<Word> out;
  enumerate_reduced(sigma, max_len, [&](WordView w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

std::uint32_t alphabet_size(const Equation& eq) {
  std::uint32_t sigma = 1;
  for (const Word& w : eq.words)
    for (Letter a : w) sigma = std::max(sigma, generator(a) + 1);
  return sigma;
}

std::vector<Word> brute_solutions(const Equation& eq, std::size_t max_len, std::uint32_t sigma) {
  if (sigma == 0) sigma = alphabet_size(eq);
  std::vector<Word> out;
  enumerate_reduced(sigma, max_len, [&](WordView x) {
    if (is_solution(eq, x)) out.emplace_back(x.begin(), x.end());
  });
  return out;
}

namespace {

struct Draw {
  std::mt19937_64 rng;
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng() % n; }
  int sign() { return below(2) ? 1 : -1; }
  Word reduced(std::uint32_t sigma, std::size_t len) {
    Word w;
    while (w.size() < len) {
      Letter a = static_cast<Letter>(below(2 * sigma));
      if (!w.empty() && w.back() == inverse(a)) continue;
      w.push_back(a);
    }
    return w;
  }
};

}  // namespace

Equation random_equation(std::uint32_t sigma, std::size_t max_m, std::size_t max_word_len, std::uint64_t seed) {
  Draw d{std::mt19937_64(seed)};
  for (int attempt = 0;; ++attempt) {
    Equation eq;
    std::size_t m = 1 + d.below(max_m);
    eq.exponents.resize(m);
    for (int& p : eq.exponents) p = d.sign();
    std::uint64_t mode = attempt < 64 ? d.below(3) : 0;
    if (mode == 2) {
      // Words built from a hidden short word z produce equations with parametric solutions.
      Word z = d.reduced(sigma, 1 + d.below(2));
      for (std::size_t i = 0; i < m; ++i) {
        Word w;
        std::size_t factors = d.below(4);
        for (std::size_t f = 0; f < factors; ++f) {
          std::uint64_t pick = d.below(5);
          Word piece = pick < 2 ? z : pick < 4 ? involute(z) : d.reduced(sigma, 1);
          w.insert(w.end(), piece.begin(), piece.end());
        }
        eq.words.push_back(nf(w));
      }
    } else {
      for (std::size_t i = 0; i < m; ++i) eq.words.push_back(d.reduced(sigma, d.below(max_word_len + 1)));
    }
    if (mode >= 1 && d.below(2)) {
      // Plant a solution: close the product with the last word.
      Word x = d.reduced(sigma, d.below(4));
      eq.words.back().clear();
      eq.words.back() = involute(substitute(eq, x));
    }
    bool ok = true;
    for (const Word& w : eq.words) ok = ok && w.size() <= max_word_len;
    if (!ok) continue;
    NormalizedEquation n = normalize(eq);
    if (n.kind != EquationKind::proper || !(n.eq == eq)) continue;
    return eq;
  }
}

}  // namespace fgeq::oracle
