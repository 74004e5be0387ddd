#pragma once

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fgeq/word.hpp"

namespace testing_util {

inline fgeq::Word W(const char* s) { return fgeq::parse_word(s); }

inline fgeq::Word random_reduced(std::mt19937_64& rng, std::uint32_t sigma, std::size_t len) {
  fgeq::Word w;
  while (w.size() < len) {
    fgeq::Letter a = static_cast<fgeq::Letter>(rng() % (2 * sigma));
    if (!w.empty() && w.back() == fgeq::inverse(a)) continue;
    w.push_back(a);
  }
  return w;
}

inline fgeq::Word random_word(std::mt19937_64& rng, std::uint32_t sigma, std::size_t len) {
  fgeq::Word w(len);
  for (auto& a : w) a = static_cast<fgeq::Letter>(rng() % (2 * sigma));
  return w;
}

}  // namespace testing_util
