#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fgeq/equation.hpp"

namespace fgeq::oracle {

/// 1 + sum_{l=1..L} 2σ(2σ-1)^{l-1}.
std::uint64_t reduced_word_count(std::uint32_t sigma, std::size_t max_len);
void enumerate_reduced(std::uint32_t sigma, std::size_t max_len, const std::function<void(WordView)>& visit);
std::vector<Word> enumerate_reduced(std::uint32_t sigma, std::size_t max_len);

/// Number of generators occurring in eq (at least 1).
std::uint32_t alphabet_size(const Equation& eq);

/// All reduced x with |x| <= max_len solving eq, found by direct substitution.
std::vector<Word> brute_solutions(const Equation& eq, std::size_t max_len, std::uint32_t sigma = 0);

/// Deterministic under seed; the result is normalized and satisfies the Equation invariants.
Equation random_equation(std::uint32_t sigma, std::size_t max_m, std::size_t max_word_len, std::uint64_t seed);

}  // namespace fgeq::oracle
