#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fgeq {

// A letter packs a generator id and an inverse bit: letter = 2*gen + inverse.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

constexpr Letter make_letter(std::uint32_t gen, bool inverse) { return (gen << 1) | (inverse ? 1u : 0u); }
constexpr Letter inverse(Letter a) { return a ^ 1u; }
constexpr std::uint32_t generator(Letter a) { return a >> 1; }
constexpr bool is_inverse(Letter a) { return (a & 1u) != 0; }

/// Parses the text form: lowercase letters are generators, uppercase their inverses.
/// Throws std::invalid_argument on any other character.
Word parse_word(std::string_view text);
std::string to_string(WordView w);

Word concat(WordView a, WordView b);
Word involute(WordView w);
Word nf(WordView w);
bool is_reduced(WordView w);
bool is_cyclically_reduced(WordView w);

struct CyclicDecomposition {
  Word conjugator;
  Word core;
};

/// nf(w) = conjugator . core . involute(conjugator), core cyclically reduced.
CyclicDecomposition cyclic_reduce(WordView w);

struct PrimitiveRoot {
  Word root;
  long exponent = 1;
};

/// Throws std::invalid_argument for the empty word.
PrimitiveRoot primitive_root(WordView w);
bool is_primitive(WordView w);

/// True iff u is a cyclic rotation of v or of involute(v).
bool conj_shift_equiv(WordView u, WordView v);

std::size_t longest_periodic_prefix_naive(WordView w, std::size_t p);
bool has_period(WordView w, std::size_t p);

/// Signed exponent k of the longest prefix of t equal to s^k (negative for powers of involute(s)).
long power_prefix(WordView s, WordView t);
long power_suffix(WordView s, WordView t);

struct MaximalPower {
  long exponent;
  std::size_t position;
  friend bool operator==(const MaximalPower&, const MaximalPower&) = default;
};

std::vector<MaximalPower> maximal_powers(WordView s, WordView t);

std::optional<Word> common_root(WordView s, WordView t);

/// pairing[i] is the partner position of i.
using Pairing = std::vector<std::size_t>;

std::optional<Pairing> reduction_pairing(WordView w);
bool is_valid_pairing(WordView w, const Pairing& f);

/// factors = s0, u1, s1, ..., uk, sk (odd count). Returns the 1-based index i of a pseudo-solution u_i.
std::size_t find_pseudosolution(std::span<const Word> factors, const Pairing& f);
bool is_pseudosolution(std::span<const Word> factors, const Pairing& f, std::size_t i);

}  // namespace fgeq
