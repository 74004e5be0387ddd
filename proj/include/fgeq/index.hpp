#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fgeq/equation.hpp"
#include "fgeq/word.hpp"

namespace fgeq::index {

/// Text U·Ū over the equation words with suffix array, LCP table and a sparse-table RMQ.
class Corpus {
 public:
  explicit Corpus(std::span<const Word> words);

  WordView text() const { return text_; }
  std::size_t size() const { return text_.size(); }
  std::size_t half() const { return text_.size() / 2; }
  std::size_t word_begin(std::size_t i) const { return offsets_[i]; }
  std::size_t word_end(std::size_t i) const { return offsets_[i + 1]; }

  /// Longest common extension of the suffixes at a and b.
  std::size_t lce(std::size_t a, std::size_t b) const;
  std::span<const std::uint32_t> suffix_array() const { return sa_; }

 private:
  Word text_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> sa_, rank_, lcp_;
  std::vector<std::vector<std::uint32_t>> sparse_;
};

struct Strand {
  Word fwd;
  Word inv;
};

struct RunBase;

struct Segment {
  enum class Kind : std::uint8_t { interval, literal, run };

  Kind kind = Kind::literal;
  bool inverted = false;   // literal/run: read from the involuted storage
  std::size_t begin = 0;   // corpus offset, strand offset, or run phase
  std::size_t length = 0;
  const Corpus* corpus = nullptr;
  std::shared_ptr<const Strand> strand;
  std::shared_ptr<const RunBase> base;

  static Segment interval(const Corpus& c, std::size_t b, std::size_t e);
  static Segment literal(WordView w);
  static Segment run(std::shared_ptr<const RunBase> base, long exponent);

  std::size_t period() const;
  Letter at(std::size_t i) const;
  Segment slice(std::size_t from, std::size_t to) const;
  Segment involuted() const;
  /// Contiguous storage for interval and literal segments.
  const Letter* data() const;
};

class RepWord {
 public:
  RepWord() = default;
  explicit RepWord(Segment s) { append(s); }
  static RepWord literal(WordView w);
  static RepWord interval(const Corpus& c, std::size_t b, std::size_t e);

  const std::vector<Segment>& segments() const { return segs_; }
  std::size_t length() const { return length_; }
  std::size_t segment_count() const { return segs_.size(); }
  bool empty() const { return length_ == 0; }

  void append(const Segment& s);
  void append(const RepWord& w);
  RepWord slice(std::size_t from, std::size_t to) const;
  RepWord prefix(std::size_t n) const { return slice(0, n); }
  RepWord suffix(std::size_t n) const { return slice(length_ - n, length_); }
  RepWord drop_prefix(std::size_t n) const { return slice(n, length_); }
  RepWord drop_suffix(std::size_t n) const { return slice(0, length_ - n); }
  RepWord involuted() const;
  Letter at(std::size_t i) const;
  Word materialize() const;

 private:
  std::vector<Segment> segs_;
  std::size_t length_ = 0;
};

RepWord concat(const RepWord& a, const RepWord& b);

/// Base of a periodic run; pieces are intervals and literals only.
struct RunBase {
  RepWord fwd;
  RepWord inv;
  Word flat_fwd;
  Word flat_inv;
  bool primitive = false;
  bool cyclically_reduced = false;

  std::size_t period() const { return fwd.length(); }
  const RepWord& dir(bool inverted) const { return inverted ? inv : fwd; }
  const Letter* letters(bool inverted) const { return (inverted ? flat_inv : flat_fwd).data(); }
};

/// Throws std::invalid_argument when w is empty or contains runs.
std::shared_ptr<const RunBase> make_run_base(const RepWord& w);

std::size_t lcp_segment(const Segment& a, const Segment& b);
std::size_t lcp_rep(const RepWord& s, const RepWord& t);
bool equal_rep(const RepWord& s, const RepWord& t);

/// Stack reduction of the concatenation; each part must be reduced.
RepWord nf_rep(std::span<const RepWord> parts);
RepWord nf_rep(const RepWord& a, const RepWord& b);
/// Like nf_rep over single segments; rejects run bases that are not primitive and cyclically reduced.
RepWord nf_mixed(std::span<const Segment> parts);
/// Same as nf_mixed(parts).empty(), stopping as soon as the answer is known.
bool nf_is_empty(std::span<const Segment> parts);

std::size_t periodic_prefix_rep(const RepWord& t, std::size_t p);
std::size_t periodic_suffix_rep(const RepWord& t, std::size_t p);

long power_prefix_rep(const RunBase& s, const RepWord& t);
long power_suffix_rep(const RunBase& s, const RepWord& t);
long power_prefix_rep(WordView s, const RepWord& t);

/// Cyclic decomposition and primitive root computed on representations.
struct RepCyclicDecomposition {
  RepWord conjugator;
  RepWord core;
};
RepCyclicDecomposition cyclic_reduce_rep(const RepWord& w);
/// Length of the primitive root of a cyclically reduced word.
std::size_t primitive_root_length(const RepWord& w);

/// An equation whose constant words live in a corpus.
struct IndexedEquation {
  std::shared_ptr<const Corpus> corpus;
  std::vector<int> exponents;
  std::vector<RepWord> words;

  static IndexedEquation build(const Equation& eq);
  std::size_t m() const { return exponents.size(); }
};

/// x = nf(alpha u^i v^j beta); u or v may be null (exponent ignored).
bool test_solution(const IndexedEquation& eq, const RepWord& alpha, const std::shared_ptr<const RunBase>& u, long i,
                   const std::shared_ptr<const RunBase>& v, long j, const RepWord& beta);
bool test_solution(const IndexedEquation& eq, const RepWord& x);

}  // namespace fgeq::index
