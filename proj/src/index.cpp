#include "fgeq/index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fgeq/simd.hpp"

namespace fgeq::index {

// ---------------------------------------------------------------- corpus

Corpus::Corpus(std::span<const Word> words) {
  offsets_.push_back(0);
  for (const Word& w : words) {
    text_.insert(text_.end(), w.begin(), w.end());
    offsets_.push_back(text_.size());
  }
  Word mirrored = involute(text_);
  text_.insert(text_.end(), mirrored.begin(), mirrored.end());

  const std::size_t n = text_.size();
  sa_.resize(n);
  rank_.resize(n);
  lcp_.assign(n, 0);
  if (n == 0) return;

  // Prefix doubling over rank-compressed letters.
  Word letters = text_;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  for (std::size_t i = 0; i < n; ++i) {
    sa_[i] = static_cast<std::uint32_t>(i);
    rank_[i] = static_cast<std::uint32_t>(std::lower_bound(letters.begin(), letters.end(), text_[i]) - letters.begin());
  }
  std::vector<std::uint32_t> tmp(n);
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::uint32_t i) {
      return std::pair<std::int64_t, std::int64_t>(rank_[i], i + k < n ? static_cast<std::int64_t>(rank_[i + k]) : -1);
    };
    std::sort(sa_.begin(), sa_.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
    tmp[sa_[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) tmp[sa_[r]] = tmp[sa_[r - 1]] + (key(sa_[r - 1]) < key(sa_[r]) ? 1 : 0);
    rank_ = tmp;
    if (rank_[sa_[n - 1]] == n - 1) break;
  }

  // Kasai: lcp_[r] = lcp of suffixes sa_[r-1] and sa_[r].
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank_[i] == 0) {
      h = 0;
      continue;
    }
    std::size_t j = sa_[rank_[i] - 1];
    while (i + h < n && j + h < n && text_[i + h] == text_[j + h]) ++h;
    lcp_[rank_[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }

  sparse_.push_back(lcp_);
  for (std::size_t w = 1; 2 * w <= n; w <<= 1) {
    const auto& prev = sparse_.back();
    std::vector<std::uint32_t> next(n - 2 * w + 1);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = std::min(prev[i], prev[i + w]);
    sparse_.push_back(std::move(next));
  }
}

std::size_t Corpus::lce(std::size_t a, std::size_t b) const {
  const std::size_t n = text_.size();
  if (a >= n || b >= n) return 0;
  if (a == b) return n - a;
  std::size_t lo = rank_[a], hi = rank_[b];
  if (lo > hi) std::swap(lo, hi);
  ++lo;  // min over lcp_[lo..hi]
  std::size_t level = std::bit_width(hi - lo + 1) - 1;
  return std::min(sparse_[level][lo], sparse_[level][hi + 1 - (std::size_t{1} << level)]);
}

// ---------------------------------------------------------------- segments

Segment Segment::interval(const Corpus& c, std::size_t b, std::size_t e) {
  if (b > e || e > c.size()) throw std::out_of_range("interval outside corpus");
  Segment s;
  s.kind = Kind::interval;
  s.begin = b;
  s.length = e - b;
  s.corpus = &c;
  return s;
}

Segment Segment::literal(WordView w) {
  Segment s;
  s.kind = Kind::literal;
  s.length = w.size();
  s.strand = std::make_shared<const Strand>(Strand{Word(w.begin(), w.end()), involute(w)});
  return s;
}

Segment Segment::run(std::shared_ptr<const RunBase> base, long exponent) {
  Segment s;
  s.kind = Kind::run;
  s.inverted = exponent < 0;
  s.length = static_cast<std::size_t>(exponent < 0 ? -exponent : exponent) * base->period();
  s.base = std::move(base);
  return s;
}

std::size_t Segment::period() const { return base ? base->period() : 0; }

const Letter* Segment::data() const {
  if (kind == Kind::interval) return corpus->text().data() + begin;
  return (inverted ? strand->inv : strand->fwd).data() + begin;
}

Letter Segment::at(std::size_t i) const {
  if (kind == Kind::run) return base->letters(inverted)[(begin + i) % base->period()];
  return data()[i];
}

Segment Segment::slice(std::size_t from, std::size_t to) const {
  Segment s = *this;
  s.length = to - from;
  if (kind == Kind::run)
    s.begin = (begin + from) % base->period();
  else
    s.begin = begin + from;
  return s;
}

Segment Segment::involuted() const {
  Segment s = *this;
  switch (kind) {
    case Kind::interval:
      s.begin = corpus->size() - (begin + length);
      break;
    case Kind::literal:
      s.inverted = !inverted;
      s.begin = strand->fwd.size() - begin - length;
      break;
    case Kind::run: {
      std::size_t p = base->period();
      s.inverted = !inverted;
      std::size_t r = (begin + (length == 0 ? 0 : length - 1)) % p;
      s.begin = (p - 1 - r) % p;
      break;
    }
  }
  return s;
}

// ---------------------------------------------------------------- rep words

RepWord RepWord::literal(WordView w) { return RepWord(Segment::literal(w)); }

RepWord RepWord::interval(const Corpus& c, std::size_t b, std::size_t e) { return RepWord(Segment::interval(c, b, e)); }

void RepWord::append(const Segment& s) {
  if (s.length == 0) return;
  length_ += s.length;
  if (!segs_.empty()) {
    Segment& b = segs_.back();
    if (b.kind == s.kind && b.inverted == s.inverted && b.corpus == s.corpus && b.strand == s.strand &&
        b.base == s.base) {
      bool contiguous = s.kind == Segment::Kind::run ? (b.begin + b.length) % b.base->period() == s.begin
                                                      : b.begin + b.length == s.begin;
      if (contiguous) {
        b.length += s.length;
        return;
      }
    }
  }
  segs_.push_back(s);
}

void RepWord::append(const RepWord& w) {
  for (const Segment& s : w.segs_) append(s);
}

RepWord RepWord::slice(std::size_t from, std::size_t to) const {
  if (from > to || to > length_) throw std::out_of_range("RepWord slice");
  RepWord out;
  std::size_t at = 0;
  for (const Segment& s : segs_) {
    std::size_t b = at, e = at + s.length;
    at = e;
    if (e <= from) continue;
    if (b >= to) break;
    out.append(s.slice(std::max(from, b) - b, std::min(to, e) - b));
  }
  return out;
}

RepWord RepWord::involuted() const {
  RepWord out;
  for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) out.append(it->involuted());
  return out;
}

Letter RepWord::at(std::size_t i) const {
  for (const Segment& s : segs_) {
    if (i < s.length) return s.at(i);
    i -= s.length;
  }
  throw std::out_of_range("RepWord index");
}

Word RepWord::materialize() const {
  Word w;
  w.reserve(length_);
  for (const Segment& s : segs_) {
    if (s.kind == Segment::Kind::run) {
      for (std::size_t i = 0; i < s.length; ++i) w.push_back(s.at(i));
    } else {
      const Letter* d = s.data();
      w.insert(w.end(), d, d + s.length);
    }
  }
  return w;
}

RepWord concat(const RepWord& a, const RepWord& b) {
  RepWord out = a;
  out.append(b);
  return out;
}

// ---------------------------------------------------------------- lcp

namespace {

std::size_t lcp_seq(std::span<const Segment> as, std::span<const Segment> bs) {
  std::size_t ia = 0, oa = 0, ib = 0, ob = 0, total = 0;
  while (ia < as.size() && ib < bs.size()) {
    const Segment& a = as[ia];
    const Segment& b = bs[ib];
    std::size_t la = a.length - oa, lb = b.length - ob;
    if (la == 0) {
      ++ia, oa = 0;
      continue;
    }
    if (lb == 0) {
      ++ib, ob = 0;
      continue;
    }
    std::size_t l = lcp_segment(oa ? a.slice(oa, a.length) : a, ob ? b.slice(ob, b.length) : b);
    total += l;
    if (l < std::min(la, lb)) return total;
    oa += l;
    ob += l;
  }
  return total;
}

// Agreement of len letters of run r (from its phase) with the flat letters d.
std::size_t run_vs_flat(const Segment& r, const Letter* d, std::size_t len) {
  const Letter* base = r.base->letters(r.inverted);
  std::size_t p = r.base->period(), pos = r.begin, done = 0;
  while (done < len) {
    std::size_t take = std::min(len - done, p - pos);
    std::size_t l = simd::mismatch(base + pos, d + done, take);
    done += l;
    if (l < take) break;
    pos = 0;
  }
  return done;
}

std::size_t flat_self_shift(const Segment& f, std::size_t p, std::size_t len) {
  if (f.kind == Segment::Kind::interval) return std::min(len, f.corpus->lce(f.begin, f.begin + p));
  const Letter* d = f.data();
  return simd::mismatch(d, d + p, len);
}

std::size_t lcp_run_flat(const Segment& r, const Segment& f) {
  std::size_t p = r.period();
  std::size_t len = std::min(r.length, f.length);
  std::size_t head = std::min(p, len);
  std::size_t first = run_vs_flat(r, f.data(), head);
  if (first < head || len <= p) return first;
  // Past one full period the run continues iff f repeats itself with period p.
  return p + flat_self_shift(f, p, len - p);
}

std::size_t lcp_run_run(const Segment& a, const Segment& b) {
  std::size_t len = std::min(a.length, b.length);
  std::size_t pa = a.period(), pb = b.period();
  bool same = a.base == b.base && a.inverted == b.inverted;
  if (same && a.begin == b.begin) return len;
  // Agreement on pa+pb letters forces agreement everywhere (Fine-Wilf); same base needs one period.
  std::size_t lim = std::min(len, same ? pa : pa + pb);
  const Letter* da = a.base->letters(a.inverted);
  const Letter* db = b.base->letters(b.inverted);
  std::size_t ia = a.begin, ib = b.begin, done = 0;
  while (done < lim) {
    std::size_t take = std::min({lim - done, pa - ia, pb - ib});
    std::size_t l = simd::mismatch(da + ia, db + ib, take);
    done += l;
    if (l < take) return done;
    ia = (ia + take) % pa;
    ib = (ib + take) % pb;
  }
  return len;
}

}  // namespace

std::size_t lcp_segment(const Segment& a, const Segment& b) {
  std::size_t len = std::min(a.length, b.length);
  if (len == 0) return 0;
  using K = Segment::Kind;
  if (a.kind != K::run && b.kind != K::run) {
    if (a.kind == K::interval && b.kind == K::interval && a.corpus == b.corpus)
      return std::min(len, a.corpus->lce(a.begin, b.begin));
    return simd::mismatch(a.data(), b.data(), len);
  }
  if (a.kind == K::run && b.kind == K::run) return lcp_run_run(a, b);
  if (a.kind == K::run) return lcp_run_flat(a, b);
  return lcp_run_flat(b, a);
}

std::size_t lcp_rep(const RepWord& s, const RepWord& t) { return lcp_seq(s.segments(), t.segments()); }

bool equal_rep(const RepWord& s, const RepWord& t) {
  return s.length() == t.length() && lcp_rep(s, t) == s.length();
}

// ---------------------------------------------------------------- normal forms

namespace {

// Returns the number of letters cancelled from each side.
std::size_t push_reduced(std::vector<Segment>& stack, Segment s) {
  std::size_t cancelled = 0;
  while (s.length > 0 && !stack.empty()) {
    Segment& top = stack.back();
    std::size_t c = lcp_segment(top.involuted(), s);
    if (c == 0) break;
    std::size_t before = std::min(top.length, s.length);
    cancelled += c;
    top.length -= c;
    s = s.slice(c, s.length);
    if (top.length == 0) stack.pop_back();
    if (c < before) break;
  }
  if (s.length > 0) stack.push_back(std::move(s));
  return cancelled;
}

RepWord from_stack(const std::vector<Segment>& stack) {
  RepWord out;
  for (const Segment& s : stack) out.append(s);
  return out;
}

}  // namespace

RepWord nf_rep(std::span<const RepWord> parts) {
  std::vector<Segment> stack;
  std::size_t total = 0;
  for (const RepWord& w : parts) total += w.segments().size();
  stack.reserve(total);
  for (const RepWord& w : parts)
    for (const Segment& s : w.segments()) push_reduced(stack, s);
  return from_stack(stack);
}

RepWord nf_rep(const RepWord& a, const RepWord& b) {
  const RepWord parts[2] = {a, b};
  return nf_rep(parts);
}

RepWord nf_mixed(std::span<const Segment> parts) {
  std::vector<Segment> stack;
  stack.reserve(parts.size());
  for (const Segment& s : parts) {
    if (s.kind == Segment::Kind::run && !(s.base->primitive && s.base->cyclically_reduced))
      throw std::invalid_argument("run base must be primitive and cyclically reduced");
    push_reduced(stack, s);
  }
  return from_stack(stack);
}

bool nf_is_empty(std::span<const Segment> parts) {
  std::size_t rest = 0;
  for (const Segment& s : parts) rest += s.length;
  if (rest % 2) return false;
  std::vector<Segment> stack;
  stack.reserve(parts.size());
  std::size_t height = 0;
  for (const Segment& s : parts) {
    rest -= s.length;
    height += s.length - 2 * push_reduced(stack, s);
    if (height > rest) return false;
  }
  return height == 0;
}

// ---------------------------------------------------------------- periods and powers

std::size_t periodic_prefix_rep(const RepWord& t, std::size_t p) {
  if (p == 0) throw std::invalid_argument("period must be positive");
  if (p >= t.length()) return t.length();
  return p + lcp_rep(t, t.drop_prefix(p));
}

std::size_t periodic_suffix_rep(const RepWord& t, std::size_t p) { return periodic_prefix_rep(t.involuted(), p); }

long power_prefix_rep(const RunBase& s, const RepWord& t) {
  std::size_t p = s.period();
  if (p == 0 || t.length() < p) return 0;
  long sign = 0;
  if (lcp_rep(s.fwd, t) >= p)
    sign = 1;
  else if (lcp_rep(s.inv, t) >= p)
    sign = -1;
  if (sign == 0) return 0;
  return sign * static_cast<long>(periodic_prefix_rep(t, p) / p);
}

long power_suffix_rep(const RunBase& s, const RepWord& t) { return -power_prefix_rep(s, t.involuted()); }

long power_prefix_rep(WordView s, const RepWord& t) {
  if (s.empty()) return 0;
  RunBase b;
  b.fwd = RepWord::literal(s);
  b.inv = b.fwd.involuted();
  b.flat_fwd = b.fwd.materialize();
  b.flat_inv = b.inv.materialize();
  return power_prefix_rep(b, t);
}

RepCyclicDecomposition cyclic_reduce_rep(const RepWord& w) {
  std::size_t n = w.length();
  if (n == 0) return {};
  std::size_t t = std::min(lcp_rep(w, w.involuted()), (n - 1) / 2);
  return {w.prefix(t), w.slice(t, n - t)};
}

std::size_t primitive_root_length(const RepWord& w) {
  std::size_t p = w.length();
  for (std::size_t d = 1; d < p; ++d)
    if (p % d == 0 && periodic_prefix_rep(w, d) == p) return d;
  return p;
}

std::shared_ptr<const RunBase> make_run_base(const RepWord& w) {
  if (w.empty()) throw std::invalid_argument("empty run base");
  auto b = std::make_shared<RunBase>();
  for (const Segment& s : w.segments())
    if (s.kind == Segment::Kind::run) throw std::invalid_argument("run base may not contain runs");
  b->fwd = w;
  b->inv = w.involuted();
  b->flat_fwd = b->fwd.materialize();
  b->flat_inv = b->inv.materialize();
  std::size_t p = w.length();
  b->cyclically_reduced = p == 1 || w.at(0) != inverse(w.at(p - 1));
  b->primitive = primitive_root_length(w) == p;
  return b;
}

// ---------------------------------------------------------------- solution testing

IndexedEquation IndexedEquation::build(const Equation& eq) {
  IndexedEquation out;
  out.corpus = std::make_shared<const Corpus>(eq.words);
  out.exponents = eq.exponents;
  for (std::size_t i = 0; i < eq.m(); ++i)
    out.words.push_back(RepWord::interval(*out.corpus, out.corpus->word_begin(i), out.corpus->word_end(i)));
  return out;
}

bool test_solution(const IndexedEquation& eq, const RepWord& x) {
  RepWord xb = x.involuted();
  std::vector<Segment> all;
  for (std::size_t h = 0; h < eq.m(); ++h) {
    const RepWord& xh = eq.exponents[h] > 0 ? x : xb;
    all.insert(all.end(), xh.segments().begin(), xh.segments().end());
    all.insert(all.end(), eq.words[h].segments().begin(), eq.words[h].segments().end());
  }
  return nf_is_empty(all);
}

bool test_solution(const IndexedEquation& eq, const RepWord& alpha, const std::shared_ptr<const RunBase>& u, long i,
                   const std::shared_ptr<const RunBase>& v, long j, const RepWord& beta) {
  std::vector<Segment> parts(alpha.segments().begin(), alpha.segments().end());
  if (u && i != 0) parts.push_back(Segment::run(u, i));
  if (v && j != 0) parts.push_back(Segment::run(v, j));
  parts.insert(parts.end(), beta.segments().begin(), beta.segments().end());
  return test_solution(eq, nf_mixed(parts));
}

}  // namespace fgeq::index
