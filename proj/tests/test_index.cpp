#include "test_main.hpp"

#include "fgeq/index.hpp"

using namespace fgeq;
using namespace fgeq::index;
using testing_util::W;

namespace {

std::size_t naive_lcp(const Word& a, const Word& b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  return i;
}

struct Pool {
  std::vector<Word> words;
  std::shared_ptr<const Corpus> corpus;
  std::vector<std::shared_ptr<const RunBase>> bases;

  explicit Pool(std::mt19937_64& rng) {
    std::size_t m = 1 + rng() % 4;
    for (std::size_t i = 0; i < m; ++i) words.push_back(testing_util::random_reduced(rng, 2, rng() % 12));
    // Plant repetitions so that long matches occur.
    Word rep = testing_util::random_reduced(rng, 2, 1 + rng() % 3);
    if (is_cyclically_reduced(rep)) {
      Word w;
      for (int k = 0; k < 5; ++k) w.insert(w.end(), rep.begin(), rep.end());
      words.push_back(w);
    }
    corpus = std::make_shared<const Corpus>(words);
    for (int b = 0; b < 3; ++b) {
      Word w = testing_util::random_reduced(rng, 2, 1 + rng() % 4);
      if (!is_cyclically_reduced(w) || !is_primitive(w)) continue;
      bases.push_back(make_run_base(RepWord::literal(w)));
    }
    bases.push_back(make_run_base(RepWord::literal(rep.size() && is_cyclically_reduced(rep) ? primitive_root(rep).root : W("a"))));
  }

  // A random segment whose materialization is reduced.
  Segment segment(std::mt19937_64& rng) const {
    switch (rng() % 3) {
      case 0: {
        // Inside a single word (or its mirror) so that the interval is reduced.
        std::size_t i = rng() % words.size();
        std::size_t wb = corpus->word_begin(i), we = corpus->word_end(i);
        std::size_t b = wb + rng() % (we - wb + 1), e = b + rng() % (we - b + 1);
        Segment s = Segment::interval(*corpus, b, e);
        return rng() % 2 ? s : s.involuted();
      }
      case 1: {
        const auto& base = bases[rng() % bases.size()];
        long k = static_cast<long>(rng() % 9) - 4;
        Segment s = Segment::run(base, k);
        std::size_t from = s.length ? rng() % (s.length + 1) : 0;
        std::size_t to = from + (s.length - from ? rng() % (s.length - from + 1) : 0);
        return s.slice(from, to);
      }
      default:
        break;
    }
    return Segment::literal(testing_util::random_reduced(rng, 2, rng() % 6));
  }

  // A random reduced RepWord with a few segments.
  RepWord rep(std::mt19937_64& rng) const {
    std::vector<Segment> parts;
    std::size_t k = rng() % 4;
    for (std::size_t i = 0; i < k; ++i) parts.push_back(segment(rng));
    return nf_mixed(parts);
  }
};

}  // namespace

TEST_CASE("corpus text and lce") {
  std::vector<Word> ws{W("ab"), W("c")};
  Corpus c(ws);
  CHECK(to_string(c.text()) == "abcCBA");
  std::vector<Word> single{W("a")};
  CHECK(to_string(Corpus(single).text()) == "aA");
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    Pool pool(rng);
    Word text(pool.corpus->text().begin(), pool.corpus->text().end());
    for (int q = 0; q < 50 && !text.empty(); ++q) {
      std::size_t a = rng() % text.size(), b = rng() % text.size();
      Word sa(text.begin() + static_cast<std::ptrdiff_t>(a), text.end());
      Word sb(text.begin() + static_cast<std::ptrdiff_t>(b), text.end());
      CHECK(pool.corpus->lce(a, b) == naive_lcp(sa, sb));
    }
  }
}

TEST_CASE("segments and rep words") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    Pool pool(rng);
    RepWord w;
    for (int i = 0; i < 4; ++i) w.append(pool.segment(rng));
    Word m = w.materialize();
    CHECK(w.length() == m.size());
    CHECK(w.involuted().materialize() == involute(m));
    if (!m.empty()) {
      std::size_t a = rng() % m.size(), b = a + rng() % (m.size() - a + 1);
      CHECK(w.slice(a, b).materialize() == Word(m.begin() + static_cast<std::ptrdiff_t>(a), m.begin() + static_cast<std::ptrdiff_t>(b)));
      std::size_t i = rng() % m.size();
      CHECK(w.at(i) == m[i]);
    }
  }
}

TEST_CASE("lcp_rep examples") {
  std::vector<Word> ws{W("aba")};
  Corpus c(ws);
  auto base = make_run_base(RepWord::literal(W("ab")));
  RepWord s(Segment::run(base, 2));
  RepWord t = RepWord::interval(c, 0, 3);
  CHECK(lcp_rep(s, t) == 3);
  CHECK(lcp_rep(s, s) == 4);
  CHECK(lcp_rep(RepWord(), t) == 0);
}

TEST_CASE("lcp_rep, nf_rep and periods agree with naive") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    Pool pool(rng);
    RepWord a = pool.rep(rng), b = pool.rep(rng);
    Word ma = a.materialize(), mb = b.materialize();
    CHECK(is_reduced(ma));
    CHECK(lcp_rep(a, b) == naive_lcp(ma, mb));
    RepWord parts[] = {a, b, pool.rep(rng), pool.rep(rng)};
    Word cat;
    std::size_t segs = 0;
    for (auto& p : parts) {
      Word x = p.materialize();
      cat.insert(cat.end(), x.begin(), x.end());
      segs += p.segment_count();
    }
    RepWord r = nf_rep(parts);
    CHECK(r.materialize() == nf(cat));
    CHECK(r.segment_count() <= segs);
    std::size_t p = 1 + rng() % 6;
    CHECK(periodic_prefix_rep(a, p) == longest_periodic_prefix_naive(ma, p));
    CHECK(periodic_suffix_rep(a, p) == longest_periodic_prefix_naive(involute(ma), p));
    const auto& base = pool.bases[rng() % pool.bases.size()];
    Word bw = base->fwd.materialize();
    CHECK(power_prefix_rep(*base, a) == power_prefix(bw, ma));
    CHECK(power_suffix_rep(*base, a) == power_suffix(bw, ma));
  }
}

TEST_CASE("nf_rep and nf_mixed examples") {
  RepWord parts[] = {RepWord::literal(W("ab")), RepWord::literal(W("BA"))};
  CHECK(nf_rep(parts).empty());
  RepWord parts2[] = {RepWord::literal(W("ab")), RepWord::literal(W("Bc"))};
  CHECK(to_string(nf_rep(parts2).materialize()) == "ac");
  auto a = make_run_base(RepWord::literal(W("a")));
  auto ab = make_run_base(RepWord::literal(W("ab")));
  std::vector<Segment> s1{Segment::run(a, 3), Segment::run(a, -3)};
  CHECK(nf_mixed(s1).empty());
  std::vector<Segment> s2{Segment::run(ab, 2), Segment::literal(W("BA")), Segment::run(ab, -1)};
  CHECK(nf_mixed(s2).empty());
  std::vector<Segment> s3{Segment::run(a, 2), Segment::literal(W("b")), Segment::run(a, -2)};
  CHECK(to_string(nf_mixed(s3).materialize()) == "aabAA");
  auto bad = make_run_base(RepWord::literal(W("abab")));
  std::vector<Segment> s4{Segment::run(bad, 1)};
  CHECK_THROWS_AS(nf_mixed(s4), std::invalid_argument);
}

TEST_CASE("power_prefix_rep examples") {
  CHECK(power_prefix_rep(W("ab"), RepWord::literal(W("ababAB"))) == 2);
  CHECK(power_prefix_rep(W("ab"), RepWord::literal(W("BABAc"))) == -2);
  CHECK(power_prefix_rep(W("ab"), RepWord::literal(W("ba"))) == 0);
  auto ab = make_run_base(RepWord::literal(W("ab")));
  CHECK(power_prefix_rep(*ab, RepWord(Segment::run(ab, 5))) == 5);
}

TEST_CASE("cyclic decomposition on representations") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 500; ++t) {
    Pool pool(rng);
    RepWord a = pool.rep(rng);
    Word m = a.materialize();
    auto d = cyclic_reduce_rep(a);
    auto e = cyclic_reduce(m);
    CHECK(d.conjugator.materialize() == e.conjugator);
    CHECK(d.core.materialize() == e.core);
    if (!e.core.empty()) CHECK(primitive_root_length(d.core) == primitive_root(e.core).root.size());
  }
}

TEST_CASE("test_solution") {
  auto eq = read_equation("X a X' A").eq;
  auto ix = IndexedEquation::build(eq);
  auto a = make_run_base(RepWord::literal(W("a")));
  CHECK(test_solution(ix, RepWord(), a, 2, nullptr, 0, RepWord()));
  CHECK_FALSE(test_solution(ix, RepWord::literal(W("b"))));
  auto sq = IndexedEquation::build(read_equation("X X").eq);
  CHECK(test_solution(sq, RepWord()));
  CHECK_FALSE(test_solution(sq, RepWord::literal(W("a"))));

  std::mt19937_64 rng(6);
  for (int t = 0; t < 1000; ++t) {
    Equation e;
    std::size_t m = 1 + rng() % 4;
    for (std::size_t i = 0; i < m; ++i) {
      e.exponents.push_back(rng() % 2 ? 1 : -1);
      e.words.push_back(testing_util::random_reduced(rng, 2, 1 + rng() % 4));
    }
    auto ie = IndexedEquation::build(e);
    Word x = testing_util::random_reduced(rng, 2, rng() % 5);
    // Plant an actual solution sometimes: make the last word close the product.
    if (rng() % 2) {
      e.words.back().clear();
      e.words.back() = involute(substitute(e, x));
      ie = IndexedEquation::build(e);
    }
    CHECK(test_solution(ie, RepWord::literal(x)) == is_solution(e, x));
  }
}
