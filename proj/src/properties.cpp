#include "fgeq/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "fgeq/index.hpp"
#include "fgeq/oracle.hpp"
#include "fgeq/parametric.hpp"

namespace fgeq::props {

using index::RepWord;
using index::Segment;
using Rng = std::mt19937_64;

void Check::record(bool pass, const std::string& what) {
  ++trials;
  if (pass) return;
  if (failures++ == 0) first_failure = what;
}

namespace {

std::size_t below(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

Word random_reduced(Rng& rng, std::uint32_t sigma, std::size_t len) {
  Word w;
  while (w.size() < len) {
    Letter a = static_cast<Letter>(rng() % (2 * sigma));
    if (!w.empty() && w.back() == inverse(a)) continue;
    w.push_back(a);
  }
  return w;
}

// A random primitive cyclically reduced word of length in [1, max_len].
Word random_base(Rng& rng, std::uint32_t sigma, std::size_t max_len) {
  for (;;) {
    Word w = random_reduced(rng, sigma, 1 + below(rng, max_len));
    if (is_cyclically_reduced(w) && is_primitive(w)) return w;
  }
}

Word power(WordView s, long k) {
  Word out;
  Word piece = k < 0 ? involute(s) : Word(s.begin(), s.end());
  for (long t = 0; t < std::labs(k); ++t) out.insert(out.end(), piece.begin(), piece.end());
  return out;
}

void append(Word& w, WordView x) { w.insert(w.end(), x.begin(), x.end()); }

std::size_t naive_lcp(WordView a, WordView b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  return i;
}

std::string show(WordView w) { return w.empty() ? "ε" : to_string(w); }

// Random corpus, run bases and reduced segments over it.
struct Pool {
  std::vector<Word> words;
  std::shared_ptr<const index::Corpus> corpus;
  std::vector<std::shared_ptr<const index::RunBase>> bases;

  explicit Pool(Rng& rng) {
    std::size_t m = 1 + below(rng, 4);
    for (std::size_t i = 0; i < m; ++i) words.push_back(random_reduced(rng, 2, below(rng, 12)));
    Word rep = random_base(rng, 2, 3);
    words.push_back(power(rep, 5));
    corpus = std::make_shared<const index::Corpus>(words);
    for (int b = 0; b < 2; ++b) bases.push_back(index::make_run_base(RepWord::literal(random_base(rng, 2, 4))));
    bases.push_back(index::make_run_base(RepWord::literal(rep)));
  }

  Segment segment(Rng& rng) const {
    switch (below(rng, 3)) {
      case 0: {
        std::size_t i = below(rng, words.size());
        std::size_t wb = corpus->word_begin(i), we = corpus->word_end(i);
        std::size_t b = wb + below(rng, we - wb + 1), e = b + below(rng, we - b + 1);
        Segment s = Segment::interval(*corpus, b, e);
        return rng() % 2 ? s : s.involuted();
      }
      case 1: {
        Segment s = Segment::run(bases[below(rng, bases.size())], static_cast<long>(below(rng, 9)) - 4);
        std::size_t from = below(rng, s.length + 1);
        return s.slice(from, from + below(rng, s.length - from + 1));
      }
      default:
        return Segment::literal(random_reduced(rng, 2, below(rng, 6)));
    }
  }

  RepWord rep(Rng& rng) const {
    std::vector<Segment> parts;
    for (std::size_t i = below(rng, 4); i > 0; --i) parts.push_back(segment(rng));
    return index::nf_mixed(parts);
  }
};

}  // namespace

// ---------------------------------------------------------------- index

std::vector<Check> index_suite(std::size_t queries, std::uint64_t seed) {
  Rng rng(seed);
  Check lce{"lce"}, lcp{"lcp_rep"}, nfr{"nf_rep"}, nfm{"nf_mixed"}, per{"periodic_prefix_rep"}, pow{"power_prefix_rep"},
      sol{"test_solution"};
  for (std::size_t q = 0; q < queries; ++q) {
    Pool pool(rng);
    WordView text = pool.corpus->text();
    std::size_t a = below(rng, text.size()), b = below(rng, text.size());
    lce.record(pool.corpus->lce(a, b) == naive_lcp(text.subspan(a), text.subspan(b)), "positions " + std::to_string(a));

    RepWord x = pool.rep(rng), y = pool.rep(rng);
    Word mx = x.materialize(), my = y.materialize();
    lcp.record(index::lcp_rep(x, y) == naive_lcp(mx, my), show(mx) + " vs " + show(my));

    RepWord parts[] = {x, y, pool.rep(rng), pool.rep(rng)};
    Word cat;
    for (const RepWord& p : parts) append(cat, p.materialize());
    nfr.record(index::nf_rep(parts).materialize() == nf(cat), show(cat));

    std::vector<Segment> segs;
    Word flat;
    for (std::size_t k = 1 + below(rng, 5); k > 0; --k) {
      segs.push_back(pool.segment(rng));
      append(flat, RepWord(segs.back()).materialize());
    }
    nfm.record(index::nf_mixed(segs).materialize() == nf(flat), show(flat));

    std::size_t p = 1 + below(rng, 6);
    per.record(index::periodic_prefix_rep(x, p) == longest_periodic_prefix_naive(mx, p), show(mx));

    const auto& base = pool.bases[below(rng, pool.bases.size())];
    Word bw = base->fwd.materialize();
    // Make long powers likely.
    RepWord t = index::nf_rep(RepWord(Segment::run(base, static_cast<long>(below(rng, 7)) - 3)), x);
    Word mt = t.materialize();
    pow.record(index::power_prefix_rep(*base, t) == power_prefix(bw, mt), show(bw) + " in " + show(mt));

    Equation e;
    for (std::size_t i = 1 + below(rng, 4); i > 0; --i) {
      e.exponents.push_back(rng() % 2 ? 1 : -1);
      e.words.push_back(random_reduced(rng, 2, 1 + below(rng, 4)));
    }
    Word xs = random_reduced(rng, 2, below(rng, 6));
    if (rng() % 2) e.words.back() = involute(substitute(e, xs));
    auto ie = index::IndexedEquation::build(e);
    sol.record(index::test_solution(ie, RepWord::literal(xs)) == is_solution(e, xs), format_equation(e));
  }
  return {lce, lcp, nfr, nfm, per, pow, sol};
}

// ---------------------------------------------------------------- combinatorics

namespace {

// Longest factor of t starting at i that occurs in s^∞ or s̄^∞.
std::vector<std::size_t> run_extent(WordView t, WordView s) {
  std::vector<std::size_t> out(t.size(), 0);
  const Word sf(s.begin(), s.end()), sb = involute(s);
  const std::size_t p = s.size();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (const Word* x : {&sf, &sb}) {
      WordView v = *x;
      for (std::size_t r = 0; r < p; ++r) {
        std::size_t len = 0;
        while (i + len < t.size() && t[i + len] == v[(r + len) % p]) ++len;
        out[i] = std::max(out[i], len);
      }
    }
  return out;
}

Word piece_not_starting_with(Rng& rng, WordView s) {
  for (;;) {
    Word sb = involute(s);
    Word w;
    // Partial copies of s and s̄ make cancellation against neighbouring powers likely.
    if (rng() % 2) append(w, WordView(rng() % 2 ? sb : Word(s.begin(), s.end())).subspan(below(rng, s.size())));
    append(w, random_reduced(rng, 2, 1 + below(rng, 3)));
    if (rng() % 2) append(w, WordView(rng() % 2 ? sb : Word(s.begin(), s.end())).first(below(rng, s.size())));
    w = nf(w);
    if (!w.empty() && power_prefix(s, w) == 0 && power_suffix(s, w) == 0) return w;
  }
}

}  // namespace

std::vector<Check> combinatorics_suite(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Check fw{"Fine-Wilf"}, overlap{"run overlap"}, sum{"sum of powers"}, count{"power-count bound"},
      almost0{"pseudosolution exponent bound"}, pseudo{"pseudosolution existence"};
  for (std::size_t t = 0; t < trials; ++t) {
    {
      // Word with periods p and q and length >= p + q - gcd, built by merging forced classes.
      std::size_t p = 1 + below(rng, 8), q = 1 + below(rng, 8), g = std::gcd(p, q);
      std::size_t n = p + q - g + below(rng, 4);
      std::vector<std::size_t> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      for (std::size_t i = 0; i < n; ++i) {
        if (i + p < n) parent[find(i)] = find(i + p);
        if (i + q < n) parent[find(i)] = find(i + q);
      }
      std::vector<Letter> colour(n);
      for (auto& c : colour) c = static_cast<Letter>(rng() % 4);
      Word w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = colour[find(i)];
      bool premise = has_period(w, p) && has_period(w, q);
      fw.record(premise && has_period(w, g), "p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
    {
      Word s = random_base(rng, 2, 4), s2;
      do s2 = random_base(rng, 2, 4);
      while (conj_shift_equiv(s, s2));
      Word text;
      for (std::size_t k = 1 + below(rng, 5); k > 0; --k) {
        switch (below(rng, 3)) {
          case 0: append(text, power(s, static_cast<long>(below(rng, 9)) - 4)); break;
          case 1: append(text, power(s2, static_cast<long>(below(rng, 9)) - 4)); break;
          default: append(text, random_reduced(rng, 2, below(rng, 4)));
        }
      }
      auto a = run_extent(text, s), b = run_extent(text, s2);
      bool ok = true;
      for (std::size_t i = 0; i < text.size(); ++i) ok = ok && std::min(a[i], b[i]) < s.size() + s2.size();
      overlap.record(ok, show(s) + " / " + show(s2) + " in " + show(text));
    }
    {
      Word s = random_base(rng, 2, 3);
      std::size_t l = 1 + below(rng, 4);
      std::vector<Word> ws;
      Word cat;
      for (std::size_t h = 0; h < l; ++h) {
        Word w;
        if (rng() % 2) append(w, WordView(s).subspan(below(rng, s.size())));
        append(w, power(s, static_cast<long>(below(rng, 9)) - 4));
        append(w, random_reduced(rng, 2, below(rng, 3)));
        if (rng() % 2) append(w, power(s, static_cast<long>(below(rng, 5)) - 2));
        ws.push_back(nf(w));
        append(cat, ws.back());
      }
      // Sums reachable by picking a maximal power (or the trivial one) in every word.
      std::set<long> sums{0};
      for (const Word& w : ws) {
        std::set<long> ks{0}, next;
        for (const auto& mp : maximal_powers(s, w)) ks.insert(mp.exponent);
        for (long a : sums)
          for (long k : ks) next.insert(a + k);
        sums = std::move(next);
      }
      Word r = nf(cat);
      std::vector<long> targets{0};
      for (const auto& mp : maximal_powers(s, r)) targets.push_back(mp.exponent);
      bool ok = true;
      for (long k : targets)
        ok = ok && std::any_of(sums.begin(), sums.end(), [&](long v) { return std::labs(v - k) < static_cast<long>(l); });
      sum.record(ok, show(s) + " over " + show(cat));
    }
    {
      Word s = random_base(rng, 2, 3);
      std::vector<Word> ws;
      std::size_t total = 0;
      for (std::size_t h = 1 + below(rng, 3); h > 0; --h) {
        Word w;
        for (std::size_t k = below(rng, 4); k > 0; --k) {
          append(w, power(s, static_cast<long>(below(rng, 11)) - 5));
          append(w, random_reduced(rng, 2, 1 + below(rng, 2)));
        }
        total += w.size();
        ws.push_back(std::move(w));
      }
      // Maximal powers are pairwise disjoint; keep one per exponent, plus the trivial power.
      std::set<long> exps{0};
      for (const Word& w : ws)
        for (const auto& mp : maximal_powers(s, w)) exps.insert(mp.exponent);
      double bound = std::sqrt(4.0 * static_cast<double>(total) / static_cast<double>(s.size()) + 1.0);
      count.record(static_cast<double>(exps.size()) <= bound + 1e-9, show(s));
    }
    {
      Word s = random_base(rng, 2, 3);
      Word t1 = piece_not_starting_with(rng, s), t2 = piece_not_starting_with(rng, s);
      long k0 = static_cast<long>(below(rng, 17)) - 8, k = static_cast<long>(below(rng, 17)) - 8,
           k2 = static_cast<long>(below(rng, 17)) - 8;
      Word w = power(s, k0);
      append(w, t1);
      std::size_t mid_begin = w.size();
      append(w, power(s, k));
      std::size_t mid_end = w.size();
      append(w, t2);
      append(w, power(s, k2));
      // Greedy partial pairing: whatever free reduction matches.
      std::vector<std::size_t> partner(w.size(), w.size()), stack;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!stack.empty() && w[stack.back()] == inverse(w[i])) {
          partner[i] = stack.back();
          partner[stack.back()] = i;
          stack.pop_back();
        } else {
          stack.push_back(i);
        }
      }
      bool paired = true;
      for (std::size_t i = mid_begin; i < mid_end; ++i) paired = paired && partner[i] < w.size();
      almost0.record(!paired || std::labs(k) <= 3, show(w));
    }
    {
      Word w = random_reduced(rng, 2, below(rng, 6));
      for (int part = 0; part < 3; ++part) {
        std::size_t at = below(rng, w.size() + 1);
        Word h = random_reduced(rng, 2, below(rng, 5));
        Word ins = concat(h, involute(h));
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(at), ins.begin(), ins.end());
      }
      Word full = concat(w, involute(nf(w)));
      auto f = reduction_pairing(full);
      if (!f) {
        pseudo.record(false, "no pairing for " + show(full));
        continue;
      }
      std::size_t k = 1 + below(rng, 4);
      std::vector<std::size_t> cuts{0, full.size()};
      for (std::size_t c = 0; c < 2 * k; ++c) cuts.push_back(below(rng, full.size() + 1));
      std::sort(cuts.begin(), cuts.end());
      std::vector<Word> factors;
      for (std::size_t c = 0; c + 1 < cuts.size(); ++c)
        factors.emplace_back(full.begin() + static_cast<std::ptrdiff_t>(cuts[c]),
                             full.begin() + static_cast<std::ptrdiff_t>(cuts[c + 1]));
      std::size_t i = find_pseudosolution(factors, *f);
      pseudo.record(is_pseudosolution(factors, *f, i), show(full));
    }
  }
  return {fw, overlap, sum, count, almost0, pseudo};
}

// ---------------------------------------------------------------- parametric

std::vector<Check> parametric_suite(std::size_t families, std::size_t points, std::uint64_t seed) {
  using namespace param;
  Rng rng(seed);
  Check keep{"≈-preservation"}, reduced{"u-reduced invariants"}, coeff{"coefficient discipline"};
  std::size_t done = 0;
  for (std::uint64_t e = 0; done < families && e < 100 * families + 100; ++e) {
    Equation eq = oracle::random_equation(2, 5, 6, seed * 7919 + e);
    auto ie = index::IndexedEquation::build(eq);
    SupersetResult sup = build_superset(ie);
    for (const ParamFamily& f : sup.families) {
      if (done == families) break;
      // Mix one- and two-parameter families.
      if (f.v.empty() && rng() % 3 != 0) continue;
      ++done;
      FamilyShape sh = shape_family(f);
      ParamWord w = substitute_family(ie, sh);
      ParamWord p = preprocess(w);
      ParamWord u = u_reduce(p, 0);
      ParamWord r = reduce(p);
      const std::string tag = format_equation(eq);
      reduced.record(is_u_reduced(u, 0), tag);
      reduced.record(is_u_reduced(r, 0) && is_u_reduced(r, 1), tag);
      // One-parameter words may legitimately merge x̄ c x̄ into u^{-2I}.
      for (const Item& it : r.items) {
        if (!it.is_power() || sh.kind == FamilyKind::one_param) continue;
        long a = std::labs(it.expr.nI), b = std::labs(it.expr.nJ);
        bool ok = a <= 1 && b <= 1 && (a + b > 0) && (sh.kind == FamilyKind::shift || a == 0 || b == 0);
        coeff.record(ok, tag);
      }
      for (std::size_t q = 0; q < points; ++q) {
        long i = static_cast<long>(below(rng, 41)) - 20, j = sh.kind == FamilyKind::one_param ? 0 : static_cast<long>(below(rng, 41)) - 20;
        Word mw = w.materialize(i, j);
        bool ok = mw == p.materialize(i, j) && mw == u.materialize(i, j) && mw == r.materialize(i, j);
        // The rotated word is conjugate to the direct substitution.
        Word direct = substitute(eq, sh.x.materialize(i, j));
        Word cd = cyclic_reduce(direct).core, cw = cyclic_reduce(mw).core;
        ok = ok && cd.size() == cw.size() && (cd.empty() || conj_shift_equiv(cd, cw));
        keep.record(ok, tag + " at " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  return {keep, reduced, coeff};
}

}  // namespace fgeq::props
