#include "fgeq/superset.hpp"

#include <string>
#include <unordered_set>

namespace fgeq {

using index::RepWord;

namespace {

std::vector<RepWord> prefixes(const RepWord& w) {
  std::vector<RepWord> out;
  for (std::size_t k = 0; k <= w.length(); ++k) out.push_back(w.prefix(k));
  return out;
}

std::vector<RepWord> suffixes(const RepWord& w) {
  std::vector<RepWord> out;
  for (std::size_t k = 0; k <= w.length(); ++k) out.push_back(w.suffix(k));
  return out;
}

RepWord nf2(const RepWord& a, const RepWord& b) { return index::nf_rep(a, b); }

RepWord nf3(const RepWord& a, const RepWord& b, const RepWord& c) {
  const RepWord parts[3] = {a, b, c};
  return index::nf_rep(parts);
}

// Primitive root of a cyclically reduced word (empty stays empty).
RepWord root_of(const RepWord& core) {
  if (core.empty()) return core;
  return core.prefix(index::primitive_root_length(core));
}

// x_u is either a finite word or alpha base^I base' with base' a proper prefix of base.
struct LeftSide {
  std::vector<RepWord> finite;
  RepWord alpha;
  RepWord base;
};

// x_v is either a finite word or base'' base^J beta with base'' a proper suffix of base.
struct RightSide {
  std::vector<RepWord> finite;
  RepWord base;
  RepWord beta;
};

void combine(const LeftSide& l, const RightSide& r, TripleCandidates& out) {
  for (const RepWord& xu : l.finite)
    for (const RepWord& xv : r.finite) out.finite.push_back(nf2(xu, xv));

  const std::size_t pu = l.base.length(), pv = r.base.length();
  // alpha u^I u' = (alpha u') (u2 u')^I with u = u' u2.
  std::vector<RepWord> left_alpha, left_base;
  for (std::size_t s = 0; s < pu; ++s) {
    RepWord head = l.base.prefix(s), tail = l.base.drop_prefix(s);
    left_alpha.push_back(nf2(l.alpha, head));
    left_base.push_back(concat(tail, head));
  }
  // v'' v^J beta = (v'' v1)^J (v'' beta) with v = v1 v''.
  std::vector<RepWord> right_beta, right_base;
  for (std::size_t s = 0; s < pv; ++s) {
    RepWord tail = r.base.suffix(s), head = r.base.drop_suffix(s);
    right_beta.push_back(nf2(tail, r.beta));
    right_base.push_back(concat(tail, head));
  }

  for (std::size_t s = 0; s < pu; ++s)
    for (const RepWord& xv : r.finite) out.families.push_back({left_alpha[s], left_base[s], {}, index::nf_rep(xv, RepWord()), 0, {}});
  for (const RepWord& xu : l.finite)
    for (std::size_t s = 0; s < pv; ++s) out.families.push_back({xu, right_base[s], {}, right_beta[s], 0, {}});
  for (std::size_t s = 0; s < pu; ++s)
    for (std::size_t t = 0; t < pv; ++t)
      out.families.push_back({left_alpha[s], left_base[s], right_base[t], right_beta[t], 0, {}});
}

// x̄ a x b x with the middle x a pseudo-solution.
TripleCandidates case_minus_plus_plus(const RepWord& a, const RepWord& b) {
  TripleCandidates out;
  const RepWord ab = a.involuted(), bb = b.involuted();
  // x = v̄'' v̄' with v' a prefix and v'' a suffix of b.
  for (const RepWord& v1 : prefixes(b))
    for (const RepWord& v2 : suffixes(b)) out.finite.push_back(nf2(v2.involuted(), v1.involuted()));

  auto da = index::cyclic_reduce_rep(a);
  LeftSide l{prefixes(ab), da.conjugator, root_of(da.core)};
  RightSide r{suffixes(nf2(a, bb)), root_of(da.core), nf2(da.conjugator.involuted(), bb)};
  combine(l, r, out);
  return out;
}

// x̄ a x b x̄.
TripleCandidates case_minus_plus_minus(const RepWord& a, const RepWord& b) {
  TripleCandidates out;
  auto da = index::cyclic_reduce_rep(a);
  auto db = index::cyclic_reduce_rep(b);
  LeftSide l{prefixes(a.involuted()), da.conjugator, root_of(da.core)};
  RightSide r{suffixes(b.involuted()), root_of(db.core), db.conjugator.involuted()};
  combine(l, r, out);
  return out;
}

// x a x b x.
TripleCandidates case_plus_plus_plus(const RepWord& a, const RepWord& b) {
  TripleCandidates out;
  const RepWord ab = a.involuted(), bb = b.involuted();
  auto pa = prefixes(a), sa = suffixes(a), pb = prefixes(b), sb = suffixes(b);
  for (const RepWord& v1 : pb)
    for (const RepWord& v2 : sb) out.finite.push_back(nf2(v2.involuted(), v1.involuted()));
  for (const RepWord& u1 : pa)
    for (const RepWord& u2 : sa) out.finite.push_back(nf2(u1.involuted(), u2.involuted()));
  for (const RepWord& u2 : sa)
    for (const RepWord& v1 : pb) out.finite.push_back(nf2(u2.involuted(), v1.involuted()));
  for (const RepWord& u2 : sa)
    for (std::size_t k = 0; k <= u2.length(); ++k) out.finite.push_back(nf3(u2.involuted(), u2.suffix(k), bb));
  for (const RepWord& v1 : pb)
    for (std::size_t k = 0; k <= v1.length(); ++k) out.finite.push_back(nf3(ab, v1.prefix(k), v1.involuted()));

  auto dc = index::cyclic_reduce_rep(nf2(ab, b));
  auto dd = index::cyclic_reduce_rep(nf2(a, bb));
  LeftSide l{prefixes(dc.conjugator), dc.conjugator, root_of(dc.core)};
  RightSide r{suffixes(dd.conjugator.involuted()), root_of(dd.core), dd.conjugator.involuted()};
  combine(l, r, out);
  return out;
}

TripleCandidates involute_candidates(TripleCandidates in) {
  for (RepWord& w : in.finite) w = w.involuted();
  for (ParamFamily& f : in.families) {
    ParamFamily g;
    g.alpha = f.beta.involuted();
    g.u = f.v.empty() ? f.u.involuted() : f.v.involuted();
    g.v = f.v.empty() ? RepWord() : f.u.involuted();
    g.beta = f.alpha.involuted();
    f = std::move(g);
  }
  return in;
}

void append_key(std::string& key, const RepWord& w) {
  Word m = w.materialize();
  std::size_t n = m.size();
  key.append(reinterpret_cast<const char*>(&n), sizeof n);
  key.append(reinterpret_cast<const char*>(m.data()), n * sizeof(Letter));
}

std::string key_of(const RepWord& w) {
  std::string key;
  append_key(key, w);
  return key;
}

// Strips base-power suffixes of alpha and prefixes of beta; both shift the parameter only.
void absorb(ParamFamily& f) {
  auto strip = [](RepWord& alpha, RepWord& beta, const RepWord& left_base, const RepWord& right_base) {
    if (!left_base.empty()) {
      auto b = index::make_run_base(left_base);
      long k = index::power_suffix_rep(*b, alpha);
      alpha = alpha.drop_suffix(static_cast<std::size_t>(k < 0 ? -k : k) * left_base.length());
    }
    if (!right_base.empty()) {
      auto b = index::make_run_base(right_base);
      long k = index::power_prefix_rep(*b, beta);
      beta = beta.drop_prefix(static_cast<std::size_t>(k < 0 ? -k : k) * right_base.length());
    }
  };
  strip(f.alpha, f.beta, f.u, f.v.empty() ? f.u : f.v);
}

}  // namespace

TripleCandidates triple_candidates(int p0, const RepWord& a, int p1, const RepWord& b, int p2) {
  if (p1 < 0) {
    // Involute the whole triple: x^{-p2} b̄ x ā x^{-p0}, the middle occurrence becomes x.
    TripleCandidates flipped = triple_candidates(-p2, b.involuted(), 1, a.involuted(), -p0);
    return flipped;
  }
  if (p0 < 0 && p2 < 0) return case_minus_plus_minus(a, b);
  if (p0 < 0 && p2 > 0) return case_minus_plus_plus(a, b);
  if (p0 > 0 && p2 < 0) {
    // y = x̄ turns x a x b x̄ into ȳ b̄ y ā y.
    return involute_candidates(case_minus_plus_plus(b.involuted(), a.involuted()));
  }
  return case_plus_plus_plus(a, b);
}

SupersetResult build_superset(const index::IndexedEquation& eq) {
  SupersetResult out;
  out.corpus = eq.corpus;
  const std::size_t m = eq.m();
  std::unordered_set<std::string> seen_finite, seen_family;
  for (std::size_t h = 0; h < m; ++h) {
    std::size_t h1 = (h + 1) % m, h2 = (h + 2) % m;
    TripleCandidates tc = triple_candidates(eq.exponents[h], eq.words[h], eq.exponents[h1], eq.words[h1], eq.exponents[h2]);
    out.raw_finite += tc.finite.size();
    out.raw_families += tc.families.size();
    for (RepWord& w : tc.finite)
      if (seen_finite.insert(key_of(w)).second) out.finite_candidates.push_back(std::move(w));
    for (ParamFamily& f : tc.families) {
      f.alpha = index::nf_rep(f.alpha, RepWord());
      f.beta = index::nf_rep(f.beta, RepWord());
      if (f.u.empty() && !f.v.empty()) std::swap(f.u, f.v);
      if (f.u.empty()) {
        RepWord w = index::nf_rep(f.alpha, f.beta);
        if (seen_finite.insert(key_of(w)).second) out.finite_candidates.push_back(std::move(w));
        continue;
      }
      absorb(f);
      f.origin = h;
      f.signs = {eq.exponents[h], eq.exponents[h1], eq.exponents[h2]};
      std::string key;
      for (const RepWord* part : {&f.alpha, &f.u, &f.v, &f.beta}) append_key(key, *part);
      if (seen_family.insert(key).second) out.families.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace fgeq
