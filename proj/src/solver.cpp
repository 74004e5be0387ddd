#include "fgeq/solver.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace fgeq {

using index::RepWord;
using namespace param;

namespace {

Word power_of(WordView w, long k) {
  Word out;
  Word piece = k < 0 ? involute(w) : Word(w.begin(), w.end());
  for (long t = 0; t < (k < 0 ? -k : k); ++t) out.insert(out.end(), piece.begin(), piece.end());
  return out;
}

Word cat3(WordView a, WordView b, WordView c) {
  Word w(a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return nf(w);
}

// Moves whole w-powers at the inner ends of alpha and beta into the exponent.
void absorb(Family& f) {
  long k = power_suffix(f.w, f.alpha);
  if (k != 0) f.alpha.resize(f.alpha.size() - static_cast<std::size_t>(k < 0 ? -k : k) * f.w.size());
  k = power_prefix(f.w, f.beta);
  if (k != 0) f.beta.erase(f.beta.begin(), f.beta.begin() + static_cast<std::ptrdiff_t>((k < 0 ? -k : k) * f.w.size()));
}

bool shorter(const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

// Once full powers are gone, only a single extra w or w̄ can cancel more than half of itself.
void shorten(Family& f) {
  Word wb = involute(f.w);
  Word a = f.alpha, b = f.beta;
  for (const Word* piece : {&f.w, &wb}) {
    Word ca = cat3(f.alpha, *piece, Word{}), cb = cat3(*piece, f.beta, Word{});
    if (shorter(ca, a)) a = std::move(ca);
    if (shorter(cb, b)) b = std::move(cb);
  }
  f.alpha = std::move(a);
  f.beta = std::move(b);
}

bool family_less(const Family& a, const Family& b) {
  if (a.alpha.size() != b.alpha.size()) return a.alpha.size() < b.alpha.size();
  if (a.beta.size() != b.beta.size()) return a.beta.size() < b.beta.size();
  return a < b;
}

// Exponent sum of every generator.
using Abel = std::vector<long>;

void add_abel(Abel& acc, WordView w, long times) {
  for (Letter a : w) acc[generator(a)] += is_inverse(a) ? -times : times;
}

class Pipeline {
 public:
  Pipeline(const Equation& eq, const SolveConfig& cfg, SolutionSet& out)
      : eq_(eq), cfg_(cfg), out_(out), ie_(index::IndexedEquation::build(eq)) {
    std::size_t gens = 1;
    for (const Word& w : eq.words)
      for (Letter a : w) gens = std::max<std::size_t>(gens, generator(a) + 1);
    constant_ab_.assign(gens, 0);
    for (std::size_t h = 0; h < eq.m(); ++h) {
      add_abel(constant_ab_, eq.words[h], 1);
      exponent_sum_ += eq.exponents[h];
    }
  }

  void run() {
    // The image in the abelianization gives a linear necessary condition on x.
    if (exponent_sum_ == 0 && std::any_of(constant_ab_.begin(), constant_ab_.end(), [](long v) { return v != 0; })) return;
    SupersetResult sup = build_superset(ie_);
    out_.stats.finite_considered = sup.finite_candidates.size();
    out_.stats.families_considered = sup.families.size();
    for (const RepWord& c : sup.finite_candidates) {
      ++out_.stats.candidates_tested;
      if (index::test_solution(ie_, c)) finite_.insert(c.materialize());
    }
    for (const ParamFamily& f : sup.families) family(f);
  }

  std::set<Word> finite_;
  std::set<Family> families_;

 private:
  void diagnose(std::string msg) { out_.diagnostics.push_back(std::move(msg)); }

  void start_family(const FamilyShape& sh) {
    tested_.clear();
    family_const_.assign(constant_ab_.size(), 0);
    family_powers_.clear();
    for (const Item& it : sh.x.items) {
      if (!it.is_power()) {
        add_abel(family_const_, it.word.materialize(), 1);
        continue;
      }
      Abel b(constant_ab_.size(), 0);
      add_abel(b, sh.x.bases[it.base]->fwd.materialize(), 1);
      family_powers_.emplace_back(it.expr, std::move(b));
    }
  }

  bool abelian_ok(long i, long j) const {
    for (std::size_t g = 0; g < constant_ab_.size(); ++g) {
      long v = family_const_[g];
      for (const auto& [e, b] : family_powers_) v += e.eval(i, j) * b[g];
      if (exponent_sum_ * v + constant_ab_[g] != 0) return false;
    }
    return true;
  }

  // w is the reduced parametric word after the current binding, evaluated at (a, b).
  void test(const FamilyShape& sh, long i, long j, const ParamWord& w, long a, long b) {
    if (!tested_.emplace(i, j).second) return;
    ++out_.stats.candidates_tested;
    if (!abelian_ok(i, j) || !w.vanishes(a, b)) return;
    RepWord x = sh.x.evaluate(i, j);
    if (index::test_solution(ie_, x)) finite_.insert(x.materialize());
  }

  // sh.x under a binding that leaves one variable; emits the resulting one-parameter set.
  void emit_line(const FamilyShape& sh, const Binding& b, const char* what) {
    ParamWord x = substitute_param(sh.x, b);
    std::size_t powers = 0;
    const Item* p = nullptr;
    for (const Item& it : x.items)
      if (it.is_power()) ++powers, p = &it;
    if (powers == 0) {
      Word w = x.materialize(0, 0);
      if (is_solution(eq_, w)) finite_.insert(w);
      return;
    }
    if (powers > 1 || p->expr.nJ != 0) {
      ++out_.stats.diag_violations;
      diagnose(std::string("unrepresentable solution line (") + what + ")");
      return;
    }
    Word prefix, suffix;
    bool before = true;
    for (const Item& it : x.items) {
      if (it.is_power()) {
        before = false;
        continue;
      }
      Word w = it.word.materialize();
      (before ? prefix : suffix).insert((before ? prefix : suffix).end(), w.begin(), w.end());
    }
    Word base = x.bases[p->base]->fwd.materialize();
    Word w = power_of(base, p->expr.nI);
    Word alpha = cat3(prefix, power_of(base, p->expr.c), Word{});
    families_.insert(canonicalize_family(alpha, w, nf(suffix)));
  }

  void family(const ParamFamily& f) {
    FamilyShape sh = shape_family(f);
    PreprocessReport rep;
    ParamWord w = preprocess(substitute_family(ie_, sh), &rep);
    out_.stats.collapsed_fragments += rep.collapsed;
    out_.stats.power_fragments += rep.power_fragments;
    ParamWord r = reduce(w);
    check_coefficients(r, sh.kind);
    start_family(sh);

    if (sh.kind == FamilyKind::one_param) {
      OneParamResult res = solve_one_param(r, 0, true);
      if (res.all_integers) {
        emit_line(sh, Binding{}, "one parameter");
        return;
      }
      out_.stats.singles += res.candidates.size();
      for (long i : res.candidates) test(sh, i, 0, r, i, 0);
      return;
    }
    if (r.empty()) throw InvariantViolation("two-parameter family solves the equation identically");

    long bu = cfg_.slack, bv = cfg_.slack;
    if (sh.kind == FamilyKind::distinct)
      std::tie(bu, bv) = effective_slack(cfg_.slack, sh.u->period(), sh.v->period());
    CandidateSet cs = candidate_pairs(r, sh.kind, bu, bv);
    out_.stats.singles += cs.singles_I.size() + cs.singles_J.size() + cs.singles_diag.size() + cs.singles_lines.size();

    for (long i : cs.singles_I) {
      ParamWord ri = substitute_param(r, Binding::fix_I(i));
      OneParamResult res = solve_one_param(ri, 1, true);
      if (res.all_integers)
        emit_line(sh, Binding{0, 0, i, 1, 0, 0}, "I fixed");
      else
        for (long j : res.candidates) test(sh, i, j, ri, 0, j);
    }
    for (long j : cs.singles_J) {
      ParamWord rj = substitute_param(r, Binding::fix_J(j));
      OneParamResult res = solve_one_param(rj, 0, true);
      if (res.all_integers)
        emit_line(sh, Binding::fix_J(j), "J fixed");
      else
        for (long i : res.candidates) test(sh, i, j, rj, i, 0);
    }
    for (long k : cs.singles_diag) {
      ++out_.stats.diag_checks;
      ParamWord rk = substitute_param(r, Binding::diag(k));
      if (rk.empty()) {
        diagnose("I + J = " + std::to_string(k) + " trivializes the parametric word");
        emit_line(sh, Binding::diag(k), "I + J fixed");
        continue;
      }
      for (long i : solve_one_param(rk, 0, true).candidates) test(sh, i, k - i, rk, i, 0);
    }
    for (const Line& line : cs.singles_lines) {
      auto b = line_binding(line);
      if (!b) continue;
      ParamWord rl = substitute_param(r, *b);
      if (rl.empty()) {
        ++out_.stats.diag_checks;
        diagnose("line " + std::to_string(line.a) + "I + " + std::to_string(line.b) + "J = " + std::to_string(line.t) +
                 " trivializes the parametric word");
        emit_line(sh, *b, "mixed line");
        continue;
      }
      for (long s : solve_one_param(rl, 0, true).candidates) test(sh, b->aI * s + b->cI, b->aJ * s + b->cJ, rl, s, 0);
    }
  }

  void check_coefficients(const ParamWord& r, FamilyKind kind) {
    if (kind == FamilyKind::one_param) return;
    for (const Item& it : r.items) {
      if (!it.is_power()) continue;
      long a = it.expr.nI < 0 ? -it.expr.nI : it.expr.nI, b = it.expr.nJ < 0 ? -it.expr.nJ : it.expr.nJ;
      bool ok = a <= 1 && b <= 1 && (kind == FamilyKind::shift || a == 0 || b == 0);
      if (!ok) ++out_.stats.coefficient_violations;
    }
  }

  const Equation& eq_;
  const SolveConfig& cfg_;
  SolutionSet& out_;
  index::IndexedEquation ie_;
  Abel constant_ab_;
  long exponent_sum_ = 0;
  Abel family_const_;
  std::vector<std::pair<IntExpr, Abel>> family_powers_;
  std::set<std::pair<long, long>> tested_;
};

}  // namespace

bool SolutionSet::contains(WordView x) const {
  if (all_words()) return true;
  Word r = nf(x);
  if (std::binary_search(finite.begin(), finite.end(), r)) return true;
  return std::any_of(families.begin(), families.end(), [&](const Family& f) { return family_member(f, r).has_value(); });
}

Word family_word(const Family& f, long k) { return cat3(f.alpha, power_of(f.w, k), f.beta); }

Family canonicalize_family(WordView alpha, WordView w, WordView beta) {
  if (w.empty()) throw std::invalid_argument("family with an empty base");
  CyclicDecomposition d = cyclic_reduce(nf(w));
  Word root = primitive_root(d.core).root;
  Word a0 = cat3(alpha, d.conjugator, Word{});
  Word b0 = cat3(involute(d.conjugator), beta, Word{});
  std::optional<Family> best;
  for (int flip = 0; flip < 2; ++flip) {
    Word base = flip ? involute(root) : root;
    for (std::size_t r = 0; r < base.size(); ++r) {
      // alpha base^k beta = (alpha u1) (ū1 base u1)^k (ū1 beta) with u1 = base[..r]
      Word u1(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
      Word rot(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
      rot.insert(rot.end(), u1.begin(), u1.end());
      Family f{cat3(a0, u1, Word{}), rot, cat3(involute(u1), b0, Word{})};
      absorb(f);
      shorten(f);
      if (!best || family_less(f, *best)) best = std::move(f);
    }
  }
  return *best;
}

std::optional<long> family_member(const Family& f, WordView x) {
  Word y = cat3(involute(f.alpha), x, involute(f.beta));
  if (y.empty()) return 0;
  long k = power_prefix(f.w, y);
  if (static_cast<std::size_t>(k < 0 ? -k : k) * f.w.size() != y.size()) return std::nullopt;
  return k;
}

bool families_equal(const Family& a, const Family& b) { return a == b; }

SolutionSet solve(const Equation& eq, const SolveConfig& config) {
  auto start = std::chrono::steady_clock::now();
  SolutionSet out;
  out.stats.n = eq.n();
  out.stats.m = eq.m();
  Pipeline p(eq, config, out);
  p.run();
  out.families.assign(p.families_.begin(), p.families_.end());
  for (const Word& x : p.finite_) {
    bool inside = std::any_of(out.families.begin(), out.families.end(),
                              [&](const Family& f) { return family_member(f, x).has_value(); });
    if (!inside) out.finite.push_back(x);
  }
  for (const Family& f : out.families) {
    for (long k = -config.verify_k; k <= config.verify_k; ++k) {
      ++out.stats.family_samples;
      if (!is_solution(eq, family_word(f, k)))
        out.diagnostics.push_back("family member at k = " + std::to_string(k) + " fails the equation");
    }
  }
  out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

SolutionSet solve(const NormalizedEquation& ne, const SolveConfig& config) {
  if (ne.kind == EquationKind::proper) return solve(ne.eq, config);
  SolutionSet out;
  out.kind = ne.kind;
  return out;
}

}  // namespace fgeq
