#include "fgeq/parametric.hpp"

#include <algorithm>
#include <numeric>

namespace fgeq::param {

using index::RepWord;
using index::Segment;

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

long abs_l(long x) { return x < 0 ? -x : x; }

// Merges adjacent constants through nf and drops empty ones.
std::vector<Item> merge_constants(const std::vector<Item>& items) {
  std::vector<Item> out;
  for (const Item& it : items) {
    if (!it.is_power()) {
      if (it.word.empty()) continue;
      if (!out.empty() && !out.back().is_power()) {
        bool trivial = out.back().trivial || it.trivial;
        out.back().word = index::nf_rep(out.back().word, it.word);
        out.back().trivial = trivial;
        if (out.back().word.empty()) out.pop_back();
        continue;
      }
    }
    out.push_back(it);
  }
  return out;
}

bool is_power_of(const index::RunBase& base, const RepWord& w) {
  if (w.empty()) return true;
  long k = index::power_prefix_rep(base, w);
  return static_cast<std::size_t>(abs_l(k)) * base.period() == w.length();
}

// One greedy pass; returns whether anything changed.
bool reduce_step(ParamWord& pw, int b) {
  bool changed = false;
  std::vector<Item> out;
  for (Item cur : pw.items) {
    if (cur.is_power() && cur.expr.is_constant()) {
      cur = Item::constant(RepWord(Segment::run(pw.bases[cur.base], cur.expr.c)));
      changed = true;
    }
    if (!cur.is_power()) {
      if (cur.word.empty()) continue;
      if (!out.empty() && !out.back().is_power()) {
        out.back().word = index::nf_rep(out.back().word, cur.word);
        out.back().trivial = out.back().trivial || cur.trivial;
        if (out.back().word.empty()) out.pop_back();
        changed = true;
        continue;
      }
      out.push_back(std::move(cur));
      continue;
    }
    if (cur.base == b && !out.empty() && out.back().is_power() && out.back().base == b) {
      out.back().expr = out.back().expr + cur.expr;
      changed = true;
      continue;
    }
    out.push_back(std::move(cur));
  }
  const index::RunBase& base = *pw.bases[b];
  const std::size_t p = base.period();
  // Left neighbours are absorbed first, so a constant between two powers extends the left one.
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!out[k].is_power() || out[k].base != b) continue;
    if (k > 0 && !out[k - 1].is_power()) {
      long e = index::power_suffix_rep(base, out[k - 1].word);
      if (e != 0) {
        out[k - 1].word = out[k - 1].word.drop_suffix(static_cast<std::size_t>(abs_l(e)) * p);
        out[k].expr.c += e;
        changed = true;
      }
    }
    if (k + 1 < out.size() && !out[k + 1].is_power()) {
      long e = index::power_prefix_rep(base, out[k + 1].word);
      if (e != 0) {
        out[k + 1].word = out[k + 1].word.drop_prefix(static_cast<std::size_t>(abs_l(e)) * p);
        out[k].expr.c += e;
        changed = true;
      }
    }
  }
  pw.items = std::move(out);
  return changed;
}

}  // namespace

// ---------------------------------------------------------------- ParamWord

bool ParamWord::has_power(int base) const {
  return std::any_of(items.begin(), items.end(), [&](const Item& it) { return it.is_power() && it.base == base; });
}

std::size_t ParamWord::power_count() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const Item& it) { return it.is_power(); }));
}

ParamWord ParamWord::involuted() const {
  ParamWord out;
  out.bases = bases;
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    Item x = *it;
    if (x.is_power())
      x.expr = -x.expr;
    else
      x.word = x.word.involuted();
    out.items.push_back(std::move(x));
  }
  return out;
}

void ParamWord::append(const ParamWord& w) { items.insert(items.end(), w.items.begin(), w.items.end()); }

namespace {

void gather(const ParamWord& w, long i, long j, std::vector<Segment>& parts) {
  parts.reserve(w.items.size() + 4);
  for (const Item& it : w.items) {
    if (it.is_power()) {
      long e = it.expr.eval(i, j);
      if (e != 0) parts.push_back(Segment::run(w.bases[it.base], e));
    } else {
      parts.insert(parts.end(), it.word.segments().begin(), it.word.segments().end());
    }
  }
}

}  // namespace

bool ParamWord::vanishes(long i, long j) const {
  std::vector<Segment> parts;
  gather(*this, i, j, parts);
  return index::nf_is_empty(parts);
}

RepWord ParamWord::evaluate(long i, long j) const {
  std::vector<Segment> parts;
  gather(*this, i, j, parts);
  return index::nf_mixed(parts);
}

// ---------------------------------------------------------------- families

FamilyShape shape_family(const ParamFamily& f) {
  FamilyShape s;
  s.alpha = f.alpha;
  s.beta = f.beta;
  s.u = index::make_run_base(f.u);
  s.x.bases[0] = s.u;
  auto one_param = [&] {
    s.kind = FamilyKind::one_param;
    s.v = nullptr;
    s.x.items = {Item::constant(f.alpha), Item::power(0, {1, 0, 0}), Item::constant(f.beta)};
  };
  if (f.v.empty()) {
    one_param();
    return s;
  }
  s.v = index::make_run_base(f.v);
  Word mu = f.u.materialize(), mv = f.v.materialize(), mvb = involute(mv);
  if (mu == mv || mu == mvb) {
    // u^I v^J = u^{I±J}: one parameter suffices.
    one_param();
    return s;
  }
  if (mu.size() == mv.size()) {
    for (int flip = 0; flip < 2; ++flip) {
      const Word& target = flip ? mvb : mv;
      Word twice = concat(target, target);
      auto hit = std::search(twice.begin(), twice.end(), mu.begin(), mu.end());
      if (hit == twice.end()) continue;
      // target = u[r..] u[..r], so target^J = ū1 u^J u1 with u1 = u[..r].
      std::size_t p = mu.size();
      std::size_t r = (p - static_cast<std::size_t>(hit - twice.begin())) % p;
      RepWord u1 = f.u.prefix(r);
      s.kind = FamilyKind::shift;
      s.x.items = {Item::constant(f.alpha), Item::power(0, {1, 0, 0}), Item::constant(u1.involuted()),
                   Item::power(0, {0, flip ? -1 : 1, 0}), Item::constant(u1), Item::constant(f.beta)};
      return s;
    }
  }
  s.kind = FamilyKind::distinct;
  s.x.bases[1] = s.v;
  s.x.items = {Item::constant(f.alpha), Item::power(0, {1, 0, 0}), Item::power(1, {0, 1, 0}), Item::constant(f.beta)};
  return s;
}

ParamWord substitute_family(const index::IndexedEquation& eq, const FamilyShape& shape) {
  ParamWord w;
  w.bases = shape.x.bases;
  ParamWord xb = shape.x.involuted();
  for (std::size_t h = 0; h < eq.m(); ++h) {
    w.append(eq.exponents[h] > 0 ? shape.x : xb);
    w.items.push_back(Item::constant(eq.words[h]));
  }
  // Rotate so that the word starts with a parametric power.
  auto first = std::find_if(w.items.begin(), w.items.end(), [](const Item& it) { return it.is_power(); });
  std::rotate(w.items.begin(), first, w.items.end());
  w.items = merge_constants(w.items);
  return w;
}

// ---------------------------------------------------------------- preprocessing and reduction

ParamWord preprocess(const ParamWord& pw, PreprocessReport* report) {
  ParamWord out = pw;
  out.items = merge_constants(out.items);
  std::size_t collapsed = 0;
  for (bool again = true; again;) {
    again = false;
    auto& it = out.items;
    for (std::size_t k = 0; k + 1 < it.size() && !again; ++k) {
      if (!it[k].is_power()) continue;
      const int b = it[k].base;
      const IntExpr want = -it[k].expr;
      // b^φ w b^{-φ} with w a b-power (possibly empty) collapses to w.
      if (it[k + 1].is_power() && it[k + 1].base == b && it[k + 1].expr == want) {
        it.erase(it.begin() + static_cast<std::ptrdiff_t>(k), it.begin() + static_cast<std::ptrdiff_t>(k + 2));
        again = true;
      } else if (k + 2 < it.size() && !it[k + 1].is_power() && it[k + 2].is_power() && it[k + 2].base == b &&
                 it[k + 2].expr == want && is_power_of(*out.bases[b], it[k + 1].word)) {
        Item w = it[k + 1];
        w.trivial = true;
        it.erase(it.begin() + static_cast<std::ptrdiff_t>(k), it.begin() + static_cast<std::ptrdiff_t>(k + 3));
        it.insert(it.begin() + static_cast<std::ptrdiff_t>(k), std::move(w));
        again = true;
      }
      if (again) {
        ++collapsed;
        it = merge_constants(it);
      }
    }
  }
  if (report) {
    report->collapsed += collapsed;
    for (const Item& it : out.items) {
      if (it.is_power() || !it.trivial || it.word.empty()) continue;
      for (const auto& base : out.bases)
        if (base && is_power_of(*base, it.word)) ++report->power_fragments;
    }
  }
  return out;
}

ParamWord u_reduce(const ParamWord& pw, int base) {
  ParamWord out = pw;
  if (!out.bases[base]) return out;
  while (reduce_step(out, base)) {
  }
  return out;
}

ParamWord reduce(const ParamWord& pw) {
  ParamWord out = pw;
  for (bool changed = true; changed;) {
    changed = false;
    for (int b = 0; b < 2; ++b) {
      if (!out.bases[b]) continue;
      while (reduce_step(out, b)) changed = true;
    }
    // A final pass that changes nothing guarantees both reductions hold simultaneously.
    if (changed) {
      bool more = false;
      for (int b = 0; b < 2; ++b)
        if (out.bases[b]) more = reduce_step(out, b) || more;
      changed = more;
    }
  }
  return out;
}

bool is_u_reduced(const ParamWord& pw, int base) {
  const auto& b = pw.bases[base];
  if (!b) return true;
  const auto& it = pw.items;
  for (std::size_t k = 0; k < it.size(); ++k) {
    if (it[k].is_power()) {
      if (it[k].expr.is_constant()) return false;
      if (it[k].base != base) continue;
      if (k + 1 < it.size() && it[k + 1].is_power() && it[k + 1].base == base) return false;
      if (k > 0 && !it[k - 1].is_power() && index::power_suffix_rep(*b, it[k - 1].word) != 0) return false;
      if (k + 1 < it.size() && !it[k + 1].is_power() && index::power_prefix_rep(*b, it[k + 1].word) != 0) return false;
    } else if (!is_reduced(it[k].word.materialize())) {
      return false;
    }
  }
  return true;
}

std::vector<IntExpr> collect_exponents(const ParamWord& pw, int base, std::map<IntExpr, std::size_t>* counts) {
  std::vector<IntExpr> out;
  for (const Item& it : pw.items) {
    if (!it.is_power() || it.base != base) continue;
    out.push_back(it.expr);
    if (counts) ++(*counts)[it.expr];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- substitution and solving

IntExpr Binding::apply(const IntExpr& e) const {
  return {e.nI * aI + e.nJ * aJ, e.nI * bI + e.nJ * bJ, e.nI * cI + e.nJ * cJ + e.c};
}

ParamWord substitute_param(const ParamWord& pw, const Binding& b) {
  ParamWord out = pw;
  for (Item& it : out.items)
    if (it.is_power()) it.expr = b.apply(it.expr);
  return reduce(out);
}

std::vector<long> values_within(long a, long c, long bound) {
  if (a < 0) a = -a, c = -c;
  std::vector<long> out;
  for (long t = ceil_div(-bound - c, a); t <= floor_div(bound - c, a); ++t) out.push_back(t);
  return out;
}

OneParamResult solve_one_param(const ParamWord& pw, int var, bool already_reduced) {
  ParamWord r = already_reduced ? pw : reduce(pw);
  OneParamResult res;
  if (r.empty()) {
    res.all_integers = true;
    return res;
  }
  int seen_base = -1;
  for (const Item& it : r.items) {
    if (!it.is_power()) continue;
    long own = var == 0 ? it.expr.nI : it.expr.nJ;
    long other = var == 0 ? it.expr.nJ : it.expr.nI;
    if (other != 0 || own == 0) throw InvariantViolation("one-parameter word depends on two variables");
    if (seen_base >= 0 && seen_base != it.base) throw InvariantViolation("one-parameter word mixes two bases");
    seen_base = it.base;
    for (long t : values_within(own, it.expr.c, 3)) res.candidates.push_back(t);
  }
  std::sort(res.candidates.begin(), res.candidates.end());
  res.candidates.erase(std::unique(res.candidates.begin(), res.candidates.end()), res.candidates.end());
  return res;
}

std::optional<Binding> line_binding(const Line& line) {
  // Extended Euclid on |a|, |b|.
  long a = line.a, b = line.b;
  long old_r = abs_l(a), r = abs_l(b), old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long q = old_r / r;
    std::tie(old_r, r) = std::pair(r, old_r - q * r);
    std::tie(old_s, s) = std::pair(s, old_s - q * s);
    std::tie(old_t, t) = std::pair(t, old_t - q * t);
  }
  long g = old_r;
  if (g == 0 || line.t % g != 0) return std::nullopt;
  long k = line.t / g;
  long i0 = old_s * (a < 0 ? -1 : 1) * k;
  long j0 = old_t * (b < 0 ? -1 : 1) * k;
  return Binding{b / g, 0, i0, -a / g, 0, j0};
}

CandidateSet candidate_pairs(const ParamWord& pw, FamilyKind kind, long slack_u, long slack_v) {
  CandidateSet cs;
  if (kind == FamilyKind::one_param) return cs;
  for (const Item& it : pw.items) {
    if (!it.is_power()) continue;
    const long bound = it.base == 0 ? slack_u : slack_v;
    const long a = it.expr.nI, b = it.expr.nJ, c = it.expr.c;
    if (b == 0) {
      for (long t : values_within(a, c, bound)) cs.singles_I.push_back(t);
    } else if (a == 0) {
      for (long t : values_within(b, c, bound)) cs.singles_J.push_back(t);
    } else {
      for (long s = -bound - c; s <= bound - c; ++s) {
        if (a == b) {
          if (s % a == 0) cs.singles_diag.push_back(s / a);
        } else {
          cs.singles_lines.push_back({a, b, s});
        }
      }
    }
  }
  auto tidy = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(cs.singles_I);
  tidy(cs.singles_J);
  tidy(cs.singles_diag);
  tidy(cs.singles_lines);
  return cs;
}

std::pair<long, long> effective_slack(long slack, std::size_t p, std::size_t q) {
  auto side = [&](long own, long other) {
    long carry = 2 + ceil_div(other, own);
    return std::max({slack, 3 + 2 * carry, 8 + ceil_div(own + other, own)});
  };
  return {side(static_cast<long>(p), static_cast<long>(q)), side(static_cast<long>(q), static_cast<long>(p))};
}

bool assert_diag_nontrivial(const ParamWord& pw, long k) { return substitute_param(pw, Binding::diag(k)).empty(); }

}  // namespace fgeq::param
