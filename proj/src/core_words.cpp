#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fgeq/simd.hpp"
#include "fgeq/word.hpp"

namespace fgeq {

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z')
      w.push_back(make_letter(static_cast<std::uint32_t>(ch - 'a'), false));
    else if (ch >= 'A' && ch <= 'Z')
      w.push_back(make_letter(static_cast<std::uint32_t>(ch - 'A'), true));
    else
      throw std::invalid_argument(std::string("invalid letter '") + ch + "'");
  }
  return w;
}

std::string to_string(WordView w) {
  std::string out;
  out.reserve(w.size());
  for (Letter a : w) {
    std::uint32_t g = generator(a);
    if (g >= 26) throw std::out_of_range("generator id has no letter form");
    out.push_back(static_cast<char>((is_inverse(a) ? 'A' : 'a') + g));
  }
  return out;
}

Word concat(WordView a, WordView b) {
  Word w(a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word involute(WordView w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = inverse(w[w.size() - 1 - i]);
  return out;
}

Word nf(WordView w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter a : w) {
    if (!stack.empty() && stack.back() == inverse(a))
      stack.pop_back();
    else
      stack.push_back(a);
  }
  return stack;
}

bool is_reduced(WordView w) { return simd::find_cancellation(w.data(), w.size()) == w.size(); }

bool is_cyclically_reduced(WordView w) {
  return is_reduced(w) && (w.size() < 2 || w.front() != inverse(w.back()));
}

CyclicDecomposition cyclic_reduce(WordView w) {
  Word r = nf(w);
  std::size_t t = 0;
  while (2 * t + 1 < r.size() && r[t] == inverse(r[r.size() - 1 - t])) ++t;
  CyclicDecomposition d;
  d.conjugator.assign(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(t));
  d.core.assign(r.begin() + static_cast<std::ptrdiff_t>(t), r.end() - static_cast<std::ptrdiff_t>(t));
  return d;
}

bool has_period(WordView w, std::size_t p) { return longest_periodic_prefix_naive(w, p) == w.size(); }

std::size_t longest_periodic_prefix_naive(WordView w, std::size_t p) {
  if (p == 0) throw std::invalid_argument("period must be positive");
  if (p >= w.size()) return w.size();
  return p + simd::mismatch(w.data(), w.data() + p, w.size() - p);
}

PrimitiveRoot primitive_root(WordView w) {
  if (w.empty()) throw std::invalid_argument("primitive_root of the empty word");
  CyclicDecomposition d = cyclic_reduce(w);
  const Word& c = d.core;
  std::size_t n = c.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0 || !has_period(c, p)) continue;
    Word root = d.conjugator;
    root.insert(root.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(p));
    Word tail = involute(d.conjugator);
    root.insert(root.end(), tail.begin(), tail.end());
    return {root, static_cast<long>(n / p)};
  }
  return {Word(w.begin(), w.end()), 1};
}

bool is_primitive(WordView w) { return !w.empty() && primitive_root(w).exponent == 1; }

namespace {

bool is_rotation(WordView u, WordView v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  Word vv = concat(v, v);
  return std::search(vv.begin(), vv.end(), u.begin(), u.end()) != vv.end();
}

}  // namespace

bool conj_shift_equiv(WordView u, WordView v) { return is_rotation(u, v) || is_rotation(u, involute(v)); }

long power_prefix(WordView s, WordView t) {
  if (s.empty()) return 0;
  auto count = [&](WordView base) {
    long k = 0;
    std::size_t at = 0;
    while (at + base.size() <= t.size() && std::equal(base.begin(), base.end(), t.begin() + static_cast<std::ptrdiff_t>(at))) {
      ++k;
      at += base.size();
    }
    return k;
  };
  if (long k = count(s); k > 0) return k;
  Word sb = involute(s);
  return -count(sb);
}

long power_suffix(WordView s, WordView t) {
  // t ends with s^k exactly when involute(t) starts with s^-k.
  return -power_prefix(s, involute(t));
}

std::vector<MaximalPower> maximal_powers(WordView s, WordView t) {
  std::vector<MaximalPower> out;
  std::size_t p = s.size();
  if (p == 0 || t.size() < p) return out;
  Word sb = involute(s);
  auto block = [&](std::size_t at) -> int {
    if (at + p > t.size()) return 0;
    auto first = t.begin() + static_cast<std::ptrdiff_t>(at);
    if (std::equal(s.begin(), s.end(), first)) return 1;
    if (std::equal(sb.begin(), sb.end(), first)) return -1;
    return 0;
  };
  for (std::size_t i = 0; i + p <= t.size(); ++i) {
    int dir = block(i);
    if (dir == 0) continue;
    if (i >= p && block(i - p) != 0) continue;
    long k = 0;
    std::size_t at = i;
    while (block(at) == dir) {
      ++k;
      at += p;
    }
    if (block(at) != 0) continue;
    out.push_back({dir * k, i});
  }
  return out;
}

std::optional<Word> common_root(WordView s, WordView t) {
  if (s.empty() || t.empty()) return std::nullopt;
  if (nf(concat(s, t)) != nf(concat(t, s))) return std::nullopt;
  return primitive_root(s).root;
}

std::optional<Pairing> reduction_pairing(WordView w) {
  Pairing f(w.size());
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!stack.empty() && w[stack.back()] == inverse(w[i])) {
      f[i] = stack.back();
      f[stack.back()] = i;
      stack.pop_back();
    } else {
      stack.push_back(i);
    }
  }
  if (!stack.empty()) return std::nullopt;
  return f;
}

bool is_valid_pairing(WordView w, const Pairing& f) {
  if (f.size() != w.size()) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t j = f[i];
    if (j >= w.size() || j == i || f[j] != i || w[j] != inverse(w[i])) return false;
  }
  // Well-nested: no crossing pairs.
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (f[i] > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != f[i]) return false;
      stack.pop_back();
    }
  }
  return true;
}

namespace {

struct Layout {
  std::vector<std::size_t> start;  // start offset of every factor
  std::size_t total = 0;
  std::size_t k = 0;

  explicit Layout(std::span<const Word> factors) {
    if (factors.size() % 2 == 0) throw std::invalid_argument("factor count must be odd");
    k = factors.size() / 2;
    for (const Word& f : factors) {
      start.push_back(total);
      total += f.size();
    }
    start.push_back(total);
  }
  std::size_t u_begin(std::size_t i) const { return start[2 * i - 1]; }
  std::size_t u_end(std::size_t i) const { return start[2 * i]; }
  std::size_t ctx_begin(std::size_t i) const { return i >= 2 ? u_begin(i - 1) : 0; }
  std::size_t ctx_end(std::size_t i) const { return i < k ? u_end(i + 1) : total; }
};

}  // namespace

bool is_pseudosolution(std::span<const Word> factors, const Pairing& f, std::size_t i) {
  Layout lay(factors);
  if (i < 1 || i > lay.k || f.size() != lay.total) return false;
  for (std::size_t p = lay.u_begin(i); p < lay.u_end(i); ++p)
    if (f[p] < lay.ctx_begin(i) || f[p] >= lay.ctx_end(i)) return false;
  return true;
}

std::size_t find_pseudosolution(std::span<const Word> factors, const Pairing& f) {
  Layout lay(factors);
  if (lay.k == 0) throw std::invalid_argument("no variable factor");
  for (std::size_t i = 1; i <= lay.k; ++i)
    if (lay.u_begin(i) == lay.u_end(i)) return i;
  std::size_t i = 1;
  for (std::size_t guard = 0; guard <= lay.total + 1; ++guard) {
    std::size_t mn = lay.total, mx = 0;
    for (std::size_t p = lay.u_begin(i); p < lay.u_end(i); ++p) {
      mn = std::min(mn, f[p]);
      mx = std::max(mx, f[p]);
    }
    if (mn >= lay.ctx_begin(i) && mx < lay.ctx_end(i)) return i;
    // A pair reaching past a neighbour encloses that neighbour in an f-closed interval.
    if (mx >= lay.ctx_end(i))
      ++i;
    else
      --i;
  }
  throw std::logic_error("pseudo-solution search did not terminate");
}

}  // namespace fgeq
