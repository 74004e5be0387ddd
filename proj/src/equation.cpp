#include "fgeq/equation.hpp"

#include <sstream>

namespace fgeq {

std::size_t Equation::n() const {
  std::size_t total = m();
  for (const Word& w : words) total += w.size();
  return total;
}

namespace {

std::vector<RawToken> involute_tokens(const std::vector<RawToken>& tokens) {
  std::vector<RawToken> out;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    RawToken t = *it;
    if (t.is_variable)
      t.sign = -t.sign;
    else
      t.word = involute(t.word);
    out.push_back(std::move(t));
  }
  return out;
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

}  // namespace

RawEquation parse_equation(std::string_view text) {
  if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
  std::vector<RawToken> lhs, rhs;
  bool seen_eq = false;
  bool any_variable = false;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_blank(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_blank(text[j])) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    auto& side = seen_eq ? rhs : lhs;
    if (tok == "=") {
      if (seen_eq) throw ParseError("more than one '='");
      seen_eq = true;
    } else if (tok == "X" || tok == "X'") {
      side.push_back({true, tok == "X" ? 1 : -1, {}});
      any_variable = true;
    } else {
      try {
        side.push_back({false, 1, parse_word(tok)});
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed token '" + std::string(tok) + "'");
      }
    }
  }
  if (!any_variable) throw ParseError("equation has no variable");
  RawEquation raw;
  raw.tokens = std::move(lhs);
  for (RawToken& t : involute_tokens(rhs)) raw.tokens.push_back(std::move(t));
  return raw;
}

NormalizedEquation normalize(const RawEquation& raw) {
  // Cyclic list of variable occurrences; words[i] is the constant following occurrence i.
  std::vector<int> signs;
  std::vector<Word> words;
  Word lead;
  for (const RawToken& t : raw.tokens) {
    if (t.is_variable) {
      signs.push_back(t.sign);
      words.emplace_back();
    } else if (words.empty()) {
      lead.insert(lead.end(), t.word.begin(), t.word.end());
    } else {
      words.back().insert(words.back().end(), t.word.begin(), t.word.end());
    }
  }
  NormalizedEquation out;
  if (signs.empty()) {
    out.constant = nf(lead);
    out.kind = out.constant.empty() ? EquationKind::trivially_true : EquationKind::trivially_false;
    return out;
  }
  words.back().insert(words.back().end(), lead.begin(), lead.end());
  for (Word& w : words) w = nf(w);

  bool changed = true;
  while (changed && !signs.empty()) {
    changed = false;
    std::size_t m = signs.size();
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t next = (i + 1) % m;
      if (next == i || !words[i].empty() || signs[i] != -signs[next]) continue;
      if (m == 2) {
        out.constant = words[next];
        signs.clear();
        words.clear();
      } else {
        std::size_t prev = (i + m - 1) % m;
        words[prev] = nf(concat(words[prev], words[next]));
        std::size_t hi = std::max(i, next), lo = std::min(i, next);
        signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(hi));
        words.erase(words.begin() + static_cast<std::ptrdiff_t>(hi));
        signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(lo));
        words.erase(words.begin() + static_cast<std::ptrdiff_t>(lo));
      }
      changed = true;
      break;
    }
  }
  if (signs.empty()) {
    out.constant = nf(out.constant);
    out.kind = out.constant.empty() ? EquationKind::trivially_true : EquationKind::trivially_false;
    return out;
  }
  out.eq.exponents = std::move(signs);
  out.eq.words = std::move(words);
  return out;
}

RawEquation to_raw(const Equation& eq) {
  RawEquation raw;
  for (std::size_t i = 0; i < eq.m(); ++i) {
    raw.tokens.push_back({true, eq.exponents[i], {}});
    if (!eq.words[i].empty()) raw.tokens.push_back({false, 1, eq.words[i]});
  }
  return raw;
}

NormalizedEquation normalize(const Equation& eq) { return normalize(to_raw(eq)); }

NormalizedEquation read_equation(std::string_view text) { return normalize(parse_equation(text)); }

std::string format_equation(const Equation& eq) {
  std::ostringstream out;
  for (std::size_t i = 0; i < eq.m(); ++i) {
    if (i) out << ' ';
    out << (eq.exponents[i] > 0 ? "X" : "X'");
    if (!eq.words[i].empty()) out << ' ' << to_string(eq.words[i]);
  }
  return out.str();
}

bool satisfies_invariants(const Equation& eq) {
  std::size_t m = eq.m();
  if (m == 0 || eq.words.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (eq.exponents[i] != 1 && eq.exponents[i] != -1) return false;
    if (!is_reduced(eq.words[i])) return false;
    if (i + 1 < m && eq.exponents[i] == -eq.exponents[i + 1] && eq.words[i].empty()) return false;
  }
  return true;
}

Word substitute(const RawEquation& raw, WordView x) {
  Word xb = involute(x);
  Word w;
  for (const RawToken& t : raw.tokens) {
    const Word& piece = t.is_variable ? (t.sign > 0 ? Word(x.begin(), x.end()) : xb) : t.word;
    w.insert(w.end(), piece.begin(), piece.end());
  }
  return nf(w);
}

Word substitute(const Equation& eq, WordView x) {
  Word xb = involute(x);
  Word w;
  for (std::size_t i = 0; i < eq.m(); ++i) {
    if (eq.exponents[i] > 0)
      w.insert(w.end(), x.begin(), x.end());
    else
      w.insert(w.end(), xb.begin(), xb.end());
    w.insert(w.end(), eq.words[i].begin(), eq.words[i].end());
  }
  return nf(w);
}

bool is_solution(const Equation& eq, WordView x) { return substitute(eq, x).empty(); }

}  // namespace fgeq
