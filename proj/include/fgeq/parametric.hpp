#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fgeq/index.hpp"
#include "fgeq/superset.hpp"

namespace fgeq {

/// Raised when a result the theory rules out shows up; callers map it to exit code 1.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace param {

/// nI*I + nJ*J + c
struct IntExpr {
  long nI = 0;
  long nJ = 0;
  long c = 0;

  long eval(long i, long j) const { return nI * i + nJ * j + c; }
  bool is_constant() const { return nI == 0 && nJ == 0; }
  IntExpr operator+(const IntExpr& o) const { return {nI + o.nI, nJ + o.nJ, c + o.c}; }
  IntExpr operator-() const { return {-nI, -nJ, -c}; }
  auto operator<=>(const IntExpr&) const = default;
};

/// A constant word, or base^expr when base >= 0 (index into ParamWord::bases).
struct Item {
  index::RepWord word;
  int base = -1;
  IntExpr expr;
  bool trivial = false;  // constant produced by collapsing fragments

  bool is_power() const { return base >= 0; }
  static Item constant(index::RepWord w) { return {std::move(w), -1, {}, false}; }
  static Item power(int b, IntExpr e) { return {{}, b, e, false}; }
};

struct ParamWord {
  std::vector<Item> items;
  std::array<std::shared_ptr<const index::RunBase>, 2> bases;

  bool empty() const { return items.empty(); }
  bool has_power(int base) const;
  bool has_any_power() const { return has_power(0) || has_power(1); }
  std::size_t power_count() const;
  ParamWord involuted() const;
  void append(const ParamWord& w);
  /// nf of the word at I = i, J = j.
  index::RepWord evaluate(long i, long j) const;
  bool vanishes(long i, long j) const;
  Word materialize(long i, long j) const { return evaluate(i, j).materialize(); }
};

enum class FamilyKind { one_param, distinct, shift };

/// x = alpha u^I v^J beta rewritten so that every power uses a primitive cyclically reduced base.
struct FamilyShape {
  FamilyKind kind = FamilyKind::one_param;
  ParamWord x;
  index::RepWord alpha, beta;
  std::shared_ptr<const index::RunBase> u, v;  // v is null for one-parameter shapes
};

FamilyShape shape_family(const ParamFamily& f);

/// The rotated left-hand side of the equation with X replaced by the shape.
ParamWord substitute_family(const index::IndexedEquation& eq, const FamilyShape& shape);

struct PreprocessReport {
  std::size_t collapsed = 0;
  std::size_t power_fragments = 0;  // merged trivial fragments that are still a power of a base
};

/// Normalizes constants and collapses conjugation fragments b^{-φ} w b^{φ} with w a b-power.
ParamWord preprocess(const ParamWord& pw, PreprocessReport* report = nullptr);

ParamWord u_reduce(const ParamWord& pw, int base);
/// Alternates u- and v-reduction until neither changes the word.
ParamWord reduce(const ParamWord& pw);
bool is_u_reduced(const ParamWord& pw, int base);

std::vector<IntExpr> collect_exponents(const ParamWord& pw, int base, std::map<IntExpr, std::size_t>* counts = nullptr);

/// I := aI*I + bI*J + cI and J := aJ*I + bJ*J + cJ, applied simultaneously.
struct Binding {
  long aI = 1, bI = 0, cI = 0;
  long aJ = 0, bJ = 1, cJ = 0;

  static Binding fix_I(long i) { return {0, 0, i, 0, 1, 0}; }
  static Binding fix_J(long j) { return {1, 0, 0, 0, 0, j}; }
  /// I + J = k, realized as J := k - I.
  static Binding diag(long k) { return {1, 0, 0, -1, 0, k}; }
  IntExpr apply(const IntExpr& e) const;
};

ParamWord substitute_param(const ParamWord& pw, const Binding& b);

struct OneParamResult {
  bool all_integers = false;
  std::vector<long> candidates;
};

/// pw may depend on a single variable (0 = I, 1 = J) through powers of a single base.
OneParamResult solve_one_param(const ParamWord& pw, int var, bool already_reduced = false);

/// All t with |a*t + c| <= bound (a != 0).
std::vector<long> values_within(long a, long c, long bound);

struct Line {
  long a, b, t;  // a*I + b*J = t
  auto operator<=>(const Line&) const = default;
};

struct CandidateSet {
  std::vector<std::pair<long, long>> fixed_pairs;
  std::vector<long> lines_I;      // j such that (·, j) is a line of solutions
  std::vector<long> lines_J;      // i such that (i, ·) is a line of solutions
  std::vector<long> lines_diag;   // k such that I + J = k is a line of solutions
  std::vector<long> singles_I;
  std::vector<long> singles_J;
  std::vector<long> singles_diag;
  std::vector<Line> singles_lines;  // mixed exponents a*I + b*J + c other than I + J
};

/// Parametrizes the integer points of a line as I := (b/g) S + i0, J := -(a/g) S + j0 with S in the I slot.
std::optional<Binding> line_binding(const Line& line);

/// Thresholds: slack_u for exponents of base 0, slack_v for base 1.
CandidateSet candidate_pairs(const ParamWord& pw, FamilyKind kind, long slack_u, long slack_v);

/// Effective thresholds for a distinct-base family with |u| = p, |v| = q.
std::pair<long, long> effective_slack(long slack, std::size_t p, std::size_t q);

/// True when pw with I + J = k reduces to the empty word.
bool assert_diag_nontrivial(const ParamWord& pw, long k);

}  // namespace param
}  // namespace fgeq
