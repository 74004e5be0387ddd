#pragma once

#include <array>
#include <vector>

#include "fgeq/index.hpp"

namespace fgeq {

/// The set {alpha u^I v^J beta}; an empty base removes that parameter.
struct ParamFamily {
  index::RepWord alpha;
  index::RepWord u;
  index::RepWord v;
  index::RepWord beta;
  std::size_t origin = 0;              // index h of the triple
  std::array<int, 3> signs{1, 1, 1};   // exponent signs of the triple as given
};

struct TripleCandidates {
  std::vector<index::RepWord> finite;
  std::vector<ParamFamily> families;
};

/// Shapes allowed for the middle occurrence of x^{p0} a x^{p1} b x^{p2} being a pseudo-solution.
TripleCandidates triple_candidates(int p0, const index::RepWord& a, int p1, const index::RepWord& b, int p2);

struct SupersetResult {
  std::shared_ptr<const index::Corpus> corpus;  // keeps interval segments valid
  std::vector<index::RepWord> finite_candidates;
  std::vector<ParamFamily> families;
  std::size_t raw_finite = 0;
  std::size_t raw_families = 0;
};

/// Union over the cyclic triples h = 0..m-1 of the triple candidates, post-processed and deduplicated.
SupersetResult build_superset(const index::IndexedEquation& eq);

}  // namespace fgeq
