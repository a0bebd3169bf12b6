#pragma once

#include <string>
#include <vector>

#include "fforest/semigroup.hpp"

namespace fforest {

struct ZooEntry {
  std::string name;
  Homomorphism hom;
};

/// The built-in test semigroups, each with a generating alphabet:
/// the trivial semigroup, U1 (identity plus absorbing zero, a two-level
/// J-order), the cyclic groups Z2..Z6, two rectangular bands, the
/// flip-flop monoid, and transformation closures on 2 and 3 points up to
/// the full transformation monoid T3.
std::vector<ZooEntry> standard_zoo();

}  // namespace fforest
