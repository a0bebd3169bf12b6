#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fforest/forest.hpp"

namespace fforest {

struct Violation {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  std::string rule;

  bool operator==(const Violation&) const = default;
};

/// Result of checking a factorization tree. Structural validity and the
/// height bound are reported separately, so hand-made trees can be
/// analyzed even when they exceed the bound.
struct VerifyReport {
  bool valid = false;
  bool yield_ok = false;
  int height = 0;
  int bound = 0;  // 3 * |{x : image(w) <=_J x}|
  std::vector<Violation> violations;

  bool within_bound() const { return height <= bound; }
};

/// Total check of a tree against a word: leaf letters, node arity, the
/// equal-idempotent rule for nodes with >= 3 children, cached images
/// against recomputed products, span tiling, yield, and the recomputed
/// height against the bound. Never throws; all traversals use explicit
/// stacks and tolerate arbitrary (even cyclic) node graphs.
VerifyReport verify_valid(const FactTree& tree, const Homomorphism& phi,
                          const GreenData& green, std::string_view w);

/// 0 for a leaf, otherwise 1 + the maximum child height. Iterative.
int height(const FactTree& tree);

/// Concatenation of leaf letters, left to right. Iterative.
std::string tree_yield(const FactTree& tree);

}  // namespace fforest
