#pragma once

#include <string_view>

#include "fforest/forest.hpp"

namespace fforest {

/// A word preprocessed for O(tree height) infix-image queries: the
/// factorization tree with cached images plus parent links for
/// navigation. Immutable after preprocess; concurrent queries are safe.
class ForestIndex {
 public:
  /// Wraps an existing tree (for example one parsed from a file).
  ForestIndex(Semigroup s, FactTree tree);

  const Semigroup& semigroup() const { return semigroup_; }
  const FactTree& tree() const { return tree_; }
  std::string_view word() const { return tree_.word; }

  /// Parent of a node; the root is its own parent.
  NodeId parent(NodeId id) const { return parent_[id]; }
  /// Position of a node within its parent's child list (0 for the root).
  std::uint32_t child_slot(NodeId id) const { return child_slot_[id]; }

 private:
  Semigroup semigroup_;
  FactTree tree_;
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> child_slot_;
};

/// Builds the factorization tree of w and annotates it for queries.
ForestIndex preprocess(const Homomorphism& phi, const GreenData& green,
                       std::string_view w);

struct QueryStats {
  Elem value = 0;
  std::size_t multiplications = 0;
};

/// Image of word[i, j) computed from node images only, never from the
/// letters; the number of table multiplications is O(tree height) and is
/// reported. Throws EmptyRangeError / RangeOutOfBoundsError.
QueryStats query_with_stats(const ForestIndex& idx, std::size_t i,
                            std::size_t j);

/// Image of word[i, j).
Elem query(const ForestIndex& idx, std::size_t i, std::size_t j);

}  // namespace fforest
