#include "fforest/range_product.hpp"

#include <algorithm>

#include "fforest/errors.hpp"

namespace fforest {

ForestIndex::ForestIndex(Semigroup s, FactTree tree)
    : semigroup_(std::move(s)), tree_(std::move(tree)) {
  if (tree_.root >= tree_.nodes.size()) {
    throw Error("index tree has no root");
  }
  parent_.assign(tree_.nodes.size(), tree_.root);
  child_slot_.assign(tree_.nodes.size(), 0);
  for (NodeId u = 0; u < tree_.nodes.size(); ++u) {
    const auto& children = tree_.nodes[u].children;
    for (std::uint32_t slot = 0; slot < children.size(); ++slot) {
      if (children[slot] >= tree_.nodes.size()) {
        throw Error("index tree has a dangling child id");
      }
      parent_[children[slot]] = u;
      child_slot_[children[slot]] = slot;
    }
  }
}

ForestIndex preprocess(const Homomorphism& phi, const GreenData& green,
                       std::string_view w) {
  return ForestIndex(phi.semigroup(), build_forest(phi, green, w));
}

namespace {

/// Index of the child whose span contains position pos.
std::size_t child_containing(const FactTree& t, const FactNode& n,
                             std::size_t pos) {
  const auto& ch = n.children;
  // Children are span-sorted; find the last child with begin <= pos.
  std::size_t lo = 0, hi = ch.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (t.nodes[ch[mid]].begin <= pos) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// Image of [i, node end): descend along the left boundary. At each level
/// the siblings right of the descent child contribute a single value: for
/// a wide node their images are all one idempotent, so any run of them
/// multiplies to that idempotent; a binary node has exactly one such
/// sibling.
Elem suffix_value(const ForestIndex& idx, NodeId u, std::size_t i,
                  std::size_t* mults) {
  const FactTree& t = idx.tree();
  const Semigroup& s = idx.semigroup();
  bool have_right = false;
  Elem right = 0;
  std::size_t steps = 0;
  while (t.nodes[u].begin != i) {
    const FactNode& n = t.nodes[u];
    if (n.is_leaf() || ++steps > t.nodes.size()) {
      throw InternalInvariantError("descent lost in an inconsistent tree");
    }
    const std::size_t c = child_containing(t, n, i);
    if (c + 1 < n.children.size()) {
      const Elem rest = t.nodes[n.children[c + 1]].image;
      right = have_right ? s.mul(rest, right) : rest;
      if (have_right) ++*mults;
      have_right = true;
    }
    u = n.children[c];
  }
  if (!have_right) return t.nodes[u].image;
  ++*mults;
  return s.mul(t.nodes[u].image, right);
}

/// Image of [node begin, j): mirror of suffix_value down the right
/// boundary.
Elem prefix_value(const ForestIndex& idx, NodeId u, std::size_t j,
                  std::size_t* mults) {
  const FactTree& t = idx.tree();
  const Semigroup& s = idx.semigroup();
  bool have_left = false;
  Elem left = 0;
  std::size_t steps = 0;
  while (t.nodes[u].end != j) {
    const FactNode& n = t.nodes[u];
    if (n.is_leaf() || ++steps > t.nodes.size()) {
      throw InternalInvariantError("descent lost in an inconsistent tree");
    }
    const std::size_t c = child_containing(t, n, j - 1);
    if (c > 0) {
      const Elem rest = t.nodes[n.children[c - 1]].image;
      left = have_left ? s.mul(left, rest) : rest;
      if (have_left) ++*mults;
      have_left = true;
    }
    u = n.children[c];
  }
  if (!have_left) return t.nodes[u].image;
  ++*mults;
  return s.mul(left, t.nodes[u].image);
}

}  // namespace

QueryStats query_with_stats(const ForestIndex& idx, std::size_t i,
                            std::size_t j) {
  const FactTree& t = idx.tree();
  const Semigroup& s = idx.semigroup();
  if (i == j) throw EmptyRangeError("empty range");
  if (i > j || j > t.word.size()) {
    throw RangeOutOfBoundsError("range " + std::to_string(i) + ":" +
                                std::to_string(j) + " outside word of length " +
                                std::to_string(t.word.size()));
  }

  QueryStats stats;
  NodeId u = t.root;
  std::size_t steps = 0;
  // Descend while one child covers the whole range.
  while (true) {
    const FactNode& n = t.nodes[u];
    if (n.begin == i && n.end == j) {
      stats.value = n.image;
      return stats;
    }
    if (n.is_leaf() || ++steps > t.nodes.size()) {
      throw InternalInvariantError("descent lost in an inconsistent tree");
    }
    const std::size_t a = child_containing(t, n, i);
    const std::size_t b = child_containing(t, n, j - 1);
    if (a == b) {
      u = n.children[a];
      continue;
    }
    // The range straddles children a..b: a suffix of child a, then whole
    // children, then a prefix of child b.
    Elem acc = suffix_value(idx, n.children[a], i, &stats.multiplications);
    if (b - a > 1) {
      // Any run of whole children inside a wide node is one idempotent.
      acc = s.mul(acc, t.nodes[n.children[a + 1]].image);
      ++stats.multiplications;
    }
    acc = s.mul(acc, prefix_value(idx, n.children[b], j,
                                  &stats.multiplications));
    ++stats.multiplications;
    stats.value = acc;
    return stats;
  }
}

Elem query(const ForestIndex& idx, std::size_t i, std::size_t j) {
  return query_with_stats(idx, i, j).value;
}

}  // namespace fforest
