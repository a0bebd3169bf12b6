#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fforest/green.hpp"
#include "fforest/semigroup.hpp"

namespace fforest {

using NodeId = std::uint32_t;

/// One node of a factorization tree. A node without children is a leaf
/// for a single letter; an internal node factors its span into the spans
/// of its >= 2 children. Nodes with >= 3 children carry equal idempotent
/// child images. Every node caches its image and its [begin, end) span in
/// the source word.
struct FactNode {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  Elem image = 0;
  char letter = '\0';  // meaningful for leaves only
  std::vector<NodeId> children;

  bool is_leaf() const { return children.empty(); }
  bool operator==(const FactNode&) const = default;
};

/// A factorization tree stored as a flat arena, so destruction and
/// traversal never recurse no matter how degenerate a hand-made tree is.
struct FactTree {
  std::string word;
  std::vector<FactNode> nodes;
  NodeId root = 0;

  const FactNode& node(NodeId id) const { return nodes[id]; }
  bool operator==(const FactTree&) const = default;
};

/// One block of the boundary factorization of a word: the span
/// [begin, end) starts with its cut letter at begin; image is the image
/// of the whole block.
struct JBlock {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  Elem image = 0;

  bool operator==(const JBlock&) const = default;
};

/// Factorization of w into a left remainder w0 followed by blocks whose
/// images are J-equivalent to the image of w. Scanning right to left,
/// each block is the shortest nonempty word whose image falls into the
/// J-class of the whole word; the unconsumed remainder w0 is empty or has
/// image strictly J-above. pair_seq[i] records the L-class of block i's
/// image and the R-class of block i+1's image.
struct JDecomposition {
  std::uint32_t w0_begin = 0;
  std::uint32_t w0_end = 0;  // w0 = word[w0_begin, w0_end), possibly empty
  std::vector<JBlock> blocks;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_seq;
  Elem word_image = 0;
};

/// Throws EmptyWordError / UnknownLetterError for invalid words.
JDecomposition j_factorize(const Homomorphism& phi, const GreenData& green,
                           std::string_view w);

/// Builds a factorization tree for w whose height is at most
/// 3 * |{x : image(w) <=_J x}| <= 3|S|. Deterministic: identical inputs
/// give identical trees. Recursion depth is bounded by the tree height,
/// never by |w|. Throws EmptyWordError / UnknownLetterError;
/// InternalInvariantError signals a defect, never a silently wrong tree.
FactTree build_forest(const Homomorphism& phi, const GreenData& green,
                      std::string_view w);

/// Images of the proper prefixes block[0], block[0]block[1], ... of a
/// block sequence, deduplicated and sorted. The blocks must multiply
/// inside a single H-class, which is checked and enforced.
std::vector<Elem> prefix_set(const Homomorphism& phi, const GreenData& green,
                             std::span<const std::string_view> blocks);

/// Combines subtrees over the same word with contiguous spans into a
/// right-leaning binary comb; a single tree is returned unchanged.
FactTree chain(const Semigroup& s, std::vector<FactTree> parts);

}  // namespace fforest
