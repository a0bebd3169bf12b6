#include "fforest/range_product.hpp"

#include "doctest.h"
#include "fforest/errors.hpp"
#include "fforest/rng.hpp"
#include "fforest/verify.hpp"
#include "fforest/zoo.hpp"

using namespace fforest;

namespace {

Homomorphism flip_flop_hom() {
  Semigroup ff("flipflop", {"1", "a", "b"}, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}});
  return Homomorphism(std::move(ff), {{'a', 1}, {'b', 2}});
}

}  // namespace

TEST_CASE("whole-word and single-letter queries") {
  Homomorphism phi(cyclic_group(2), {{'g', 1}});
  const GreenData g = compute_green(phi.semigroup());
  const ForestIndex idx = preprocess(phi, g, "g");
  CHECK(query(idx, 0, 1) == 1);

  const ForestIndex idx8 = preprocess(phi, g, "gggggggg");
  CHECK(query(idx8, 0, 8) == phi.image("gggggggg"));
  for (std::size_t p = 0; p < 8; ++p) CHECK(query(idx8, p, p + 1) == 1);
}

TEST_CASE("flat word over the trivial semigroup") {
  Homomorphism phi(cyclic_group(1), {{'x', 0}});
  const GreenData g = compute_green(phi.semigroup());
  const ForestIndex idx = preprocess(phi, g, std::string(100, 'x'));
  CHECK(idx.tree().node(idx.tree().root).children.size() == 100);
  CHECK(query(idx, 17, 93) == 0);
}

TEST_CASE("flip-flop infix") {
  const Homomorphism phi = flip_flop_hom();
  const GreenData g = compute_green(phi.semigroup());
  const ForestIndex idx = preprocess(phi, g, "abab");
  // "ba" ends in a, so its image is a
  CHECK(query(idx, 1, 3) == 1);
}

TEST_CASE("range errors") {
  Homomorphism phi(cyclic_group(2), {{'g', 1}});
  const GreenData g = compute_green(phi.semigroup());
  const ForestIndex idx = preprocess(phi, g, "gggg");
  CHECK_THROWS_AS(query(idx, 2, 2), EmptyRangeError);
  CHECK_THROWS_AS(query(idx, 0, 5), RangeOutOfBoundsError);
  CHECK_THROWS_AS(query(idx, 3, 1), RangeOutOfBoundsError);
}

TEST_CASE("every index node image rechecks against its children") {
  SplitMix64 rng(808);
  const Homomorphism phi = flip_flop_hom();
  const GreenData g = compute_green(phi.semigroup());
  const std::string w = random_word(rng, phi.alphabet(), 1000);
  const ForestIndex idx = preprocess(phi, g, w);
  const Semigroup& s = idx.semigroup();
  for (const FactNode& n : idx.tree().nodes) {
    if (n.is_leaf()) {
      CHECK(n.image == phi.letter_image(w[n.begin]));
      continue;
    }
    Elem img = idx.tree().node(n.children[0]).image;
    for (std::size_t i = 1; i < n.children.size(); ++i) {
      img = s.mul(img, idx.tree().node(n.children[i]).image);
    }
    CHECK(n.image == img);
  }
}

TEST_CASE("parent links round-trip") {
  SplitMix64 rng(555);
  const Homomorphism phi = flip_flop_hom();
  const GreenData g = compute_green(phi.semigroup());
  const std::string w = random_word(rng, phi.alphabet(), 300);
  const ForestIndex idx = preprocess(phi, g, w);
  const FactTree& t = idx.tree();
  for (NodeId u = 0; u < t.nodes.size(); ++u) {
    for (std::size_t slot = 0; slot < t.nodes[u].children.size(); ++slot) {
      const NodeId c = t.nodes[u].children[slot];
      CHECK(idx.parent(c) == u);
      CHECK(idx.child_slot(c) == slot);
      CHECK(t.nodes[u].children[idx.child_slot(c)] == c);
    }
  }
  CHECK(idx.parent(t.root) == t.root);
}

TEST_CASE("queries agree with direct folds across the zoo") {
  SplitMix64 rng(606);
  for (const ZooEntry& entry : standard_zoo()) {
    const Homomorphism& phi = entry.hom;
    const GreenData g = compute_green(phi.semigroup());
    const std::string w = random_word(rng, phi.alphabet(), 1000);
    const ForestIndex idx = preprocess(phi, g, w);
    const int h = height(idx.tree());
    for (int round = 0; round < 200; ++round) {
      std::size_t i = rng.below(w.size());
      std::size_t j = 1 + rng.below(w.size());
      if (i >= j) {
        const std::size_t tmp = i;
        i = j - 1;
        j = tmp + 1;
      }
      const QueryStats stats = query_with_stats(idx, i, j);
      CHECK(stats.value == phi.image(std::string_view(w).substr(i, j - i)));
      CHECK(stats.multiplications <= 4 * static_cast<std::size_t>(h + 1));
    }
  }
}
