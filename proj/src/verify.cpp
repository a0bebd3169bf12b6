#include "fforest/verify.hpp"

#include <algorithm>

#include "fforest/errors.hpp"

namespace fforest {

namespace {

/// Nodes reachable from the root in depth-first preorder. Ids outside the
/// arena and repeated visits are recorded and not followed, which keeps
/// every traversal finite.
struct Walk {
  std::vector<NodeId> preorder;
  std::vector<bool> seen;
  std::vector<Violation> structural;

  explicit Walk(const FactTree& t) : seen(t.nodes.size(), false) {
    if (t.root >= t.nodes.size()) {
      structural.push_back({0, 0, "root id out of range"});
      return;
    }
    std::vector<NodeId> stack{t.root};
    seen[t.root] = true;
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      preorder.push_back(id);
      const FactNode& n = t.nodes[id];
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
        if (*it >= t.nodes.size()) {
          structural.push_back({n.begin, n.end, "child id out of range"});
          continue;
        }
        if (seen[*it]) {
          structural.push_back({n.begin, n.end, "node reached twice"});
          continue;
        }
        seen[*it] = true;
        stack.push_back(*it);
      }
    }
  }
};

}  // namespace

int height(const FactTree& tree) {
  const Walk walk(tree);
  std::vector<int> h(tree.nodes.size(), 0);
  // Children precede parents in reverse preorder.
  for (auto it = walk.preorder.rbegin(); it != walk.preorder.rend(); ++it) {
    const FactNode& n = tree.nodes[*it];
    int best = -1;
    for (NodeId c : n.children) {
      if (c < tree.nodes.size()) best = std::max(best, h[c]);
    }
    h[*it] = n.is_leaf() ? 0 : 1 + best;
  }
  return tree.root < tree.nodes.size() ? h[tree.root] : 0;
}

std::string tree_yield(const FactTree& tree) {
  const Walk walk(tree);
  std::string out;
  for (NodeId id : walk.preorder) {
    const FactNode& n = tree.nodes[id];
    if (n.is_leaf()) out.push_back(n.letter);
  }
  return out;
}

VerifyReport verify_valid(const FactTree& tree, const Homomorphism& phi,
                          const GreenData& green, std::string_view w) {
  const Semigroup& s = phi.semigroup();
  VerifyReport rep;

  const Walk walk(tree);
  rep.violations = walk.structural;

  for (NodeId id : walk.preorder) {
    const FactNode& n = tree.nodes[id];
    if (n.begin >= n.end || n.end > w.size()) {
      rep.violations.push_back({n.begin, n.end, "span outside the word"});
      continue;
    }
    if (n.image >= s.size()) {
      rep.violations.push_back({n.begin, n.end, "image is not an element index"});
      continue;
    }
    if (n.is_leaf()) {
      if (n.end - n.begin != 1) {
        rep.violations.push_back({n.begin, n.end, "leaf span is not one letter"});
        continue;
      }
      if (n.letter != w[n.begin]) {
        rep.violations.push_back({n.begin, n.end, "leaf letter disagrees with the word"});
      }
      if (!phi.has_letter(n.letter)) {
        rep.violations.push_back({n.begin, n.end, "leaf letter outside the alphabet"});
      } else if (n.image != phi.letter_image(n.letter)) {
        rep.violations.push_back({n.begin, n.end, "leaf image is not the letter image"});
      }
      continue;
    }
    if (n.children.size() < 2) {
      rep.violations.push_back({n.begin, n.end, "internal node needs >= 2 children"});
      continue;
    }
    bool spans_ok = true;
    std::uint32_t cursor = n.begin;
    for (NodeId c : n.children) {
      if (c >= tree.nodes.size()) {
        spans_ok = false;
        break;
      }
      const FactNode& ch = tree.nodes[c];
      if (ch.begin != cursor || ch.end <= ch.begin) {
        spans_ok = false;
        break;
      }
      cursor = ch.end;
    }
    if (!spans_ok || cursor != n.end) {
      rep.violations.push_back({n.begin, n.end, "children do not tile the span in order"});
      continue;
    }
    bool child_images_ok = true;
    for (NodeId c : n.children) {
      child_images_ok = child_images_ok && tree.nodes[c].image < s.size();
    }
    if (!child_images_ok) {
      rep.violations.push_back({n.begin, n.end, "child image is not an element index"});
      continue;
    }
    Elem img = tree.nodes[n.children[0]].image;
    for (std::size_t i = 1; i < n.children.size(); ++i) {
      img = s.mul(img, tree.nodes[n.children[i]].image);
    }
    if (img != n.image) {
      rep.violations.push_back({n.begin, n.end, "cached image differs from the child product"});
    }
    if (n.children.size() >= 3) {
      const Elem e = tree.nodes[n.children[0]].image;
      bool equal = true;
      for (NodeId c : n.children) equal = equal && tree.nodes[c].image == e;
      if (!equal) {
        rep.violations.push_back({n.begin, n.end, "node with >= 3 children has unequal child images"});
      } else if (!s.is_idempotent(e)) {
        rep.violations.push_back({n.begin, n.end, "node with >= 3 children has non-idempotent image"});
      }
    }
  }

  rep.height = height(tree);
  rep.yield_ok = tree_yield(tree) == w && tree.word == w;
  rep.bound = 0;
  try {
    rep.bound = 3 * static_cast<int>(green.j_upper_set_size(phi.image(w)));
  } catch (const Error&) {
    rep.violations.push_back({0, 0, "word has no image under the homomorphism"});
  }
  rep.valid = rep.violations.empty() && rep.yield_ok;
  return rep;
}

}  // namespace fforest
