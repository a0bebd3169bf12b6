#include "fforest/forest.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "fforest/errors.hpp"

namespace fforest {

namespace {

void check_word(const Homomorphism& phi, std::string_view w) {
  if (w.empty()) throw EmptyWordError("cannot factorize the empty word");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!phi.has_letter(w[i])) {
      throw UnknownLetterError(i, w[i],
                               "letter '" + std::string(1, w[i]) +
                                   "' at position " + std::to_string(i) +
                                   " is not in the alphabet");
    }
  }
}

/// Right-to-left scan over word[lo, hi). The running suffix image is
/// extended by one letter at a time (one table lookup each) and cut as
/// soon as it lands in the J-class of the whole span's image.
JDecomposition factorize_span(const Homomorphism& phi, const GreenData& green,
                              std::string_view w, std::uint32_t lo,
                              std::uint32_t hi) {
  const Semigroup& s = phi.semigroup();
  Elem total = phi.letter_image(w[lo]);
  for (std::uint32_t p = lo + 1; p < hi; ++p) {
    total = s.mul(total, phi.letter_image(w[p]));
  }
  const std::uint32_t jc = green.j_class(total);

  std::vector<JBlock> rev;
  std::uint32_t block_end = hi;
  Elem img = 0;
  bool have = false;
  for (std::uint32_t p = hi; p-- > lo;) {
    const Elem li = phi.letter_image(w[p]);
    img = have ? s.mul(li, img) : li;
    have = true;
    if (green.j_class(img) == jc) {
      rev.push_back(JBlock{p, block_end, img});
      block_end = p;
      have = false;
    }
  }
  if (rev.empty()) {
    throw InternalInvariantError("no block formed; the whole span qualifies");
  }

  JDecomposition d;
  d.w0_begin = lo;
  d.w0_end = block_end;
  d.word_image = total;
  d.blocks.assign(rev.rbegin(), rev.rend());
  d.pair_seq.reserve(d.blocks.size() - 1);
  for (std::size_t i = 0; i + 1 < d.blocks.size(); ++i) {
    d.pair_seq.emplace_back(green.l_class(d.blocks[i].image),
                            green.r_class(d.blocks[i + 1].image));
  }
  return d;
}

class Builder {
 public:
  Builder(const Homomorphism& phi, const GreenData& green, std::string_view w)
      : phi_(phi), green_(green), s_(phi.semigroup()), w_(w) {
    nodes_.reserve(2 * w.size());
  }

  FactTree run() {
    const NodeId root = build(0, static_cast<std::uint32_t>(w_.size()));
    FactTree t;
    t.word = std::string(w_);
    t.nodes = std::move(nodes_);
    t.root = root;
    return t;
  }

 private:
  const Homomorphism& phi_;
  const GreenData& green_;
  const Semigroup& s_;
  std::string_view w_;
  std::vector<FactNode> nodes_;

  NodeId leaf(std::uint32_t pos) {
    FactNode n;
    n.begin = pos;
    n.end = pos + 1;
    n.letter = w_[pos];
    n.image = phi_.letter_image(w_[pos]);
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
  }

  NodeId node(std::vector<NodeId> children) {
    if (children.size() < 2) {
      throw InternalInvariantError("internal node needs >= 2 children");
    }
    FactNode n;
    n.begin = nodes_[children.front()].begin;
    n.end = nodes_[children.back()].end;
    Elem img = nodes_[children[0]].image;
    for (std::size_t i = 1; i < children.size(); ++i) {
      assert(nodes_[children[i]].begin == nodes_[children[i - 1]].end);
      img = s_.mul(img, nodes_[children[i]].image);
    }
    if (children.size() >= 3) {
      const Elem e = nodes_[children[0]].image;
      for (NodeId c : children) {
        if (nodes_[c].image != e) {
          throw InternalInvariantError("wide node with unequal child images");
        }
      }
      if (!s_.is_idempotent(e)) {
        throw InternalInvariantError("wide node image is not idempotent");
      }
    }
    n.image = img;
    n.children = std::move(children);
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
  }

  /// Right-leaning comb; a single part is returned as-is.
  NodeId comb(std::vector<NodeId> parts) {
    NodeId acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
      acc = node({parts[i], acc});
    }
    return acc;
  }

  /// Tree for one block: its cut letter, then the block tail if any.
  NodeId block_tree(const JBlock& b) {
    if (b.end - b.begin == 1) return leaf(b.begin);
    NodeId a = leaf(b.begin);
    return node({a, build(b.begin + 1, b.end)});
  }

  /// If every letter in the span has one common idempotent image, the
  /// whole span is one flat node of height 1.
  bool uniform_idempotent(std::uint32_t lo, std::uint32_t hi, Elem* out) const {
    const Elem e = phi_.letter_image(w_[lo]);
    for (std::uint32_t p = lo + 1; p < hi; ++p) {
      if (phi_.letter_image(w_[p]) != e) return false;
    }
    if (!s_.is_idempotent(e)) return false;
    *out = e;
    return true;
  }

  NodeId build(std::uint32_t lo, std::uint32_t hi) {
    assert(lo < hi);
    if (hi - lo == 1) return leaf(lo);

    Elem e = 0;
    if (uniform_idempotent(lo, hi, &e)) {
      std::vector<NodeId> kids;
      kids.reserve(hi - lo);
      for (std::uint32_t p = lo; p < hi; ++p) kids.push_back(leaf(p));
      return node(std::move(kids));
    }

    const JDecomposition dec = factorize_span(phi_, green_, w_, lo, hi);
    const auto& bl = dec.blocks;
    const std::size_t m = bl.size();

    // Pick the first boundary-class pair that repeats >= 3 times; with no
    // such pair the blocks go into a comb.
    std::size_t pick = SIZE_MAX;
    {
      std::unordered_map<std::uint64_t, std::uint32_t> counts;
      counts.reserve(dec.pair_seq.size());
      for (const auto& [l, r] : dec.pair_seq) {
        ++counts[(std::uint64_t{l} << 32) | r];
      }
      for (std::size_t i = 0; i < dec.pair_seq.size(); ++i) {
        const auto& [l, r] = dec.pair_seq[i];
        if (counts[(std::uint64_t{l} << 32) | r] >= 3) {
          pick = i;
          break;
        }
      }
    }

    if (pick == SIZE_MAX) {
      // Comb case: (w0 b0, b1 b2 ... b_{m-1}) with each block split as
      // (letter, tail).
      NodeId left = block_tree(bl[0]);
      if (dec.w0_end > lo) left = node({build(lo, dec.w0_end), left});
      if (m == 1) return left;
      std::vector<NodeId> rest;
      rest.reserve(m - 1);
      for (std::size_t i = 1; i < m; ++i) rest.push_back(block_tree(bl[i]));
      return node({left, comb(std::move(rest))});
    }

    // occ: all positions of the picked pair in pair_seq; pair i sits
    // between blocks i and i+1. k + 1 = number of occurrences >= 3.
    std::vector<std::size_t> occ;
    for (std::size_t i = 0; i < dec.pair_seq.size(); ++i) {
      if (dec.pair_seq[i] == dec.pair_seq[pick]) occ.push_back(i);
    }
    const std::size_t k = occ.size() - 1;
    assert(k >= 2);

    // Run j (1-based, 1..k) covers blocks occ[j-1]+1 .. occ[j]; between
    // consecutive occurrences of one boundary pair, all run products land
    // in a single group H-class.
    auto run_begin = [&](std::size_t j) { return bl[occ[j - 1] + 1].begin; };
    auto run_end = [&](std::size_t j) { return bl[occ[j]].end; };

    // pref[j] = image of runs 1..j, for 1 <= j <= k-1.
    std::vector<Elem> pref(k);
    {
      Elem acc = 0;
      bool have = false;
      std::size_t j = 1;
      for (std::size_t b = occ[0] + 1; b <= occ[k - 1]; ++b) {
        acc = have ? s_.mul(acc, bl[b].image) : bl[b].image;
        have = true;
        if (b == occ[j]) pref[j] = acc, ++j;
      }
      assert(j == k);
    }

    std::size_t xpick = 0;  // first prefix value occurring >= 3 times
    {
      std::unordered_map<Elem, std::uint32_t> counts;
      for (std::size_t j = 1; j < k; ++j) ++counts[pref[j]];
      for (std::size_t j = 1; j < k; ++j) {
        if (counts[pref[j]] >= 3) {
          xpick = j;
          break;
        }
      }
    }

    if (xpick == 0) {
      // Group comb case: (flank_left run_1 | run_2 ... run_k flank_right).
      NodeId a = build(lo, run_begin(1));
      NodeId h1 = build(run_begin(1), run_end(1));
      std::vector<NodeId> runs;
      runs.reserve(k - 1);
      for (std::size_t j = 2; j <= k; ++j) {
        runs.push_back(build(run_begin(j), run_end(j)));
      }
      NodeId z = build(run_end(k), hi);
      return node({node({a, h1}), node({comb(std::move(runs)), z})});
    }

    // Idempotent-run case: the runs between consecutive repeats of one
    // prefix value all multiply to the group identity e, so they form one
    // flat node with >= 3 (or 2) children of equal idempotent image.
    const Elem x = pref[xpick];
    std::vector<std::size_t> jocc;  // 1-based run-prefix positions of x
    for (std::size_t j = 1; j < k; ++j) {
      if (pref[j] == x) jocc.push_back(j);
    }
    const std::size_t t = jocc.size() - 1;
    assert(t >= 2);

    std::vector<NodeId> vs;
    vs.reserve(t);
    for (std::size_t i = 1; i <= t; ++i) {
      vs.push_back(build(run_begin(jocc[i - 1] + 1), run_end(jocc[i])));
    }
    const Elem ve = nodes_[vs[0]].image;
    for (NodeId v : vs) {
      if (nodes_[v].image != ve || !s_.is_idempotent(ve)) {
        throw InternalInvariantError(
            "segments between prefix repeats must share one idempotent image");
      }
    }
    NodeId vnode = node(std::move(vs));
    NodeId prefix_part = build(lo, run_end(jocc[0]));
    NodeId suffix_part = build(run_begin(jocc[t] + 1), hi);
    return node({prefix_part, node({vnode, suffix_part})});
  }
};

}  // namespace

JDecomposition j_factorize(const Homomorphism& phi, const GreenData& green,
                           std::string_view w) {
  check_word(phi, w);
  return factorize_span(phi, green, w, 0, static_cast<std::uint32_t>(w.size()));
}

FactTree build_forest(const Homomorphism& phi, const GreenData& green,
                      std::string_view w) {
  check_word(phi, w);
  return Builder(phi, green, w).run();
}

std::vector<Elem> prefix_set(const Homomorphism& phi, const GreenData& green,
                             std::span<const std::string_view> blocks) {
  if (blocks.size() < 2) {
    throw EmptySequenceError("prefix set needs >= 2 blocks");
  }
  const Semigroup& s = phi.semigroup();
  std::vector<Elem> out;
  Elem acc = 0;
  for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
    const Elem b = phi.image(blocks[j]);
    acc = j == 0 ? b : s.mul(acc, b);
    out.push_back(acc);
  }
  for (Elem x : out) {
    if (green.h_class(x) != green.h_class(out[0])) {
      throw InternalInvariantError(
          "prefix images do not lie in a single H-class");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FactTree chain(const Semigroup& s, std::vector<FactTree> parts) {
  if (parts.empty()) throw EmptySequenceError("chain of zero trees");
  if (parts.size() == 1) return std::move(parts[0]);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].node(parts[i].root).image >= s.size()) {
      throw Error("chain part carries an invalid image");
    }
    if (i == 0) continue;
    if (parts[i].word != parts[0].word) {
      throw Error("chain parts must reference the same word");
    }
    if (parts[i].node(parts[i].root).begin !=
        parts[i - 1].node(parts[i - 1].root).end) {
      throw Error("chain parts must have contiguous spans");
    }
  }

  FactTree out;
  out.word = parts[0].word;
  std::vector<NodeId> roots;
  for (const FactTree& p : parts) {
    const NodeId offset = static_cast<NodeId>(out.nodes.size());
    for (FactNode n : p.nodes) {
      for (NodeId& c : n.children) c += offset;
      out.nodes.push_back(std::move(n));
    }
    roots.push_back(p.root + offset);
  }
  NodeId acc = roots.back();
  for (std::size_t i = roots.size() - 1; i-- > 0;) {
    FactNode n;
    n.begin = out.nodes[roots[i]].begin;
    n.end = out.nodes[acc].end;
    n.image = s.mul(out.nodes[roots[i]].image, out.nodes[acc].image);
    n.children = {roots[i], acc};
    out.nodes.push_back(std::move(n));
    acc = static_cast<NodeId>(out.nodes.size() - 1);
  }
  out.root = acc;
  return out;
}

}  // namespace fforest
