#include "fforest/oracle.hpp"

#include <algorithm>
#include <limits>

#include "fforest/errors.hpp"

namespace fforest {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

/// Interval DP over [i, j) spans of w. A subtree is either a binary cut
/// or, when the interval image e is idempotent, a flat partition into
/// >= 3 consecutive pieces that each multiply to e. Only e itself can
/// carry such a partition: >= 3 equal idempotent factors multiply back to
/// e, so any other idempotent is incompatible with the interval image.
class OracleSearch {
 public:
  OracleSearch(const Homomorphism& phi, std::string_view w)
      : phi_(phi), s_(phi.semigroup()), w_(w), n_(w.size()) {
    img_.assign((n_ + 1) * (n_ + 1), 0);
    for (std::size_t i = 0; i < n_; ++i) {
      Elem acc = phi_.letter_image(w_[i]);
      at(img_, i, i + 1) = acc;
      for (std::size_t j = i + 2; j <= n_; ++j) {
        acc = s_.mul(acc, phi_.letter_image(w_[j - 1]));
        at(img_, i, j) = acc;
      }
    }
    mh_.assign((n_ + 1) * (n_ + 1), 0);
    cut_.assign((n_ + 1) * (n_ + 1), 0);
    solve();
  }

  OracleResult result() {
    OracleResult out;
    out.min_height = static_cast<int>(at(mh_, 0, n_));
    out.witness.word = std::string(w_);
    out.witness.root = emit(out.witness, 0, n_);
    return out;
  }

 private:
  const Homomorphism& phi_;
  const Semigroup& s_;
  std::string_view w_;
  std::size_t n_;
  std::vector<Elem> img_;
  std::vector<int> mh_;
  // cut_[i][j]: c > 0 encodes the binary cut position, 0 encodes the flat
  // partition (reconstructed greedily from the block table).
  std::vector<int> cut_;

  template <typename T>
  T& at(std::vector<T>& v, std::size_t i, std::size_t j) {
    return v[i * (n_ + 1) + j];
  }

  void solve() {
    for (std::size_t len = 2; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        const std::size_t j = i + len;
        int best = kInf;
        int choice = 0;
        for (std::size_t c = i + 1; c < j; ++c) {
          const int cand = 1 + std::max(at(mh_, i, c), at(mh_, c, j));
          if (cand < best) {
            best = cand;
            choice = static_cast<int>(c);
          }
        }
        const int flat = flat_partition_height(i, j);
        if (flat != kInf && 1 + flat < best) {
          best = 1 + flat;
          choice = 0;
        }
        at(mh_, i, j) = best;
        at(cut_, i, j) = choice;
      }
    }
  }

  /// Minimal possible max block height over partitions of [i, j) into
  /// >= 3 consecutive blocks with image e = img[i][j]; kInf when no such
  /// partition exists. dp[p][c] = that minimum over the prefix [i, p)
  /// using c blocks, with c capped at 3 meaning "at least 3".
  int flat_partition_height(std::size_t i, std::size_t j) {
    const Elem e = at(img_, i, j);
    if (!s_.is_idempotent(e)) return kInf;
    const std::size_t width = j - i + 1;
    std::vector<int> dp(width * 4, kInf);
    auto d = [&](std::size_t p, std::size_t c) -> int& {
      return dp[(p - i) * 4 + c];
    };
    d(i, 0) = -1;  // max over zero blocks
    for (std::size_t p = i + 1; p <= j; ++p) {
      for (std::size_t q = i; q < p; ++q) {
        if (at(img_, q, p) != e) continue;
        const int block = at(mh_, q, p);
        for (std::size_t c = 0; c < 3; ++c) {
          if (d(q, c) == kInf) continue;
          const std::size_t cc = std::min<std::size_t>(c + 1, 3);
          d(p, cc) = std::min(d(p, cc), std::max(d(q, c), block));
        }
        if (d(q, 3) != kInf) {
          d(p, 3) = std::min(d(p, 3), std::max(d(q, 3), block));
        }
      }
    }
    return d(j, 3);
  }

  /// Reconstructs the flat partition greedily: scan cut points left to
  /// right, taking each e-block whose height fits the achieved optimum
  /// and that still leaves a completable remainder. The blocks found this
  /// way are the first-found witness for the DP value.
  std::vector<std::size_t> flat_partition_cuts(std::size_t i, std::size_t j) {
    const Elem e = at(img_, i, j);
    const int target = at(mh_, i, j) - 1;
    std::vector<std::size_t> cuts{i};
    std::size_t p = i;
    std::size_t taken = 0;
    while (p < j) {
      bool advanced = false;
      for (std::size_t q = p + 1; q <= j; ++q) {
        if (at(img_, p, q) != e || at(mh_, p, q) > target) continue;
        if (!completable(q, j, e, target, std::min<std::size_t>(taken + 1, 3))) {
          continue;
        }
        cuts.push_back(q);
        p = q;
        ++taken;
        advanced = true;
        break;
      }
      if (!advanced) {
        throw InternalInvariantError("flat partition reconstruction failed");
      }
    }
    if (cuts.size() < 4) {
      throw InternalInvariantError("flat partition has fewer than 3 blocks");
    }
    return cuts;
  }

  /// Whether [p, j) still splits into e-blocks of height <= target so
  /// that the total block count reaches 3. Forward scan over cut
  /// positions, tracking the best achievable count (capped at 3).
  bool completable(std::size_t p, std::size_t j, Elem e, int target,
                   std::size_t taken) {
    if (p == j) return taken >= 3;
    std::vector<bool> reach(j - p + 1, false);
    std::vector<std::size_t> best_count(j - p + 1, 0);
    reach[0] = true;
    best_count[0] = taken;
    for (std::size_t q = p; q < j; ++q) {
      if (!reach[q - p]) continue;
      for (std::size_t r = q + 1; r <= j; ++r) {
        if (at(img_, q, r) != e || at(mh_, q, r) > target) continue;
        reach[r - p] = true;
        best_count[r - p] = std::max(
            best_count[r - p], std::min<std::size_t>(best_count[q - p] + 1, 3));
      }
    }
    return reach[j - p] && best_count[j - p] >= 3;
  }

  NodeId emit(FactTree& t, std::size_t i, std::size_t j) {
    if (j - i == 1) {
      FactNode n;
      n.begin = static_cast<std::uint32_t>(i);
      n.end = static_cast<std::uint32_t>(j);
      n.letter = w_[i];
      n.image = phi_.letter_image(w_[i]);
      t.nodes.push_back(std::move(n));
      return static_cast<NodeId>(t.nodes.size() - 1);
    }
    std::vector<std::size_t> cuts;
    const int c = at(cut_, i, j);
    if (c > 0) {
      cuts = {i, static_cast<std::size_t>(c), j};
    } else {
      cuts = flat_partition_cuts(i, j);  // starts at i, ends at j
    }
    std::vector<NodeId> kids;
    for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
      kids.push_back(emit(t, cuts[b], cuts[b + 1]));
    }
    FactNode n;
    n.begin = static_cast<std::uint32_t>(i);
    n.end = static_cast<std::uint32_t>(j);
    n.image = at(img_, i, j);
    n.children = std::move(kids);
    t.nodes.push_back(std::move(n));
    return static_cast<NodeId>(t.nodes.size() - 1);
  }
};

}  // namespace

OracleResult min_height_forest(const Homomorphism& phi, std::string_view w,
                               std::size_t max_len_guard) {
  if (w.empty()) throw EmptyWordError("cannot search the empty word");
  if (w.size() > max_len_guard) {
    throw WordTooLongError("word length " + std::to_string(w.size()) +
                           " exceeds the oracle guard " +
                           std::to_string(max_len_guard));
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!phi.has_letter(w[i])) {
      throw UnknownLetterError(i, w[i],
                               "letter '" + std::string(1, w[i]) +
                                   "' at position " + std::to_string(i) +
                                   " is not in the alphabet");
    }
  }
  if (w.size() == 1) {
    OracleResult out;
    out.min_height = 0;
    out.witness.word = std::string(w);
    FactNode n;
    n.begin = 0;
    n.end = 1;
    n.letter = w[0];
    n.image = phi.letter_image(w[0]);
    out.witness.nodes.push_back(std::move(n));
    out.witness.root = 0;
    return out;
  }
  OracleSearch search(phi, w);
  return search.result();
}

}  // namespace fforest
