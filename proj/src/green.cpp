#include "fforest/green.hpp"

#include <bit>

#include "fforest/errors.hpp"

namespace fforest {

namespace detail {

std::size_t BitMatrix::row_popcount(std::size_t r) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < stride_; ++w) {
    total += static_cast<std::size_t>(std::popcount(bits_[r * stride_ + w]));
  }
  return total;
}

}  // namespace detail

namespace {

/// Mutual-reachability classes of a preorder, numbered in ascending order
/// of minimal member.
std::size_t classes_of(const detail::BitMatrix& leq,
                       std::vector<std::uint32_t>& out) {
  const std::size_t n = leq.size();
  out.assign(n, UINT32_MAX);
  std::uint32_t next_id = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (out[x] != UINT32_MAX) continue;
    out[x] = next_id;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (out[y] == UINT32_MAX && leq.get(x, y) && leq.get(y, x)) {
        out[y] = next_id;
      }
    }
    ++next_id;
  }
  return next_id;
}

}  // namespace

GreenData compute_green(const Semigroup& s) {
  const std::size_t n = s.size();
  GreenData g;
  g.leq_r_ = detail::BitMatrix(n);
  g.leq_l_ = detail::BitMatrix(n);
  g.leq_j_ = detail::BitMatrix(n);

  // x <=_R y iff x is in {y} union yS; right ideals are single-step
  // closed, so no transitive closure is needed. The {y} part plays the
  // role of the adjoined identity. Same on the left.
  for (std::size_t y = 0; y < n; ++y) {
    g.leq_r_.set(y, y);
    g.leq_l_.set(y, y);
    g.leq_j_.set(y, y);
    for (Elem t = 0; t < n; ++t) {
      g.leq_r_.set(s.mul(static_cast<Elem>(y), t), y);
      g.leq_l_.set(s.mul(t, static_cast<Elem>(y)), y);
    }
  }

  // x <=_J y iff x <=_L u for some u <=_R y: every two-sided factor
  // s*y*t splits as a left multiple of the right multiple u = y*t. Row x
  // of <=_J is the union of the <=_R upper rows over the <=_L upper row
  // of x.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t u = 0; u < n; ++u) {
      if (g.leq_l_.get(x, u)) g.leq_j_.or_row_from(g.leq_r_, x, u);
    }
  }

  g.num_r_ = classes_of(g.leq_r_, g.r_class_);
  g.num_l_ = classes_of(g.leq_l_, g.l_class_);
  g.num_j_ = classes_of(g.leq_j_, g.j_class_);

  // H = R meet L; ids again by minimal member.
  g.h_class_.assign(n, UINT32_MAX);
  std::uint32_t next_h = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (g.h_class_[x] != UINT32_MAX) continue;
    g.h_class_[x] = next_h;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (g.h_class_[y] == UINT32_MAX && g.r_class_[y] == g.r_class_[x] &&
          g.l_class_[y] == g.l_class_[x]) {
        g.h_class_[y] = next_h;
      }
    }
    ++next_h;
  }
  g.num_h_ = next_h;

  g.j_upper_size_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    g.j_upper_size_[x] = g.leq_j_.row_popcount(x);
  }

  std::vector<std::uint32_t> h_size(g.num_h_, 0);
  for (std::size_t x = 0; x < n; ++x) ++h_size[g.h_class_[x]];

  g.j_class_h_size_.assign(g.num_j_, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint32_t j = g.j_class_[x];
    if (g.j_class_h_size_[j] == 0) {
      g.j_class_h_size_[j] = h_size[g.h_class_[x]];
    }
  }

  g.group_h_.assign(g.num_h_, false);
  for (Elem x = 0; x < n; ++x) {
    if (s.is_idempotent(x)) g.group_h_[g.h_class_[x]] = true;
  }

  return g;
}

}  // namespace fforest
