#pragma once

#include <cstdint>
#include <vector>

#include "fforest/semigroup.hpp"

namespace fforest {

namespace detail {

/// Square bit matrix with 64-bit word rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    bits_[r * stride_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  /// row[dst] |= other.row[src]
  void or_row_from(const BitMatrix& other, std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < stride_; ++w) {
      bits_[dst * stride_ + w] |= other.bits_[src * stride_ + w];
    }
  }
  std::size_t row_popcount(std::size_t r) const;
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace detail

/// Green's relations of a finite semigroup: the R/L/J/H partitions, the
/// three preorders as materialized bit matrices (O(1) queries), the
/// per-J-class H-class cardinality, and which H-classes are groups.
/// Class ids are assigned in ascending order of the minimal member
/// element index. Immutable after compute_green; safe for concurrent
/// reads.
class GreenData {
 public:
  std::size_t size() const { return r_class_.size(); }

  std::uint32_t r_class(Elem x) const { return r_class_[x]; }
  std::uint32_t l_class(Elem x) const { return l_class_[x]; }
  std::uint32_t j_class(Elem x) const { return j_class_[x]; }
  std::uint32_t h_class(Elem x) const { return h_class_[x]; }

  std::size_t num_r_classes() const { return num_r_; }
  std::size_t num_l_classes() const { return num_l_; }
  std::size_t num_j_classes() const { return num_j_; }
  std::size_t num_h_classes() const { return num_h_; }

  /// x <=_R y, i.e. x lies in the right ideal generated by y.
  bool leq_r(Elem x, Elem y) const { return leq_r_.get(x, y); }
  bool leq_l(Elem x, Elem y) const { return leq_l_.get(x, y); }
  bool leq_j(Elem x, Elem y) const { return leq_j_.get(x, y); }

  /// |{y in S : x <=_J y}|.
  std::size_t j_upper_set_size(Elem x) const { return j_upper_size_[x]; }

  /// Number of elements in each H-class inside the given J-class (they
  /// all have the same cardinality).
  std::uint32_t j_class_h_size(std::uint32_t j_id) const {
    return j_class_h_size_[j_id];
  }

  /// True iff the H-class contains an idempotent (and is then a group
  /// under the semigroup operation).
  bool is_group_h_class(std::uint32_t h_id) const { return group_h_[h_id]; }

  friend GreenData compute_green(const Semigroup& s);

 private:
  std::vector<std::uint32_t> r_class_, l_class_, j_class_, h_class_;
  std::size_t num_r_ = 0, num_l_ = 0, num_j_ = 0, num_h_ = 0;
  detail::BitMatrix leq_r_, leq_l_, leq_j_;
  std::vector<std::size_t> j_upper_size_;
  std::vector<std::uint32_t> j_class_h_size_;
  std::vector<bool> group_h_;
};

/// Computes all Green structure of a valid semigroup. An identity is
/// adjoined internally when S has none; it never shows up in the output.
GreenData compute_green(const Semigroup& s);

}  // namespace fforest
