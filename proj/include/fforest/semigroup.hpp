#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fforest {

/// Index of an element within a Semigroup's element list.
using Elem = std::uint32_t;

/// A finite semigroup given by its multiplication table. The constructor
/// validates totality and associativity and detects a two-sided identity
/// if one exists. Instances are immutable; all operations are const and
/// safe to use from concurrent threads.
class Semigroup {
 public:
  /// Throws DimensionMismatchError, IndexOutOfRangeError (with the bad
  /// cell) or NonAssociativeError (with a witness triple).
  Semigroup(std::string name, std::vector<std::string> elements,
            const std::vector<std::vector<Elem>>& table);

  std::size_t size() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  const std::string& element_name(Elem x) const { return elements_[x]; }
  std::span<const std::string> element_names() const { return elements_; }
  std::optional<Elem> find_element(std::string_view name) const;

  /// Two-sided identity, if the semigroup has one.
  std::optional<Elem> identity() const { return identity_; }

  Elem mul(Elem a, Elem b) const { return table_[a * size_ + b]; }

  /// Left-to-right fold of a nonempty index sequence.
  /// Throws EmptySequenceError, IndexOutOfRangeError.
  Elem product(std::span<const Elem> xs) const;

  bool is_idempotent(Elem x) const { return mul(x, x) == x; }

  /// All fixed points of squaring, in ascending index order.
  std::vector<Elem> idempotents() const;

  bool operator==(const Semigroup&) const = default;

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<Elem> table_;  // row-major |S| x |S|
  std::size_t size_ = 0;
  std::optional<Elem> identity_;
};

/// Elements are the pairs (i, j) with 0 <= i < rows, 0 <= j < cols and
/// (i, j)(k, l) = (i, l). Every element is idempotent. Throws
/// ZeroDimensionError.
Semigroup rectangular_band(std::size_t rows, std::size_t cols);

/// Z_n under addition, elements named "e", "g", "g2", ... with identity
/// "e". Throws ZeroOrderError.
Semigroup cyclic_group(std::size_t order);

struct TransformationClosure {
  Semigroup semigroup;
  std::vector<Elem> generator_elements;  // one entry per input generator
};

/// Smallest composition-closed set of functions [n] -> [n] containing the
/// generators. The product f*g applies f first and then g, so that
/// reading a word left to right composes its letters left to right.
/// Elements are named "t0", "t1", ... in discovery order: generators first
/// (duplicates collapsed), then products in breadth-first waves, each wave
/// scanned in (left index, right index) order. Throws
/// EmptyGeneratorSetError, DimensionMismatchError.
TransformationClosure transformation_closure(
    std::size_t domain_size,
    const std::vector<std::vector<std::uint32_t>>& generators);

/// A homomorphism from nonempty words over a finite alphabet into a
/// semigroup, determined by the images of single letters. Immutable.
class Homomorphism {
 public:
  /// Letter images must be valid element indices; the alphabet is the
  /// sorted list of map keys.
  Homomorphism(Semigroup semigroup, const std::map<char, Elem>& letter_images);

  const Semigroup& semigroup() const { return semigroup_; }
  std::span<const char> alphabet() const { return alphabet_; }

  bool has_letter(char c) const {
    return images_[static_cast<unsigned char>(c)] >= 0;
  }

  /// Image of a single letter; the letter must be in the alphabet.
  Elem letter_image(char c) const {
    return static_cast<Elem>(images_[static_cast<unsigned char>(c)]);
  }

  /// Image of a nonempty word: the left-to-right fold of letter images.
  /// Throws EmptyWordError, UnknownLetterError (with the offending
  /// position).
  Elem image(std::string_view word) const;

  bool operator==(const Homomorphism&) const = default;

 private:
  Semigroup semigroup_;
  std::vector<char> alphabet_;
  std::array<std::int32_t, 256> images_;  // -1 = not a letter
};

}  // namespace fforest
