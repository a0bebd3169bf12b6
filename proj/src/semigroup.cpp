#include "fforest/semigroup.hpp"

#include <algorithm>
#include <map>

#include "fforest/errors.hpp"

namespace fforest {

Semigroup::Semigroup(std::string name, std::vector<std::string> elements,
                     const std::vector<std::vector<Elem>>& table)
    : name_(std::move(name)), elements_(std::move(elements)) {
  size_ = elements_.size();
  if (size_ == 0) {
    throw ZeroDimensionError("semigroup must have at least one element");
  }
  if (table.size() != size_) {
    throw DimensionMismatchError("table has " + std::to_string(table.size()) +
                                 " rows, expected " + std::to_string(size_));
  }
  table_.resize(size_ * size_);
  for (std::size_t i = 0; i < size_; ++i) {
    if (table[i].size() != size_) {
      throw DimensionMismatchError(
          "table row " + std::to_string(i) + " has " +
          std::to_string(table[i].size()) + " entries, expected " +
          std::to_string(size_));
    }
    for (std::size_t j = 0; j < size_; ++j) {
      if (table[i][j] >= size_) {
        throw IndexOutOfRangeError(
            i, j,
            "table[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                std::to_string(table[i][j]) + " is not an element index");
      }
      table_[i * size_ + j] = table[i][j];
    }
  }
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      const Elem ij = mul(static_cast<Elem>(i), static_cast<Elem>(j));
      for (std::size_t k = 0; k < size_; ++k) {
        const Elem jk = mul(static_cast<Elem>(j), static_cast<Elem>(k));
        if (mul(ij, static_cast<Elem>(k)) != mul(static_cast<Elem>(i), jk)) {
          throw NonAssociativeError(
              i, j, k,
              "(" + elements_[i] + "*" + elements_[j] + ")*" + elements_[k] +
                  " != " + elements_[i] + "*(" + elements_[j] + "*" +
                  elements_[k] + ")");
        }
      }
    }
  }
  for (std::size_t u = 0; u < size_; ++u) {
    bool ok = true;
    for (std::size_t i = 0; i < size_ && ok; ++i) {
      ok = mul(static_cast<Elem>(u), static_cast<Elem>(i)) == i &&
           mul(static_cast<Elem>(i), static_cast<Elem>(u)) == i;
    }
    if (ok) {
      identity_ = static_cast<Elem>(u);
      break;
    }
  }
}

std::optional<Elem> Semigroup::find_element(std::string_view name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == name) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

Elem Semigroup::product(std::span<const Elem> xs) const {
  if (xs.empty()) {
    throw EmptySequenceError("product of an empty sequence is undefined");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] >= size_) {
      throw IndexOutOfRangeError(i, 0,
                                 "sequence entry " + std::to_string(i) +
                                     " = " + std::to_string(xs[i]) +
                                     " is not an element index");
    }
  }
  Elem acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = mul(acc, xs[i]);
  return acc;
}

std::vector<Elem> Semigroup::idempotents() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < size_; ++x) {
    if (is_idempotent(x)) out.push_back(x);
  }
  return out;
}

Semigroup rectangular_band(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw ZeroDimensionError("rectangular band needs rows >= 1 and cols >= 1");
  }
  const std::size_t n = rows * cols;
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // (i,j)(k,l) = (i,l)
      table[a][b] = static_cast<Elem>((a / cols) * cols + b % cols);
    }
  }
  return Semigroup("rect_" + std::to_string(rows) + "_" + std::to_string(cols),
                   std::move(names), table);
}

Semigroup cyclic_group(std::size_t order) {
  if (order == 0) throw ZeroOrderError("cyclic group needs order >= 1");
  std::vector<std::string> names;
  names.reserve(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (i == 0) {
      names.emplace_back("e");
    } else if (i == 1) {
      names.emplace_back("g");
    } else {
      names.push_back("g" + std::to_string(i));
    }
  }
  std::vector<std::vector<Elem>> table(order, std::vector<Elem>(order));
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      table[i][j] = static_cast<Elem>((i + j) % order);
    }
  }
  return Semigroup("z" + std::to_string(order), std::move(names), table);
}

TransformationClosure transformation_closure(
    std::size_t domain_size,
    const std::vector<std::vector<std::uint32_t>>& generators) {
  if (generators.empty()) {
    throw EmptyGeneratorSetError("transformation closure needs >= 1 generator");
  }
  if (domain_size == 0) {
    throw ZeroDimensionError("transformation domain must be nonempty");
  }
  using Fn = std::vector<std::uint32_t>;
  for (const Fn& g : generators) {
    if (g.size() != domain_size) {
      throw DimensionMismatchError("generator is not a function on " +
                                   std::to_string(domain_size) + " points");
    }
    for (std::uint32_t v : g) {
      if (v >= domain_size) {
        throw IndexOutOfRangeError(0, 0, "generator value " +
                                             std::to_string(v) +
                                             " outside the domain");
      }
    }
  }

  // f*g applies f first, then g.
  auto compose = [domain_size](const Fn& f, const Fn& g) {
    Fn h(domain_size);
    for (std::size_t x = 0; x < domain_size; ++x) h[x] = g[f[x]];
    return h;
  };

  std::vector<Fn> elems;
  std::map<Fn, Elem> index_of;
  std::vector<Elem> gen_idx;
  for (const Fn& g : generators) {
    auto [it, inserted] = index_of.try_emplace(g, static_cast<Elem>(elems.size()));
    if (inserted) elems.push_back(g);
    gen_idx.push_back(it->second);
  }

  // Breadth-first waves over all ordered pairs, appending new functions
  // in scan order so the element numbering is reproducible.
  std::size_t settled = 0;
  while (settled < elems.size()) {
    const std::size_t frontier = elems.size();
    settled = frontier;
    for (std::size_t a = 0; a < frontier; ++a) {
      for (std::size_t b = 0; b < frontier; ++b) {
        Fn h = compose(elems[a], elems[b]);
        auto [it, inserted] =
            index_of.try_emplace(std::move(h), static_cast<Elem>(elems.size()));
        if (inserted) elems.push_back(it->first);
      }
    }
  }

  const std::size_t n = elems.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = index_of.at(compose(elems[a], elems[b]));
    }
  }
  Semigroup sg("tf" + std::to_string(domain_size), std::move(names), table);
  return TransformationClosure{std::move(sg), std::move(gen_idx)};
}

Homomorphism::Homomorphism(Semigroup semigroup,
                           const std::map<char, Elem>& letter_images)
    : semigroup_(std::move(semigroup)) {
  images_.fill(-1);
  if (letter_images.empty()) {
    throw EmptyGeneratorSetError("homomorphism needs a nonempty alphabet");
  }
  for (const auto& [letter, elem] : letter_images) {
    if (elem >= semigroup_.size()) {
      throw IndexOutOfRangeError(0, 0, "letter '" + std::string(1, letter) +
                                           "' maps to invalid element index " +
                                           std::to_string(elem));
    }
    alphabet_.push_back(letter);
    images_[static_cast<unsigned char>(letter)] = static_cast<std::int32_t>(elem);
  }
}

Elem Homomorphism::image(std::string_view word) const {
  if (word.empty()) {
    throw EmptyWordError("the empty word has no image");
  }
  Elem acc = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (!has_letter(c)) {
      throw UnknownLetterError(i, c,
                               "letter '" + std::string(1, c) +
                                   "' at position " + std::to_string(i) +
                                   " is not in the alphabet");
    }
    acc = i == 0 ? letter_image(c) : semigroup_.mul(acc, letter_image(c));
  }
  return acc;
}

}  // namespace fforest
