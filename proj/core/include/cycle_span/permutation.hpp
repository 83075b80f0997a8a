#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cycle_span {

// Elements of the ground set [n] = {1, ..., n}. Every public interface is
// 1-based.
using Element = std::uint32_t;

// A bijection on [n], stored in one-line notation.
class Permutation {
 public:
  // images[j - 1] is the image of j. Throws std::invalid_argument unless the
  // images form a bijection on [n] with n >= 1.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }

  // Image of j, 1 <= j <= size(). Unchecked.
  Element operator()(Element j) const noexcept { return images_[j - 1]; }

  std::span<const Element> images() const noexcept { return images_; }

  // Lexicographic on one-line notation.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

using Cycle = std::vector<Element>;

// Canonical cycle structure: each cycle starts with its smallest element and
// cycles appear in strictly decreasing order of their first elements. Under
// this convention the concatenation of the cycles determines the permutation.
struct CycleDecomposition {
  std::vector<Cycle> cycles;

  // Cycles written back to back with the parentheses dropped.
  std::vector<Element> concatenated() const;

  // Inverse of concatenated(): a new cycle opens at every element smaller
  // than everything before it. Any arrangement of distinct elements parses.
  static CycleDecomposition parse_concatenated(std::span<const Element> sequence);

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

// A subset of [n].
class ElementSet {
 public:
  // Throws std::invalid_argument if a member lies outside [n]. Duplicates
  // collapse.
  ElementSet(std::size_t n, std::span<const Element> members);

  // {1, ..., m}. Throws std::out_of_range unless m <= n.
  static ElementSet prefix(std::size_t n, std::size_t m);

  std::size_t ground_size() const noexcept { return mask_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool contains(Element j) const noexcept {
    return j >= 1 && j <= mask_.size() && mask_[j - 1];
  }

  // Members in increasing order.
  std::vector<Element> members() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  explicit ElementSet(std::size_t n) : mask_(n, false) {}

  std::vector<bool> mask_;
  std::size_t count_ = 0;
};

// (l_1, ..., l_m): l_j is the number of steps j takes to re-enter [m].
using DistanceVector = std::vector<std::size_t>;

CycleDecomposition cycle_decomposition(const Permutation& p);

// Throws std::invalid_argument unless c is canonical and partitions [n] for
// n = total number of elements.
Permutation from_cycles(const CycleDecomposition& c);

// The permutation of [k] obtained by deleting every element above k from the
// cycle structure of p: j maps to the first element of [k] on its forward
// orbit. Throws std::out_of_range unless 1 <= k <= p.size().
Permutation restrict_to(const Permutation& p, std::size_t k);

// Union of all cycles of p that meet `marked`. Throws std::invalid_argument
// if the ground sizes differ.
ElementSet spanned_cycles(const Permutation& p, const ElementSet& marked);

// Combined length of the cycles meeting [m]. Throws std::out_of_range unless
// 1 <= m <= p.size().
std::size_t span_length(const Permutation& p, std::size_t m);

DistanceVector following_distances(const Permutation& p, std::size_t m);

// Elements of [m+1, n] in the order they appear in the canonical
// representation.
std::vector<Element> tail_sequence(const Permutation& p, std::size_t m);

std::size_t count_fixed_points(const Permutation& p);

// Text forms. One-line: "2 3 1". Cycle text: "(8)(3 10 11 6 5 7)(2 4)(1 9)".
std::string to_one_line(const Permutation& p);
std::string to_cycle_text(const Permutation& p);
std::string to_cycle_text(const CycleDecomposition& c);

// Both parsers throw std::invalid_argument on malformed input. Cycle text
// must be canonical, so that printing a parsed value reproduces the input.
Permutation parse_one_line(std::string_view text);
Permutation parse_cycle_text(std::string_view text);

}  // namespace cycle_span
