#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sia/pattern.hpp"

namespace sia {

using Symbol = std::uint32_t;

// A finite sequence of symbols of a MatrixSet alphabet; symbol i names the
// i-th pattern of the set. Ordering is lexicographic with proper prefixes
// first, which is the order Lyndon words are defined against.
struct Word {
  std::vector<Symbol> symbols;

  Word() = default;
  explicit Word(std::vector<Symbol> s) : symbols(std::move(s)) {}
  Word(std::initializer_list<Symbol> s) : symbols(s) {}

  std::size_t size() const noexcept { return symbols.size(); }
  bool        empty() const noexcept { return symbols.empty(); }
  Symbol      operator[](std::size_t i) const { return symbols[i]; }

  // Rotation by k: symbols[k..] followed by symbols[..k].
  Word rotated(std::size_t k) const;

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;
};

// Ordered, non-empty list of same-dimension patterns with one label per
// pattern. The list order is the alphabet order A_1 < A_2 < ... < A_k.
class MatrixSet {
 public:
  explicit MatrixSet(std::vector<BooleanPattern> patterns,
                     std::vector<std::string>    labels = {});

  std::size_t dim() const noexcept { return patterns_.front().dim(); }
  std::size_t size() const noexcept { return patterns_.size(); }

  BooleanPattern const& operator[](std::size_t i) const {
    return patterns_[i];
  }
  std::vector<BooleanPattern> const& patterns() const noexcept {
    return patterns_;
  }
  std::vector<std::string> const& labels() const noexcept { return labels_; }

  bool all_automata() const;
  bool all_row_allowable() const;

  // Bitwise OR of all members.
  BooleanPattern union_pattern() const;

  // A_{w_1} * A_{w_2} * ... * A_{w_l}. Requires a non-empty word.
  BooleanPattern product(Word const& w) const;

  // "AAB" when every label is a single character, "X1 ~X2" otherwise.
  std::string spell(Word const& w) const;
  // Inverse of spell(); throws InvalidArgument on unknown labels.
  Word parse_word(std::string const& text) const;

  friend bool operator==(MatrixSet const&, MatrixSet const&) = default;

 private:
  std::vector<BooleanPattern> patterns_;
  std::vector<std::string>    labels_;
};

// "A", "B", ..., "Z", then "A26", "A27", ...
std::string default_label(std::size_t i);

}  // namespace sia
