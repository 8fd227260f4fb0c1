#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sia/matrix_set.hpp"

namespace sia {

// Lyndon words of length 1..max_length over {0..alphabet-1}, produced in
// lexicographic order by Duval's successor rule.
//
//   LyndonWords gen(2, 4);
//   while (gen.next()) { use(gen.word()); }
class LyndonWords {
 public:
  LyndonWords(std::size_t alphabet, std::size_t max_length);

  // Advances to the next word; false once the stream is exhausted.
  bool        next();
  Word const& word() const noexcept { return current_; }

 private:
  std::size_t alphabet_;
  std::size_t max_length_;
  bool        started_ = false;
  Word        current_;
};

std::vector<Word> lyndon_words(std::size_t alphabet, std::size_t max_length);

// Number of Lyndon words of exactly the given length (Moebius necklace
// formula). Saturates at UINT64_MAX.
std::uint64_t lyndon_word_count(std::size_t alphabet, std::size_t length);

// Calls visit(word, first_changed) for each Lyndon word of exactly `length`
// in lexicographic order. `first_changed` is the smallest position that
// differs from the previously visited word (0 for the first), which lets the
// caller reuse prefix products. Stops early when visit returns true; the
// return value tells whether that happened.
template <typename Visit>
bool for_each_lyndon_word_of_length(std::size_t alphabet,
                                    std::size_t length,
                                    Visit&&     visit) {
  if (alphabet == 0 || length == 0) {
    return false;
  }
  // Fredricksen-Kessler-Maiorana: walk the prenecklaces of this length in
  // order; the ones whose period equals the length are Lyndon.
  constexpr std::size_t       kInline = 64;
  std::array<Symbol, kInline> small{};
  std::vector<Symbol>         large(length > kInline ? length : 0, 0);
  std::span<Symbol> const     w = length > kInline
                                      ? std::span<Symbol>(large)
                                      : std::span<Symbol>(small.data(), length);
  std::size_t         period        = 1;
  std::size_t         changed       = 0;
  std::size_t         since_visited = 0;
  Symbol const        top           = static_cast<Symbol>(alphabet - 1);
  while (true) {
    since_visited = std::min(since_visited, changed);
    if (period == length) {
      if (visit(std::span<const Symbol>(w.data(), length), since_visited)) {
        return true;
      }
      since_visited = length;
    }
    std::size_t i = length;
    while (i > 0 && w[i - 1] == top) {
      --i;
    }
    if (i == 0) {
      return false;
    }
    --i;
    ++w[i];
    for (std::size_t j = i + 1; j < length; ++j) {
      w[j] = w[j - i - 1];
    }
    period  = i + 1;
    changed = i;
  }
}

// True iff w is strictly smaller than each of its proper rotations.
bool is_lyndon(Word const& w);

}  // namespace sia
