#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sia {

// A subset of the states {0, ..., n-1}, stored as a packed bitset. Used for
// rows of a BooleanPattern, consequent sets and column sets.
class StateSet {
 public:
  static constexpr std::size_t kWordBits = 64;

  StateSet() = default;
  explicit StateSet(std::size_t universe)
      : universe_(universe), words_(words_for(universe), 0) {}
  StateSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static StateSet full(std::size_t universe);
  static StateSet from_words(std::size_t universe,
                             std::span<const std::uint64_t> words);

  static constexpr std::size_t words_for(std::size_t universe) noexcept {
    return (universe + kWordBits - 1) / kWordBits;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) noexcept {
    words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  }
  void reset(std::size_t i) noexcept {
    words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
  }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }
  bool intersects(StateSet const& other) const;
  bool is_subset_of(StateSet const& other) const;

  StateSet& operator|=(StateSet const& other);
  StateSet& operator&=(StateSet const& other);
  friend StateSet operator|(StateSet a, StateSet const& b) { return a |= b; }
  friend StateSet operator&(StateSet a, StateSet const& b) { return a &= b; }
  friend bool operator==(StateSet const&, StateSet const&) = default;

  // Members in increasing order.
  std::vector<std::size_t> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  // "{1,3}" with 1-based members, the notation used in CLI output.
  std::string to_string() const;

 private:
  void check_same_universe(StateSet const& other) const;

  std::size_t                universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sia
