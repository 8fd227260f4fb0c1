#include "sia/state_set.hpp"

#include <algorithm>

#include "sia/error.hpp"

namespace sia {

StateSet::StateSet(std::size_t universe,
                   std::initializer_list<std::size_t> members)
    : StateSet(universe) {
  for (std::size_t m : members) {
    if (m >= universe) {
      throw InvalidArgument("state " + std::to_string(m)
                            + " outside universe of size "
                            + std::to_string(universe));
    }
    set(m);
  }
}

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    s.words_[w] = ~std::uint64_t{0};
  }
  if (std::size_t rem = universe % kWordBits; rem != 0) {
    s.words_.back() = (std::uint64_t{1} << rem) - 1;
  }
  return s;
}

StateSet StateSet::from_words(std::size_t universe,
                              std::span<const std::uint64_t> words) {
  StateSet s(universe);
  std::copy(words.begin(), words.end(), s.words_.begin());
  return s;
}

std::size_t StateSet::count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) {
    c += static_cast<std::size_t>(std::popcount(w));
  }
  return c;
}

bool StateSet::empty() const noexcept {
  return std::all_of(
      words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool StateSet::intersects(StateSet const& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) {
      return true;
    }
  }
  return false;
}

bool StateSet::is_subset_of(StateSet const& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) {
      return false;
    }
  }
  return true;
}

StateSet& StateSet::operator|=(StateSet const& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] |= other.words_[w];
  }
  return *this;
}

StateSet& StateSet::operator&=(StateSet const& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
  }
  return *this;
}

std::vector<std::size_t> StateSet::members() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string StateSet::to_string() const {
  std::string out = "{";
  bool        first = true;
  for_each([&](std::size_t i) {
    if (!first) {
      out += ',';
    }
    first = false;
    out += std::to_string(i + 1);
  });
  out += '}';
  return out;
}

void StateSet::check_same_universe(StateSet const& other) const {
  if (universe_ != other.universe_) {
    throw DimensionMismatch("state sets over universes of size "
                            + std::to_string(universe_) + " and "
                            + std::to_string(other.universe_));
  }
}

}  // namespace sia
