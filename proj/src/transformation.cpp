#include "sia/transformation.hpp"

#include <string>

#include "sia/error.hpp"

namespace sia {

Transformation Transformation::identity(std::size_t n) {
  if (n == 0 || n > kMaxDegree) {
    throw InvalidArgument("transformation degree must be in 1.."
                          + std::to_string(kMaxDegree));
  }
  Transformation t;
  t.n_ = static_cast<std::uint8_t>(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.img_[i] = static_cast<std::uint8_t>(i);
  }
  return t;
}

Transformation
Transformation::from_images(std::span<const std::uint8_t> images) {
  if (images.empty() || images.size() > kMaxDegree) {
    throw InvalidArgument("transformation degree must be in 1.."
                          + std::to_string(kMaxDegree));
  }
  Transformation t;
  t.n_ = static_cast<std::uint8_t>(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size()) {
      throw InvalidArgument("image out of range");
    }
    t.img_[i] = images[i];
  }
  return t;
}

Transformation Transformation::from_pattern(BooleanPattern const& p) {
  if (p.dim() == 0 || p.dim() > kMaxDegree || !is_automaton(p)) {
    throw InvalidArgument(
        "only automaton patterns of dimension 1..32 convert to maps");
  }
  Transformation t;
  t.n_ = static_cast<std::uint8_t>(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    t.img_[i] = static_cast<std::uint8_t>(std::countr_zero(p.row_words(i)[0]));
  }
  return t;
}

bool Transformation::is_constant() const noexcept {
  for (std::size_t i = 1; i < n_; ++i) {
    if (img_[i] != img_[0]) {
      return false;
    }
  }
  return true;
}

BooleanPattern Transformation::to_pattern() const {
  return BooleanPattern::from_predicate(
      n_, [&](std::size_t i, std::size_t j) { return img_[i] == j; });
}

bool Transformation::is_sia() const noexcept {
  // Walk n steps from state 0 to land on a cycle; SIA iff that cycle is a
  // fixed point reached by every state within n-1 steps.
  std::uint8_t x = 0;
  for (std::size_t k = 0; k < n_; ++k) {
    x = img_[x];
  }
  if (img_[x] != x) {
    return false;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint8_t y = static_cast<std::uint8_t>(i);
    for (std::size_t k = 0; k + 1 < n_ && y != x; ++k) {
      y = img_[y];
    }
    if (y != x) {
      return false;
    }
  }
  return true;
}

std::optional<std::size_t> Transformation::smallest_constant_power() const noexcept {
  if (!is_sia()) {
    return std::nullopt;
  }
  Transformation q = *this;
  for (std::size_t t = 1;; ++t) {
    if (q.is_constant()) {
      return t;
    }
    q = q * *this;
  }
}

}  // namespace sia
