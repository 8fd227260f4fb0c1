#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "sia/pattern.hpp"

namespace sia {

// A map of {0..n-1} into itself, the compact form of an automaton pattern.
// Composition follows the matrix product of the corresponding patterns:
// (a * b)[i] == b[a[i]], i.e. a is applied first.
class Transformation {
 public:
  static constexpr std::size_t kMaxDegree = 32;

  Transformation() = default;
  static Transformation identity(std::size_t n);
  static Transformation from_images(std::span<const std::uint8_t> images);
  // Throws InvalidArgument unless p is an automaton pattern of dimension at
  // most kMaxDegree.
  static Transformation from_pattern(BooleanPattern const& p);

  std::size_t  degree() const noexcept { return n_; }
  std::uint8_t operator[](std::size_t i) const noexcept { return img_[i]; }
  std::span<const std::uint8_t> images() const noexcept {
    return {img_.data(), n_};
  }

  bool           is_constant() const noexcept;
  BooleanPattern to_pattern() const;

  // SIA for an automaton pattern: some power is constant. Equivalent to the
  // (n-1)st power being constant.
  bool is_sia() const noexcept;
  // Smallest t >= 1 with this^t constant.
  std::optional<std::size_t> smallest_constant_power() const noexcept;

  friend Transformation operator*(Transformation const& a,
                                  Transformation const& b) noexcept {
    Transformation out;
    out.n_ = a.n_;
    for (std::size_t i = 0; i < a.n_; ++i) {
      out.img_[i] = b.img_[a.img_[i]];
    }
    return out;
  }

  friend bool operator==(Transformation const& a,
                         Transformation const& b) noexcept {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }

 private:
  std::uint8_t                           n_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

}  // namespace sia

template <>
struct std::hash<sia::Transformation> {
  std::size_t operator()(sia::Transformation const& t) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint8_t x : t.images()) {
      h = (h ^ x) * 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};
