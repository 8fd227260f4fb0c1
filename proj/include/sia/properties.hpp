#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "sia/pattern.hpp"

namespace sia {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

// Seeded source of random patterns for property sweeps.
class PatternSampler {
 public:
  explicit PatternSampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  // Each entry set with a density drawn per sample from [0.05, 0.7]; empty
  // rows then receive one random entry.
  BooleanPattern row_allowable(std::size_t n);
  BooleanPattern row_allowable(std::size_t n, double density);
  BooleanPattern automaton(std::size_t n);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct PropertyReport {
  std::string                name;
  std::size_t                n          = 0;
  std::uint64_t              checked    = 0;
  std::uint64_t              violations = 0;
  std::optional<std::string> counterexample;

  bool ok() const noexcept { return violations == 0 && checked > 0; }
};

// positive-column => scrambling => Sarymsakov => SIA on random row-allowable
// patterns.
PropertyReport check_inclusion_chain(std::size_t   n,
                                     std::uint64_t samples,
                                     std::uint64_t seed = kDefaultSeed);

// The product of two scrambling patterns is scrambling; `samples` counts
// checked pairs of scrambling patterns.
PropertyReport check_scrambling_closure(std::size_t   n,
                                        std::uint64_t samples,
                                        std::uint64_t seed = kDefaultSeed);

// For random SIA patterns with k eventually positive columns, the powers
// k^2 - 4k + 3 + n and n^2 - 3n + 3 have a positive column. `samples` counts
// SIA patterns checked.
PropertyReport check_power_bounds(std::size_t   n,
                                  std::uint64_t samples,
                                  std::uint64_t seed = kDefaultSeed);

// For random primitive patterns and every k in 1..n, the k-th local
// exponent is at most n^2 - 3n + k + 2. `samples` counts primitive patterns.
PropertyReport check_local_exponent_bound(std::size_t   n,
                                          std::uint64_t samples,
                                          std::uint64_t seed = kDefaultSeed);

}  // namespace sia
