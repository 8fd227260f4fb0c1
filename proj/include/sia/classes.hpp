#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "sia/pattern.hpp"

namespace sia {

enum class MatrixClass { positive_column, scrambling, sarymsakov, sia };

std::string_view short_name(MatrixClass c);  // "pc", "scr", "sar", "sia"
std::optional<MatrixClass> parse_matrix_class(std::string_view name);

// Largest dimension accepted by is_sarymsakov unless the caller raises it.
inline constexpr std::size_t kDefaultSarymsakovLimit = 16;

bool is_positive_column(BooleanPattern const& p);

// Every pair of rows shares a nonzero column.
bool is_scrambling(BooleanPattern const& p);

// For all disjoint nonempty S, S': F(S) and F(S') intersect, or
// |F(S) u F(S')| > |S u S'|. Exhaustive over the 3^n subset pairs with the
// 2^n consequent sets tabulated up front; throws LimitExceeded when
// p.dim() > limit.
bool is_sarymsakov(BooleanPattern const& p,
                   std::size_t           limit = kDefaultSarymsakovLimit);

struct SiaCheck {
  bool is_sia = false;
  // Smallest t with p^t positive-column, when is_sia.
  std::optional<std::size_t> power;

  explicit operator bool() const noexcept { return is_sia; }
};

// max(1, n^2 - 3n + 3): every n x n SIA pattern has a positive-column power
// no later than this.
std::size_t sia_power_cap(std::size_t n);

// Walks p, p^2, ... until a positive column shows up, a power repeats, or
// the power passes sia_power_cap(n). Throws InvalidArgument for patterns
// that are not row-allowable.
SiaCheck is_sia(BooleanPattern const& p);

// Columns positive in every sufficiently large power. Requires a
// row-allowable pattern.
StateSet eventually_positive_columns(BooleanPattern const& p);

std::optional<std::size_t> smallest_positive_column_power(BooleanPattern const& p);

// Smallest t such that p^t has at least k rows with full support, or empty
// when p is not primitive. k ranges over 1..n.
std::optional<std::size_t> local_exponent(BooleanPattern const& p,
                                          std::size_t           k);

// Classical primitivity cutoff (n-1)^2 + 1.
std::size_t wielandt_bound(std::size_t n);

struct ClassReport {
  bool                       is_positive_column = false;
  bool                       is_scrambling      = false;
  bool                       is_sarymsakov      = false;
  bool                       is_sia             = false;
  std::optional<std::size_t> sia_witness_power;
};

ClassReport classify(BooleanPattern const& p,
                     std::size_t sarymsakov_limit = kDefaultSarymsakovLimit);

bool in_class(BooleanPattern const& p,
              MatrixClass           c,
              std::size_t sarymsakov_limit = kDefaultSarymsakovLimit);

}  // namespace sia
