#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sia/state_set.hpp"

namespace sia {

// Zero/nonzero pattern of an n x n nonnegative matrix. Bit j of row i is set
// iff entry (i, j) is nonzero. Rows are packed bitsets (one 64-bit word per
// row when n <= 64, several otherwise). Values are immutable once built.
class BooleanPattern {
 public:
  BooleanPattern() = default;

  static BooleanPattern zero(std::size_t n);
  static BooleanPattern identity(std::size_t n);
  static BooleanPattern all_ones(std::size_t n);
  static BooleanPattern from_rows(std::vector<StateSet> const& rows);
  // Rows given as 0/1 entries; any nonzero value counts as set.
  static BooleanPattern from_bits(std::vector<std::vector<int>> const& bits);
  // Automaton pattern: row i has its single one in column images[i].
  static BooleanPattern from_images(std::span<const std::size_t> images);

  template <typename Pred>
  static BooleanPattern from_predicate(std::size_t n, Pred&& entry) {
    BooleanPattern p = zero(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (entry(i, j)) {
          p.set(i, j);
        }
      }
    }
    return p;
  }

  std::size_t dim() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return wpr_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (words_[i * wpr_ + j / 64] >> (j % 64)) & 1U;
  }
  std::span<const std::uint64_t> row_words(std::size_t i) const noexcept {
    return {words_.data() + i * wpr_, wpr_};
  }
  StateSet    row(std::size_t i) const;
  std::size_t row_count(std::size_t i) const noexcept;

  // Set of columns that are nonzero in every row.
  StateSet positive_columns() const;
  // Rows whose support is every column.
  std::size_t full_row_count() const;

  std::span<const std::uint64_t> raw_words() const noexcept { return words_; }

  // One line per row, '1' for nonzero entries.
  std::string to_string() const;

  friend bool operator==(BooleanPattern const&, BooleanPattern const&)
      = default;
  friend std::strong_ordering operator<=>(BooleanPattern const& a,
                                          BooleanPattern const& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) {
      return c;
    }
    return a.words_ <=> b.words_;
  }

  friend BooleanPattern bool_product(BooleanPattern const& a,
                                     BooleanPattern const& b);

 private:
  void set(std::size_t i, std::size_t j) noexcept {
    words_[i * wpr_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  std::uint64_t* row_data(std::size_t i) noexcept {
    return words_.data() + i * wpr_;
  }

  std::size_t                n_   = 0;
  std::size_t                wpr_ = 0;
  std::vector<std::uint64_t> words_;
};

// Pattern of the matrix product a * b: bit (i, j) set iff some k has
// a(i, k) and b(k, j). Throws DimensionMismatch.
BooleanPattern bool_product(BooleanPattern const& a, BooleanPattern const& b);

inline BooleanPattern operator*(BooleanPattern const& a,
                                BooleanPattern const& b) {
  return bool_product(a, b);
}

// p^t for t >= 1.
BooleanPattern power(BooleanPattern const& p, std::size_t t);

// F_P(S): union of the rows of p indexed by s.
StateSet consequent(BooleanPattern const& p, StateSet const& s);

bool is_automaton(BooleanPattern const& p);
bool is_row_allowable(BooleanPattern const& p);

// Dense nonnegative matrix with unit row sums.
class StochasticMatrix {
 public:
  static constexpr double kDefaultRowSumTolerance = 1e-9;

  // Validates nonnegativity, squareness and row sums.
  explicit StochasticMatrix(std::vector<std::vector<double>> rows,
                            double row_sum_tolerance = kDefaultRowSumTolerance);

  std::size_t dim() const noexcept { return rows_.size(); }
  double      operator()(std::size_t i, std::size_t j) const {
    return rows_[i][j];
  }
  std::vector<std::vector<double>> const& rows() const noexcept {
    return rows_;
  }

 private:
  std::vector<std::vector<double>> rows_;
};

// Entries strictly greater than zero_tolerance become set bits. Throws
// InvalidArgument when a row has no entry above the tolerance.
BooleanPattern pattern_of(StochasticMatrix const& m, double zero_tolerance = 0.0);

// Stochastic matrix with the given support, each row's mass split uniformly.
// Requires a row-allowable pattern.
StochasticMatrix uniform_representative(BooleanPattern const& p);

}  // namespace sia

template <>
struct std::hash<sia::BooleanPattern> {
  std::size_t operator()(sia::BooleanPattern const& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ p.dim();
    for (std::uint64_t w : p.raw_words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};
