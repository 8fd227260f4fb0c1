#include "sia/pattern.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "sia/error.hpp"

namespace sia {

BooleanPattern BooleanPattern::zero(std::size_t n) {
  BooleanPattern p;
  p.n_   = n;
  p.wpr_ = StateSet::words_for(n);
  p.words_.assign(n * p.wpr_, 0);
  return p;
}

BooleanPattern BooleanPattern::identity(std::size_t n) {
  BooleanPattern p = zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.set(i, i);
  }
  return p;
}

BooleanPattern BooleanPattern::all_ones(std::size_t n) {
  BooleanPattern p    = zero(n);
  StateSet const full = StateSet::full(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(full.words().begin(), full.words().end(), p.row_data(i));
  }
  return p;
}

BooleanPattern BooleanPattern::from_rows(std::vector<StateSet> const& rows) {
  BooleanPattern p = zero(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].universe() != rows.size()) {
      throw DimensionMismatch("row " + std::to_string(i) + " has width "
                              + std::to_string(rows[i].universe())
                              + ", expected " + std::to_string(rows.size()));
    }
    std::copy(rows[i].words().begin(), rows[i].words().end(), p.row_data(i));
  }
  return p;
}

BooleanPattern
BooleanPattern::from_bits(std::vector<std::vector<int>> const& bits) {
  std::size_t const n = bits.size();
  BooleanPattern    p = zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (bits[i].size() != n) {
      throw DimensionMismatch("row " + std::to_string(i) + " has "
                              + std::to_string(bits[i].size())
                              + " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (bits[i][j] != 0 && bits[i][j] != 1) {
        throw InvalidArgument("pattern entries must be 0 or 1");
      }
      if (bits[i][j] == 1) {
        p.set(i, j);
      }
    }
  }
  return p;
}

BooleanPattern
BooleanPattern::from_images(std::span<const std::size_t> images) {
  std::size_t const n = images.size();
  BooleanPattern    p = zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i] >= n) {
      throw InvalidArgument("image " + std::to_string(images[i])
                            + " of state " + std::to_string(i)
                            + " out of range");
    }
    p.set(i, images[i]);
  }
  return p;
}

StateSet BooleanPattern::row(std::size_t i) const {
  return StateSet::from_words(n_, row_words(i));
}

std::size_t BooleanPattern::row_count(std::size_t i) const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : row_words(i)) {
    c += static_cast<std::size_t>(std::popcount(w));
  }
  return c;
}

StateSet BooleanPattern::positive_columns() const {
  StateSet cols = StateSet::full(n_);
  std::vector<std::uint64_t> acc(cols.words().begin(), cols.words().end());
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row_words(i);
    for (std::size_t w = 0; w < wpr_; ++w) {
      acc[w] &= r[w];
    }
  }
  return StateSet::from_words(n_, acc);
}

std::size_t BooleanPattern::full_row_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    c += row_count(i) == n_ ? 1 : 0;
  }
  return c;
}

std::string BooleanPattern::to_string() const {
  std::string out;
  out.reserve(n_ * (n_ + 1));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out += test(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

BooleanPattern bool_product(BooleanPattern const& a, BooleanPattern const& b) {
  if (a.n_ != b.n_) {
    throw DimensionMismatch("cannot multiply patterns of dimension "
                            + std::to_string(a.n_) + " and "
                            + std::to_string(b.n_));
  }
  BooleanPattern out = BooleanPattern::zero(a.n_);
  std::size_t const wpr = a.wpr_;
  if (wpr == 1) {
    for (std::size_t i = 0; i < a.n_; ++i) {
      std::uint64_t bits = a.words_[i];
      std::uint64_t acc  = 0;
      while (bits != 0) {
        acc |= b.words_[static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
      out.words_[i] = acc;
    }
    return out;
  }
  for (std::size_t i = 0; i < a.n_; ++i) {
    std::uint64_t* dst = out.row_data(i);
    for (std::size_t w = 0; w < wpr; ++w) {
      std::uint64_t bits = a.words_[i * wpr + w];
      while (bits != 0) {
        std::size_t const k
            = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        std::uint64_t const* src = b.words_.data() + k * wpr;
        for (std::size_t x = 0; x < wpr; ++x) {
          dst[x] |= src[x];
        }
        bits &= bits - 1;
      }
    }
  }
  return out;
}

BooleanPattern power(BooleanPattern const& p, std::size_t t) {
  if (t == 0) {
    throw InvalidArgument("power exponent must be at least 1");
  }
  BooleanPattern result;
  BooleanPattern base = p;
  bool           have = false;
  while (t > 0) {
    if (t & 1U) {
      result = have ? result * base : base;
      have   = true;
    }
    t >>= 1U;
    if (t > 0) {
      base = base * base;
    }
  }
  return result;
}

StateSet consequent(BooleanPattern const& p, StateSet const& s) {
  if (s.universe() != p.dim()) {
    throw DimensionMismatch("subset universe " + std::to_string(s.universe())
                            + " does not match dimension "
                            + std::to_string(p.dim()));
  }
  StateSet out(p.dim());
  s.for_each([&](std::size_t i) {
    out |= StateSet::from_words(p.dim(), p.row_words(i));
  });
  return out;
}

bool is_automaton(BooleanPattern const& p) {
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p.row_count(i) != 1) {
      return false;
    }
  }
  return true;
}

bool is_row_allowable(BooleanPattern const& p) {
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p.row_count(i) == 0) {
      return false;
    }
  }
  return true;
}

StochasticMatrix::StochasticMatrix(std::vector<std::vector<double>> rows,
                                   double row_sum_tolerance)
    : rows_(std::move(rows)) {
  std::size_t const n = rows_.size();
  if (n == 0) {
    throw InvalidArgument("stochastic matrix must have at least one row");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_[i].size() != n) {
      throw DimensionMismatch("row " + std::to_string(i) + " has "
                              + std::to_string(rows_[i].size())
                              + " entries, expected " + std::to_string(n));
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double const v = rows_[i][j];
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidArgument("entry (" + std::to_string(i) + ","
                              + std::to_string(j)
                              + ") is negative or not finite");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > row_sum_tolerance) {
      throw InvalidArgument("row " + std::to_string(i) + " sums to "
                            + std::to_string(sum) + ", not 1");
    }
  }
}

BooleanPattern pattern_of(StochasticMatrix const& m, double zero_tolerance) {
  if (zero_tolerance < 0.0) {
    throw InvalidArgument("zero tolerance must be nonnegative");
  }
  BooleanPattern p = BooleanPattern::from_predicate(
      m.dim(),
      [&](std::size_t i, std::size_t j) { return m(i, j) > zero_tolerance; });
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p.row_count(i) == 0) {
      throw InvalidArgument("row " + std::to_string(i)
                            + " has no entry above the zero tolerance");
    }
  }
  return p;
}

StochasticMatrix uniform_representative(BooleanPattern const& p) {
  std::size_t const                n = p.dim();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t const c = p.row_count(i);
    if (c == 0) {
      throw InvalidArgument("row " + std::to_string(i)
                            + " is empty; pattern is not row-allowable");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (p.test(i, j)) {
        rows[i][j] = 1.0 / static_cast<double>(c);
      }
    }
  }
  return StochasticMatrix(std::move(rows));
}

}  // namespace sia
