#include "sia/classes.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>
#include <vector>

#include "sia/error.hpp"

namespace sia {

namespace {
// 2^26 tabulated consequent sets is the most memory we are willing to spend.
constexpr std::size_t kSarymsakovHardLimit = 26;
}  // namespace

std::string_view short_name(MatrixClass c) {
  switch (c) {
    case MatrixClass::positive_column:
      return "pc";
    case MatrixClass::scrambling:
      return "scr";
    case MatrixClass::sarymsakov:
      return "sar";
    case MatrixClass::sia:
      return "sia";
  }
  return "?";
}

std::optional<MatrixClass> parse_matrix_class(std::string_view name) {
  for (auto c : {MatrixClass::positive_column,
                 MatrixClass::scrambling,
                 MatrixClass::sarymsakov,
                 MatrixClass::sia}) {
    if (short_name(c) == name) {
      return c;
    }
  }
  return std::nullopt;
}

bool is_positive_column(BooleanPattern const& p) {
  return !p.positive_columns().empty();
}

bool is_scrambling(BooleanPattern const& p) {
  std::size_t const n   = p.dim();
  std::size_t const wpr = p.words_per_row();
  for (std::size_t i = 0; i < n; ++i) {
    auto ri = p.row_words(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      auto rj  = p.row_words(j);
      bool hit = false;
      for (std::size_t w = 0; w < wpr && !hit; ++w) {
        hit = (ri[w] & rj[w]) != 0;
      }
      if (!hit) {
        return false;
      }
    }
  }
  return true;
}

bool is_sarymsakov(BooleanPattern const& p, std::size_t limit) {
  std::size_t const n = p.dim();
  std::size_t const cap = std::min(limit, kSarymsakovHardLimit);
  if (n > cap) {
    throw LimitExceeded("Sarymsakov check is exponential; dimension "
                        + std::to_string(n) + " exceeds limit "
                        + std::to_string(cap));
  }
  if (n <= 1) {
    return true;  // no two disjoint nonempty subsets
  }
  using Mask        = std::uint32_t;
  Mask const full   = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  std::vector<Mask> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = static_cast<Mask>(p.row_words(i)[0]);
  }
  // cons[S] = F_P(S), built from the lowest set bit of S.
  std::vector<Mask> cons(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= full; ++s) {
    cons[s] = cons[s & (s - 1)]
              | rows[static_cast<std::size_t>(std::countr_zero(s))];
  }
  for (Mask s = 1; s < full; ++s) {
    Mask const rest = full & ~s;
    int const  size_s = std::popcount(s);
    for (Mask t = rest; t != 0; t = (t - 1) & rest) {
      if (t < s) {
        continue;  // each unordered pair once
      }
      Mask const fs = cons[s];
      Mask const ft = cons[t];
      if ((fs & ft) != 0) {
        continue;
      }
      if (std::popcount(fs | ft) > size_s + std::popcount(t)) {
        continue;
      }
      return false;
    }
  }
  return true;
}

std::size_t sia_power_cap(std::size_t n) {
  // n^2 - 3n + 3 is positive for every n >= 0 but evaluate without wrap.
  std::size_t const v = n * n + 3 - 3 * n;
  return std::max<std::size_t>(1, v);
}

namespace {

void require_row_allowable(BooleanPattern const& p, char const* what) {
  if (!is_row_allowable(p)) {
    throw InvalidArgument(std::string(what)
                          + " requires a row-allowable pattern");
  }
}

}  // namespace

SiaCheck is_sia(BooleanPattern const& p) {
  require_row_allowable(p, "is_sia");
  std::size_t const                  cap = sia_power_cap(p.dim());
  std::unordered_set<BooleanPattern> seen;
  BooleanPattern                     q = p;
  for (std::size_t t = 1; t <= cap; ++t) {
    if (is_positive_column(q)) {
      return {true, t};
    }
    if (!seen.insert(q).second) {
      return {};
    }
    q = q * p;
  }
  return {};
}

StateSet eventually_positive_columns(BooleanPattern const& p) {
  require_row_allowable(p, "eventually_positive_columns");
  // Positive columns only accumulate along the power sequence, and the
  // sequence is eventually periodic, so the set is constant from the first
  // repeated power on.
  std::unordered_set<BooleanPattern> seen;
  BooleanPattern                     q = p;
  while (seen.insert(q).second) {
    q = q * p;
  }
  return q.positive_columns();
}

std::optional<std::size_t> smallest_positive_column_power(BooleanPattern const& p) {
  return is_sia(p).power;
}

std::size_t wielandt_bound(std::size_t n) {
  return n == 0 ? 1 : (n - 1) * (n - 1) + 1;
}

std::optional<std::size_t> local_exponent(BooleanPattern const& p,
                                          std::size_t           k) {
  std::size_t const n = p.dim();
  if (k < 1 || k > n) {
    throw InvalidArgument("local exponent index must be in 1.."
                          + std::to_string(n));
  }
  std::optional<std::size_t> first;
  BooleanPattern             q = p;
  for (std::size_t t = 1; t <= wielandt_bound(n); ++t) {
    std::size_t const full = q.full_row_count();
    if (!first && full >= k) {
      first = t;
    }
    if (full == n) {
      return first;
    }
    q = q * p;
  }
  return std::nullopt;
}

ClassReport classify(BooleanPattern const& p, std::size_t sarymsakov_limit) {
  require_row_allowable(p, "classify");
  ClassReport r;
  r.is_positive_column = is_positive_column(p);
  r.is_scrambling      = is_scrambling(p);
  r.is_sarymsakov      = is_sarymsakov(p, sarymsakov_limit);
  SiaCheck const s     = is_sia(p);
  r.is_sia             = s.is_sia;
  r.sia_witness_power  = s.power;
  return r;
}

bool in_class(BooleanPattern const& p,
              MatrixClass           c,
              std::size_t           sarymsakov_limit) {
  switch (c) {
    case MatrixClass::positive_column:
      return is_positive_column(p);
    case MatrixClass::scrambling:
      return is_scrambling(p);
    case MatrixClass::sarymsakov:
      return is_sarymsakov(p, sarymsakov_limit);
    case MatrixClass::sia:
      return is_sia(p).is_sia;
  }
  return false;
}

}  // namespace sia
