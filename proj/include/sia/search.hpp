#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sia/matrix_set.hpp"
#include "sia/transformation.hpp"

namespace sia {

// Automaton patterns of dimension n are indexed by codes 0..n^n-1: the code
// of a map f is sum_i f(i) * n^(n-1-i), so code order is the lexicographic
// order of image tuples.
using AutomatonCode = std::uint32_t;

inline constexpr std::size_t kMaxSearchDegree = 9;    // 9^9 fits in 32 bits
inline constexpr std::size_t kMaxSetSize      = 4;
inline constexpr std::size_t kMaxCanonicalDegree = 7;  // n! relabelings
inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

std::uint64_t  automaton_count(std::size_t n);  // n^n
Transformation automaton_from_code(std::size_t n, AutomatonCode code);
AutomatonCode  code_of(Transformation const& t);

// C(n^n, m), saturating at UINT64_MAX.
std::uint64_t universe_size(std::size_t n, std::size_t m);

// Smallest sorted code tuple among all simultaneous relabelings of the set.
// Requires n <= kMaxCanonicalDegree.
std::vector<AutomatonCode> canonical_form(std::size_t                    n,
                                          std::span<const AutomatonCode> codes);

// Streams the unordered sets of m distinct automaton patterns of dimension n
// in increasing order of their sorted code tuples. With ic_only, sets whose
// union is not initially connected are skipped; with canonical, only the
// minimal representative of each relabeling class is produced.
//
//   AutomatonSetEnumerator e(3, 2, false, true);
//   while (e.next()) { consume(e.matrix_set()); }
class AutomatonSetEnumerator {
 public:
  AutomatonSetEnumerator(std::size_t n,
                         std::size_t m,
                         bool        ic_only,
                         bool        canonical);

  bool next();

  std::span<const AutomatonCode>  codes() const noexcept;
  std::span<const Transformation> transformations() const noexcept;
  MatrixSet                       matrix_set() const;

 private:
  bool advance();
  bool accepted() const;

  std::size_t                                 n_;
  std::size_t                                 m_;
  bool                                        ic_only_;
  bool                                        canonical_;
  std::uint64_t                               total_;
  bool                                        started_ = false;
  bool                                        done_    = false;
  std::array<AutomatonCode, kMaxSetSize>      codes_{};
  std::array<Transformation, kMaxSetSize>     gens_{};
};

struct SearchOptions {
  std::size_t                n         = 3;
  std::size_t                set_size  = 2;
  bool                       ic_only   = false;
  bool                       canonical = false;
  std::size_t                workers   = 1;
  std::optional<std::size_t> cutoff;  // per-set SIA-index cutoff
  std::uint64_t              budget       = kDefaultSearchBudget;
  std::size_t                max_examples = 5;
};

struct ExtremalExample {
  MatrixSet set;
  Word      witness;
};

struct SearchSummary {
  std::size_t   n         = 0;
  std::size_t   set_size  = 0;
  bool          ic_only   = false;
  bool          canonical = false;
  std::size_t   max_index = 0;
  // Number of maximizing sets counted up to relabeling (raw count when
  // n > kMaxCanonicalDegree, see extremal_up_to_relabeling).
  std::uint64_t                extremal_count            = 0;
  bool                         extremal_up_to_relabeling = true;
  std::vector<ExtremalExample> extremal_examples;
  std::uint64_t                enumerated = 0;  // sets passing the filters
  std::uint64_t                sia_sets   = 0;
  std::uint64_t                unresolved = 0;  // SIA sets beyond the cutoff
  std::chrono::milliseconds    wall_time{0};
};

// Maximum SIA-index over the enumerated universe; non-SIA sets are skipped.
// Throws LimitExceeded when universe_size(n, m) exceeds options.budget.
SearchSummary max_sia_index(SearchOptions const& options);

std::string summary_csv_header();
std::string summary_csv_row(SearchSummary const& s, bool include_timing = true);

// "n,max_index,2n" then one row per summary.
std::string growth_curve_csv(std::span<const SearchSummary> summaries);

}  // namespace sia
