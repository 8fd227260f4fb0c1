#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sia/classes.hpp"
#include "sia/error.hpp"
#include "sia/families.hpp"
#include "sia/search.hpp"

using namespace sia;

namespace {

BooleanPattern from_code(std::size_t n, std::uint32_t code) {
  return automaton_from_code(n, code).to_pattern();
}

}  // namespace

TEST_CASE("class examples") {
  for (std::size_t n : {1, 2, 3, 5}) {
    auto const one = BooleanPattern::all_ones(n);
    CHECK(is_positive_column(one));
    CHECK(is_scrambling(one));
    CHECK(is_sarymsakov(one));
    CHECK(is_sia(one).is_sia);
    CHECK(is_sia(one).power == 1);
  }
  for (std::size_t n : {2, 3, 6}) {
    auto const id = BooleanPattern::identity(n);
    auto const r  = classify(id);
    CHECK_FALSE(r.is_positive_column);
    CHECK_FALSE(r.is_scrambling);
    CHECK_FALSE(r.is_sarymsakov);
    CHECK_FALSE(r.is_sia);
    CHECK_FALSE(r.sia_witness_power);
  }
  CHECK_FALSE(is_sia(BooleanPattern::from_bits({{0, 1}, {1, 0}})).is_sia);
  CHECK_THROWS_AS(is_sia(BooleanPattern::from_bits({{1, 0}, {0, 0}})), InvalidArgument);
  CHECK_THROWS_AS(is_sarymsakov(BooleanPattern::identity(17)), LimitExceeded);
  CHECK(is_sarymsakov(BooleanPattern::identity(17), 17) == false);
  CHECK(parse_matrix_class("scr") == MatrixClass::scrambling);
  CHECK_FALSE(parse_matrix_class("xyz"));
  CHECK(short_name(MatrixClass::sarymsakov) == "sar");
}

TEST_CASE("Cerny n=4 products") {
  // With A the cycle and B the merge, BA^3 is a cyclic shift of A^3B.
  auto const c  = cerny_set(4);
  auto const ba = c.product(c.parse_word("BAAA"));
  auto const r  = classify(ba);
  CHECK(r.is_sia);
  CHECK_FALSE(r.is_positive_column);
  CHECK(is_positive_column(c.product(c.parse_word("BAAABAAAB"))));
  CHECK(is_sia(c.product(c.parse_word("AAAB"))).is_sia);
  CHECK_FALSE(is_sia(c.product(c.parse_word("AAB"))).is_sia);
}

TEST_CASE("line automaton and eventual positive columns") {
  CHECK(eventually_positive_columns(line_automaton(4)) == StateSet(4, {0}));
  CHECK(eventually_positive_columns(BooleanPattern::all_ones(3)).is_full());
  CHECK(eventually_positive_columns(BooleanPattern::identity(3)).empty());
  CHECK(smallest_positive_column_power(line_automaton(5)) == 4);
  CHECK_FALSE(is_positive_column(power(line_automaton(5), 3)));
  CHECK(smallest_positive_column_power(BooleanPattern::all_ones(4)) == 1);
  CHECK_FALSE(smallest_positive_column_power(BooleanPattern::identity(4)));
  for (std::size_t n = 2; n <= 12; ++n) {
    CHECK(smallest_positive_column_power(line_automaton(n)) == n - 1);
    CHECK(is_sia(line_automaton(n)).is_sia);
  }
}

TEST_CASE("local exponents") {
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(local_exponent(BooleanPattern::all_ones(4), k) == 1);
  }
  for (std::size_t n = 2; n <= 9; ++n) {
    auto const w = wielandt_matrix(n);
    CHECK(local_exponent(w, n) == n * n - 2 * n + 2);
    CHECK(local_exponent(w, n) == wielandt_bound(n));
    // Independent: smallest power equal to all-ones by dense products.
    auto const d = oracle::dense(w);
    auto       p = d;
    std::size_t t = 1;
    while (oracle::pattern(p) != BooleanPattern::all_ones(n)) {
      p = oracle::multiply(p, d);
      ++t;
    }
    CHECK(t == n * n - 2 * n + 2);
  }
  CHECK_FALSE(local_exponent(BooleanPattern::from_bits({{0, 1}, {1, 0}}), 1));
  CHECK_THROWS_AS(local_exponent(BooleanPattern::all_ones(3), 0), InvalidArgument);
  CHECK_THROWS_AS(local_exponent(BooleanPattern::all_ones(3), 4), InvalidArgument);
}

TEST_CASE("sia_power_cap clamps small n") {
  CHECK(sia_power_cap(1) == 1);
  CHECK(sia_power_cap(2) == 1);
  CHECK(sia_power_cap(3) == 3);
  CHECK(sia_power_cap(6) == 21);
}

TEST_CASE("automaton patterns: coincidence and oracle agreement (exhaustive n <= 5)") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const total = automaton_count(n);
    for (std::uint32_t code = 0; code < total; ++code) {
      auto const p   = from_code(n, code);
      auto const d   = oracle::dense(p);
      bool const pc  = is_positive_column(p);
      bool const scr = is_scrambling(p);
      bool const sar = is_sarymsakov(p);
      REQUIRE(pc == scr);
      REQUIRE(scr == sar);
      REQUIRE(pc == oracle::positive_column(d));
      REQUIRE(sar == oracle::sarymsakov(d));
      REQUIRE(is_sia(p).is_sia == oracle::sia(d));
    }
  }
}

TEST_CASE("SIA automata reach a positive column by power n-1 (exhaustive n <= 7)") {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto const total = automaton_count(n);
    for (std::uint32_t code = 0; code < total; ++code) {
      auto const p = from_code(n, code);
      auto const e = smallest_positive_column_power(p);
      REQUIRE(e.has_value() == is_sia(p).is_sia);
      if (e) {
        REQUIRE(*e <= std::max<std::size_t>(1, n - 1));
      }
    }
  }
}

TEST_CASE("random patterns agree with oracles (n <= 8)") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dens(0.05, 0.6);
  for (int t = 0; t < 4000; ++t) {
    std::size_t const n = 1 + t % 8;
    auto const        d = oracle::random_row_allowable(rng, n, dens(rng));
    auto const        p = oracle::pattern(d);
    REQUIRE(is_positive_column(p) == oracle::positive_column(d));
    REQUIRE(is_scrambling(p) == oracle::scrambling(d));
    if (n <= 6) {
      REQUIRE(is_sarymsakov(p) == oracle::sarymsakov(d));
    }
    auto const s = is_sia(p);
    REQUIRE(s.is_sia == oracle::sia(d));
    REQUIRE(smallest_positive_column_power(p) == oracle::first_positive_column_power(d));
    if (s.is_sia) {
      REQUIRE(s.power.has_value());
      REQUIRE(is_positive_column(power(p, *s.power)));
    }
  }
}

TEST_CASE("scrambling closure (exhaustive n <= 4 via minimal patterns)") {
  // Products are monotone in each factor, so closure on minimal scrambling
  // patterns implies closure on all of them.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::uint32_t const      cells = static_cast<std::uint32_t>(n * n);
    std::vector<BooleanPattern> minimal;
    auto to_pattern = [&](std::uint32_t bits) {
      return BooleanPattern::from_predicate(
          n, [&](std::size_t i, std::size_t j) { return (bits >> (i * n + j)) & 1; });
    };
    for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
      if (!is_scrambling(to_pattern(bits))) continue;
      bool is_min = true;
      for (std::uint32_t c = 0; c < cells && is_min; ++c) {
        if ((bits >> c & 1) && is_scrambling(to_pattern(bits & ~(1u << c)))) is_min = false;
      }
      if (is_min) minimal.push_back(to_pattern(bits));
    }
    REQUIRE_FALSE(minimal.empty());
    for (auto const& a : minimal)
      for (auto const& b : minimal) REQUIRE(is_scrambling(a * b));
  }
}
