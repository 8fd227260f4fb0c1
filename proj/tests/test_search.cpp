#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sia/error.hpp"
#include "sia/families.hpp"
#include "sia/indices.hpp"
#include "sia/io.hpp"
#include "sia/search.hpp"

using namespace sia;

namespace {

std::uint64_t count_sets(std::size_t n, std::size_t m, bool ic, bool canonical) {
  AutomatonSetEnumerator e(n, m, ic, canonical);
  std::uint64_t          c = 0;
  while (e.next()) ++c;
  return c;
}

SearchSummary run(std::size_t n, std::size_t m, bool ic, bool canonical, std::size_t workers = 1) {
  SearchOptions o;
  o.n         = n;
  o.set_size  = m;
  o.ic_only   = ic;
  o.canonical = canonical;
  o.workers   = workers;
  return max_sia_index(o);
}

}  // namespace

TEST_CASE("automaton codes") {
  CHECK(automaton_count(3) == 27);
  for (std::uint32_t c = 0; c < 256; ++c) {
    auto const t = automaton_from_code(4, c);
    CHECK(code_of(t) == c);
    CHECK(oracle::dense(t.to_pattern()) == oracle::dense_of_map(oracle::map_of_code(4, c)));
  }
  CHECK(universe_size(5, 2) == 4881250);
  CHECK(universe_size(1, 2) == 0);
}

TEST_CASE("enumeration counts") {
  CHECK(count_sets(2, 2, false, false) == 6);
  CHECK(count_sets(3, 2, false, false) == 351);
  CHECK(count_sets(3, 3, false, false) == 2925);
  CHECK(count_sets(1, 2, false, false) == 0);
  CHECK(count_sets(1, 1, false, false) == 1);
}

TEST_CASE("canonical enumeration matches explicit orbit partitions") {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      // Orbits of code sets under all relabelings, by brute force.
      std::vector<std::size_t> perm(n);
      std::set<std::set<std::vector<std::size_t>>> orbits;
      AutomatonSetEnumerator e(n, m, false, false);
      while (e.next()) {
        std::set<std::vector<std::size_t>> orbit;
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        do {
          std::vector<std::vector<std::size_t>> maps;
          for (auto code : e.codes()) {
            auto const f = oracle::map_of_code(n, code);
            std::vector<std::size_t> g(n);
            for (std::size_t i = 0; i < n; ++i) g[perm[i]] = perm[f[i]];
            maps.push_back(g);
          }
          std::sort(maps.begin(), maps.end());
          std::vector<std::size_t> flat;
          for (auto const& g : maps) flat.insert(flat.end(), g.begin(), g.end());
          orbit.insert(flat);
        } while (std::next_permutation(perm.begin(), perm.end()));
        orbits.insert(orbit);
      }
      CHECK(count_sets(n, m, false, true) == orbits.size());
    }
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::vector<AutomatonCode> codes{5, 17};
  auto const                 canon = canonical_form(3, codes);
  // Relabel by the transposition (0 1).
  std::vector<AutomatonCode> swapped;
  for (auto c : codes) {
    auto const f = oracle::map_of_code(3, c);
    std::size_t const p[3] = {1, 0, 2};
    std::vector<std::uint8_t> g(3);
    for (std::size_t i = 0; i < 3; ++i) g[p[i]] = static_cast<std::uint8_t>(p[f[i]]);
    swapped.push_back(code_of(Transformation::from_images(g)));
  }
  CHECK(canonical_form(3, swapped) == canon);
}

TEST_CASE("search summaries") {
  CHECK(run(1, 2, false, false).max_index == 0);
  CHECK(run(2, 2, false, false).max_index == 1);
  CHECK(run(3, 2, false, false).max_index == 3);
  CHECK(run(4, 2, false, false).max_index == 5);
  CHECK(run(3, 3, true, false).max_index == 3);
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::size_t m = 2; m <= 3; ++m) {
      auto const full  = run(n, m, false, false);
      auto const canon = run(n, m, false, true);
      auto const ic    = run(n, m, true, false);
      CHECK(full.max_index == canon.max_index);
      CHECK(full.max_index == ic.max_index);
      CHECK(full.extremal_count == canon.extremal_count);
    }
  }
}

TEST_CASE("search maximum agrees with direct evaluation (n = 3 pairs)") {
  AutomatonSetEnumerator e(3, 2, false, false);
  std::size_t            best = 0;
  std::uint64_t          sia_sets = 0;
  while (e.next()) {
    auto const r = naive_sia_index(e.matrix_set(), default_sia_cutoff(3));
    if (r.value) {
      ++sia_sets;
      best = std::max(best, *r.value);
    }
  }
  auto const s = run(3, 2, false, false);
  CHECK(s.max_index == best);
  CHECK(s.sia_sets == sia_sets);
}

TEST_CASE("extremal examples are initially connected and certified") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const s = run(n, 2, false, false);
    REQUIRE_FALSE(s.extremal_examples.empty());
    for (auto const& ex : s.extremal_examples) {
      CHECK(is_initially_connected(ex.set));
      CHECK(ex.witness.size() == s.max_index);
      CHECK(is_sia(ex.set.product(ex.witness)).is_sia);
      CHECK(sia_index(ex.set).value == s.max_index);
    }
  }
}

TEST_CASE("worker count does not change summaries") {
  for (bool ic : {false, true}) {
    auto const a = run(4, 2, ic, false, 1);
    auto const b = run(4, 2, ic, false, 3);
    CHECK(to_json(a, false).dump() == to_json(b, false).dump());
    CHECK(summary_csv_row(a, false) == summary_csv_row(b, false));
  }
}

TEST_CASE("budget guard and csv") {
  SearchOptions o;
  o.n      = 6;
  o.budget = 1000;
  CHECK_THROWS_AS(max_sia_index(o), LimitExceeded);
  CHECK(summary_csv_header() == "n,set_size,ic_only,max_index,extremal_count,enumerated,wall_time_ms");

  std::vector<SearchSummary> rows;
  for (std::size_t n = 1; n <= 4; ++n) rows.push_back(run(n, 2, false, false));
  CHECK(growth_curve_csv(rows) == "n,max_index,2n\n1,0,2\n2,1,4\n3,3,6\n4,5,8\n");
  CHECK(growth_curve_csv({}) == "n,max_index,2n\n");
  for (auto const& r : rows) CHECK(r.max_index <= 2 * r.n);
}
