#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sia/classes.hpp"
#include "sia/matrix_set.hpp"
#include "sia/transformation.hpp"

namespace sia {

enum class IndexStatus {
  found,           // value and witness are set
  cutoff_reached,  // nothing up to explored_up_to; existence not refuted
  no_product       // certified: no product of the set lies in the class
};

std::string_view to_string(IndexStatus s);

struct IndexResult {
  MatrixClass                class_tag = MatrixClass::sia;
  IndexStatus                status    = IndexStatus::cutoff_reached;
  std::optional<std::size_t> value;
  std::optional<Word>        witness;
  std::size_t                explored_up_to = 0;
};

// Upper limit on the number of distinct products a BFS may store.
inline constexpr std::size_t kMaxBfsElements = std::size_t{1} << 24;

// max(1, (n^3 - n) / 6).
std::size_t default_sia_cutoff(std::size_t n);
// n * 2^n, saturating.
std::size_t default_bfs_cutoff(std::size_t n);

// Decides whether some finite product is SIA (equivalently positive-column).
// Automaton sets use the pairwise-merge test; other sets use
// exists_sia_product_bfs, which may take exponential time.
bool exists_sia_product(MatrixSet const& s);

// Every pair of states can be sent to a single state by some word.
bool exists_sia_product_automata(std::span<const Transformation> gens);

// Breadth-first closure of the product patterns; true on the first
// positive-column product, false when the closure is exhausted.
bool exists_sia_product_bfs(MatrixSet const& s);

// Shortest product in class c by BFS over distinct product patterns, layer
// by layer. Ties at equal length go to the lexicographically smallest word.
IndexResult class_index_bfs(MatrixSet const& s,
                            MatrixClass      c,
                            std::size_t      cutoff);

// Shortest SIA product, trying only Lyndon words at each length.
IndexResult sia_index(MatrixSet const&           s,
                      std::optional<std::size_t> cutoff = std::nullopt);
IndexResult sia_index(std::span<const Transformation> gens,
                      std::optional<std::size_t>      cutoff = std::nullopt);

// Shortest SIA product by trying every word in order of length. Slow; kept
// as a cross-check of sia_index. Existence is settled with the pattern BFS.
IndexResult naive_sia_index(MatrixSet const& s, std::size_t cutoff);

IndexResult pc_index(MatrixSet const&           s,
                     std::optional<std::size_t> cutoff = std::nullopt);
IndexResult scr_index(MatrixSet const&           s,
                      std::optional<std::size_t> cutoff = std::nullopt);
IndexResult sar_index(MatrixSet const&           s,
                      std::optional<std::size_t> cutoff = std::nullopt);

IndexResult class_index(MatrixSet const&           s,
                        MatrixClass                c,
                        std::optional<std::size_t> cutoff = std::nullopt);

}  // namespace sia
