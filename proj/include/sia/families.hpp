#pragma once

#include <cstddef>

#include "sia/matrix_set.hpp"

namespace sia {

// {A, B}: A is the cyclic shift i -> i+1 (mod n); B sends state 1 to state 2
// and fixes the others. For n = 4 these are exactly
//   A = 0100/0010/0001/1000,  B = 0100/0100/0010/0001.
MatrixSet cerny_set(std::size_t n);

// {A, B}: both shift i -> i+1 for i < n; A sends n to 2, B sends n to 1.
MatrixSet wielandt_set(std::size_t n);

// Union of the Wielandt pair: the n-cycle plus the chord n -> 2, a single
// primitive pattern with exponent (n-1)^2 + 1.
BooleanPattern wielandt_matrix(std::size_t n);

// Self-loop at state 1, every other state i steps to i-1. Its smallest
// positive-column power is exactly n-1.
BooleanPattern line_automaton(std::size_t n);

// Some state reaches every state in the digraph of the union pattern.
bool is_initially_connected(MatrixSet const& s);

}  // namespace sia
