#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "sia/matrix_set.hpp"

namespace sia {

// 3-CNF formula over variables 1..variables; a literal is +v or -v.
struct CnfFormula {
  std::size_t                     variables = 0;
  std::vector<std::array<int, 3>> clauses;

  // Throws InvalidArgument on an empty clause list, zero variables or a
  // literal outside +-(1..variables).
  void validate() const;
  bool satisfied_by(std::vector<bool> const& assignment) const;  // 1-based
};

// Reads DIMACS CNF ("p cnf V C", clauses terminated by 0, "c" comments).
// Clauses with one or two literals are padded by repeating their last
// literal; longer clauses are rejected. Throws ParseError.
CnfFormula parse_dimacs(std::istream& in);

struct ThreeSatEncoding {
  MatrixSet   set;
  std::size_t threshold;  // number of variables
};

// 2v patterns of dimension 1 + v + c, ordered X1, ~X1, X2, ~X2, ...
// Every pattern has a full diagonal; the literal matrix for variable i also
// has (1+i, 1) set, and (1+v+j, 1) for each clause j the literal satisfies
// (1-based indices). The formula is satisfiable iff the set has an SIA
// product of length at most v.
ThreeSatEncoding encode_3sat(CnfFormula const& f);

struct SetCoverInstance {
  std::size_t                           universe = 0;  // elements 1..universe
  std::vector<std::vector<std::size_t>> family;

  // Throws InvalidArgument unless the family is non-empty, every member is
  // within 1..universe and the union is the whole universe.
  void validate() const;
};

// One automaton pattern of dimension universe+1 per member T: element i goes
// to the sink n+1 when i is in T and stays put otherwise; the sink is fixed.
// The SIA-index of the result equals the minimum cover size.
MatrixSet encode_set_cover(SetCoverInstance const& inst);

// {"universe": n, "sets": [[1,2],[3]]}. Throws ParseError.
SetCoverInstance parse_set_cover_json(std::string const& text);

}  // namespace sia
