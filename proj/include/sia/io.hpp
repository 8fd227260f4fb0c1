#pragma once

#include <string>

#include <json.hpp>

#include "sia/classes.hpp"
#include "sia/indices.hpp"
#include "sia/matrix_set.hpp"
#include "sia/search.hpp"

namespace sia {

// Version of the matrix-set JSON document layout:
//   {"n": 3, "matrices": [[[0,1,0],[0,0,1],[1,0,0]], ...], "labels": ["A"]}
// A matrix whose entries are all 0/1 integers (or rows given as "010"
// strings) is read as a pattern; anything else is read as a stochastic
// matrix and reduced with pattern_of.
inline constexpr int kMatrixSetSchemaVersion = 1;

// Throws ParseError carrying the line/column of syntax errors and the JSON
// pointer of semantic ones.
MatrixSet parse_matrix_set(std::string const& text, double zero_tolerance = 0.0);
MatrixSet read_matrix_set_file(std::string const& path,
                               double             zero_tolerance = 0.0);
std::string read_text_file(std::string const& path);

// numeric = true writes uniform stochastic representatives instead of 0/1.
nlohmann::json to_json(MatrixSet const& s, bool numeric = false);

// Indented JSON with arrays of scalars (matrix rows) kept on one line.
std::string dump_pretty(nlohmann::json const& j);

nlohmann::json to_json(ClassReport const& r);
nlohmann::json to_json(IndexResult const& r, MatrixSet const& s);
nlohmann::json to_json(SearchSummary const& s, bool include_timing = true);

}  // namespace sia
