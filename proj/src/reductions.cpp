#include "sia/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "sia/error.hpp"

namespace sia {

void CnfFormula::validate() const {
  if (variables == 0) {
    throw InvalidArgument("formula must have at least one variable");
  }
  if (clauses.empty()) {
    throw InvalidArgument("formula must have at least one clause");
  }
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    for (int lit : clauses[j]) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > variables) {
        throw InvalidArgument("clause " + std::to_string(j + 1)
                              + " has literal " + std::to_string(lit)
                              + " outside 1.." + std::to_string(variables));
      }
    }
  }
}

bool CnfFormula::satisfied_by(std::vector<bool> const& assignment) const {
  for (auto const& clause : clauses) {
    bool sat = false;
    for (int lit : clause) {
      bool const value = assignment.at(static_cast<std::size_t>(std::abs(lit)));
      sat              = sat || (lit > 0 ? value : !value);
    }
    if (!sat) {
      return false;
    }
  }
  return true;
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula       f;
  bool             have_header      = false;
  std::size_t      declared_clauses = 0;
  std::vector<int> current;
  std::string      line;
  std::size_t      line_no = 0;
  auto fail = [&](std::string const& msg) {
    throw ParseError("DIMACS line " + std::to_string(line_no) + ": " + msg);
  };
  auto finish_clause = [&] {
    if (current.empty()) {
      fail("empty clause");
    }
    if (current.size() > 3) {
      fail("clause has " + std::to_string(current.size())
           + " literals; only 3-CNF is supported");
    }
    while (current.size() < 3) {
      current.push_back(current.back());
    }
    f.clauses.push_back({current[0], current[1], current[2]});
    current.clear();
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string        first;
    if (!(tokens >> first) || first == "c" || first[0] == 'c'
        || first == "%") {
      continue;
    }
    if (first == "p") {
      std::string fmt;
      long long   v = -1;
      long long   c = -1;
      if (have_header || !(tokens >> fmt >> v >> c) || fmt != "cnf" || v < 0
          || c < 0) {
        fail("malformed problem line");
      }
      have_header      = true;
      f.variables      = static_cast<std::size_t>(v);
      declared_clauses = static_cast<std::size_t>(c);
      continue;
    }
    if (!have_header) {
      fail("clause before the 'p cnf' line");
    }
    tokens.clear();
    tokens.str(line);
    long long lit = 0;
    while (tokens >> lit) {
      if (lit == 0) {
        finish_clause();
      } else {
        if (static_cast<std::size_t>(std::llabs(lit)) > f.variables) {
          fail("literal " + std::to_string(lit) + " exceeds variable count");
        }
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!tokens.eof()) {
      fail("unexpected token");
    }
  }
  if (!have_header) {
    throw ParseError("DIMACS input has no 'p cnf' line");
  }
  if (!current.empty()) {
    finish_clause();
  }
  if (f.clauses.size() != declared_clauses) {
    throw ParseError("DIMACS header declares "
                     + std::to_string(declared_clauses) + " clauses, found "
                     + std::to_string(f.clauses.size()));
  }
  try {
    f.validate();
  } catch (InvalidArgument const& e) {
    throw ParseError(e.what());
  }
  return f;
}

ThreeSatEncoding encode_3sat(CnfFormula const& f) {
  f.validate();
  std::size_t const v = f.variables;
  std::size_t const c = f.clauses.size();
  std::size_t const n = 1 + v + c;
  std::vector<BooleanPattern> patterns;
  std::vector<std::string>    labels;
  for (std::size_t i = 1; i <= v; ++i) {
    for (bool positive : {true, false}) {
      int const literal = positive ? static_cast<int>(i) : -static_cast<int>(i);
      // 0-based rows: variable i at row i, clause j (1-based) at row v + j.
      patterns.push_back(BooleanPattern::from_predicate(
          n, [&](std::size_t r, std::size_t col) {
            if (r == col) {
              return true;
            }
            if (col != 0) {
              return false;
            }
            if (r == i) {
              return true;
            }
            if (r > v) {
              auto const& clause = f.clauses[r - v - 1];
              return std::find(clause.begin(), clause.end(), literal)
                     != clause.end();
            }
            return false;
          }));
      labels.push_back((positive ? "X" : "~X") + std::to_string(i));
    }
  }
  return {MatrixSet(std::move(patterns), std::move(labels)), v};
}

void SetCoverInstance::validate() const {
  if (universe == 0) {
    throw InvalidArgument("set cover universe must be non-empty");
  }
  if (family.empty()) {
    throw InvalidArgument("set cover family must be non-empty");
  }
  std::vector<bool> covered(universe + 1, false);
  for (std::size_t t = 0; t < family.size(); ++t) {
    for (std::size_t e : family[t]) {
      if (e < 1 || e > universe) {
        throw InvalidArgument("set " + std::to_string(t) + " contains "
                              + std::to_string(e) + ", outside 1.."
                              + std::to_string(universe));
      }
      covered[e] = true;
    }
  }
  for (std::size_t e = 1; e <= universe; ++e) {
    if (!covered[e]) {
      throw InvalidArgument("element " + std::to_string(e)
                            + " is not covered by the family");
    }
  }
}

MatrixSet encode_set_cover(SetCoverInstance const& inst) {
  inst.validate();
  std::size_t const           n    = inst.universe;
  std::size_t const           sink = n;  // state n+1, 0-based
  std::vector<BooleanPattern> patterns;
  for (auto const& members : inst.family) {
    std::vector<std::size_t> img(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      img[i] = i;
    }
    for (std::size_t e : members) {
      img[e - 1] = sink;
    }
    patterns.push_back(BooleanPattern::from_images(img));
  }
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < patterns.size(); ++t) {
    labels.push_back("T" + std::to_string(t + 1));
  }
  return MatrixSet(std::move(patterns), std::move(labels));
}

SetCoverInstance parse_set_cover_json(std::string const& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(std::string("set cover JSON: ") + e.what());
  }
  SetCoverInstance inst;
  try {
    if (!doc.is_object() || !doc.contains("universe") || !doc.contains("sets")) {
      throw ParseError("set cover JSON needs \"universe\" and \"sets\"");
    }
    if (!doc["universe"].is_number_unsigned()) {
      throw ParseError("\"universe\" must be a positive integer");
    }
    inst.universe = doc["universe"].get<std::size_t>();
    if (!doc["sets"].is_array()) {
      throw ParseError("\"sets\" must be an array of arrays");
    }
    for (auto const& member : doc["sets"]) {
      if (!member.is_array()) {
        throw ParseError("\"sets\" must be an array of arrays");
      }
      std::vector<std::size_t> elems;
      for (auto const& e : member) {
        if (!e.is_number_unsigned()) {
          throw ParseError("set elements must be positive integers");
        }
        elems.push_back(e.get<std::size_t>());
      }
      inst.family.push_back(std::move(elems));
    }
    inst.validate();
  } catch (InvalidArgument const& e) {
    throw ParseError(e.what());
  }
  return inst;
}

}  // namespace sia
