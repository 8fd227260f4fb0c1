#include "sia/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sia/error.hpp"

namespace sia {

namespace {

using nlohmann::json;

[[noreturn]] void semantic_error(std::string const& where,
                                 std::string const& what) {
  throw ParseError("matrix-set JSON at " + where + ": " + what);
}

bool is_bit(json const& v) {
  return v.is_number_integer() && (v.get<long long>() == 0 || v.get<long long>() == 1);
}

BooleanPattern read_matrix(json const&        m,
                           std::size_t        n,
                           std::string const& where,
                           double             tol) {
  if (!m.is_array() || m.size() != n) {
    semantic_error(where, "expected an array of " + std::to_string(n) + " rows");
  }
  bool all_bits = true;
  for (std::size_t i = 0; i < n; ++i) {
    json const& row = m[i];
    std::string const rw = where + "/" + std::to_string(i);
    if (row.is_string()) {
      std::string const bits = row.get<std::string>();
      if (bits.size() != n || bits.find_first_not_of("01") != std::string::npos) {
        semantic_error(rw, "bit string must have " + std::to_string(n)
                               + " characters from {0,1}");
      }
      continue;
    }
    if (!row.is_array() || row.size() != n) {
      semantic_error(rw, "expected " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_number()) {
        semantic_error(rw + "/" + std::to_string(j), "entry is not a number");
      }
      all_bits = all_bits && is_bit(row[j]);
    }
  }
  if (all_bits) {
    return BooleanPattern::from_predicate(n, [&](std::size_t i, std::size_t j) {
      json const& row = m[i];
      return row.is_string() ? row.get<std::string>()[j] == '1'
                             : row[j].get<long long>() == 1;
    });
  }
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].is_string()) {
      semantic_error(where, "bit-string rows cannot be mixed with numeric rows");
    }
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = m[i][j].get<double>();
    }
  }
  try {
    return pattern_of(StochasticMatrix(std::move(rows)), tol);
  } catch (Error const& e) {
    semantic_error(where, e.what());
  }
}

}  // namespace

MatrixSet parse_matrix_set(std::string const& text, double zero_tolerance) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("matrix-set JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    semantic_error("/", "document must be an object");
  }
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()
      || doc["n"].get<std::size_t>() == 0) {
    semantic_error("/n", "must be a positive integer");
  }
  std::size_t const n = doc["n"].get<std::size_t>();
  if (!doc.contains("matrices") || !doc["matrices"].is_array()
      || doc["matrices"].empty()) {
    semantic_error("/matrices", "must be a non-empty array");
  }
  std::vector<BooleanPattern> patterns;
  for (std::size_t k = 0; k < doc["matrices"].size(); ++k) {
    patterns.push_back(read_matrix(doc["matrices"][k],
                                   n,
                                   "/matrices/" + std::to_string(k),
                                   zero_tolerance));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) {
      semantic_error("/labels", "must be an array of strings");
    }
    for (auto const& l : doc["labels"]) {
      if (!l.is_string()) {
        semantic_error("/labels", "must be an array of strings");
      }
      labels.push_back(l.get<std::string>());
    }
  }
  try {
    return MatrixSet(std::move(patterns), std::move(labels));
  } catch (Error const& e) {
    semantic_error("/labels", e.what());
  }
}

std::string read_text_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MatrixSet read_matrix_set_file(std::string const& path, double zero_tolerance) {
  return parse_matrix_set(read_text_file(path), zero_tolerance);
}

json to_json(MatrixSet const& s, bool numeric) {
  json mats = json::array();
  for (auto const& p : s.patterns()) {
    json rows = json::array();
    if (numeric) {
      StochasticMatrix const m = uniform_representative(p);
      for (auto const& r : m.rows()) {
        rows.push_back(r);
      }
    } else {
      for (std::size_t i = 0; i < p.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < p.dim(); ++j) {
          row.push_back(p.test(i, j) ? 1 : 0);
        }
        rows.push_back(std::move(row));
      }
    }
    mats.push_back(std::move(rows));
  }
  return json{{"n", s.dim()}, {"matrices", std::move(mats)}, {"labels", s.labels()}};
}

json to_json(ClassReport const& r) {
  json out{{"positive_column", r.is_positive_column},
           {"scrambling", r.is_scrambling},
           {"sarymsakov", r.is_sarymsakov},
           {"sia", r.is_sia}};
  out["sia_witness_power"]
      = r.sia_witness_power ? json(*r.sia_witness_power) : json(nullptr);
  return out;
}

json to_json(IndexResult const& r, MatrixSet const& s) {
  json out{{"class", std::string(short_name(r.class_tag))},
           {"status", std::string(to_string(r.status))},
           {"explored_up_to", r.explored_up_to}};
  out["value"]   = r.value ? json(*r.value) : json(nullptr);
  out["witness"] = r.witness ? json(s.spell(*r.witness)) : json(nullptr);
  return out;
}

json to_json(SearchSummary const& s, bool include_timing) {
  json examples = json::array();
  for (auto const& e : s.extremal_examples) {
    json ex     = to_json(e.set);
    ex["witness"] = e.set.spell(e.witness);
    examples.push_back(std::move(ex));
  }
  return json{{"n", s.n},
              {"set_size", s.set_size},
              {"ic_only", s.ic_only},
              {"canonical", s.canonical},
              {"max_index", s.max_index},
              {"extremal_count", s.extremal_count},
              {"extremal_up_to_relabeling", s.extremal_up_to_relabeling},
              {"enumerated", s.enumerated},
              {"sia_sets", s.sia_sets},
              {"unresolved", s.unresolved},
              {"wall_time_ms", include_timing ? s.wall_time.count() : 0},
              {"extremal_examples", std::move(examples)}};
}

namespace {

bool is_flat(nlohmann::json const& j) {
  return std::none_of(j.begin(), j.end(),
                      [](auto const& e) { return e.is_structured(); });
}

void dump_into(nlohmann::json const& j, std::size_t depth, std::string& out) {
  std::string const pad(2 * (depth + 1), ' ');
  if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      dump_into(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * depth, ' ') + "]";
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto const& [key, value] : j.items()) {
      out += pad + nlohmann::json(key).dump() + ": ";
      dump_into(value, depth + 1, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * depth, ' ') + "}";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += (i ? ", " : "") + j[i].dump();
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_pretty(nlohmann::json const& j) {
  std::string out;
  dump_into(j, 0, out);
  return out;
}

}  // namespace sia
