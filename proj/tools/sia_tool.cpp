#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sia/classes.hpp"
#include "sia/error.hpp"
#include "sia/families.hpp"
#include "sia/indices.hpp"
#include "sia/io.hpp"
#include "sia/properties.hpp"
#include "sia/reductions.hpp"
#include "sia/search.hpp"

namespace {

using nlohmann::json;

enum ExitCode : int {
  kFound       = 0,
  kUsage       = 1,
  kCutoff      = 2,
  kNoProduct   = 3,
  kViolation   = 4,
};

std::size_t default_workers() {
  if (char const* env = std::getenv("SIA_WORKERS")) {
    try {
      long const v = std::stol(env);
      if (v >= 1) {
        return static_cast<std::size_t>(v);
      }
    } catch (std::exception const&) {
    }
    std::cerr << "warning: ignoring invalid SIA_WORKERS=" << env << "\n";
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int exit_code_of(sia::IndexStatus s) {
  switch (s) {
    case sia::IndexStatus::found: return kFound;
    case sia::IndexStatus::cutoff_reached: return kCutoff;
    case sia::IndexStatus::no_product: return kNoProduct;
  }
  return kUsage;
}

void print_json(json const& j) { std::cout << sia::dump_pretty(j) << "\n"; }

// ---- classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::string file;
  std::string format    = "json";
  double      tolerance = 0.0;
  std::size_t sar_limit = sia::kDefaultSarymsakovLimit;
};

int run_classify(ClassifyArgs const& a) {
  sia::MatrixSet const s = sia::read_matrix_set_file(a.file, a.tolerance);
  json                 out = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto const r = sia::classify(s[i], a.sar_limit);
    if (a.format == "text") {
      std::cout << s.labels()[i] << ": pc=" << r.is_positive_column
                << " scr=" << r.is_scrambling << " sar=" << r.is_sarymsakov
                << " sia=" << r.is_sia;
      if (r.sia_witness_power) {
        std::cout << " power=" << *r.sia_witness_power;
      }
      std::cout << "\n";
    } else {
      json j     = sia::to_json(r);
      j["label"] = s.labels()[i];
      out.push_back(std::move(j));
    }
  }
  if (a.format != "text") {
    print_json(out);
  }
  return kFound;
}

// ---- index ------------------------------------------------------------------

struct IndexArgs {
  std::string                file;
  std::string                cls    = "sia";
  std::string                format = "json";
  std::optional<std::size_t> cutoff;
  double                     tolerance = 0.0;
};

void print_index_text(sia::IndexResult const& r, sia::MatrixSet const& s) {
  std::cout << sia::short_name(r.class_tag) << ": " << sia::to_string(r.status);
  if (r.value) {
    std::cout << " " << *r.value << " " << s.spell(*r.witness);
  } else {
    std::cout << " (explored up to " << r.explored_up_to << ")";
  }
  std::cout << "\n";
}

int run_index(IndexArgs const& a) {
  sia::MatrixSet const s = sia::read_matrix_set_file(a.file, a.tolerance);
  std::vector<sia::MatrixClass> classes;
  if (a.cls == "all") {
    classes = {sia::MatrixClass::positive_column, sia::MatrixClass::scrambling,
               sia::MatrixClass::sarymsakov, sia::MatrixClass::sia};
  } else {
    classes = {*sia::parse_matrix_class(a.cls)};
  }
  json out  = json::array();
  int  code = kFound;
  for (auto c : classes) {
    auto const r = sia::class_index(s, c, a.cutoff);
    // Worst outcome wins: no_product over cutoff over found.
    code = std::max(code, exit_code_of(r.status));
    if (a.format == "text") {
      print_index_text(r, s);
    } else {
      out.push_back(sia::to_json(r, s));
    }
  }
  if (a.format != "text") {
    print_json(classes.size() == 1 ? out[0] : out);
  }
  return code;
}

// ---- search / curve ---------------------------------------------------------

struct SearchArgs {
  sia::SearchOptions opt;
  std::string        format = "json";
  bool               no_timing = false;
  std::string        dump_dir;
};

void dump_extremal(sia::SearchSummary const& s, std::string const& dir) {
  std::filesystem::create_directories(dir);
  std::size_t i = 0;
  for (auto const& ex : s.extremal_examples) {
    json j       = sia::to_json(ex.set);
    j["witness"] = ex.set.spell(ex.witness);
    std::ostringstream name;
    name << "n" << s.n << "_m" << s.set_size << (s.ic_only ? "_ic" : "")
         << "_" << i++ << ".json";
    std::ofstream f(std::filesystem::path(dir) / name.str());
    if (!f) {
      throw sia::Error("cannot write to " + dir);
    }
    f << sia::dump_pretty(j) << "\n";
  }
}

int run_search(SearchArgs const& a) {
  auto const s = sia::max_sia_index(a.opt);
  if (a.format == "csv") {
    std::cout << sia::summary_csv_header() << "\n"
              << sia::summary_csv_row(s, !a.no_timing) << "\n";
  } else if (a.format == "text") {
    std::cout << "n=" << s.n << " m=" << s.set_size
              << (s.ic_only ? " ic" : "") << " max_index=" << s.max_index
              << " extremal=" << s.extremal_count
              << " enumerated=" << s.enumerated << " sia_sets=" << s.sia_sets
              << " unresolved=" << s.unresolved;
    if (!a.no_timing) {
      std::cout << " wall_time_ms=" << s.wall_time.count();
    }
    std::cout << "\n";
    for (auto const& ex : s.extremal_examples) {
      std::cout << "  witness " << ex.set.spell(ex.witness) << "\n";
    }
  } else {
    print_json(sia::to_json(s, !a.no_timing));
  }
  if (!a.dump_dir.empty()) {
    dump_extremal(s, a.dump_dir);
  }
  return s.unresolved > 0 ? kCutoff : kFound;
}

struct CurveArgs {
  sia::SearchOptions opt;
  std::size_t        n_min = 1;
  std::size_t        n_max = 4;
};

int run_curve(CurveArgs const& a) {
  if (a.n_min > a.n_max) {
    throw sia::InvalidArgument("--n-min exceeds --n-max");
  }
  std::vector<sia::SearchSummary> rows;
  for (std::size_t n = a.n_min; n <= a.n_max; ++n) {
    auto o = a.opt;
    o.n    = n;
    rows.push_back(sia::max_sia_index(o));
  }
  std::cout << sia::growth_curve_csv(rows);
  return kFound;
}

// ---- family / reduce --------------------------------------------------------

struct FamilyArgs {
  std::string name;
  std::size_t n       = 4;
  bool        numeric = false;
};

int run_family(FamilyArgs const& a) {
  sia::MatrixSet s = [&] {
    if (a.name == "cerny") {
      return sia::cerny_set(a.n);
    }
    if (a.name == "wielandt") {
      return sia::wielandt_set(a.n);
    }
    if (a.name == "line") {
      return sia::MatrixSet({sia::line_automaton(a.n)});
    }
    throw sia::InvalidArgument("unknown family: " + a.name);
  }();
  print_json(sia::to_json(s, a.numeric));
  return kFound;
}

struct ReduceArgs {
  std::string kind;
  std::string file;
  bool        numeric = false;
};

int run_reduce(ReduceArgs const& a) {
  if (a.kind == "3sat") {
    std::ifstream in(a.file);
    if (!in) {
      throw sia::ParseError("cannot open " + a.file);
    }
    auto const enc = sia::encode_3sat(sia::parse_dimacs(in));
    json       j   = sia::to_json(enc.set, a.numeric);
    j["threshold"] = enc.threshold;
    print_json(j);
  } else {
    auto const inst = sia::parse_set_cover_json(sia::read_text_file(a.file));
    print_json(sia::to_json(sia::encode_set_cover(inst), a.numeric));
  }
  return kFound;
}

// ---- check ------------------------------------------------------------------

struct CheckArgs {
  std::string   property = "all";
  std::size_t   n        = 4;
  std::uint64_t samples  = 1000;
  std::uint64_t seed     = sia::kDefaultSeed;
};

int run_check(CheckArgs const& a) {
  std::vector<sia::PropertyReport> reports;
  auto want = [&](char const* p) { return a.property == "all" || a.property == p; };
  if (want("inclusion")) {
    reports.push_back(sia::check_inclusion_chain(a.n, a.samples, a.seed));
  }
  if (want("closure")) {
    reports.push_back(sia::check_scrambling_closure(a.n, a.samples, a.seed));
  }
  if (want("power")) {
    reports.push_back(sia::check_power_bounds(a.n, a.samples, a.seed));
  }
  if (want("local")) {
    reports.push_back(sia::check_local_exponent_bound(a.n, a.samples, a.seed));
  }
  json out  = json::array();
  int  code = kFound;
  for (auto const& r : reports) {
    json j{{"property", r.name},
           {"n", r.n},
           {"seed", a.seed},
           {"checked", r.checked},
           {"violations", r.violations}};
    if (r.counterexample) {
      j["counterexample"] = *r.counterexample;
    }
    if (!r.ok()) {
      code = kViolation;
    }
    out.push_back(std::move(j));
  }
  print_json(out);
  return code;
}

void add_search_flags(CLI::App* cmd, sia::SearchOptions& o) {
  cmd->add_option("--m", o.set_size, "Matrices per set")
      ->check(CLI::Range(std::size_t{1}, sia::kMaxSetSize));
  cmd->add_flag("--ic", o.ic_only, "Only initially connected sets");
  cmd->add_flag("--canonical", o.canonical,
                "One representative per relabeling class");
  cmd->add_option("--workers", o.workers, "Worker threads (env SIA_WORKERS)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cutoff", o.cutoff, "Per-set SIA-index cutoff")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", o.budget, "Maximum number of sets to enumerate");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SIA / Sarymsakov / scrambling analysis of stochastic matrix sets"};
  app.require_subcommand(1);
  app.set_version_flag("--version",
                       "matrix-set schema " + std::to_string(sia::kMatrixSetSchemaVersion));

  ClassifyArgs ca;
  auto*        classify = app.add_subcommand("classify", "Class memberships of each matrix");
  classify->add_option("file", ca.file, "Matrix-set JSON")->required()->check(CLI::ExistingFile);
  classify->add_option("--format", ca.format)->check(CLI::IsMember({"json", "text"}));
  classify->add_option("--tolerance", ca.tolerance, "Entries <= tolerance count as zero");
  classify->add_option("--sarymsakov-limit", ca.sar_limit, "Largest n for the Sarymsakov test");

  IndexArgs ia;
  auto*     index = app.add_subcommand("index", "Shortest product in a class");
  index->add_option("file", ia.file, "Matrix-set JSON")->required()->check(CLI::ExistingFile);
  index->add_option("--class", ia.cls)->check(CLI::IsMember({"pc", "scr", "sar", "sia", "all"}));
  index->add_option("--cutoff", ia.cutoff, "Longest word length tried")->check(CLI::PositiveNumber);
  index->add_option("--format", ia.format)->check(CLI::IsMember({"json", "text"}));
  index->add_option("--tolerance", ia.tolerance, "Entries <= tolerance count as zero");

  SearchArgs sa;
  sa.opt.workers = default_workers();
  auto* search   = app.add_subcommand("search", "Maximum SIA-index over automaton sets");
  search->add_option("--n", sa.opt.n, "Dimension")
      ->required()
      ->check(CLI::Range(std::size_t{1}, sia::kMaxSearchDegree));
  add_search_flags(search, sa.opt);
  search->add_option("--format", sa.format)->check(CLI::IsMember({"json", "csv", "text"}));
  search->add_flag("--no-timing", sa.no_timing, "Omit wall time (byte-stable output)");
  search->add_option("--dump-extremal", sa.dump_dir, "Write extremal sets as JSON here");

  CurveArgs cv;
  cv.opt.workers = default_workers();
  auto* curve    = app.add_subcommand("curve", "Growth curve CSV: n, max_index, 2n");
  curve->add_option("--n-min", cv.n_min)->check(CLI::Range(std::size_t{1}, sia::kMaxSearchDegree));
  curve->add_option("--n-max", cv.n_max)->check(CLI::Range(std::size_t{1}, sia::kMaxSearchDegree));
  add_search_flags(curve, cv.opt);

  FamilyArgs fa;
  auto*      family = app.add_subcommand("family", "Emit a named family as matrix-set JSON");
  family->add_option("--name", fa.name)->required()->check(CLI::IsMember({"cerny", "wielandt", "line"}));
  family->add_option("--n", fa.n)->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  family->add_flag("--numeric", fa.numeric, "Write stochastic entries");

  ReduceArgs ra;
  auto*      reduce = app.add_subcommand("reduce", "Encode a 3-SAT or set-cover instance");
  reduce->add_option("--kind", ra.kind)->required()->check(CLI::IsMember({"3sat", "setcover"}));
  reduce->add_option("file", ra.file, "DIMACS CNF or {universe, sets} JSON")
      ->required()
      ->check(CLI::ExistingFile);
  reduce->add_flag("--numeric", ra.numeric, "Write stochastic entries");

  CheckArgs ka;
  auto*     check = app.add_subcommand("check", "Seeded randomized property sweeps");
  check->add_option("--property", ka.property)
      ->check(CLI::IsMember({"inclusion", "closure", "power", "local", "all"}));
  check->add_option("--n", ka.n)->check(CLI::Range(std::size_t{2}, std::size_t{16}));
  check->add_option("--samples", ka.samples)->check(CLI::PositiveNumber);
  check->add_option("--seed", ka.seed);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*classify) return run_classify(ca);
    if (*index) return run_index(ia);
    if (*search) return run_search(sa);
    if (*curve) return run_curve(cv);
    if (*family) return run_family(fa);
    if (*reduce) return run_reduce(ra);
    if (*check) return run_check(ka);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
