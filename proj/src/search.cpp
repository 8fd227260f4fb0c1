#include "sia/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "sia/error.hpp"
#include "sia/indices.hpp"

namespace sia {

std::uint64_t automaton_count(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (c > std::numeric_limits<std::uint64_t>::max() / n) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    c *= n;
  }
  return c;
}

Transformation automaton_from_code(std::size_t n, AutomatonCode code) {
  std::array<std::uint8_t, Transformation::kMaxDegree> img{};
  for (std::size_t i = n; i-- > 0;) {
    img[i] = static_cast<std::uint8_t>(code % n);
    code /= static_cast<AutomatonCode>(n);
  }
  return Transformation::from_images({img.data(), n});
}

AutomatonCode code_of(Transformation const& t) {
  AutomatonCode c = 0;
  for (std::uint8_t x : t.images()) {
    c = c * static_cast<AutomatonCode>(t.degree()) + x;
  }
  return c;
}

std::uint64_t universe_size(std::size_t n, std::size_t m) {
  std::uint64_t const total = automaton_count(n);
  if (m > total) {
    return 0;
  }
  // C(total, m) via the multiplicative formula in long double, exact for
  // the sizes that pass the budget.
  long double c = 1;
  for (std::size_t i = 0; i < m; ++i) {
    c = c * static_cast<long double>(total - i) / static_cast<long double>(i + 1);
  }
  if (c >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c + 0.5L);
}

namespace {

using Perm = std::array<std::uint8_t, kMaxCanonicalDegree>;

std::vector<Perm> const& relabelings(std::size_t n) {
  static std::array<std::vector<Perm>, kMaxCanonicalDegree + 1> cache;
  static std::once_flag flags[kMaxCanonicalDegree + 1];
  std::call_once(flags[n], [n] {
    Perm p{};
    std::iota(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n), 0);
    do {
      cache[n].push_back(p);
    } while (std::next_permutation(p.begin(),
                                   p.begin() + static_cast<std::ptrdiff_t>(n)));
  });
  return cache[n];
}

// Code of sigma f sigma^-1: the map sigma(i) -> sigma(f(i)).
AutomatonCode conjugate_code(std::size_t     n,
                             AutomatonCode   code,
                             Perm const&     sigma) {
  std::array<std::uint8_t, kMaxSearchDegree> f{};
  for (std::size_t i = n; i-- > 0;) {
    f[i] = static_cast<std::uint8_t>(code % n);
    code /= static_cast<AutomatonCode>(n);
  }
  std::array<std::uint8_t, kMaxSearchDegree> g{};
  for (std::size_t i = 0; i < n; ++i) {
    g[sigma[i]] = sigma[f[i]];
  }
  AutomatonCode out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out = out * static_cast<AutomatonCode>(n) + g[i];
  }
  return out;
}

void sort_small(std::span<AutomatonCode> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
    }
  }
}

bool is_canonical(std::size_t n, std::span<const AutomatonCode> codes) {
  std::array<AutomatonCode, kMaxSetSize> image{};
  std::span<AutomatonCode> img(image.data(), codes.size());
  for (Perm const& sigma : relabelings(n)) {
    for (std::size_t k = 0; k < codes.size(); ++k) {
      img[k] = conjugate_code(n, codes[k], sigma);
    }
    sort_small(img);
    if (std::lexicographical_compare(
            img.begin(), img.end(), codes.begin(), codes.end())) {
      return false;
    }
  }
  return true;
}

bool initially_connected(std::span<const Transformation> gens) {
  std::size_t const n = gens.front().degree();
  std::array<std::uint32_t, Transformation::kMaxDegree> adj{};
  for (auto const& g : gens) {
    for (std::size_t i = 0; i < n; ++i) {
      adj[i] |= std::uint32_t{1} << g[i];
    }
  }
  std::uint32_t const all
      = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  for (std::size_t root = 0; root < n; ++root) {
    std::uint32_t seen     = std::uint32_t{1} << root;
    std::uint32_t frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == all) {
      return true;
    }
  }
  return false;
}

void check_shape(std::size_t n, std::size_t m) {
  if (n < 1 || n > kMaxSearchDegree) {
    throw InvalidArgument("search dimension must be in 1.."
                          + std::to_string(kMaxSearchDegree));
  }
  if (m < 1 || m > kMaxSetSize) {
    throw InvalidArgument("set size must be in 1.."
                          + std::to_string(kMaxSetSize));
  }
}

}  // namespace

std::vector<AutomatonCode> canonical_form(std::size_t                    n,
                                          std::span<const AutomatonCode> codes) {
  if (n > kMaxCanonicalDegree) {
    throw LimitExceeded("canonical forms are computed for n <= "
                        + std::to_string(kMaxCanonicalDegree));
  }
  std::vector<AutomatonCode> best(codes.begin(), codes.end());
  sort_small(best);
  std::vector<AutomatonCode> img(codes.size());
  for (Perm const& sigma : relabelings(n)) {
    for (std::size_t k = 0; k < codes.size(); ++k) {
      img[k] = conjugate_code(n, codes[k], sigma);
    }
    sort_small(img);
    if (img < best) {
      best = img;
    }
  }
  return best;
}

AutomatonSetEnumerator::AutomatonSetEnumerator(std::size_t n,
                                               std::size_t m,
                                               bool        ic_only,
                                               bool        canonical)
    : n_(n),
      m_(m),
      ic_only_(ic_only),
      canonical_(canonical && n <= kMaxCanonicalDegree),
      total_(automaton_count(n)) {
  check_shape(n, m);
}

bool AutomatonSetEnumerator::advance() {
  if (!started_) {
    started_ = true;
    if (m_ > total_) {
      return false;
    }
    for (std::size_t k = 0; k < m_; ++k) {
      codes_[k] = static_cast<AutomatonCode>(k);
    }
  } else {
    std::size_t i = m_;
    while (i > 0 && codes_[i - 1] == total_ - m_ + (i - 1)) {
      --i;
    }
    if (i == 0) {
      return false;
    }
    ++codes_[i - 1];
    for (std::size_t j = i; j < m_; ++j) {
      codes_[j] = codes_[j - 1] + 1;
    }
  }
  for (std::size_t k = 0; k < m_; ++k) {
    gens_[k] = automaton_from_code(n_, codes_[k]);
  }
  return true;
}

bool AutomatonSetEnumerator::accepted() const {
  if (ic_only_ && !initially_connected(transformations())) {
    return false;
  }
  return !canonical_ || is_canonical(n_, codes());
}

bool AutomatonSetEnumerator::next() {
  if (done_) {
    return false;
  }
  while (advance()) {
    if (accepted()) {
      return true;
    }
  }
  done_ = true;
  return false;
}

std::span<const AutomatonCode> AutomatonSetEnumerator::codes() const noexcept {
  return {codes_.data(), m_};
}

std::span<const Transformation>
AutomatonSetEnumerator::transformations() const noexcept {
  return {gens_.data(), m_};
}

MatrixSet AutomatonSetEnumerator::matrix_set() const {
  std::vector<BooleanPattern> ps;
  for (auto const& g : transformations()) {
    ps.push_back(g.to_pattern());
  }
  return MatrixSet(std::move(ps));
}

namespace {

using CodeTuple = std::array<AutomatonCode, kMaxSetSize>;

struct Partial {
  std::size_t            max_index  = 0;
  std::vector<CodeTuple> extremal;
  std::uint64_t          enumerated = 0;
  std::uint64_t          sia_sets   = 0;
  std::uint64_t          unresolved = 0;

  void record(std::size_t index, CodeTuple const& codes) {
    if (sia_sets == 1 || index > max_index) {
      max_index = index;
      extremal.clear();
    }
    if (index == max_index) {
      extremal.push_back(codes);
    }
  }

  void merge(Partial&& other) {
    enumerated += other.enumerated;
    unresolved += other.unresolved;
    if (other.sia_sets == 0) {
      return;
    }
    if (sia_sets == 0 || other.max_index > max_index) {
      max_index = other.max_index;
      extremal  = std::move(other.extremal);
    } else if (other.max_index == max_index) {
      extremal.insert(extremal.end(), other.extremal.begin(), other.extremal.end());
    }
    sia_sets += other.sia_sets;
  }
};

// All sets whose smallest code is `first`.
void process_chunk(SearchOptions const&                      opt,
                   std::vector<Transformation> const&        table,
                   AutomatonCode                             first,
                   Partial&                                  out) {
  std::size_t const   n     = opt.n;
  std::size_t const   m     = opt.set_size;
  std::uint64_t const total = automaton_count(n);
  if (first + m > total) {
    return;
  }
  auto const decode = [&](AutomatonCode c) {
    return table.empty() ? automaton_from_code(n, c) : table[c];
  };
  CodeTuple                               codes{};
  std::array<Transformation, kMaxSetSize> gens{};
  for (std::size_t k = 0; k < m; ++k) {
    codes[k] = first + static_cast<AutomatonCode>(k);
    gens[k]  = decode(codes[k]);
  }
  std::span<const Transformation> gspan(gens.data(), m);
  std::span<const AutomatonCode>  cspan(codes.data(), m);
  bool const canonical = opt.canonical && n <= kMaxCanonicalDegree;
  while (true) {
    if ((!opt.ic_only || initially_connected(gspan))
        && (!canonical || is_canonical(n, cspan))) {
      ++out.enumerated;
      IndexResult const r = sia_index(gspan, opt.cutoff);
      if (r.status == IndexStatus::found) {
        ++out.sia_sets;
        out.record(*r.value, codes);
      } else if (r.status == IndexStatus::cutoff_reached) {
        ++out.unresolved;
      }
    }
    // Next combination of positions 1..m-1.
    std::size_t i = m;
    while (i > 1 && codes[i - 1] == total - m + (i - 1)) {
      --i;
    }
    if (i <= 1) {
      return;
    }
    ++codes[i - 1];
    gens[i - 1] = decode(codes[i - 1]);
    for (std::size_t j = i; j < m; ++j) {
      codes[j] = codes[j - 1] + 1;
      gens[j]  = decode(codes[j]);
    }
  }
}

}  // namespace

SearchSummary max_sia_index(SearchOptions const& opt) {
  check_shape(opt.n, opt.set_size);
  if (opt.workers < 1) {
    throw InvalidArgument("worker count must be at least 1");
  }
  if (opt.cutoff && *opt.cutoff < 1) {
    throw InvalidArgument("cutoff must be at least 1");
  }
  std::uint64_t const universe = universe_size(opt.n, opt.set_size);
  if (universe > opt.budget) {
    throw LimitExceeded("search universe of " + std::to_string(universe)
                        + " sets exceeds the budget of "
                        + std::to_string(opt.budget));
  }
  auto const start = std::chrono::steady_clock::now();

  std::uint64_t const         total = automaton_count(opt.n);
  std::vector<Transformation> table;
  if (total <= (std::uint64_t{1} << 20)) {
    table.reserve(total);
    for (std::uint64_t c = 0; c < total; ++c) {
      table.push_back(automaton_from_code(opt.n, static_cast<AutomatonCode>(c)));
    }
  }

  std::atomic<std::uint64_t> next_chunk{0};
  std::vector<Partial>       partials(opt.workers);
  auto work = [&](std::size_t w) {
    for (std::uint64_t c = next_chunk++; c < total; c = next_chunk++) {
      process_chunk(opt, table, static_cast<AutomatonCode>(c), partials[w]);
    }
  };
  if (opt.workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < opt.workers; ++w) {
      threads.emplace_back(work, w);
    }
    for (auto& t : threads) {
      t.join();
    }
  }
  Partial total_partial;
  for (auto& p : partials) {
    total_partial.merge(std::move(p));
  }

  SearchSummary s;
  s.n          = opt.n;
  s.set_size   = opt.set_size;
  s.ic_only    = opt.ic_only;
  s.canonical  = opt.canonical && opt.n <= kMaxCanonicalDegree;
  s.max_index  = total_partial.max_index;
  s.enumerated = total_partial.enumerated;
  s.sia_sets   = total_partial.sia_sets;
  s.unresolved = total_partial.unresolved;

  std::set<std::vector<AutomatonCode>> classes;
  s.extremal_up_to_relabeling = opt.n <= kMaxCanonicalDegree;
  for (CodeTuple const& t : total_partial.extremal) {
    std::span<const AutomatonCode> codes(t.data(), opt.set_size);
    if (s.extremal_up_to_relabeling) {
      classes.insert(canonical_form(opt.n, codes));
    } else {
      classes.emplace(codes.begin(), codes.end());
    }
  }
  s.extremal_count = classes.size();
  for (auto const& codes : classes) {
    if (s.extremal_examples.size() >= opt.max_examples) {
      break;
    }
    std::vector<Transformation> gens;
    std::vector<BooleanPattern> pats;
    for (AutomatonCode c : codes) {
      gens.push_back(automaton_from_code(opt.n, c));
      pats.push_back(gens.back().to_pattern());
    }
    IndexResult const r = sia_index(gens, opt.cutoff);
    s.extremal_examples.push_back(
        {MatrixSet(std::move(pats)), r.witness.value_or(Word{})});
  }
  s.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return s;
}

std::string summary_csv_header() {
  return "n,set_size,ic_only,max_index,extremal_count,enumerated,wall_time_ms";
}

std::string summary_csv_row(SearchSummary const& s, bool include_timing) {
  std::ostringstream out;
  out << s.n << ',' << s.set_size << ',' << (s.ic_only ? "true" : "false")
      << ',' << s.max_index << ',' << s.extremal_count << ',' << s.enumerated
      << ',' << (include_timing ? s.wall_time.count() : 0);
  return out.str();
}

std::string growth_curve_csv(std::span<const SearchSummary> summaries) {
  std::ostringstream out;
  out << "n,max_index,2n\n";
  for (auto const& s : summaries) {
    out << s.n << ',' << s.max_index << ',' << 2 * s.n << '\n';
  }
  return out.str();
}

}  // namespace sia
