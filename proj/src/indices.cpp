#include "sia/indices.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>
#include <unordered_map>

#include "sia/error.hpp"
#include "sia/lyndon.hpp"

namespace sia {

std::string_view to_string(IndexStatus s) {
  switch (s) {
    case IndexStatus::found:
      return "found";
    case IndexStatus::cutoff_reached:
      return "cutoff_reached";
    case IndexStatus::no_product:
      return "no_product";
  }
  return "?";
}

std::size_t default_sia_cutoff(std::size_t n) {
  return std::max<std::size_t>(1, (n * n * n - n) / 6);
}

std::size_t default_bfs_cutoff(std::size_t n) {
  if (n >= 58) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::max<std::size_t>(1, n * (std::size_t{1} << n));
}

namespace {

void require_row_allowable(MatrixSet const& s) {
  if (!s.all_row_allowable()) {
    throw InvalidArgument("every pattern of the set must be row-allowable");
  }
}

bool use_transformations(MatrixSet const& s) {
  return s.dim() <= Transformation::kMaxDegree && s.all_automata();
}

std::vector<Transformation> to_transformations(MatrixSet const& s) {
  std::vector<Transformation> out;
  out.reserve(s.size());
  for (auto const& p : s.patterns()) {
    out.push_back(Transformation::from_pattern(p));
  }
  return out;
}

IndexResult degenerate_single_state(MatrixClass c) {
  IndexResult r;
  r.class_tag      = c;
  r.status         = IndexStatus::found;
  r.value          = 0;
  r.witness        = Word{};
  r.explored_up_to = 0;
  return r;
}

// Layered BFS over distinct products. `in_class` is evaluated on each new
// element in discovery order, which is lexicographic order of the shortest
// words within a layer.
template <typename Element, typename InClass>
IndexResult layered_bfs(std::vector<Element> const& gens,
                        MatrixClass                 tag,
                        std::size_t                 cutoff,
                        InClass&&                   in_class) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::unordered_map<Element, std::uint32_t> index;
  std::vector<Element>                       elems;
  std::vector<std::uint32_t>                 parent;
  std::vector<Symbol>                        letter;

  auto word_of = [&](std::uint32_t i) {
    std::vector<Symbol> w;
    for (; i != kNone; i = parent[i]) {
      w.push_back(letter[i]);
    }
    std::reverse(w.begin(), w.end());
    return Word(std::move(w));
  };
  auto found = [&](std::uint32_t i, std::size_t len) {
    IndexResult r;
    r.class_tag      = tag;
    r.status         = IndexStatus::found;
    r.value          = len;
    r.witness        = word_of(i);
    r.explored_up_to = len;
    return r;
  };
  auto add = [&](Element&& e, std::uint32_t from, Symbol a) -> bool {
    auto [it, inserted]
        = index.try_emplace(e, static_cast<std::uint32_t>(elems.size()));
    if (!inserted) {
      return false;
    }
    if (elems.size() >= kMaxBfsElements) {
      throw LimitExceeded("product BFS exceeded "
                          + std::to_string(kMaxBfsElements)
                          + " distinct patterns");
    }
    elems.push_back(std::move(e));
    parent.push_back(from);
    letter.push_back(a);
    return true;
  };

  for (Symbol a = 0; a < gens.size(); ++a) {
    if (add(Element(gens[a]), kNone, a) && in_class(elems.back())) {
      return found(static_cast<std::uint32_t>(elems.size() - 1), 1);
    }
  }
  std::size_t begin = 0;
  std::size_t end   = elems.size();
  std::size_t len   = 1;
  for (; len < cutoff && begin < end; ++len) {
    for (std::size_t i = begin; i < end; ++i) {
      for (Symbol a = 0; a < gens.size(); ++a) {
        if (add(elems[i] * gens[a], static_cast<std::uint32_t>(i), a)
            && in_class(elems.back())) {
          return found(static_cast<std::uint32_t>(elems.size() - 1), len + 1);
        }
      }
    }
    begin = end;
    end   = elems.size();
  }
  IndexResult r;
  r.class_tag = tag;
  if (begin == end) {
    // The closure is complete: no product of any length is in the class.
    r.status         = IndexStatus::no_product;
    r.explored_up_to = len;
  } else {
    r.status         = IndexStatus::cutoff_reached;
    r.explored_up_to = cutoff;
  }
  return r;
}

template <class Element, class IsSia>
bool lyndon_range(std::span<const Element> gens,
                  std::size_t              first_len,
                  std::size_t              last_len,
                  std::vector<Element>&    prefix,
                  IsSia&                   is_sia_element,
                  IndexResult&             r) {
  if (prefix.size() < last_len + 1) {
    prefix.resize(last_len + 1);
  }
  for (std::size_t len = first_len; len <= last_len; ++len) {
    bool const stopped = for_each_lyndon_word_of_length(
        gens.size(), len, [&](std::span<const Symbol> w, std::size_t changed) {
          for (std::size_t i = changed; i < len; ++i) {
            prefix[i + 1] = i == 0 ? gens[w[0]] : prefix[i] * gens[w[i]];
          }
          if (is_sia_element(prefix[len])) {
            r.witness = Word(std::vector<Symbol>(w.begin(), w.end()));
            return true;
          }
          return false;
        });
    if (stopped) {
      r.status         = IndexStatus::found;
      r.value          = len;
      r.explored_up_to = len;
      return true;
    }
  }
  return false;
}

// Short words first: most SIA sets resolve there, before the existence
// test is worth running.
template <class Element, class Exists, class IsSia>
IndexResult lyndon_search(std::span<const Element> gens,
                          std::size_t              n,
                          std::size_t              cutoff,
                          Exists&&                 exists,
                          IsSia&&                  is_sia_element) {
  thread_local std::vector<Element> prefix;
  IndexResult                       r;
  r.class_tag               = MatrixClass::sia;
  std::size_t const early   = std::min(cutoff, n);
  if (lyndon_range(gens, 1, early, prefix, is_sia_element, r)) {
    return r;
  }
  if (!exists()) {
    r.status         = IndexStatus::no_product;
    r.explored_up_to = 0;
    return r;
  }
  if (lyndon_range(gens, early + 1, cutoff, prefix, is_sia_element, r)) {
    return r;
  }
  r.status         = IndexStatus::cutoff_reached;
  r.explored_up_to = cutoff;
  return r;
}

IndexResult no_product(MatrixClass c) {
  IndexResult r;
  r.class_tag = c;
  r.status    = IndexStatus::no_product;
  return r;
}

}  // namespace

bool exists_sia_product_automata(std::span<const Transformation> gens) {
  if (gens.empty()) {
    throw InvalidArgument("empty generator list");
  }
  std::size_t const n = gens.front().degree();
  if (n <= 1) {
    return true;
  }
  // mergeable[i * n + j] (i < j): some word sends i and j to one state.
  // Grown to a fixed point; each round either marks a pair or stops.
  std::array<bool, Transformation::kMaxDegree * Transformation::kMaxDegree>
      mergeable{};
  auto const key = [n](std::size_t i, std::size_t j) {
    return i < j ? i * n + j : j * n + i;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (mergeable[key(i, j)]) {
          continue;
        }
        for (auto const& g : gens) {
          if (g[i] == g[j] || mergeable[key(g[i], g[j])]) {
            mergeable[key(i, j)] = true;
            changed              = true;
            break;
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!mergeable[key(i, j)]) {
        return false;
      }
    }
  }
  return true;
}

bool exists_sia_product_bfs(MatrixSet const& s) {
  require_row_allowable(s);
  IndexResult const r
      = layered_bfs(s.patterns(),
                    MatrixClass::positive_column,
                    std::numeric_limits<std::size_t>::max(),
                    [](BooleanPattern const& p) { return is_positive_column(p); });
  return r.status == IndexStatus::found;
}

bool exists_sia_product(MatrixSet const& s) {
  require_row_allowable(s);
  if (use_transformations(s)) {
    return exists_sia_product_automata(to_transformations(s));
  }
  return exists_sia_product_bfs(s);
}

IndexResult class_index_bfs(MatrixSet const& s,
                            MatrixClass      c,
                            std::size_t      cutoff) {
  if (cutoff < 1) {
    throw InvalidArgument("cutoff must be at least 1");
  }
  require_row_allowable(s);
  if (use_transformations(s)) {
    return layered_bfs(
        to_transformations(s), c, cutoff, [c](Transformation const& t) {
          switch (c) {
            case MatrixClass::positive_column:
              return t.is_constant();
            case MatrixClass::sia:
              return t.is_sia();
            default:
              return in_class(t.to_pattern(), c);
          }
        });
  }
  return layered_bfs(s.patterns(), c, cutoff, [c](BooleanPattern const& p) {
    return in_class(p, c);
  });
}

IndexResult sia_index(std::span<const Transformation> gens,
                      std::optional<std::size_t>      cutoff) {
  if (gens.empty()) {
    throw InvalidArgument("empty generator list");
  }
  if (cutoff && *cutoff < 1) {
    throw InvalidArgument("cutoff must be at least 1");
  }
  std::size_t const n = gens.front().degree();
  if (n == 1) {
    return degenerate_single_state(MatrixClass::sia);
  }
  return lyndon_search(
      gens, n, cutoff.value_or(default_sia_cutoff(n)),
      [gens] { return exists_sia_product_automata(gens); },
      [](Transformation const& t) { return t.is_sia(); });
}

IndexResult sia_index(MatrixSet const& s, std::optional<std::size_t> cutoff) {
  require_row_allowable(s);
  if (cutoff && *cutoff < 1) {
    throw InvalidArgument("cutoff must be at least 1");
  }
  if (use_transformations(s)) {
    return sia_index(to_transformations(s), cutoff);
  }
  if (s.dim() == 1) {
    return degenerate_single_state(MatrixClass::sia);
  }
  return lyndon_search(
      std::span<const BooleanPattern>(s.patterns()), s.dim(),
      cutoff.value_or(default_sia_cutoff(s.dim())),
      [&s] { return exists_sia_product_bfs(s); },
      [](BooleanPattern const& p) { return is_sia(p).is_sia; });
}

IndexResult naive_sia_index(MatrixSet const& s, std::size_t cutoff) {
  require_row_allowable(s);
  if (cutoff < 1) {
    throw InvalidArgument("cutoff must be at least 1");
  }
  if (s.dim() == 1) {
    return degenerate_single_state(MatrixClass::sia);
  }
  if (!exists_sia_product_bfs(s)) {
    return no_product(MatrixClass::sia);
  }
  Symbol const k = static_cast<Symbol>(s.size());
  for (std::size_t len = 1; len <= cutoff; ++len) {
    Word w(std::vector<Symbol>(len, 0));
    while (true) {
      if (is_sia(s.product(w)).is_sia) {
        IndexResult r;
        r.status         = IndexStatus::found;
        r.value          = len;
        r.witness        = w;
        r.explored_up_to = len;
        return r;
      }
      // Odometer increment, last symbol fastest: lexicographic order.
      std::size_t i = len;
      while (i > 0 && w.symbols[i - 1] == k - 1) {
        w.symbols[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++w.symbols[i - 1];
    }
  }
  IndexResult r;
  r.status         = IndexStatus::cutoff_reached;
  r.explored_up_to = cutoff;
  return r;
}

IndexResult class_index(MatrixSet const&           s,
                        MatrixClass                c,
                        std::optional<std::size_t> cutoff) {
  if (c == MatrixClass::sia) {
    return sia_index(s, cutoff);
  }
  return class_index_bfs(s, c, cutoff.value_or(default_bfs_cutoff(s.dim())));
}

IndexResult pc_index(MatrixSet const& s, std::optional<std::size_t> cutoff) {
  return class_index(s, MatrixClass::positive_column, cutoff);
}

IndexResult scr_index(MatrixSet const& s, std::optional<std::size_t> cutoff) {
  return class_index(s, MatrixClass::scrambling, cutoff);
}

IndexResult sar_index(MatrixSet const& s, std::optional<std::size_t> cutoff) {
  return class_index(s, MatrixClass::sarymsakov, cutoff);
}

}  // namespace sia
