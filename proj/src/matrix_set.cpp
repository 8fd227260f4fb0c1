#include "sia/matrix_set.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "sia/error.hpp"

namespace sia {

Word Word::rotated(std::size_t k) const {
  if (symbols.empty()) {
    return *this;
  }
  k %= symbols.size();
  std::vector<Symbol> out(symbols.begin() + static_cast<std::ptrdiff_t>(k),
                          symbols.end());
  out.insert(out.end(),
             symbols.begin(),
             symbols.begin() + static_cast<std::ptrdiff_t>(k));
  return Word(std::move(out));
}

std::string default_label(std::size_t i) {
  if (i < 26) {
    return std::string(1, static_cast<char>('A' + i));
  }
  return "A" + std::to_string(i);
}

MatrixSet::MatrixSet(std::vector<BooleanPattern> patterns,
                     std::vector<std::string>    labels)
    : patterns_(std::move(patterns)), labels_(std::move(labels)) {
  if (patterns_.empty()) {
    throw InvalidArgument("a matrix set must contain at least one pattern");
  }
  std::size_t const n = patterns_.front().dim();
  if (n == 0) {
    throw InvalidArgument("patterns must have dimension at least 1");
  }
  for (std::size_t i = 1; i < patterns_.size(); ++i) {
    if (patterns_[i].dim() != n) {
      throw DimensionMismatch("pattern " + std::to_string(i)
                              + " has dimension "
                              + std::to_string(patterns_[i].dim())
                              + ", expected " + std::to_string(n));
    }
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      labels_.push_back(default_label(i));
    }
  }
  if (labels_.size() != patterns_.size()) {
    throw InvalidArgument("expected " + std::to_string(patterns_.size())
                          + " labels, got " + std::to_string(labels_.size()));
  }
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("labels must be distinct");
  }
  for (auto const& l : labels_) {
    if (l.empty() || l.find_first_of(" \t\n") != std::string::npos) {
      throw InvalidArgument("labels must be non-empty and free of whitespace");
    }
  }
}

bool MatrixSet::all_automata() const {
  return std::all_of(patterns_.begin(), patterns_.end(), [](auto const& p) {
    return is_automaton(p);
  });
}

bool MatrixSet::all_row_allowable() const {
  return std::all_of(patterns_.begin(), patterns_.end(), [](auto const& p) {
    return is_row_allowable(p);
  });
}

BooleanPattern MatrixSet::union_pattern() const {
  return BooleanPattern::from_predicate(
      dim(), [&](std::size_t i, std::size_t j) {
        return std::any_of(patterns_.begin(),
                           patterns_.end(),
                           [&](auto const& p) { return p.test(i, j); });
      });
}

BooleanPattern MatrixSet::product(Word const& w) const {
  if (w.empty()) {
    throw InvalidArgument("the empty word has no product");
  }
  for (Symbol s : w.symbols) {
    if (s >= patterns_.size()) {
      throw InvalidArgument("symbol " + std::to_string(s)
                            + " outside alphabet");
    }
  }
  BooleanPattern acc = patterns_[w[0]];
  for (std::size_t i = 1; i < w.size(); ++i) {
    acc = acc * patterns_[w[i]];
  }
  return acc;
}

std::string MatrixSet::spell(Word const& w) const {
  bool const single = std::all_of(
      labels_.begin(), labels_.end(), [](auto const& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) {
      out += ' ';
    }
    out += labels_.at(w[i]);
  }
  return out;
}

Word MatrixSet::parse_word(std::string const& text) const {
  std::unordered_map<std::string, Symbol> index;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    index.emplace(labels_[i], static_cast<Symbol>(i));
  }
  Word out;
  auto lookup = [&](std::string const& tok) {
    auto it = index.find(tok);
    if (it == index.end()) {
      throw ParseError("unknown symbol '" + tok + "'");
    }
    out.symbols.push_back(it->second);
  };
  bool const single_chars = std::all_of(
      labels_.begin(), labels_.end(), [](auto const& l) { return l.size() == 1; });
  if (text.find_first_of(" \t") != std::string::npos || !single_chars) {
    std::istringstream in(text);
    std::string        tok;
    while (in >> tok) {
      lookup(tok);
    }
  } else {
    for (char c : text) {
      lookup(std::string(1, c));
    }
  }
  return out;
}

}  // namespace sia
