#include "sia/lyndon.hpp"

#include <limits>
#include <optional>

#include "sia/error.hpp"

namespace sia {

LyndonWords::LyndonWords(std::size_t alphabet, std::size_t max_length)
    : alphabet_(alphabet), max_length_(max_length) {
  if (alphabet == 0 || max_length == 0) {
    throw InvalidArgument("Lyndon words need a nonempty alphabet and length");
  }
}

bool LyndonWords::next() {
  auto& w = current_.symbols;
  if (!started_) {
    started_ = true;
    w.assign(1, 0);
    return true;
  }
  if (w.empty()) {
    return false;
  }
  std::size_t const m   = w.size();
  Symbol const      top = static_cast<Symbol>(alphabet_ - 1);
  while (w.size() < max_length_) {
    w.push_back(w[w.size() - m]);
  }
  while (!w.empty() && w.back() == top) {
    w.pop_back();
  }
  if (w.empty()) {
    return false;
  }
  ++w.back();
  return true;
}

std::vector<Word> lyndon_words(std::size_t alphabet, std::size_t max_length) {
  std::vector<Word> out;
  LyndonWords       gen(alphabet, max_length);
  while (gen.next()) {
    out.push_back(gen.word());
  }
  return out;
}

namespace {

int moebius(std::size_t d) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) {
        return 0;
      }
      mu = -mu;
    }
  }
  return d > 1 ? -mu : mu;
}

// k^e, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t k, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (k != 0 && r > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::nullopt;
    }
    r *= k;
  }
  return r;
}

}  // namespace

std::uint64_t lyndon_word_count(std::size_t alphabet, std::size_t length) {
  if (length == 0) {
    return 0;
  }
  // The d = 1 term dominates; if it fits, every other term does too.
  if (!checked_pow(alphabet, length)) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  std::uint64_t plus = 0, minus = 0;
  for (std::size_t d = 1; d <= length; ++d) {
    if (length % d != 0) {
      continue;
    }
    int const mu = moebius(d);
    if (mu > 0) {
      plus += *checked_pow(alphabet, length / d);
    } else if (mu < 0) {
      minus += *checked_pow(alphabet, length / d);
    }
  }
  return (plus - minus) / length;
}

bool is_lyndon(Word const& w) {
  if (w.empty()) {
    return false;
  }
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (!(w < w.rotated(k))) {
      return false;
    }
  }
  return true;
}

}  // namespace sia
