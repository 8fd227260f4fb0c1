#include "sia/properties.hpp"

#include "sia/classes.hpp"
#include "sia/error.hpp"

namespace sia {

BooleanPattern PatternSampler::row_allowable(std::size_t n) {
  std::uniform_real_distribution<double> density(0.05, 0.7);
  return row_allowable(n, density(rng_));
}

BooleanPattern PatternSampler::row_allowable(std::size_t n, double density) {
  std::bernoulli_distribution           bit(density);
  std::uniform_int_distribution<std::size_t> col(0, n - 1);
  std::vector<StateSet>                 rows;
  for (std::size_t i = 0; i < n; ++i) {
    StateSet r(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (bit(rng_)) {
        r.set(j);
      }
    }
    if (r.empty()) {
      r.set(col(rng_));
    }
    rows.push_back(std::move(r));
  }
  return BooleanPattern::from_rows(rows);
}

BooleanPattern PatternSampler::automaton(std::size_t n) {
  std::uniform_int_distribution<std::size_t> col(0, n - 1);
  std::vector<std::size_t>                   img(n);
  for (auto& x : img) {
    x = col(rng_);
  }
  return BooleanPattern::from_images(img);
}

namespace {

void note_violation(PropertyReport& r, BooleanPattern const& p,
                    std::string const& what) {
  ++r.violations;
  if (!r.counterexample) {
    r.counterexample = what + "\n" + p.to_string();
  }
}

// Bound the rejection loops so a sampler that never hits the target class
// cannot hang a sweep.
constexpr std::uint64_t kMaxAttemptsPerSample = 1000;

}  // namespace

PropertyReport check_inclusion_chain(std::size_t   n,
                                     std::uint64_t samples,
                                     std::uint64_t seed) {
  PropertyReport r;
  r.name = "inclusion_chain";
  r.n    = n;
  PatternSampler sampler(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    BooleanPattern const p   = sampler.row_allowable(n);
    bool const           pc  = is_positive_column(p);
    bool const           scr = is_scrambling(p);
    bool const           sar = is_sarymsakov(p);
    bool const           sia = is_sia(p).is_sia;
    ++r.checked;
    if ((pc && !scr) || (scr && !sar) || (sar && !sia)) {
      note_violation(r, p, "pc=" + std::to_string(pc) + " scr="
                               + std::to_string(scr) + " sar="
                               + std::to_string(sar) + " sia="
                               + std::to_string(sia));
    }
  }
  return r;
}

PropertyReport check_scrambling_closure(std::size_t   n,
                                        std::uint64_t samples,
                                        std::uint64_t seed) {
  PropertyReport r;
  r.name = "scrambling_closure";
  r.n    = n;
  PatternSampler sampler(seed);
  auto draw = [&] {
    for (std::uint64_t a = 0; a < kMaxAttemptsPerSample; ++a) {
      BooleanPattern p = sampler.row_allowable(n);
      if (is_scrambling(p)) {
        return p;
      }
    }
    throw LimitExceeded("could not sample a scrambling pattern");
  };
  for (std::uint64_t s = 0; s < samples; ++s) {
    BooleanPattern const a = draw();
    BooleanPattern const b = draw();
    ++r.checked;
    if (!is_scrambling(a * b)) {
      note_violation(r, a, "product with\n" + b.to_string() + "is not scrambling");
    }
  }
  return r;
}

PropertyReport check_power_bounds(std::size_t   n,
                                  std::uint64_t samples,
                                  std::uint64_t seed) {
  PropertyReport r;
  r.name = "power_bounds";
  r.n    = n;
  PatternSampler sampler(seed);
  std::uint64_t  attempts = 0;
  std::uniform_real_distribution<double> density(0.05, 0.5);
  while (r.checked < samples) {
    if (++attempts > samples * kMaxAttemptsPerSample) {
      throw LimitExceeded("could not sample enough SIA patterns");
    }
    BooleanPattern const p = sampler.row_allowable(n, density(sampler.engine()));
    if (!is_sia(p).is_sia) {
      continue;
    }
    ++r.checked;
    std::size_t const k = eventually_positive_columns(p).count();
    // k^2 - 4k + 3 + n, evaluated without unsigned wrap.
    std::size_t const refined = k * k + 3 + n - 4 * k;
    if (k == 0 || !is_positive_column(power(p, refined))) {
      note_violation(r, p, "k=" + std::to_string(k) + ": power "
                               + std::to_string(refined)
                               + " has no positive column");
    } else if (!is_positive_column(power(p, sia_power_cap(n)))) {
      note_violation(r, p, "power n^2-3n+3 has no positive column");
    }
  }
  return r;
}

PropertyReport check_local_exponent_bound(std::size_t   n,
                                          std::uint64_t samples,
                                          std::uint64_t seed) {
  PropertyReport r;
  r.name = "local_exponent_bound";
  r.n    = n;
  PatternSampler sampler(seed);
  std::uint64_t  attempts = 0;
  std::uniform_real_distribution<double> density(0.1, 0.6);
  while (r.checked < samples) {
    if (++attempts > samples * kMaxAttemptsPerSample) {
      throw LimitExceeded("could not sample enough primitive patterns");
    }
    BooleanPattern const p = sampler.row_allowable(n, density(sampler.engine()));
    if (!local_exponent(p, n)) {
      continue;  // not primitive
    }
    ++r.checked;
    for (std::size_t k = 1; k <= n; ++k) {
      auto const e = local_exponent(p, k);
      if (!e || *e > n * n + k + 2 - 3 * n) {
        note_violation(r, p, "local exponent " + std::to_string(k) + " = "
                                 + (e ? std::to_string(*e) : "none"));
        break;
      }
    }
  }
  return r;
}

}  // namespace sia
