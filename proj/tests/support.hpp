#pragma once

#include "rotlab/spec.hpp"

#include <random>
#include <string>
#include <vector>

namespace testgen {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Alternating word over two generators, exponents in [-max_exp, max_exp] \ {0}.
inline rotlab::Word word(Rng& rng, const std::vector<std::string>& alphabet, int max_syllables, long long max_exp) {
  std::vector<rotlab::Syllable> v;
  int n = static_cast<int>(uniform(rng, 0, max_syllables));
  std::size_t g = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(alphabet.size()) - 1));
  for (int i = 0; i < n; ++i) {
    long long e = 0;
    while (e == 0) e = uniform(rng, -max_exp, max_exp);
    v.push_back({alphabet[g], e});
    g = (g + 1) % alphabet.size();
  }
  return rotlab::Word(std::move(v));
}

inline std::vector<rotlab::Rational> poly(Rng& rng, int len, long long max_coeff) {
  std::vector<rotlab::Rational> out;
  for (int i = 0; i < len; ++i) {
    rotlab::Rational r(static_cast<long>(uniform(rng, -max_coeff, max_coeff)), static_cast<unsigned long>(uniform(rng, 1, 6)));
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

/// Valid G_{n/m}(p,q) with parameters in the given box.
inline rotlab::GroupSpec gnm(Rng& rng, long long max_pq, long long max_m) {
  while (true) {
    long long p = uniform(rng, 1, max_pq), q = uniform(rng, 1, max_pq), m = uniform(rng, 3, max_m);
    long long n = uniform(rng, 1, m - 1);
    if (rotlab::gcd_ll(n, m) == 1) return rotlab::GroupSpec::gnm(p, q, n, m);
  }
}

}  // namespace testgen
