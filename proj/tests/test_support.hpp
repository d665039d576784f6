#pragma once

// Shared helpers for the test suites: deterministic random big integers,
// the randomized seed corpus used by the construction and acceptance
// suites, and k-subset enumeration.

#include <cstdint>
#include <random>
#include <vector>

#include "mignotte/construction.hpp"
#include "mignotte/numtheory.hpp"

namespace testsupport {

using mignotte::Int;

// Uniform-ish value in [0, bound); bias from the modulo is irrelevant
// for test sampling.
inline Int rand_below(std::mt19937_64& rng, const Int& bound) {
  Int raw = 0;
  for (int i = 0; i < 4; ++i) {
    raw <<= 64;
    raw += Int(rng());
  }
  return raw % bound;
}

inline Int rand_range(std::mt19937_64& rng, const Int& lo, const Int& hi) {
  // inclusive lo, exclusive hi
  return lo + rand_below(rng, hi - lo);
}

// Random strictly increasing pairwise coprime list of length n.
inline std::vector<Int> random_coprime_list(std::mt19937_64& rng,
                                            std::size_t n) {
  std::vector<Int> terms;
  Int candidate = 1 + Int(rng() % 30);
  while (terms.size() < n) {
    bool ok = true;
    for (const Int& t : terms) {
      if (mignotte::gcd(t, candidate) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) terms.push_back(candidate);
    candidate += 1 + Int(rng() % 25);
  }
  return terms;
}

// The corpus behind the end-to-end construction checks: every Sylvester
// seed with q1 in {1,2,3} and n in {3..8}, a few fixed hand-built coprime
// lists, and randomized coprime lists. 105+ seeds; crossed with
// t in {1..5} that is 525+ construction cases.
inline std::vector<mignotte::SeedSequence> seed_corpus() {
  std::vector<mignotte::SeedSequence> corpus;
  for (int q1 = 1; q1 <= 3; ++q1) {
    for (std::size_t n = 3; n <= 8; ++n) {
      corpus.push_back(mignotte::sylvester_seed(q1, n));
    }
  }
  const std::vector<std::vector<Int>> fixed = {
      {1, 2, 3},          {2, 3, 5},           {3, 4, 5},
      {2, 3, 5, 7},       {5, 7, 9, 11, 13},   {3, 4, 5, 7, 11},
      {1, 2, 3, 5, 7, 11}, {9, 16, 25, 49, 121},
  };
  for (const auto& terms : fixed) {
    corpus.push_back(mignotte::validate_seed(terms));
  }
  std::mt19937_64 rng(0xC0FFEE);
  while (corpus.size() < 105) {
    std::size_t n = 3 + (rng() % 6);  // 3..8
    corpus.push_back(mignotte::validate_seed(random_coprime_list(rng, n)));
  }
  return corpus;
}

// All k-subsets of {0, 1, ..., n-1}.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n,
                                                       std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace testsupport
