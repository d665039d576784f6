#pragma once

//! Direct construction of (k,n)-Mignotte sequences: shift a pairwise
//! coprime seed by a multiple of the product of all pairwise differences.
//! Also the checkers for the inequalities that make the construction
//! work, usable on their own.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mignotte/numtheory.hpp"

namespace mignotte {

/// Strictly increasing, pairwise coprime positive integers q_1 < ... < q_n
/// with n >= 3. The constructor enforces the invariants and names the
/// violation it rejects.
class SeedSequence {
 public:
  explicit SeedSequence(std::vector<Int> terms) : terms_(std::move(terms)) {
    if (terms_.size() < 3) throw Error("sequence too short");
    for (const Int& q : terms_) {
      if (q < 1) throw Error("not positive");
    }
    for (std::size_t i = 0; i + 1 < terms_.size(); ++i) {
      if (!(terms_[i] < terms_[i + 1])) throw Error("not increasing");
    }
    if (auto pair = find_noncoprime_pair(terms_)) {
      throw Error("not coprime: (" + pair->first.str() + "," +
                  pair->second.str() + ")");
    }
  }

  std::size_t size() const { return terms_.size(); }
  const std::vector<Int>& terms() const { return terms_; }
  const Int& operator[](std::size_t i) const { return terms_[i]; }
  const Int& front() const { return terms_.front(); }
  const Int& back() const { return terms_.back(); }

 private:
  std::vector<Int> terms_;
};

/// Validate a raw list as a seed sequence.
inline SeedSequence validate_seed(std::vector<Int> terms) {
  return SeedSequence(std::move(terms));
}

/// Sylvester-style recursion q_{k+1} = 1 + q_1 * ... * q_k. The terms it
/// produces are pairwise coprime, so any prefix of length >= 3 is a valid
/// seed.
inline SeedSequence sylvester_seed(const Int& q1, std::size_t n) {
  if (q1 < 1) throw Error("q1 must be positive");
  if (n < 3) throw Error("sequence too short");
  std::vector<Int> terms;
  terms.reserve(n);
  terms.push_back(q1);
  Int running = q1;
  while (terms.size() < n) {
    Int next = 1 + running;
    running *= next;
    terms.push_back(std::move(next));
  }
  return SeedSequence(std::move(terms));
}

/// Product of all pairwise differences x_j - x_i over i < j. Requires a
/// strictly increasing list of at least two terms; every factor is then
/// positive, so the product is >= x_n - x_1 >= 1.
inline Int difference_product(const std::vector<Int>& xs) {
  if (xs.size() < 2) throw Error("sequence too short");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) throw Error("not increasing");
  }
  Int product = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      product *= xs[j] - xs[i];
    }
  }
  return product;
}

inline Int difference_product(const SeedSequence& seed) {
  return difference_product(seed.terms());
}

/// Moduli m_i = t * D + q_i where D is the seed's difference product and
/// t >= 1 the iteration count. Keeps the provenance (seed, D, t) so the
/// moduli can be re-derived and cross-checked later.
class MignotteModuli {
 public:
  MignotteModuli(SeedSequence seed, Int iterations)
      : seed_(std::move(seed)),
        shift_product_(difference_product(seed_)),
        iterations_(std::move(iterations)) {
    if (iterations_ < 1) throw Error("iteration count must be positive");
    moduli_.reserve(seed_.size());
    Int shift = iterations_ * shift_product_;
    for (const Int& q : seed_.terms()) {
      moduli_.push_back(shift + q);
    }
  }

  std::size_t size() const { return moduli_.size(); }
  const std::vector<Int>& moduli() const { return moduli_; }
  const SeedSequence& seed() const { return seed_; }
  /// The difference product of the seed, the base unit of the shift.
  const Int& shift_product() const { return shift_product_; }
  const Int& iterations() const { return iterations_; }

 private:
  SeedSequence seed_;
  Int shift_product_;
  Int iterations_;
  std::vector<Int> moduli_;
};

inline MignotteModuli construct(SeedSequence seed, Int iterations) {
  return MignotteModuli(std::move(seed), std::move(iterations));
}

/// For a threshold k: `upper` is the product of the k smallest moduli,
/// `lower` the product of the k-1 largest. A secret must lie strictly
/// between them, and (upper - lower) / lower is the scheme's margin.
struct Bounds {
  std::size_t k = 0;
  Int upper;
  Int lower;
  Rational gap_ratio;
};

inline void check_threshold_range(std::size_t k, std::size_t n) {
  if (k < 2 || k + 1 > n) throw Error("k must satisfy 1 < k < n");
}

inline Bounds bounds(const std::vector<Int>& moduli, std::size_t k) {
  for (std::size_t i = 0; i + 1 < moduli.size(); ++i) {
    if (!(moduli[i] < moduli[i + 1])) throw Error("not increasing");
  }
  check_threshold_range(k, moduli.size());
  Int upper = 1;
  for (std::size_t i = 0; i < k; ++i) upper *= moduli[i];
  Int lower = 1;
  for (std::size_t j = moduli.size() - k + 1; j < moduli.size(); ++j)
    lower *= moduli[j];
  Rational ratio(upper - lower, lower);
  return Bounds{k, std::move(upper), std::move(lower), std::move(ratio)};
}

inline Bounds bounds(const MignotteModuli& m, std::size_t k) {
  return bounds(m.moduli(), k);
}

/// The defining condition of a (k,n)-Mignotte sequence: the product of
/// the k smallest terms exceeds the product of the k-1 largest.
/// Precondition violations (not increasing, not coprime, k out of range)
/// are reported as errors; a failed condition is just `false`.
inline bool is_mignotte(const std::vector<Int>& moduli, std::size_t k) {
  for (std::size_t i = 0; i + 1 < moduli.size(); ++i) {
    if (!(moduli[i] < moduli[i + 1])) throw Error("not increasing");
  }
  check_threshold_range(k, moduli.size());
  if (auto pair = find_noncoprime_pair(moduli)) {
    throw Error("not coprime: (" + pair->first.str() + "," +
                pair->second.str() + ")");
  }
  Bounds b = bounds(moduli, k);
  return b.upper > b.lower;
}

/// n = 3 sufficient condition: (shift + q_1)^2 > shift + q_3. Holds for
/// every shift that is the seed's difference product; callers may pass a
/// degenerate shift to probe where it fails.
inline bool check_strong_n3(const SeedSequence& seed, const Int& shift) {
  if (seed.size() != 3) throw Error("n must be 3");
  if (shift < 0) throw Error("shift must be non-negative");
  Int lhs = (shift + seed.front()) * (shift + seed.front());
  return lhs > shift + seed.back();
}

/// n >= 4 sufficient condition in exact integer form:
/// shift * (shift + q_1)^k > (shift + q_n)^k. Equivalent to comparing
/// shift^(1/k) * (1 + q_1/shift) against 1 + q_n/shift without ever
/// leaving integer arithmetic.
inline bool check_strong_general(const SeedSequence& seed, const Int& shift,
                                 std::size_t k) {
  if (seed.size() < 4) throw Error("use n=3 checker");
  check_threshold_range(k, seed.size());
  if (shift < 1) throw Error("shift must be positive");
  using boost::multiprecision::pow;
  Int lhs = shift * pow(shift + seed.front(), static_cast<unsigned>(k));
  Int rhs = pow(shift + seed.back(), static_cast<unsigned>(k));
  return lhs > rhs;
}

/// Product of factorials 1! * 2! * ... * (n-1)!. Lower-bounds the
/// difference product of any strictly increasing integer seed of length
/// n, and itself exceeds 2^(n-1) for n >= 4.
inline Int superfactorial_bound(std::size_t n) {
  if (n < 3) throw Error("n must be at least 3");
  Int factorial = 1;
  Int product = 1;
  for (std::size_t i = 1; i < n; ++i) {
    factorial *= i;
    product *= factorial;
  }
  return product;
}

// Fixed rational over-approximation of Euler's number, 2.7182818285.
// Comparing against its powers keeps every e^n check in exact integer
// arithmetic.
inline const Int& euler_upper_numerator() {
  static const Int value("27182818285");
  return value;
}
inline const Int& euler_upper_denominator() {
  static const Int value("10000000000");
  return value;
}

/// True iff value > (27182818285 / 10^10)^n, which implies value > e^n.
inline bool exceeds_e_power(const Int& value, unsigned n) {
  if (value < 0) throw Error("value must be non-negative");
  using boost::multiprecision::pow;
  return value * pow(euler_upper_denominator(), n) >
         pow(euler_upper_numerator(), n);
}

/// floor((27182818285 / 10^10)^n), a deterministic stand-in for e^n in
/// growth tables.
inline Int e_power_floor(unsigned n) {
  using boost::multiprecision::pow;
  return pow(euler_upper_numerator(), n) / pow(euler_upper_denominator(), n);
}

}  // namespace mignotte
