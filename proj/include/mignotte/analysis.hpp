#pragma once

//! Desk-scale growth studies: how fast the difference product blows up
//! with n, and how close the gap ratio tracks its t * D + q_1 - 1
//! asymptote. Output is CSV with a fixed, documented column set.

#include <cstddef>
#include <ostream>
#include <vector>

#include "mignotte/construction.hpp"
#include "mignotte/numtheory.hpp"

namespace mignotte {

/// Highest set bit position plus one; bit_length(1) = 1, bit_length(0) = 0.
inline std::size_t bit_length(const Int& x) {
  if (x < 0) throw Error("bit length of negative value");
  if (x == 0) return 0;
  return boost::multiprecision::msb(x) + 1;
}

struct GrowthRow {
  std::size_t n = 0;
  Int q1;
  std::size_t difference_product_bits = 0;
  std::size_t superfactorial_bits = 0;
  std::size_t e_power_bits = 0;
};

struct GapRow {
  Int iterations;
  Rational gap_ratio;
  Int predicted;  // t * D + q_1 - 1
  Rational relative_error;
};

// Sylvester terms are doubly exponential and the difference product has
// n(n-1)/2 factors; past n = 16 the table stops being desk-scale.
inline constexpr std::size_t kMaxGrowthLength = 16;

/// One row per n in [n_min, n_max], each over sylvester_seed(q1, n).
inline std::vector<GrowthRow> p_growth_table(const Int& q1, std::size_t n_min,
                                             std::size_t n_max) {
  if (n_min < 3 || n_min > n_max || n_max > kMaxGrowthLength)
    throw Error("range violation");
  if (q1 < 1) throw Error("q1 must be positive");
  std::vector<GrowthRow> rows;
  rows.reserve(n_max - n_min + 1);
  for (std::size_t n = n_min; n <= n_max; ++n) {
    SeedSequence seed = sylvester_seed(q1, n);
    GrowthRow row;
    row.n = n;
    row.q1 = q1;
    row.difference_product_bits = bit_length(difference_product(seed));
    row.superfactorial_bits = bit_length(superfactorial_bound(n));
    row.e_power_bits = bit_length(e_power_floor(static_cast<unsigned>(n)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// One row per t: the exact gap ratio of construct(seed, t) at threshold
/// k, and its relative error against the predicted t * D + q_1 - 1.
inline std::vector<GapRow> gap_table(const SeedSequence& seed, std::size_t k,
                                     const std::vector<Int>& t_values) {
  check_threshold_range(k, seed.size());
  std::vector<GapRow> rows;
  rows.reserve(t_values.size());
  for (const Int& t : t_values) {
    if (t < 1) throw Error("iteration count must be positive");
    MignotteModuli m = construct(seed, t);
    Bounds b = bounds(m, k);
    GapRow row;
    row.iterations = t;
    row.gap_ratio = b.gap_ratio;
    row.predicted = t * m.shift_product() + seed.front() - 1;
    Rational predicted(row.predicted);
    row.relative_error = abs(row.gap_ratio - predicted) / predicted;
    rows.push_back(std::move(row));
  }
  return rows;
}

// CSV: comma separated, UTF-8, LF endings, header row mandatory.
// Rationals are emitted as exact numerator/denominator column pairs.

inline void write_p_growth_csv(std::ostream& out,
                               const std::vector<GrowthRow>& rows) {
  out << "n,q1,P_bits,superfactorial_bits,e_n_bits\n";
  for (const GrowthRow& r : rows) {
    out << r.n << ',' << r.q1.str() << ',' << r.difference_product_bits << ','
        << r.superfactorial_bits << ',' << r.e_power_bits << '\n';
  }
}

inline void write_gap_csv(std::ostream& out, const std::vector<GapRow>& rows) {
  out << "t,gap_ratio_num,gap_ratio_den,predicted,relative_error_num,"
         "relative_error_den\n";
  for (const GapRow& r : rows) {
    out << r.iterations.str() << ',' << r.gap_ratio.numerator().str() << ','
        << r.gap_ratio.denominator().str() << ',' << r.predicted.str() << ','
        << r.relative_error.numerator().str() << ','
        << r.relative_error.denominator().str() << '\n';
  }
}

}  // namespace mignotte
