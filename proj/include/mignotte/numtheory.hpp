#pragma once

//! Arbitrary-precision integer primitives: gcd, pairwise coprimality,
//! CRT combination, and exact rationals. Everything here is a pure
//! function over immutable values; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mignotte {

using Int = boost::multiprecision::cpp_int;

/// Domain error raised by every checked operation in this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Euclidean gcd over non-negative integers. gcd(a,0) = a.
/// Both arguments zero is rejected: no caller legitimately produces it,
/// so it signals a bug upstream.
inline Int gcd(Int a, Int b) {
  if (a < 0 || b < 0) throw Error("gcd requires non-negative arguments");
  if (a == 0 && b == 0) throw Error("undefined gcd");
  while (b != 0) {
    a %= b;
    a.swap(b);
  }
  return a;
}

/// First pair (by index order) with gcd > 1, or nullopt if all pairs are
/// coprime. All values must be >= 1.
inline std::optional<std::pair<Int, Int>> find_noncoprime_pair(
    const std::vector<Int>& xs) {
  for (const Int& x : xs) {
    if (x < 1) throw Error("not positive");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (gcd(xs[i], xs[j]) != 1) return std::make_pair(xs[i], xs[j]);
    }
  }
  return std::nullopt;
}

/// True iff gcd(xs[i], xs[j]) = 1 for every i < j. Vacuously true for a
/// single element.
inline bool pairwise_coprime(const std::vector<Int>& xs) {
  if (xs.empty()) throw Error("empty sequence");
  return !find_noncoprime_pair(xs).has_value();
}

struct EgcdResult {
  Int g;  // gcd(a, b)
  Int x;  // Bezout coefficients: a*x + b*y = g
  Int y;
};

/// Extended Euclid over non-negative inputs.
inline EgcdResult egcd(const Int& a, const Int& b) {
  if (a < 0 || b < 0) throw Error("egcd requires non-negative arguments");
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    old_r.swap(r);
    old_x -= q * x;
    old_x.swap(x);
    old_y -= q * y;
    old_y.swap(y);
  }
  return {old_r, old_x, old_y};
}

/// One congruence: value known modulo `modulus`.
struct ResiduePair {
  Int residue;
  Int modulus;
};

namespace detail {

inline Int mod_floor(Int a, const Int& m) {
  a %= m;
  if (a < 0) a += m;
  return a;
}

}  // namespace detail

/// Combine congruences x = r_i (mod m_i) into the unique solution modulo
/// the product of the moduli. Folds two congruences at a time via
/// extended gcd; a non-coprime pair is detected when the fold reaches it.
inline ResiduePair crt_combine(const std::vector<ResiduePair>& pairs) {
  if (pairs.empty()) throw Error("empty sequence");
  for (const ResiduePair& p : pairs) {
    if (p.modulus < 2) throw Error("modulus must be at least 2");
    if (p.residue < 0 || p.residue >= p.modulus)
      throw Error("residue out of range");
  }
  Int value = pairs[0].residue;
  Int modulus = pairs[0].modulus;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    auto [g, u, v] = egcd(modulus, pairs[i].modulus);
    if (g != 1) throw Error("moduli not coprime");
    // value + modulus * step hits residue_i mod m_i when
    // step = u * (residue_i - value) mod m_i.
    Int step =
        detail::mod_floor(u * (pairs[i].residue - value), pairs[i].modulus);
    value += modulus * step;
    modulus *= pairs[i].modulus;
    value = detail::mod_floor(value, modulus);
  }
  return {value, modulus};
}

/// Exact rational, always stored in lowest terms with a positive
/// denominator; the sign lives on the numerator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  Rational(const Int& whole) : num_(whole), den_(1) {}  // NOLINT (implicit)

  Rational(Int num, Int den) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = gcd(abs(num), den);
    num_ = num / g;
    den_ = den / g;
  }

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  std::string str() const { return num_.str() + "/" + den_.str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("zero denominator");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

  friend Rational abs(const Rational& r) {
    Rational a = r;
    a.num_ = abs(a.num_);
    return a;
  }

 private:
  Int num_;
  Int den_;
};

/// Checked constructor: den must be positive; result is reduced with the
/// sign carried by the numerator.
inline Rational to_rational(const Int& num, const Int& den) {
  if (den == 0) throw Error("zero denominator");
  return {num, den};
}

/// Parse a decimal digit string (no sign, no separators, no exponent).
inline Int parse_natural(std::string_view text) {
  if (text.empty()) throw Error("invalid natural number: empty string");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw Error("invalid natural number: '" + std::string(text) + "'");
  }
  return Int(std::string(text));
}

}  // namespace mignotte
