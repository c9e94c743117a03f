#pragma once

/**
 * @file arith.hpp
 * @brief Arbitrary-precision integers and exact rationals.
 *
 * BigInt is boost::multiprecision::cpp_int. BigNat is the same type used
 * for quantities that are never negative (group orders, powers of q,
 * lower break locations); the library never hands out a negative BigNat.
 *
 * Rational is always kept in lowest terms with a positive denominator, so
 * operator== is structural equality of (numerator, denominator).
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramfil {

using BigInt = boost::multiprecision::cpp_int;
using BigNat = boost::multiprecision::cpp_int;

BigNat gcd(const BigNat& a, const BigNat& b);
BigInt pow(const BigInt& base, std::uint64_t exponent);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws Error{division_by_zero} when d == 0.
  Rational(BigInt n, BigInt d);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rational abs() const { return {num_ < 0 ? BigInt(-num_) : num_, den_}; }
  Rational reciprocal() const { return {den_, num_}; }

  /// Smallest integer >= *this.
  BigInt ceil() const;
  /// Largest integer <= *this.
  BigInt floor() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "n/d" (always with the denominator, e.g. "2/1").
  std::string str() const;

 private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Lowest-terms n/d; throws Error{division_by_zero} when d == 0.
Rational rat_reduce(const BigInt& n, const BigInt& d);

/// x^k for a non-negative exponent; x^(-k) via pow_neg.
Rational pow(const Rational& x, std::uint64_t exponent);
/// x^(-k); throws division_by_zero for x == 0, k > 0.
Rational pow_neg(const Rational& x, std::uint64_t exponent);

/// sum_{i=0}^{n-1} x^i.
Rational geometric_sum_finite(const Rational& x, std::uint64_t n);
/// 1/(1-x) for |x| < 1; throws Error{divergent_series} otherwise.
Rational geometric_sum_infinite(const Rational& x);

/// Decimal rendering by long division with `significant` digits, rounded
/// half away from zero. Switches to d.ddd...e-N form for magnitudes below
/// 1e-6 or at least 1e30.
std::string to_decimal(const Rational& x, int significant = 30);

}  // namespace ramfil
