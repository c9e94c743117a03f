#include "ramfil/arith.hpp"

#include <ostream>

#include "ramfil/error.hpp"

namespace ramfil {

namespace mp = boost::multiprecision;

BigNat gcd(const BigNat& a, const BigNat& b) {
  if (a == 0) return mp::abs(b);
  if (b == 0) return mp::abs(a);
  return mp::gcd(a, b);
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt acc = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= acc;
    exponent >>= 1U;
    if (exponent != 0) acc *= acc;
  }
  return result;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw Error(Errc::division_by_zero, "division by zero");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  BigInt q = num_ / den_;
  if (num_ > 0 && q * den_ != num_) q += 1;
  return q;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  *this = Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = Rational(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  *this = Rational(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat_reduce(const BigInt& n, const BigInt& d) { return Rational(n, d); }

Rational pow(const Rational& x, std::uint64_t exponent) {
  return Rational(pow(x.num(), exponent), pow(x.den(), exponent));
}

Rational pow_neg(const Rational& x, std::uint64_t exponent) {
  if (exponent == 0) return Rational(1);
  return pow(x, exponent).reciprocal();
}

Rational geometric_sum_finite(const Rational& x, std::uint64_t n) {
  if (n == 0) return Rational(0);
  if (x == Rational(1)) return Rational(static_cast<long long>(n));
  // (1 - x^n) / (1 - x)
  return (Rational(1) - pow(x, n)) / (Rational(1) - x);
}

Rational geometric_sum_infinite(const Rational& x) {
  if (x.abs() >= Rational(1)) throw Error(Errc::divergent_series, "divergent series");
  return Rational(1) / (Rational(1) - x);
}

namespace {

std::size_t digit_count(const BigInt& n) { return n.str().size(); }

std::string strip_fraction_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string to_decimal(const Rational& x, int significant) {
  if (significant < 1) significant = 1;
  if (x.is_zero()) return "0";
  const BigInt a = mp::abs(x.num());
  const BigInt& b = x.den();

  // 10^e <= a/b < 10^(e+1)
  long long e = static_cast<long long>(digit_count(a)) - static_cast<long long>(digit_count(b));
  auto below = [&](long long k) {
    return k >= 0 ? a < b * pow(BigInt(10), static_cast<std::uint64_t>(k))
                  : a * pow(BigInt(10), static_cast<std::uint64_t>(-k)) < b;
  };
  if (below(e)) --e;

  const long long shift = significant - 1 - e;
  BigInt scaled_num = a;
  BigInt scaled_den = b;
  if (shift >= 0) {
    scaled_num *= pow(BigInt(10), static_cast<std::uint64_t>(shift));
  } else {
    scaled_den *= pow(BigInt(10), static_cast<std::uint64_t>(-shift));
  }
  BigInt digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);
  if (digit_count(digits) > static_cast<std::size_t>(significant)) {
    digits /= 10;
    ++e;
  }
  std::string s = digits.str();
  const std::string sign = x.sign() < 0 ? "-" : "";

  if (e >= -6 && e < 30) {
    std::string out;
    if (e < 0) {
      out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
    } else if (e + 1 >= static_cast<long long>(s.size())) {
      out = s + std::string(static_cast<std::size_t>(e + 1) - s.size(), '0');
    } else {
      out = s.substr(0, static_cast<std::size_t>(e + 1)) + "." + s.substr(static_cast<std::size_t>(e + 1));
    }
    return sign + strip_fraction_zeros(out);
  }
  std::string mantissa = s.size() > 1 ? s.substr(0, 1) + "." + s.substr(1) : s;
  return sign + strip_fraction_zeros(mantissa) + "e" + std::to_string(e);
}

}  // namespace ramfil
