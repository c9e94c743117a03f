#pragma once

// Brute-force reference computations used by the test suites. Nothing here
// calls into the library's closed forms; each function evaluates a
// definition directly on small inputs.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ramfil/arith.hpp"

namespace ramfil::oracle {

/// The i-th positive integer prime to p (1-based), by counting.
inline std::uint64_t nth_prime_to_p(std::uint64_t i, std::uint64_t p) {
  std::uint64_t n = 0;
  std::uint64_t seen = 0;
  while (seen < i) {
    ++n;
    if (n % p != 0) ++seen;
  }
  return n;
}

/// Integers n >= 1 with p not dividing n and n * (p-1) < p * e.
inline std::vector<std::uint64_t> prime_to_p_below_pe1(std::uint64_t p, std::uint64_t e) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n * (p - 1) < p * e; ++n) {
    if (n % p != 0) out.push_back(n);
  }
  return out;
}

/// psi(n) for integer n >= 0 by summing the unit-interval indices:
/// on ]k-1, k] the index (G^0 : G^w) is p^(sum of codims of jumps at
/// locations in [0, k-1]).
inline BigInt psi_at_integer(std::uint64_t p, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& jumps,
                             std::uint64_t n) {
  BigInt total = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t exponent = 0;
    for (const auto& [loc, codim] : jumps) {
      if (loc < k) exponent += codim;
    }
    total += pow(BigInt(p), exponent);
  }
  return total;
}

/// sum_{l = 0}^{last} (|G_l| - 1), one integer at a time. `jumps` holds
/// (location, codim) with location >= -1.
inline BigInt different_by_levels(std::uint64_t p, std::uint64_t total_dim,
                                  const std::vector<std::pair<std::int64_t, std::uint64_t>>& jumps) {
  std::int64_t last = 0;
  for (const auto& [loc, codim] : jumps) last = std::max(last, loc);
  BigInt sum = 0;
  for (std::int64_t l = 0; l <= last; ++l) {
    std::uint64_t below = 0;
    for (const auto& [loc, codim] : jumps) {
      if (loc < l) below += codim;
    }
    sum += pow(BigInt(p), total_dim - below) - 1;
  }
  return sum;
}

/// Number of lines of F_p^dim: every nonzero vector, normalised so its first
/// nonzero entry is 1, collected into a set.
inline std::size_t lines_by_normalising(std::uint32_t p, std::size_t dim) {
  std::set<std::vector<std::uint32_t>> lines;
  std::vector<std::uint32_t> v(dim, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    std::uint32_t inv = 1;
    while (static_cast<std::uint64_t>(inv) * v[lead] % p != 1) ++inv;
    std::vector<std::uint32_t> w(dim);
    for (std::size_t i = 0; i < dim; ++i) w[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) * inv % p);
    lines.insert(w);
  }
  return lines.size();
}

/// sum_{i=1}^{terms} q^{i - (p-1) b^(i)} with b^(i) found by counting.
inline Rational series_by_terms(std::uint64_t p, const BigInt& q, std::uint64_t terms) {
  Rational sum = 0;
  for (std::uint64_t i = 1; i <= terms; ++i) {
    const std::uint64_t b = nth_prime_to_p(i, p);
    sum += Rational(pow(q, i), pow(q, (p - 1) * b));
  }
  return sum;
}

}  // namespace ramfil::oracle
