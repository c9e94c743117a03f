#pragma once

/**
 * @file breaks.hpp
 * @brief Upper and lower break sequences of the maximal elementary abelian
 * p-extension.
 *
 * For i >= 1:
 *   a(i)   = floor((i-1)/(p-1))
 *   b^(i)  = i + a(i)                      (upper breaks)
 *   b_(i)  = (1 + q + ... + q^(i-1)) + (q^(p-1) + ... + q^(a(i)(p-1)))
 *                                          (lower breaks)
 * i -> b^(i) enumerates the positive integers prime to p in increasing order.
 */

#include <cstdint>
#include <vector>

#include "ramfil/arith.hpp"

namespace ramfil {

/// Throws Error{out_of_domain} for i == 0 or p < 2.
std::uint64_t a_of(std::uint64_t i, std::uint64_t p);
std::uint64_t b_upper(std::uint64_t i, std::uint64_t p);
BigNat b_lower(std::uint64_t i, std::uint64_t p, const BigNat& q);

/// [b^(1), ..., b^(e)]: the prime-to-p integers in [1, p*e/(p-1)[.
std::vector<std::uint64_t> prime_to_p_breaks(std::uint64_t p, std::uint64_t e);

/// c(m) = m - floor(m/p): how many b^(i) are <= m.
std::uint64_t c_truncation(std::uint64_t m, std::uint64_t p);

struct BreakEntry {
  std::uint64_t i = 0;
  std::uint64_t a = 0;
  std::uint64_t upper = 0;
  BigNat lower;

  friend bool operator==(const BreakEntry&, const BreakEntry&) = default;
};

struct BreakSequence {
  std::uint64_t p = 0;
  BigNat q;
  std::vector<BreakEntry> entries;

  friend bool operator==(const BreakSequence&, const BreakSequence&) = default;
};

/// Entries i = 1..count. The lower breaks are accumulated incrementally, so
/// this is cheaper than calling b_lower per index.
BreakSequence make_break_sequence(std::uint64_t p, const BigNat& q, std::uint64_t count);

}  // namespace ramfil
