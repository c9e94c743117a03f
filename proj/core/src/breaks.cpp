#include "ramfil/breaks.hpp"

#include <string>

#include "ramfil/error.hpp"

namespace ramfil {

namespace {

void check_index(std::uint64_t i, std::uint64_t p) {
  if (i == 0) throw Error(Errc::out_of_domain, "index out of domain: i must be >= 1");
  if (p < 2) throw Error(Errc::out_of_domain, "index out of domain: p must be >= 2");
}

}  // namespace

std::uint64_t a_of(std::uint64_t i, std::uint64_t p) {
  check_index(i, p);
  return (i - 1) / (p - 1);
}

std::uint64_t b_upper(std::uint64_t i, std::uint64_t p) { return i + a_of(i, p); }

BigNat b_lower(std::uint64_t i, std::uint64_t p, const BigNat& q) {
  const std::uint64_t a = a_of(i, p);
  BigNat sum = 0;
  BigNat term = 1;
  for (std::uint64_t j = 0; j < i; ++j) {
    sum += term;
    term *= q;
  }
  // q^(p-1) + ... + q^(a(p-1)); empty when a == 0
  const BigNat step = pow(q, p - 1);
  term = step;
  for (std::uint64_t j = 1; j <= a; ++j) {
    sum += term;
    term *= step;
  }
  return sum;
}

std::vector<std::uint64_t> prime_to_p_breaks(std::uint64_t p, std::uint64_t e) {
  std::vector<std::uint64_t> out;
  out.reserve(e);
  for (std::uint64_t i = 1; i <= e; ++i) out.push_back(b_upper(i, p));
  return out;
}

std::uint64_t c_truncation(std::uint64_t m, std::uint64_t p) {
  if (p < 2) throw Error(Errc::out_of_domain, "index out of domain: p must be >= 2");
  return m - m / p;
}

BreakSequence make_break_sequence(std::uint64_t p, const BigNat& q, std::uint64_t count) {
  BreakSequence seq{p, q, {}};
  seq.entries.reserve(count);
  const BigNat step = pow(q, p - 1);
  BigNat geometric = 0;   // 1 + q + ... + q^(i-1)
  BigNat q_power = 1;     // q^(i-1)
  BigNat tail = 0;        // q^(p-1) + ... + q^(a(p-1))
  BigNat step_power = 1;  // q^(a(p-1))
  std::uint64_t a_prev = 0;
  for (std::uint64_t i = 1; i <= count; ++i) {
    geometric += q_power;
    q_power *= q;
    const std::uint64_t a = a_of(i, p);
    while (a_prev < a) {
      step_power *= step;
      tail += step_power;
      ++a_prev;
    }
    seq.entries.push_back({i, a, i + a, geometric + tail});
  }
  return seq;
}

}  // namespace ramfil
