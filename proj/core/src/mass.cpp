#include "ramfil/mass.hpp"

#include <string>

#include "ramfil/breaks.hpp"
#include "ramfil/error.hpp"
#include "ramfil/filtration.hpp"
#include "ramfil/fpspace.hpp"

namespace ramfil {

namespace {

// (p/q) * (q-1)/(p-1)
Rational line_weight(std::uint32_t p, const BigNat& q) {
  return Rational(BigInt(p), q) * Rational(q - 1, BigInt(p - 1));
}

// q^{i - (p-1) b^(i)}
Rational series_term(std::uint32_t p, const BigNat& q, std::uint64_t i) {
  const std::uint64_t c = static_cast<std::uint64_t>(p - 1) * b_upper(i, p);
  return Rational(pow(q, i), pow(q, c));
}

BreakContribution contribution_row(const FieldParams& params, std::uint64_t i) {
  const std::uint64_t b = b_upper(i, params.p());
  const BigNat count = lines_with_break_count(params, i);
  const std::uint64_t c = static_cast<std::uint64_t>(params.p() - 1) * b;
  return {i, b, count, Rational(count, pow(params.q(), c))};
}

MassReport finish(const FieldParams& params, std::vector<BreakContribution> rows,
                  std::optional<TresRamifieeTerm> tres, Rational total) {
  Rational fraction = total / serre_total(params);
  return {params, std::move(rows), std::move(tres), std::move(total), std::move(fraction)};
}

// Peu ramifiees in characteristic 0: the finite sum over i in [1, e].
std::pair<std::vector<BreakContribution>, Rational> peu_ramifiee_part(const FieldParams& params) {
  std::vector<BreakContribution> rows;
  Rational series = 0;
  for (std::uint64_t i = 1; i <= params.e(); ++i) {
    rows.push_back(contribution_row(params, i));
    series += series_term(params.p(), params.q(), i);
  }
  return {std::move(rows), line_weight(params.p(), params.q()) * series};
}

}  // namespace

BigNat lines_with_break_count(const FieldParams& params, std::uint64_t i) {
  const bool in_range = i >= 1 && (params.kind() == FieldCase::char_p || i <= params.e());
  if (!in_range) {
    throw Error(Errc::out_of_domain, "break index " + std::to_string(i) + " out of range for " + params.describe());
  }
  const BigNat& q = params.q();
  return BigNat(params.p()) * pow(q, i - 1) * (q - 1) / (params.p() - 1);
}

BigNat tres_ramifiee_count(const FieldParams& params) {
  if (params.kind() != FieldCase::zeta_char_zero) {
    throw Error(Errc::undefined_case, "no tres ramifiees extensions for " + params.describe());
  }
  return BigNat(params.p()) * pow(params.q(), params.e());
}

Rational series_value(std::uint32_t p, const BigNat& q) {
  const Rational q_r(q);
  Rational head = 0;
  for (std::uint32_t j = 1; j <= p - 1; ++j) head += pow_neg(q_r, static_cast<std::uint64_t>(p - 2) * j);
  const std::uint64_t period = static_cast<std::uint64_t>(p - 1) * (p - 1);
  return head * geometric_sum_infinite(pow_neg(q_r, period));
}

Rational series_partial_sum(std::uint32_t p, const BigNat& q, std::uint64_t terms) {
  Rational sum = 0;
  for (std::uint64_t i = 1; i <= terms; ++i) sum += series_term(p, q, i);
  return sum;
}

MassReport cyclic_mass_char_p(const FieldParams& params, std::size_t display_rows) {
  if (params.kind() != FieldCase::char_p) {
    throw Error(Errc::undefined_case, "cyclic_mass_char_p needs a characteristic-p field, got " + params.describe());
  }
  std::vector<BreakContribution> rows;
  for (std::uint64_t i = 1; i <= display_rows; ++i) rows.push_back(contribution_row(params, i));
  Rational total = line_weight(params.p(), params.q()) * series_value(params.p(), params.q());
  return finish(params, std::move(rows), std::nullopt, std::move(total));
}

MassReport cyclic_mass_char0_zeta(const FieldParams& params) {
  if (params.kind() != FieldCase::zeta_char_zero) {
    throw Error(Errc::undefined_case, "cyclic_mass_char0_zeta needs zeta in a characteristic-0 field, got " +
                                          params.describe());
  }
  auto [rows, peu] = peu_ramifiee_part(params);
  const std::uint64_t c = static_cast<std::uint64_t>(params.p()) * params.e();
  const BigNat count = tres_ramifiee_count(params);
  TresRamifieeTerm tres{count, Rational(count, pow(params.q(), c))};
  Rational total = tres.contribution + peu;
  return finish(params, std::move(rows), std::move(tres), std::move(total));
}

MassReport cyclic_mass_char0_regular(const FieldParams& params) {
  if (params.kind() != FieldCase::regular) {
    throw Error(Errc::undefined_case, "cyclic_mass_char0_regular needs zeta not in F, got " + params.describe());
  }
  auto [rows, peu] = peu_ramifiee_part(params);
  return finish(params, std::move(rows), std::nullopt, std::move(peu));
}

MassReport cyclic_mass(const FieldParams& params, std::size_t display_rows) {
  switch (params.kind()) {
    case FieldCase::char_p:
      return cyclic_mass_char_p(params, display_rows);
    case FieldCase::zeta_char_zero:
      return cyclic_mass_char0_zeta(params);
    case FieldCase::regular:
      return cyclic_mass_char0_regular(params);
  }
  throw Error(Errc::undefined_case, "unknown field case");
}

Rational average_c_cyclotomic(std::uint32_t p, bool peu_only) {
  if (p == 2) throw Error(Errc::undefined_case, "F = Q_2(zeta) = Q_2 excluded from the cyclotomic average");
  if (!is_prime(p)) throw Error(Errc::invalid_params, "invalid parameters: p must be prime");
  const std::uint32_t last = peu_only ? p - 1 : p;
  BigInt weighted = 0;
  BigInt count = 0;
  for (std::uint32_t i = 1; i <= last; ++i) {
    const BigInt n = pow(BigInt(p), i);
    weighted += BigInt(p - 1) * i * n;
    count += n;
  }
  return Rational(weighted, count);
}

Rational average_c_cyclotomic_closed_form(std::uint32_t p) {
  if (p == 2) throw Error(Errc::undefined_case, "F = Q_2(zeta) = Q_2 excluded from the cyclotomic average");
  const BigInt pp = pow(BigInt(p), p);
  return Rational(pp * p * p - pp * p - pp + 1, pp - 1);
}

BruteForceMass brute_force_mass(const FieldParams& params) {
  const std::uint32_t p = params.p();
  BruteForceMass out;
  FilteredSpace space;
  if (params.kind() == FieldCase::regular) {
    space = v_space_model(params);
  } else if (params.kind() == FieldCase::zeta_char_zero) {
    space = unit_space_model(params);
  } else {
    // Deepest finite model that fits the enumeration limit.
    std::uint64_t depth = 0;
    while (pow(BigNat(p), 1 + (depth + 1) * params.f()) <= kEnumerationLimit) ++depth;
    if (depth == 0) {
      throw Error(Errc::enumeration_too_large, "enumeration too large: no finite model of " + params.describe() +
                                                   " fits in 10^7 vectors");
    }
    space = unit_space_model(params, depth);
    out.depth = depth;
    // Every omitted term is at most (p/q)(q-1)/(p-1) q^{-(i-1)}.
    out.tail_bound = Rational(BigInt(p), BigInt(p - 1)) * pow_neg(Rational(params.q()), depth);
  }

  // Coordinates are grouped by jump, smallest step first; a line's depth is
  // the jump owning its last nonzero coordinate.
  std::vector<std::size_t> owner;
  for (std::size_t t = 0; t < space.jumps.size(); ++t) owner.insert(owner.end(), space.jumps[t].codim, t);
  std::vector<std::uint64_t> per_jump(space.jumps.size(), 0);
  for_each_line(p, owner.size(), [&](std::span<const Residue> v) {
    std::size_t last = v.size();
    while (v[last - 1] == 0) --last;
    ++per_jump[owner[last - 1]];
  });

  for (std::size_t t = 0; t < space.jumps.size(); ++t) {
    out.lines_enumerated += per_jump[t];
    const std::int64_t brk = break_of_line(space, space.jumps[t].index, params);
    if (brk < 0) continue;  // unramified
    const std::uint64_t c = static_cast<std::uint64_t>(p - 1) * static_cast<std::uint64_t>(brk);
    out.sum += Rational(BigInt(per_jump[t]), pow(params.q(), c));
  }
  return out;
}

}  // namespace ramfil
