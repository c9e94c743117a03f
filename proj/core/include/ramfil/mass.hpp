#pragma once

/**
 * @file mass.hpp
 * @brief Contribution of degree-p cyclic extensions to Serre's mass formula
 * sum_L q^{-c(L)} = p, with c(L) = v_F(d_{L|F}) - (p - 1).
 *
 * A ramified cyclic L|F with break b^(i) has c(L) = (p-1) b^(i); there are
 * p q^{i-1} (q-1)/(p-1) of them. When zeta is in a characteristic-0 field
 * there are in addition p q^e extensions with break p*e1, for which
 * c(L) = p e.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ramfil/arith.hpp"
#include "ramfil/field_params.hpp"

namespace ramfil {

struct BreakContribution {
  std::uint64_t i = 0;
  std::uint64_t b_upper = 0;
  BigNat count;
  Rational contribution;

  friend bool operator==(const BreakContribution&, const BreakContribution&) = default;
};

struct TresRamifieeTerm {
  BigNat count;
  Rational contribution;

  friend bool operator==(const TresRamifieeTerm&, const TresRamifieeTerm&) = default;
};

struct MassReport {
  FieldParams params;
  std::vector<BreakContribution> per_break;
  std::optional<TresRamifieeTerm> tres_ramifiee;
  Rational total;
  Rational fraction_of_serre_total;

  friend bool operator==(const MassReport&, const MassReport&) = default;
};

inline constexpr std::size_t kDefaultDisplayRows = 16;

/// Serre's total for degree p, taken as given.
inline Rational serre_total(const FieldParams& params) { return Rational(static_cast<long long>(params.p())); }

/// p q^{i-1} (q-1)/(p-1): lines whose extension has break b^(i).
BigNat lines_with_break_count(const FieldParams& params, std::uint64_t i);
/// p q^e; zeta in a characteristic-0 field only.
BigNat tres_ramifiee_count(const FieldParams& params);

/// S = sum_{i>0} q^{i-(p-1) b^(i)} in closed form.
///
/// Writing i = (p-1)a + j with a >= 0, j in [1, p-1] gives
/// i - (p-1) b^(i) = -(p-1)^2 a - (p-2) j, hence
///   S = (sum_{j=1}^{p-1} q^{-(p-2) j}) / (1 - q^{-(p-1)^2}).
Rational series_value(std::uint32_t p, const BigNat& q);
/// First `terms` summands of S, evaluated term by term.
Rational series_partial_sum(std::uint32_t p, const BigNat& q, std::uint64_t terms);

MassReport cyclic_mass_char_p(const FieldParams& params, std::size_t display_rows = kDefaultDisplayRows);
MassReport cyclic_mass_char0_zeta(const FieldParams& params);
MassReport cyclic_mass_char0_regular(const FieldParams& params);
/// Dispatches on params.kind().
MassReport cyclic_mass(const FieldParams& params, std::size_t display_rows = kDefaultDisplayRows);

/// Average c(L) over ramified cyclic L of F = Q_p(zeta_p) by direct
/// summation; peu_only drops the tres ramifiee row i = p.
Rational average_c_cyclotomic(std::uint32_t p, bool peu_only);
/// (p^{p+2} - p^{p+1} - p^p + 1)/(p^p - 1).
Rational average_c_cyclotomic_closed_form(std::uint32_t p);

struct BruteForceMass {
  Rational sum;
  std::uint64_t lines_enumerated = 0;
  /// Characteristic p: number of breaks kept in the finite model.
  std::optional<std::uint64_t> depth;
  /// Characteristic p: the omitted tail lies in [0, tail_bound].
  Rational tail_bound;
};

/// Sums q^{-c} over every line of the filtered-space model, classifying
/// each line by its depth and break_of_line. Throws enumeration_too_large
/// when the model exceeds 10^7 vectors.
BruteForceMass brute_force_mass(const FieldParams& params);

}  // namespace ramfil
