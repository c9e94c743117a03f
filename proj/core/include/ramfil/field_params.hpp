#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ramfil/arith.hpp"

namespace ramfil {

enum class Characteristic { zero, p };

/// The three situations the library distinguishes.
enum class FieldCase {
  regular,         ///< characteristic 0, no primitive p-th root of unity
  zeta_char_zero,  ///< characteristic 0, contains a primitive p-th root of unity
  char_p,          ///< local function field
};

/// Validated description of a local field with residue field of order q = p^f.
/// Construction throws Error{invalid_params} naming the violated constraint.
class FieldParams {
 public:
  static FieldParams char_zero(std::uint32_t p, std::uint32_t e, std::uint32_t f, bool zeta_in_field);
  static FieldParams char_p(std::uint32_t p, std::uint32_t f);
  /// Q_p itself: e = f = 1, zeta in field iff p == 2.
  static FieldParams q_p(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t f() const { return f_; }
  Characteristic characteristic() const { return characteristic_; }
  bool zeta_in_field() const { return zeta_in_field_; }
  FieldCase kind() const;
  bool regular() const { return kind() == FieldCase::regular; }

  bool has_e() const { return e_.has_value(); }
  /// Absolute ramification index; throws undefined_case in characteristic p.
  std::uint32_t e() const;

  const BigNat& q() const { return q_; }
  /// e/(p-1); characteristic 0 only.
  Rational e1() const;
  /// p*e/(p-1) as an integer; defined only when zeta is in the field.
  std::uint64_t p_e1() const;
  /// (p-1)/gcd(e, p-1): ramification index of F(zeta)|F; regular case only.
  std::uint32_t s() const;

  /// Short human-readable description, e.g. "p=3 e=1 f=1 char=0 zeta=out".
  std::string describe() const;

  friend bool operator==(const FieldParams&, const FieldParams&) = default;

 private:
  FieldParams() = default;

  std::uint32_t p_ = 2;
  std::uint32_t f_ = 1;
  std::optional<std::uint32_t> e_;
  Characteristic characteristic_ = Characteristic::zero;
  bool zeta_in_field_ = true;
  BigNat q_ = 2;
};

}  // namespace ramfil
