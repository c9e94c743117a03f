#include "ramfil/field_params.hpp"

#include <numeric>

#include "ramfil/error.hpp"
#include "ramfil/fpspace.hpp"

namespace ramfil {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::invalid_params, "invalid parameters: " + what); }

void check_common(std::uint32_t p, std::uint32_t f) {
  if (!is_prime(p)) invalid("p must be prime (p=" + std::to_string(p) + ")");
  if (f < 1) invalid("residual degree f must be >= 1");
}

}  // namespace

FieldParams FieldParams::char_zero(std::uint32_t p, std::uint32_t e, std::uint32_t f, bool zeta_in_field) {
  check_common(p, f);
  if (e < 1) invalid("ramification index e must be >= 1");
  if (p == 2 && !zeta_in_field) invalid("p=2 in characteristic 0 forces zeta in field (zeta_2 = -1)");
  if (zeta_in_field && e % (p - 1) != 0) {
    invalid("zeta in field requires (p-1) | e (p=" + std::to_string(p) + ", e=" + std::to_string(e) + ")");
  }
  FieldParams out;
  out.p_ = p;
  out.f_ = f;
  out.e_ = e;
  out.characteristic_ = Characteristic::zero;
  out.zeta_in_field_ = zeta_in_field;
  out.q_ = pow(BigNat(p), f);
  return out;
}

FieldParams FieldParams::char_p(std::uint32_t p, std::uint32_t f) {
  check_common(p, f);
  FieldParams out;
  out.p_ = p;
  out.f_ = f;
  out.characteristic_ = Characteristic::p;
  out.zeta_in_field_ = true;
  out.q_ = pow(BigNat(p), f);
  return out;
}

FieldParams FieldParams::q_p(std::uint32_t p) { return char_zero(p, 1, 1, p == 2); }

FieldCase FieldParams::kind() const {
  if (characteristic_ == Characteristic::p) return FieldCase::char_p;
  return zeta_in_field_ ? FieldCase::zeta_char_zero : FieldCase::regular;
}

std::uint32_t FieldParams::e() const {
  if (!e_) throw Error(Errc::undefined_case, "ramification index e is undefined in characteristic p");
  return *e_;
}

Rational FieldParams::e1() const { return Rational(BigInt(e()), BigInt(p_ - 1)); }

std::uint64_t FieldParams::p_e1() const {
  if (kind() != FieldCase::zeta_char_zero) {
    throw Error(Errc::undefined_case, "p*e1 is an integer break only when zeta is in a characteristic-0 field");
  }
  return static_cast<std::uint64_t>(p_) * e() / (p_ - 1);
}

std::uint32_t FieldParams::s() const {
  if (kind() != FieldCase::regular) throw Error(Errc::undefined_case, "splitting undefined: s needs char 0 with zeta not in F");
  return (p_ - 1) / std::gcd(e(), p_ - 1);
}

std::string FieldParams::describe() const {
  std::string out = "p=" + std::to_string(p_);
  if (e_) out += " e=" + std::to_string(*e_);
  out += " f=" + std::to_string(f_);
  out += characteristic_ == Characteristic::zero ? " char=0" : " char=p";
  if (characteristic_ == Characteristic::zero) out += zeta_in_field_ ? " zeta=in" : " zeta=out";
  return out;
}

}  // namespace ramfil
