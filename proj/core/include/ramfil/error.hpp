#pragma once

#include <stdexcept>
#include <string>

namespace ramfil {

enum class Errc {
  division_by_zero,
  divergent_series,
  out_of_domain,
  invalid_params,
  enumeration_too_large,
  shape_mismatch,
  not_faithful,
  not_representation,
  undefined_case,
  incomplete_filtration,
};

/// Every failure in the library is reported through this exception; the
/// message is a single line suitable for a CLI diagnostic.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ramfil
