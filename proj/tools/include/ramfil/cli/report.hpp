#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramfil/field_params.hpp"
#include "ramfil/filtration.hpp"
#include "ramfil/mass.hpp"

namespace ramfil::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Everything the `report` subcommand prints for one parameter set.
///
/// Machine-sized values (p, f, upper breaks, space indices) are JSON
/// numbers; anything that grows like a power of q is a decimal string, and
/// rationals are {"num": "...", "den": "..."}.
struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  FieldParams params = FieldParams::q_p(3);
  std::uint64_t max_index = 16;
  std::optional<std::uint64_t> m;  ///< characteristic p only

  std::vector<BigInt> upper_breaks;
  bool upper_truncated = false;
  std::vector<BigInt> lower_breaks;
  std::vector<std::uint64_t> upper_codimensions;
  std::vector<std::uint64_t> lower_codimensions;
  std::optional<std::vector<IndexInterval>> index_table;
  BigNat different_exponent;
  BigNat discriminant_exponent;
  FilteredSpace space;
  MassReport mass{FieldParams::q_p(3), {}, std::nullopt, {}, {}};

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Lower-numbering level used for characteristic p when --m is absent:
/// b^(max_index), so that c(m) = max_index breaks are listed.
std::uint64_t default_m(const FieldParams& params, std::uint64_t max_index);

ReportDocument build_report(const FieldParams& params, std::uint64_t max_index, std::optional<std::uint64_t> m);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json params_to_json(const FieldParams& params);
FieldParams params_from_json(const Json& j);

Json mass_to_json(const MassReport& report);
MassReport mass_from_json(const Json& j, const FieldParams& params);

Json to_json(const ReportDocument& doc);
ReportDocument from_json(const Json& j);

/// dump(2) plus a trailing newline; the byte form the CLI writes.
std::string serialize(const Json& j);

}  // namespace ramfil::cli
