#include "ramfil/cli/report.hpp"

#include "ramfil/breaks.hpp"
#include "ramfil/error.hpp"

namespace ramfil::cli {
namespace {

std::string big(const BigInt& x) { return x.str(); }
BigInt big_from(const Json& j) { return BigInt(j.get<std::string>()); }

const char* case_name(FieldCase kind) {
  switch (kind) {
    case FieldCase::regular: return "regular";
    case FieldCase::zeta_char_zero: return "zeta_char_zero";
    case FieldCase::char_p: return "char_p";
  }
  return "?";
}

const char* label_name(SpaceLabel label) {
  switch (label) {
    case SpaceLabel::v_regular: return "v_regular";
    case SpaceLabel::ubar_zeta: return "ubar_zeta";
    case SpaceLabel::wp_char_p: return "wp_char_p";
  }
  return "?";
}

SpaceLabel label_from(const std::string& s) {
  if (s == "v_regular") return SpaceLabel::v_regular;
  if (s == "ubar_zeta") return SpaceLabel::ubar_zeta;
  if (s == "wp_char_p") return SpaceLabel::wp_char_p;
  throw Error(Errc::invalid_params, "unknown space label '" + s + "'");
}

template <class T>
std::vector<T> numbers_from(const Json& j) {
  std::vector<T> out;
  for (const auto& x : j) out.push_back(x.get<T>());
  return out;
}

}  // namespace

std::uint64_t default_m(const FieldParams& params, std::uint64_t max_index) {
  return max_index == 0 ? 0 : b_upper(max_index, params.p());
}

ReportDocument build_report(const FieldParams& params, std::uint64_t max_index, std::optional<std::uint64_t> m) {
  ReportDocument doc;
  doc.params = params;
  doc.max_index = max_index;

  const RamificationFiltration upper = upper_filtration(params, max_index);
  RamificationFiltration lower;
  if (params.kind() == FieldCase::char_p) {
    doc.m = m.value_or(default_m(params, max_index));
    lower = lower_filtration(params, *doc.m);
  } else {
    lower = lower_filtration(params);
  }
  for (const auto& j : upper.jumps) {
    doc.upper_breaks.push_back(j.location);
    doc.upper_codimensions.push_back(j.codim);
  }
  doc.upper_truncated = upper.truncated;
  for (const auto& j : lower.jumps) {
    doc.lower_breaks.push_back(j.location);
    doc.lower_codimensions.push_back(j.codim);
  }

  if (params.regular()) {
    doc.index_table = index_table(params);
    doc.different_exponent = different_exponent_closed(params);
    doc.discriminant_exponent = discriminant_exponent(params);
    doc.space = v_space_model(params);
  } else {
    // N|F (or its finite quotient in characteristic p) has residue degree p
    doc.different_exponent = different_exponent_oracle(lower);
    doc.discriminant_exponent = doc.different_exponent * params.p();
    doc.space = unit_space_model(params, max_index);
  }
  doc.mass = cyclic_mass(params, max_index);
  return doc;
}

Json rational_to_json(const Rational& r) {
  Json j;
  j["num"] = big(r.num());
  j["den"] = big(r.den());
  return j;
}

Rational rational_from_json(const Json& j) { return Rational(big_from(j.at("num")), big_from(j.at("den"))); }

Json params_to_json(const FieldParams& params) {
  Json j;
  j["p"] = params.p();
  j["char"] = params.characteristic() == Characteristic::zero ? "0" : "p";
  j["e"] = params.has_e() ? Json(params.e()) : Json(nullptr);
  j["f"] = params.f();
  j["zeta"] = params.zeta_in_field() ? "in" : "out";
  j["q"] = big(params.q());
  j["case"] = case_name(params.kind());
  return j;
}

FieldParams params_from_json(const Json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const auto f = j.at("f").get<std::uint32_t>();
  if (j.at("char").get<std::string>() == "p") return FieldParams::char_p(p, f);
  return FieldParams::char_zero(p, j.at("e").get<std::uint32_t>(), f, j.at("zeta").get<std::string>() == "in");
}

Json mass_to_json(const MassReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.per_break) {
    Json r;
    r["i"] = row.i;
    r["b_upper"] = row.b_upper;
    r["count"] = big(row.count);
    r["contribution"] = rational_to_json(row.contribution);
    rows.push_back(std::move(r));
  }
  Json j;
  j["per_break"] = std::move(rows);
  if (report.tres_ramifiee) {
    Json t;
    t["count"] = big(report.tres_ramifiee->count);
    t["contribution"] = rational_to_json(report.tres_ramifiee->contribution);
    j["tres_ramifiee"] = std::move(t);
  } else {
    j["tres_ramifiee"] = nullptr;
  }
  j["total"] = rational_to_json(report.total);
  j["serre_total"] = rational_to_json(serre_total(report.params));
  j["fraction_of_serre_total"] = rational_to_json(report.fraction_of_serre_total);
  return j;
}

MassReport mass_from_json(const Json& j, const FieldParams& params) {
  MassReport report{params, {}, std::nullopt, {}, {}};
  for (const auto& r : j.at("per_break")) {
    report.per_break.push_back({r.at("i").get<std::uint64_t>(), r.at("b_upper").get<std::uint64_t>(),
                                big_from(r.at("count")), rational_from_json(r.at("contribution"))});
  }
  if (!j.at("tres_ramifiee").is_null()) {
    const Json& t = j.at("tres_ramifiee");
    report.tres_ramifiee = TresRamifieeTerm{big_from(t.at("count")), rational_from_json(t.at("contribution"))};
  }
  report.total = rational_from_json(j.at("total"));
  report.fraction_of_serre_total = rational_from_json(j.at("fraction_of_serre_total"));
  return report;
}

Json to_json(const ReportDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["params"] = params_to_json(doc.params);
  j["max_index"] = doc.max_index;
  j["m"] = doc.m ? Json(*doc.m) : Json(nullptr);

  Json upper = Json::array();
  for (const auto& b : doc.upper_breaks) upper.push_back(static_cast<std::int64_t>(b));
  j["upper_breaks"] = std::move(upper);
  j["upper_truncated"] = doc.upper_truncated;
  Json lower = Json::array();
  for (const auto& b : doc.lower_breaks) lower.push_back(big(b));
  j["lower_breaks"] = std::move(lower);
  j["codimensions"] = {{"upper", doc.upper_codimensions}, {"lower", doc.lower_codimensions}};

  if (doc.index_table) {
    Json rows = Json::array();
    for (const auto& iv : *doc.index_table) {
      Json r;
      r["lo"] = big(iv.lo);
      r["lo_closed"] = iv.lo_closed;
      r["hi"] = iv.hi ? Json(big(*iv.hi)) : Json(nullptr);
      r["index"] = big(iv.index);
      rows.push_back(std::move(r));
    }
    j["index_table"] = std::move(rows);
  } else {
    j["index_table"] = nullptr;
  }
  j["different_exponent"] = big(doc.different_exponent);
  j["discriminant_exponent"] = big(doc.discriminant_exponent);

  Json jumps = Json::array();
  for (const auto& sj : doc.space.jumps) jumps.push_back({{"index", sj.index}, {"codim", sj.codim}});
  j["v_space"] = {{"label", label_name(doc.space.label)},
                  {"total_dim", doc.space.total_dim},
                  {"truncated", doc.space.truncated},
                  {"jumps", std::move(jumps)}};
  j["mass"] = mass_to_json(doc.mass);
  return j;
}

ReportDocument from_json(const Json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  if (doc.schema_version != kSchemaVersion) {
    throw Error(Errc::invalid_params, "unsupported schema_version '" + doc.schema_version + "'");
  }
  doc.params = params_from_json(j.at("params"));
  doc.max_index = j.at("max_index").get<std::uint64_t>();
  if (!j.at("m").is_null()) doc.m = j.at("m").get<std::uint64_t>();

  for (const auto& b : j.at("upper_breaks")) doc.upper_breaks.emplace_back(b.get<std::int64_t>());
  doc.upper_truncated = j.at("upper_truncated").get<bool>();
  for (const auto& b : j.at("lower_breaks")) doc.lower_breaks.push_back(big_from(b));
  doc.upper_codimensions = numbers_from<std::uint64_t>(j.at("codimensions").at("upper"));
  doc.lower_codimensions = numbers_from<std::uint64_t>(j.at("codimensions").at("lower"));

  if (!j.at("index_table").is_null()) {
    doc.index_table.emplace();
    for (const auto& r : j.at("index_table")) {
      IndexInterval iv;
      iv.lo = big_from(r.at("lo"));
      iv.lo_closed = r.at("lo_closed").get<bool>();
      if (!r.at("hi").is_null()) iv.hi = big_from(r.at("hi"));
      iv.index = big_from(r.at("index"));
      doc.index_table->push_back(std::move(iv));
    }
  }
  doc.different_exponent = big_from(j.at("different_exponent"));
  doc.discriminant_exponent = big_from(j.at("discriminant_exponent"));

  const Json& space = j.at("v_space");
  doc.space.label = label_from(space.at("label").get<std::string>());
  doc.space.total_dim = space.at("total_dim").get<std::uint64_t>();
  doc.space.truncated = space.at("truncated").get<bool>();
  for (const auto& sj : space.at("jumps")) {
    doc.space.jumps.push_back({sj.at("index").get<std::int64_t>(), sj.at("codim").get<std::uint64_t>()});
  }
  doc.mass = mass_from_json(j.at("mass"), doc.params);
  return doc;
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ramfil::cli
