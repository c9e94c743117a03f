#include "ramfil/cli/run.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ramfil/breaks.hpp"
#include "ramfil/cli/report.hpp"
#include "ramfil/cli/verify.hpp"
#include "ramfil/error.hpp"

namespace ramfil::cli {
namespace {

struct FieldOptions {
  std::uint32_t p = 0;
  std::uint32_t f = 1;
  std::string characteristic = "0";
  std::optional<std::uint32_t> e;
  std::optional<std::string> zeta;
  std::uint64_t max_index = 16;
  std::optional<std::uint64_t> m;
  std::string format = "text";
};

void add_field_options(CLI::App& cmd, FieldOptions& opt) {
  cmd.add_option("--p", opt.p, "residue characteristic")->required();
  cmd.add_option("--f", opt.f, "residual degree")->capture_default_str();
  cmd.add_option("--char", opt.characteristic, "characteristic of F")
      ->check(CLI::IsMember({"0", "p"}))
      ->capture_default_str();
  cmd.add_option("--e", opt.e, "absolute ramification index (characteristic 0)");
  cmd.add_option("--zeta", opt.zeta, "whether F contains a primitive p-th root of unity")
      ->check(CLI::IsMember({"in", "out"}));
  cmd.add_option("--max-index", opt.max_index, "breaks kept in characteristic p")->capture_default_str();
  cmd.add_option("--m", opt.m, "lower-numbering level in characteristic p");
  cmd.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

FieldParams params_from(const FieldOptions& opt) {
  if (opt.max_index == 0) throw Error(Errc::invalid_params, "invalid parameters: --max-index must be positive");
  if (opt.characteristic == "p") {
    if (opt.e) throw Error(Errc::invalid_params, "invalid parameters: --e applies only in characteristic 0");
    if (opt.zeta) throw Error(Errc::invalid_params, "invalid parameters: --zeta applies only in characteristic 0");
    return FieldParams::char_p(opt.p, opt.f);
  }
  if (!opt.e) throw Error(Errc::invalid_params, "invalid parameters: --e is required in characteristic 0");
  if (opt.m) throw Error(Errc::invalid_params, "invalid parameters: --m applies only in characteristic p");
  const bool zeta = opt.zeta ? *opt.zeta == "in" : opt.p == 2;
  return FieldParams::char_zero(opt.p, *opt.e, opt.f, zeta);
}

// Integers without the "/1"; used where the value is a coordinate.
std::string plain(const Rational& r) { return r.is_integer() ? r.num().str() : r.str(); }

std::string exact(const Rational& r) { return r.str() + "  (" + to_decimal(r) + ")"; }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? ", " : "") + parts[k];
  return out;
}

template <class Range>
std::string join_numbers(const Range& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) {
    std::ostringstream os;
    os << x;
    parts.push_back(os.str());
  }
  return join(parts);
}

// ---------------------------------------------------------------------------
// breaks

std::uint64_t break_count(const FieldParams& params, std::uint64_t max_index) {
  return params.has_e() ? params.e() : max_index;
}

void print_breaks(const FieldParams& params, std::uint64_t max_index, const std::string& format, std::ostream& out) {
  const BreakSequence seq = make_break_sequence(params.p(), params.q(), break_count(params, max_index));
  const bool tres = params.kind() == FieldCase::zeta_char_zero;
  if (format == "json") {
    Json j;
    j["params"] = params_to_json(params);
    Json upper = Json::array(), lower = Json::array(), rows = Json::array();
    for (const auto& entry : seq.entries) {
      upper.push_back(entry.upper);
      lower.push_back(entry.lower.str());
      rows.push_back({{"i", entry.i}, {"a", entry.a}, {"upper", entry.upper}, {"lower", entry.lower.str()}});
    }
    j["upper"] = std::move(upper);
    j["lower"] = std::move(lower);
    j["rows"] = std::move(rows);
    j["tres_ramifiee_break"] = tres ? Json(params.p_e1()) : Json(nullptr);
    out << serialize(j);
    return;
  }
  out << params.describe() << "\n";
  out << std::setw(6) << "i" << std::setw(6) << "a(i)" << std::setw(10) << "b^(i)" << "  b_(i)\n";
  for (const auto& entry : seq.entries) {
    out << std::setw(6) << entry.i << std::setw(6) << entry.a << std::setw(10) << entry.upper << "  " << entry.lower
        << "\n";
  }
  if (tres) out << "tres ramifiee break p*e1 = " << params.p_e1() << "\n";
}

// ---------------------------------------------------------------------------
// herbrand

Json map_to_json(const HerbrandMap& map) {
  Json points = Json::array(), slopes = Json::array();
  for (const auto& pt : map.breakpoints()) {
    points.push_back({{"x", rational_to_json(pt.x)}, {"y", rational_to_json(pt.y)}});
  }
  for (const auto& s : map.slopes()) slopes.push_back(rational_to_json(s));
  return {{"breakpoints", std::move(points)}, {"slopes", std::move(slopes)}};
}

void print_map(const char* name, const HerbrandMap& map, std::ostream& out) {
  out << name << ":\n";
  for (std::size_t k = 0; k < map.breakpoints().size(); ++k) {
    const auto& pt = map.breakpoints()[k];
    out << "  from (" << plain(pt.x) << ", " << plain(pt.y) << ") slope " << plain(map.slopes()[k]) << "\n";
  }
}

void print_herbrand(const FieldParams& params, const FieldOptions& opt, std::ostream& out) {
  const HerbrandMap psi = herbrand_psi(upper_filtration(params, opt.max_index));
  const RamificationFiltration lower = params.kind() == FieldCase::char_p
                                           ? lower_filtration(params, opt.m.value_or(default_m(params, opt.max_index)))
                                           : lower_filtration(params);
  const HerbrandMap phi = herbrand_phi(lower);
  if (opt.format == "json") {
    Json j;
    j["params"] = params_to_json(params);
    j["psi"] = map_to_json(psi);
    j["phi"] = map_to_json(phi);
    out << serialize(j);
    return;
  }
  out << params.describe() << "\n";
  print_map("psi", psi, out);
  print_map("phi", phi, out);
}

// ---------------------------------------------------------------------------
// mass and report

void print_mass_text(const MassReport& mass, std::ostream& out) {
  for (const auto& row : mass.per_break) {
    out << "  i=" << row.i << " b^(i)=" << row.b_upper << " lines=" << row.count << " contribution "
        << row.contribution << "\n";
  }
  if (mass.tres_ramifiee) {
    out << "  tres ramifiee lines=" << mass.tres_ramifiee->count << " contribution " << mass.tres_ramifiee->contribution
        << "\n";
  }
  out << "total: " << exact(mass.total) << "\n";
  out << "fraction of p = " << mass.params.p() << ": " << exact(mass.fraction_of_serre_total) << "\n";
}

void print_mass(const FieldParams& params, const FieldOptions& opt, std::ostream& out) {
  const MassReport mass = cyclic_mass(params, opt.max_index);
  if (opt.format == "json") {
    Json j;
    j["params"] = params_to_json(params);
    j["mass"] = mass_to_json(mass);
    out << serialize(j);
    return;
  }
  out << params.describe() << "\n";
  print_mass_text(mass, out);
}

void print_report(const FieldParams& params, const FieldOptions& opt, std::ostream& out) {
  const ReportDocument doc = build_report(params, opt.max_index, opt.m);
  if (opt.format == "json") {
    out << serialize(to_json(doc));
    return;
  }
  out << params.describe() << "\n";
  out << "upper breaks: " << join_numbers(doc.upper_breaks) << (doc.upper_truncated ? ", ..." : "") << "\n";
  out << "lower breaks: " << join_numbers(doc.lower_breaks) << "\n";
  out << "codimensions: " << join_numbers(doc.upper_codimensions) << "\n";
  if (doc.index_table) {
    out << "index (G^0 : G^u):\n";
    for (const auto& iv : *doc.index_table) {
      out << "  " << (iv.lo_closed ? "[" : "]") << iv.lo << ", " << (iv.hi ? iv.hi->str() + "]" : "inf[") << "  "
          << iv.index << "\n";
    }
  }
  if (doc.m) out << "level m: " << *doc.m << "\n";
  out << "different exponent: " << doc.different_exponent << "\n";
  out << "discriminant exponent: " << doc.discriminant_exponent << "\n";
  std::vector<std::string> jumps;
  for (const auto& sj : doc.space.jumps) jumps.push_back(std::to_string(sj.index) + "/" + std::to_string(sj.codim));
  out << "space jumps (index/codim): " << join(jumps) << (doc.space.truncated ? ", ..." : "") << "\n";
  out << "mass:\n";
  print_mass_text(doc.mass, out);
}

int print_verify(std::ostream& out) {
  bool ok = true;
  for (const auto& check : run_verify_checks()) {
    out << (check.passed ? "PASS " : "FAIL ") << check.name;
    if (!check.passed) out << ": " << check.detail;
    out << "\n";
    ok = ok && check.passed;
  }
  return ok ? kOk : kVerifyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramification filtrations and cyclic mass of local fields", "ramfil"};
  app.require_subcommand(1);

  FieldOptions opt;
  CLI::App* report = app.add_subcommand("report", "full report for one field");
  CLI::App* breaks = app.add_subcommand("breaks", "upper and lower break sequences");
  CLI::App* herbrand = app.add_subcommand("herbrand", "breakpoints of phi and psi");
  CLI::App* mass = app.add_subcommand("mass", "cyclic contribution to the mass formula");
  CLI::App* verify = app.add_subcommand("verify", "check closed forms against their oracles");
  for (CLI::App* cmd : {report, breaks, herbrand, mass}) add_field_options(*cmd, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (verify->parsed()) return print_verify(out);
    const FieldParams params = params_from(opt);
    if (report->parsed()) print_report(params, opt, out);
    if (breaks->parsed()) print_breaks(params, opt.max_index, opt.format, out);
    if (herbrand->parsed()) print_herbrand(params, opt, out);
    if (mass->parsed()) print_mass(params, opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kOk;
}

}  // namespace ramfil::cli
