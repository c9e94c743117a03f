#include "ramfil/filtration.hpp"

#include <algorithm>
#include <string>

#include "ramfil/breaks.hpp"
#include "ramfil/error.hpp"

namespace ramfil {

namespace {

void require_case(const FieldParams& params, FieldCase wanted, const char* what) {
  if (params.kind() != wanted) {
    throw Error(Errc::undefined_case, std::string(what) + " is not defined for " + params.describe());
  }
}

std::uint64_t breaks_in_char_zero(const FieldParams& params) { return params.e(); }

// p * e1 * s for the regular case: the level of the unramified line in V.
std::int64_t v_top_index(const FieldParams& params) {
  const std::uint64_t p = params.p();
  return static_cast<std::int64_t>(p * params.e() * params.s() / (p - 1));
}

}  // namespace

std::uint64_t RamificationFiltration::dim_at(const Rational& u) const {
  std::uint64_t below = 0;
  for (const auto& j : jumps) {
    if (Rational(j.location) < u) below += j.codim;
  }
  return below >= total_dim ? 0 : total_dim - below;
}

// ---------------------------------------------------------------------------
// Herbrand maps

HerbrandMap::HerbrandMap(std::vector<Point> breakpoints, std::vector<Rational> slopes)
    : points_(std::move(breakpoints)), slopes_(std::move(slopes)) {
  if (points_.empty() || points_.size() != slopes_.size()) {
    throw Error(Errc::shape_mismatch, "Herbrand map needs one slope per breakpoint");
  }
}

Rational HerbrandMap::operator()(const Rational& x) const {
  if (x.sign() < 0) throw Error(Errc::out_of_domain, "Herbrand maps are evaluated on [0, inf)");
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Rational& value, const Point& pt) { return value < pt.x; });
  const auto k = static_cast<std::size_t>(std::distance(points_.begin(), it)) - 1;
  return points_[k].y + slopes_[k] * (x - points_[k].x);
}

namespace {

// Builds the integral of p^(+/- accumulated codim) over the jumps at
// locations >= 0.
HerbrandMap integrate_index(const RamificationFiltration& filt, std::uint32_t p, bool invert) {
  std::vector<HerbrandMap::Point> points{{Rational(0), Rational(0)}};
  std::vector<Rational> slopes;
  std::uint64_t exponent = 0;
  auto slope_for = [&](std::uint64_t k) {
    const BigInt power = pow(BigInt(p), k);
    return invert ? Rational(BigInt(1), power) : Rational(power);
  };
  for (const auto& j : filt.jumps) {
    if (j.location < 0) continue;
    const Rational x(j.location);
    const auto& last = points.back();
    if (last.x < x) {
      const Rational slope = slope_for(exponent);
      slopes.push_back(slope);
      points.push_back({x, last.y + slope * (x - last.x)});
    }
    exponent += j.codim;
  }
  slopes.push_back(slope_for(exponent));
  return {std::move(points), std::move(slopes)};
}

}  // namespace

HerbrandMap herbrand_psi(const RamificationFiltration& upper) {
  if (upper.numbering != Numbering::upper) {
    throw Error(Errc::invalid_params, "herbrand_psi expects an upper-numbering filtration");
  }
  return integrate_index(upper, upper.p, false);
}

HerbrandMap herbrand_phi(const RamificationFiltration& lower) {
  if (lower.numbering != Numbering::lower) {
    throw Error(Errc::invalid_params, "herbrand_phi expects a lower-numbering filtration");
  }
  return integrate_index(lower, lower.p, true);
}

RamificationFiltration lower_via_psi(const RamificationFiltration& upper) {
  const HerbrandMap psi = herbrand_psi(upper);
  RamificationFiltration lower = upper;
  lower.numbering = Numbering::lower;
  for (auto& j : lower.jumps) {
    if (j.location < 0) continue;
    const Rational y = psi(Rational(j.location));
    j.location = y.num();  // psi maps integer breaks to integers
  }
  return lower;
}

// ---------------------------------------------------------------------------
// Parameters of K = F(zeta)

SplittingData splitting_data(const FieldParams& params, std::optional<std::uint32_t> residual_class_order) {
  if (params.kind() != FieldCase::regular) {
    throw Error(Errc::undefined_case, "splitting undefined: needs characteristic 0 with zeta not in F");
  }
  SplittingData out;
  out.s = params.s();
  const std::uint32_t p = params.p();
  if (residual_class_order) {
    const std::uint32_t r = *residual_class_order;
    if (r == 0 || (p - 1) % (static_cast<std::uint64_t>(r) * out.s) != 0) {
      throw Error(Errc::invalid_params, "invalid parameters: r*s must divide p-1 (r=" + std::to_string(r) +
                                            ", s=" + std::to_string(out.s) + ")");
    }
    out.r = r;
  } else if (out.s == p - 1) {
    out.r = 1;
  }
  if (out.r) out.m = *out.r * out.s;
  return out;
}

// ---------------------------------------------------------------------------
// Filtrations

RamificationFiltration upper_filtration(const FieldParams& params, std::uint64_t max_index) {
  RamificationFiltration out;
  out.numbering = Numbering::upper;
  out.p = params.p();
  const std::uint64_t f = params.f();
  const std::uint64_t count = params.kind() == FieldCase::char_p ? max_index : breaks_in_char_zero(params);
  out.jumps.push_back({-1, 1});
  for (std::uint64_t i = 1; i <= count; ++i) out.jumps.push_back({b_upper(i, params.p()), f});
  out.total_dim = 1 + count * f;
  if (params.kind() == FieldCase::zeta_char_zero) {
    out.jumps.push_back({params.p_e1(), 1});
    out.total_dim += 1;
  }
  out.truncated = params.kind() == FieldCase::char_p;
  return out;
}

RamificationFiltration lower_filtration(const FieldParams& params, std::uint64_t max_index) {
  RamificationFiltration out;
  out.numbering = Numbering::lower;
  out.p = params.p();
  const std::uint64_t f = params.f();
  const std::uint64_t count =
      params.kind() == FieldCase::char_p ? c_truncation(max_index, params.p()) : breaks_in_char_zero(params);
  const BreakSequence seq = make_break_sequence(params.p(), params.q(), count);
  out.jumps.push_back({-1, 1});
  for (const auto& entry : seq.entries) out.jumps.push_back({entry.lower, f});
  out.total_dim = 1 + count * f;
  if (params.kind() == FieldCase::zeta_char_zero) {
    out.jumps.push_back({seq.entries.back().lower + pow(params.q(), params.e()), 1});
    out.total_dim += 1;
  }
  out.truncated = false;
  return out;
}

std::vector<IndexInterval> index_table(const FieldParams& params) {
  if (params.kind() != FieldCase::regular) {
    throw Error(Errc::undefined_case, "table defined for regular case");
  }
  const std::uint64_t e = params.e();
  std::vector<IndexInterval> table;
  BigInt lo = 0;
  BigNat index = 1;
  for (std::uint64_t i = 1; i <= e; ++i) {
    const BigInt hi = b_upper(i, params.p());
    table.push_back({lo, i == 1, hi, index});
    lo = hi;
    index *= params.q();
  }
  table.push_back({lo, false, std::nullopt, index});
  return table;
}

// ---------------------------------------------------------------------------
// Different and discriminant

BigNat different_exponent_oracle(const RamificationFiltration& lower) {
  if (lower.numbering != Numbering::lower) {
    throw Error(Errc::invalid_params, "different exponent needs a lower-numbering filtration");
  }
  if (lower.truncated) throw Error(Errc::incomplete_filtration, "cannot sum infinite filtration");

  // Integers l in [start, location] share dim G_l = total - codim(< start).
  BigNat sum = 0;
  BigInt start = 0;
  std::uint64_t below = 0;
  for (const auto& j : lower.jumps) {
    if (j.location < 0) {
      below += j.codim;
      continue;
    }
    if (j.location >= start) {
      const BigInt count = j.location - start + 1;
      const std::uint64_t dim = lower.total_dim - below;
      sum += count * (pow(BigNat(lower.p), dim) - 1);
      start = j.location + 1;
    }
    below += j.codim;
  }
  return sum;
}

BigNat different_exponent_closed(const FieldParams& params) {
  require_case(params, FieldCase::regular, "closed-form different exponent");
  const std::uint64_t e = params.e();
  const BigNat qe = pow(params.q(), e);
  return (1 + BigNat(b_upper(e, params.p()))) * qe - (1 + b_lower(e, params.p(), params.q()));
}

BigNat discriminant_exponent(const FieldParams& params) {
  return BigNat(params.p()) * different_exponent_closed(params);
}

CyclicDiscriminant cyclic_discriminant(const FieldParams& params, std::uint64_t break_index) {
  const bool in_range = break_index >= 1 && (params.kind() == FieldCase::char_p || break_index <= params.e());
  if (!in_range) {
    throw Error(Errc::out_of_domain, "break index " + std::to_string(break_index) + " out of range for " +
                                         params.describe());
  }
  const BigNat b = b_upper(break_index, params.p());
  const BigNat pm1 = params.p() - 1;
  return {pm1 * (1 + b), pm1 * b};
}

CyclicDiscriminant tres_ramifiee_discriminant(const FieldParams& params) {
  require_case(params, FieldCase::zeta_char_zero, "tres ramifiee discriminant");
  const BigNat c = BigNat(params.p()) * params.e();
  return {c + (params.p() - 1), c};
}

// ---------------------------------------------------------------------------
// Filtered spaces

std::uint64_t FilteredSpace::dim_at(std::int64_t index) const {
  std::uint64_t dim = 0;
  for (const auto& j : jumps) {
    if (j.index >= index) dim += j.codim;
  }
  return dim;
}

bool FilteredSpace::is_jump(std::int64_t index) const {
  return std::any_of(jumps.begin(), jumps.end(), [&](const SpaceJump& j) { return j.index == index; });
}

FilteredSpace v_space_model(const FieldParams& params) {
  require_case(params, FieldCase::regular, "v_space_model");
  const std::int64_t s = params.s();
  const std::int64_t top = v_top_index(params);
  FilteredSpace out;
  out.label = SpaceLabel::v_regular;
  out.jumps.push_back({top, 1});
  for (std::uint64_t i = 1; i <= params.e(); ++i) {
    out.jumps.push_back({top - static_cast<std::int64_t>(b_upper(i, params.p())) * s, params.f()});
  }
  out.total_dim = 1 + static_cast<std::uint64_t>(params.e()) * params.f();
  return out;
}

FilteredSpace unit_space_model(const FieldParams& params, std::uint64_t max_index) {
  FilteredSpace out;
  switch (params.kind()) {
    case FieldCase::regular:
      throw Error(Errc::undefined_case, "use v_space_model for fields without a p-th root of unity");
    case FieldCase::zeta_char_zero: {
      out.label = SpaceLabel::ubar_zeta;
      out.jumps.push_back({static_cast<std::int64_t>(params.p_e1()), 1});
      for (std::uint64_t i = params.e(); i >= 1; --i) {
        out.jumps.push_back({static_cast<std::int64_t>(b_upper(i, params.p())), params.f()});
      }
      out.jumps.push_back({0, 1});
      out.total_dim = 2 + static_cast<std::uint64_t>(params.e()) * params.f();
      break;
    }
    case FieldCase::char_p: {
      out.label = SpaceLabel::wp_char_p;
      out.jumps.push_back({0, 1});
      for (std::uint64_t i = 1; i <= max_index; ++i) {
        out.jumps.push_back({-static_cast<std::int64_t>(b_upper(i, params.p())), params.f()});
      }
      out.total_dim = 1 + max_index * params.f();
      out.truncated = true;
      break;
    }
  }
  return out;
}

std::int64_t break_of_line(const FilteredSpace& space, std::int64_t depth_index, const FieldParams& params) {
  if (!space.is_jump(depth_index)) {
    throw Error(Errc::out_of_domain, "illegal depth " + std::to_string(depth_index) +
                                         ": no line of the space first appears there");
  }
  switch (space.label) {
    case SpaceLabel::ubar_zeta: {
      require_case(params, FieldCase::zeta_char_zero, "unit-level break rule");
      const auto top = static_cast<std::int64_t>(params.p_e1());
      return depth_index == top ? -1 : top - depth_index;
    }
    case SpaceLabel::wp_char_p: {
      require_case(params, FieldCase::char_p, "pole-order break rule");
      const std::int64_t m = -depth_index;
      return m == 0 ? -1 : m;
    }
    case SpaceLabel::v_regular: {
      require_case(params, FieldCase::regular, "W-picture break rule");
      const std::int64_t top = v_top_index(params);
      if (depth_index == top) return -1;
      return (top - depth_index) / static_cast<std::int64_t>(params.s());
    }
  }
  throw Error(Errc::undefined_case, "unknown space label");
}

OrthogonalIndex orthogonal_index(const Rational& u, const FieldParams& params) {
  require_case(params, FieldCase::regular, "orthogonality relation");
  const Rational last(BigInt(b_upper(params.e(), params.p())));
  if (u <= Rational(-1)) return {OrthogonalIndex::Kind::whole_group, std::nullopt};
  if (u < Rational(1)) return {OrthogonalIndex::Kind::inertia, std::nullopt};
  if (u > last) return {OrthogonalIndex::Kind::trivial, std::nullopt};
  const std::int64_t s = params.s();
  const auto ceil_u = static_cast<std::int64_t>(u.ceil());
  return {OrthogonalIndex::Kind::index, v_top_index(params) - ceil_u * s + 1};
}

}  // namespace ramfil
