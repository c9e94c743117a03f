#pragma once

/**
 * @file filtration.hpp
 * @brief Ramification filtration of G = Gal(N|F), N the maximal elementary
 * abelian p-extension of F, in upper and lower numbering.
 *
 * Group orders are never stored; a filtration is a list of jumps
 * (location, codimension) over F_p. For a jump at t with codimension c,
 * the subgroup just above t has codimension c in the subgroup at t, so
 *
 *   dim G^u = total_dim - sum{ codim : location < u }.
 *
 * The characteristic-p group is infinite; its upper filtration is cut after
 * a caller-chosen number of breaks and flagged `truncated`. A truncated
 * upper filtration with N breaks is exactly the upper filtration of the
 * finite quotient cut out by the N smallest breaks.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "ramfil/arith.hpp"
#include "ramfil/field_params.hpp"

namespace ramfil {

enum class Numbering { upper, lower };

struct Jump {
  BigInt location;
  std::uint64_t codim = 0;

  friend bool operator==(const Jump&, const Jump&) = default;
};

struct RamificationFiltration {
  Numbering numbering = Numbering::upper;
  std::uint32_t p = 2;  ///< group index of a codimension-c step is p^c
  std::uint64_t total_dim = 0;
  std::vector<Jump> jumps;
  bool truncated = false;

  std::uint64_t dim_at(const Rational& u) const;
  std::uint64_t codim_at(const Rational& u) const { return total_dim - dim_at(u); }

  friend bool operator==(const RamificationFiltration&, const RamificationFiltration&) = default;
};

/// Continuous, increasing, piecewise-linear map fixing 0. Segment k starts
/// at breakpoints[k] and has slope slopes[k]; the last segment extends to
/// infinity.
class HerbrandMap {
 public:
  struct Point {
    Rational x;
    Rational y;
    friend bool operator==(const Point&, const Point&) = default;
  };

  HerbrandMap(std::vector<Point> breakpoints, std::vector<Rational> slopes);

  /// Defined on [0, inf); throws Error{out_of_domain} for x < 0.
  Rational operator()(const Rational& x) const;

  const std::vector<Point>& breakpoints() const { return points_; }
  const std::vector<Rational>& slopes() const { return slopes_; }

 private:
  std::vector<Point> points_;
  std::vector<Rational> slopes_;
};

struct SplittingData {
  std::uint32_t s = 0;
  std::optional<std::uint32_t> r;
  std::optional<std::uint32_t> m;
};

/// Ramification index s, residual degree r and degree m = rs of F(zeta)|F.
/// r depends on the class of -p in F^x / F^x(p-1), so it is taken from
/// `residual_class_order` when supplied. Without it r is still determined
/// when s = p-1 (then r = 1), which covers F = Q_p.
SplittingData splitting_data(const FieldParams& params,
                             std::optional<std::uint32_t> residual_class_order = std::nullopt);

/// Upper breaks -1, b^(1..e) (and p*e1 when zeta is in F). In characteristic
/// p, `max_index` breaks b^(i) are emitted and the result is truncated.
RamificationFiltration upper_filtration(const FieldParams& params, std::uint64_t max_index = 16);

/// Lower breaks -1, b_(1..e) (and b_(e) + q^e when zeta is in F). In
/// characteristic p, `max_index` is the level m of the finite quotient
/// K(wp^{-1}(p^{-m})) and breaks b_(i) are emitted for i <= c(m).
RamificationFiltration lower_filtration(const FieldParams& params, std::uint64_t max_index = 16);

/// psi(u) = integral_0^u (G^0 : G^w) dw. Accepts truncated input.
HerbrandMap herbrand_psi(const RamificationFiltration& upper);
/// phi(l) = integral_0^l dt / (G_0 : G_t); the inverse of psi.
HerbrandMap herbrand_phi(const RamificationFiltration& lower);

/// Lower filtration obtained by sending every upper jump through psi.
RamificationFiltration lower_via_psi(const RamificationFiltration& upper);

struct IndexInterval {
  BigInt lo;
  bool lo_closed = false;
  std::optional<BigInt> hi;  ///< nullopt: unbounded
  BigNat index;

  friend bool operator==(const IndexInterval&, const IndexInterval&) = default;
};

/// (G^0 : G^u) on [0, b^(1)], ]b^(i), b^(i+1)], ]b^(e), inf[. Regular case only.
std::vector<IndexInterval> index_table(const FieldParams& params);

/// sum over integers l >= 0 of (|G_l| - 1), evaluated block by block.
BigNat different_exponent_oracle(const RamificationFiltration& lower);
/// (1 + b^(e)) q^e - (1 + b_(e)); regular case only.
BigNat different_exponent_closed(const FieldParams& params);
/// p * different exponent (N|F has residual degree p); regular case only.
BigNat discriminant_exponent(const FieldParams& params);

struct CyclicDiscriminant {
  BigNat v;  ///< v_F(d_{E|F})
  BigNat c;  ///< v - (p - 1)

  friend bool operator==(const CyclicDiscriminant&, const CyclicDiscriminant&) = default;
};

/// Degree-p cyclic E|F with break b^(i): v = (p-1)(1 + b^(i)).
CyclicDiscriminant cyclic_discriminant(const FieldParams& params, std::uint64_t break_index);
/// Break p*e1 (zeta in a characteristic-0 field): c = p*e.
CyclicDiscriminant tres_ramifiee_discriminant(const FieldParams& params);

enum class SpaceLabel { v_regular, ubar_zeta, wp_char_p };

struct SpaceJump {
  std::int64_t index = 0;
  std::uint64_t codim = 0;

  friend bool operator==(const SpaceJump&, const SpaceJump&) = default;
};

/// Decreasing filtration X_j of an F_p-space, listed from the smallest
/// nonzero step to the whole space. A jump (j, c) means
/// dim X_j - dim X_{j+1} = c.
struct FilteredSpace {
  SpaceLabel label = SpaceLabel::v_regular;
  std::uint64_t total_dim = 0;
  std::vector<SpaceJump> jumps;
  bool truncated = false;

  std::uint64_t dim_at(std::int64_t index) const;
  bool is_jump(std::int64_t index) const;

  friend bool operator==(const FilteredSpace&, const FilteredSpace&) = default;
};

/// V inside K^x/K^xp, K = F(zeta), in K-valuation coordinates: a line at
/// p*e1*s and codimension-f steps at p*e1*s - b^(i)*s. Regular case only.
FilteredSpace v_space_model(const FieldParams& params);

/// K^x/K^xp by unit levels (zeta in F), or K/wp(K) by pole order with index
/// -m for p^{-m} (characteristic p, cut after `max_index` breaks).
FilteredSpace unit_space_model(const FieldParams& params, std::uint64_t max_index = 16);

/// Ramification break of the degree-p cyclic extension attached to a line
/// that first appears at jump `depth_index` of `space` (that is, lies in
/// X_depth but not X_{depth+1}). Returns -1 for the unramified line.
/// Throws out_of_domain when depth_index is not a jump of the space.
std::int64_t break_of_line(const FilteredSpace& space, std::int64_t depth_index, const FieldParams& params);

struct OrthogonalIndex {
  enum class Kind {
    whole_group,  ///< u <= -1: G^u = G
    inertia,      ///< -1 < u < 1: G^u = G^1
    index,        ///< 1 <= u <= b^(e): (G^u)^perp = V_index
    trivial,      ///< u > b^(e): G^u = {1}
  };
  Kind kind = Kind::index;
  std::optional<std::int64_t> index;

  friend bool operator==(const OrthogonalIndex&, const OrthogonalIndex&) = default;
};

/// (G^u)^perp = V_{p e1 s - ceil(u) s + 1} for u in [1, b^(e)]. Regular case only.
OrthogonalIndex orthogonal_index(const Rational& u, const FieldParams& params);

}  // namespace ramfil
