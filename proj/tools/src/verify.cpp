#include "ramfil/cli/verify.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "ramfil/breaks.hpp"
#include "ramfil/error.hpp"
#include "ramfil/filtration.hpp"
#include "ramfil/fpspace.hpp"
#include "ramfil/mass.hpp"

namespace ramfil::cli {
namespace {

using Counterexample = std::optional<std::string>;

std::vector<FieldParams> char_zero_grid(std::initializer_list<std::uint32_t> primes, std::uint32_t max_e,
                                        std::uint32_t max_f) {
  std::vector<FieldParams> out;
  for (std::uint32_t p : primes) {
    for (std::uint32_t e = 1; e <= max_e; ++e) {
      for (std::uint32_t f = 1; f <= max_f; ++f) {
        if (p != 2) out.push_back(FieldParams::char_zero(p, e, f, false));
        if (e % (p - 1) == 0) out.push_back(FieldParams::char_zero(p, e, f, true));
      }
    }
  }
  return out;
}

std::vector<FieldParams> regular_grid() {
  std::vector<FieldParams> out;
  for (std::uint32_t p : {3, 5, 7})
    for (std::uint32_t e = 1; e <= 8; ++e)
      for (std::uint32_t f = 1; f <= 3; ++f) out.push_back(FieldParams::char_zero(p, e, f, false));
  return out;
}

template <class... Args>
std::string say(const Args&... args) {
  std::ostringstream os;
  ((os << args), ...);
  return os.str();
}

Counterexample breaks_enumerate_prime_to_p() {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::uint64_t i = 1;
    for (std::uint64_t n = 1; n <= 5000; ++n) {
      if (n % p == 0) continue;
      if (b_upper(i, p) != n) return say("p=", p, " i=", i);
      ++i;
    }
  }
  return std::nullopt;
}

Counterexample lower_breaks_are_psi_of_upper() {
  for (const auto& params : char_zero_grid({2, 3, 5}, 6, 3)) {
    const HerbrandMap psi = herbrand_psi(upper_filtration(params));
    for (std::uint64_t i = 1; i <= params.e(); ++i) {
      if (psi(Rational(BigInt(b_upper(i, params.p())))) != Rational(b_lower(i, params.p(), params.q()))) {
        return say(params.describe(), " i=", i);
      }
    }
  }
  return std::nullopt;
}

Counterexample phi_inverts_psi() {
  for (const auto& params : char_zero_grid({2, 3, 5}, 6, 3)) {
    const auto upper = upper_filtration(params);
    const HerbrandMap psi = herbrand_psi(upper);
    const HerbrandMap phi = herbrand_phi(lower_filtration(params));
    const Rational top(upper.jumps.back().location + 2);
    for (long long k = 0; k < 50; ++k) {
      const Rational u = top * Rational(BigInt(k), BigInt(49));
      if (phi(psi(u)) != u) return say(params.describe(), " u=", u);
    }
  }
  return std::nullopt;
}

Counterexample lower_filtration_matches_psi_route() {
  for (const auto& params : char_zero_grid({2, 3, 5, 7}, 8, 3)) {
    if (lower_via_psi(upper_filtration(params)) != lower_filtration(params)) return params.describe();
  }
  return std::nullopt;
}

Counterexample upper_jumps_avoid_multiples_of_p() {
  for (const auto& params : char_zero_grid({2, 3, 5, 7}, 8, 1)) {
    for (const auto& j : upper_filtration(params).jumps) {
      if (j.location > 0 && j.location % params.p() == 0 &&
          !(params.zeta_in_field() && j.location == params.p_e1())) {
        return say(params.describe(), " jump ", j.location);
      }
    }
  }
  return std::nullopt;
}

Counterexample different_closed_form() {
  for (const auto& params : regular_grid()) {
    if (different_exponent_closed(params) != different_exponent_oracle(lower_filtration(params))) {
      return params.describe();
    }
  }
  return std::nullopt;
}

Counterexample orthogonality_is_perfect() {
  for (const auto& params : regular_grid()) {
    const auto upper = upper_filtration(params);
    const FilteredSpace v = v_space_model(params);
    const Rational last(BigInt(b_upper(params.e(), params.p())));
    for (long long k = 0; k <= 40; ++k) {
      const Rational u = Rational(1) + (last - 1) * Rational(BigInt(k), BigInt(40));
      const OrthogonalIndex idx = orthogonal_index(u, params);
      if (!idx.index || upper.dim_at(u) + v.dim_at(*idx.index) != v.total_dim) {
        return say(params.describe(), " u=", u);
      }
    }
  }
  return std::nullopt;
}

Counterexample line_counts_match_enumeration() {
  for (std::uint32_t p : {2, 3}) {
    for (std::size_t dim = 0; dim <= (p == 2 ? 10u : 7u); ++dim) {
      std::uint64_t seen = 0;
      for_each_line(p, dim, [&](std::span<const Residue>) { ++seen; });
      if (BigNat(seen) != count_lines(dim, p)) return say("p=", p, " dim=", dim);
    }
  }
  return std::nullopt;
}

Counterexample idempotents_project_onto_eigenspaces() {
  std::mt19937_64 gen(20240611);
  for (std::uint32_t p : {3, 5, 7, 13}) {
    for (std::uint32_t m = 1; m <= p - 1; ++m) {
      if ((p - 1) % m != 0) continue;
      Residue root = 1;
      while (multiplicative_order(root, p) != m) ++root;
      const GroupAlgebraElement eps = idempotent(p, m, root);
      if (convolve(eps, eps) != eps) return say("eps*eps p=", p, " m=", m);
      // tau * eps = omega(tau) * eps
      if (eps.shifted() != eps.scaled(root)) return say("shift p=", p, " m=", m);
      for (int trial = 0; trial < 20; ++trial) {
        const FpMatrix rep = random_cyclic_representation(p, m, root, 4, gen);
        if (apply_idempotent(eps, rep) != eigenspace(rep, root)) return say("eigenspace p=", p, " m=", m);
      }
    }
  }
  return std::nullopt;
}

Counterexample brute_force_equals_closed_form() {
  for (const auto& params : char_zero_grid({2, 3, 5}, 4, 2)) {
    if (brute_force_mass(params).sum != cyclic_mass(params).total) return params.describe();
  }
  for (std::uint32_t p : {2, 3, 5}) {
    const FieldParams params = FieldParams::char_p(p, 1);
    const BruteForceMass brute = brute_force_mass(params);
    const Rational gap = cyclic_mass(params).total - brute.sum;
    if (gap < Rational(0) || gap > brute.tail_bound) return params.describe();
  }
  return std::nullopt;
}

Counterexample mass_bounded_by_serre_total() {
  for (const auto& params : char_zero_grid({2, 3, 5, 7}, 8, 3)) {
    const Rational total = cyclic_mass(params).total;
    const bool full = total == serre_total(params);
    if (total <= Rational(0) || total > serre_total(params) || full != (params.p() == 2)) return params.describe();
  }
  for (std::uint32_t p : {2, 3, 5, 7}) {
    for (std::uint32_t f = 1; f <= 3; ++f) {
      const FieldParams params = FieldParams::char_p(p, f);
      if ((cyclic_mass(params).total == serre_total(params)) != (p == 2)) return params.describe();
    }
  }
  return std::nullopt;
}

Counterexample series_partial_sums() {
  for (std::uint32_t p : {2, 3, 5}) {
    for (std::uint32_t f = 1; f <= 3; ++f) {
      const BigNat q = pow(BigNat(p), f);
      const Rational s = series_value(p, q);
      const Rational ratio = pow_neg(Rational(q), static_cast<std::uint64_t>(p - 1) * (p - 1));
      for (std::uint64_t k = 1; k <= 8; ++k) {
        if (series_partial_sum(p, q, (p - 1) * k) != s * (Rational(1) - pow(ratio, k))) {
          return say("p=", p, " f=", f, " k=", k);
        }
      }
    }
  }
  return std::nullopt;
}

Counterexample average_closed_form() {
  for (std::uint32_t p : {3, 5, 7}) {
    if (average_c_cyclotomic(p, false) != average_c_cyclotomic_closed_form(p)) return say("p=", p);
  }
  return std::nullopt;
}

Counterexample zeta_raises_the_mass() {
  for (std::uint32_t p : {3, 5, 7}) {
    for (std::uint32_t e = p - 1; e <= 8; e += p - 1) {
      for (std::uint32_t f = 1; f <= 3; ++f) {
        const Rational regular = cyclic_mass(FieldParams::char_zero(p, e, f, false)).total;
        const Rational zeta = cyclic_mass(FieldParams::char_zero(p, e, f, true)).total;
        if (!(regular < zeta)) return say("p=", p, " e=", e, " f=", f);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<CheckResult> run_verify_checks() {
  const std::vector<std::pair<std::string, std::function<Counterexample()>>> checks = {
      {"breaks: b^(i) enumerates the integers prime to p", breaks_enumerate_prime_to_p},
      {"filtration: psi(b^(i)) = b_(i)", lower_breaks_are_psi_of_upper},
      {"filtration: phi(psi(u)) = u", phi_inverts_psi},
      {"filtration: lower numbering via psi", lower_filtration_matches_psi_route},
      {"filtration: upper jumps avoid multiples of p", upper_jumps_avoid_multiples_of_p},
      {"filtration: different exponent closed form", different_closed_form},
      {"filtration: orthogonality is dimension-perfect", orthogonality_is_perfect},
      {"fpspace: line counts match enumeration", line_counts_match_enumeration},
      {"fpspace: idempotents project onto eigenspaces", idempotents_project_onto_eigenspaces},
      {"mass: brute force equals closed form", brute_force_equals_closed_form},
      {"mass: 0 < total <= p, equality iff p = 2", mass_bounded_by_serre_total},
      {"mass: series partial sums", series_partial_sums},
      {"mass: average c closed form", average_closed_form},
      {"mass: zeta in F raises the total", zeta_raises_the_mass},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, check] : checks) {
    CheckResult r{name, true, {}};
    try {
      if (auto bad = check()) {
        r.passed = false;
        r.detail = *bad;
      }
    } catch (const Error& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ramfil::cli
