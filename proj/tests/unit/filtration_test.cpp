#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramfil/breaks.hpp"
#include "ramfil/error.hpp"
#include "ramfil/filtration.hpp"

namespace ramfil {
namespace {

using JumpList = std::vector<Jump>;

Rational R(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

// Every valid characteristic-0 parameter set with the given p, e, f.
std::vector<FieldParams> char_zero_variants(std::uint32_t p, std::uint32_t e, std::uint32_t f) {
  std::vector<FieldParams> out;
  if (p != 2) out.push_back(FieldParams::char_zero(p, e, f, false));
  if (e % (p - 1) == 0) out.push_back(FieldParams::char_zero(p, e, f, true));
  return out;
}

std::vector<std::uint64_t> sorted_codims(const RamificationFiltration& filt) {
  std::vector<std::uint64_t> out;
  for (const auto& j : filt.jumps) out.push_back(j.codim);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(FieldParams, Validation) {
  auto code_of = [](auto&& make) {
    try {
      make();
    } catch (const Error& err) {
      return err.code();
    }
    return Errc::out_of_domain;
  };
  EXPECT_EQ(code_of([] { FieldParams::char_zero(3, 1, 1, true); }), Errc::invalid_params);
  EXPECT_EQ(code_of([] { FieldParams::char_zero(2, 1, 1, false); }), Errc::invalid_params);
  EXPECT_EQ(code_of([] { FieldParams::char_zero(4, 1, 1, false); }), Errc::invalid_params);
  EXPECT_EQ(code_of([] { FieldParams::char_zero(3, 0, 1, false); }), Errc::invalid_params);
  EXPECT_EQ(code_of([] { FieldParams::char_p(5, 0); }), Errc::invalid_params);
  try {
    FieldParams::char_zero(5, 2, 1, true);
  } catch (const Error& err) {
    EXPECT_NE(std::string(err.what()).find("(p-1) | e"), std::string::npos);
  }
  const FieldParams fp = FieldParams::char_p(3, 2);
  EXPECT_TRUE(fp.zeta_in_field());
  EXPECT_EQ(fp.q(), 9);
  EXPECT_FALSE(fp.has_e());
  EXPECT_THROW((void)fp.e(), Error);
  EXPECT_EQ(FieldParams::char_zero(5, 6, 1, false).e1(), R(3, 2));
  EXPECT_TRUE(FieldParams::q_p(2).zeta_in_field());
  EXPECT_FALSE(FieldParams::q_p(3).zeta_in_field());
}

TEST(SplittingData, Examples) {
  const SplittingData q3 = splitting_data(FieldParams::q_p(3));
  EXPECT_EQ(q3.s, 2u);
  EXPECT_EQ(q3.r, 1u);
  EXPECT_EQ(q3.m, 2u);
  EXPECT_EQ(splitting_data(FieldParams::char_zero(3, 2, 1, false)).s, 1u);
  EXPECT_EQ(splitting_data(FieldParams::char_zero(5, 6, 1, false)).s, 2u);

  const SplittingData q7 = splitting_data(FieldParams::q_p(7));
  EXPECT_EQ(q7.s, 6u);
  EXPECT_EQ(q7.m, 6u);
  // s = 3 for p = 7, e = 2; r is unknown without the class of -p
  const FieldParams f72 = FieldParams::char_zero(7, 2, 1, false);
  EXPECT_FALSE(splitting_data(f72).r.has_value());
  const SplittingData given = splitting_data(f72, 2);
  EXPECT_EQ(given.s, 3u);
  EXPECT_EQ(given.m, 6u);
  EXPECT_THROW((void)splitting_data(f72, 4), Error);
}

TEST(SplittingData, UndefinedOutsideRegularCase) {
  for (const FieldParams& params : {FieldParams::char_p(3, 1), FieldParams::char_zero(3, 2, 1, true)}) {
    try {
      (void)splitting_data(params);
      FAIL();
    } catch (const Error& err) {
      EXPECT_NE(std::string(err.what()).find("splitting undefined"), std::string::npos);
    }
  }
}

TEST(UpperFiltration, Examples) {
  const auto q3 = upper_filtration(FieldParams::q_p(3));
  EXPECT_EQ(q3.jumps, (JumpList{{-1, 1}, {1, 1}}));
  EXPECT_EQ(q3.total_dim, 2u);
  EXPECT_FALSE(q3.truncated);

  const auto z = upper_filtration(FieldParams::char_zero(3, 2, 1, true));
  EXPECT_EQ(z.jumps, (JumpList{{-1, 1}, {1, 1}, {2, 1}, {3, 1}}));
  EXPECT_EQ(z.total_dim, 4u);

  const auto c2 = upper_filtration(FieldParams::char_p(2, 1), 3);
  EXPECT_EQ(c2.jumps, (JumpList{{-1, 1}, {1, 1}, {3, 1}, {5, 1}}));
  EXPECT_TRUE(c2.truncated);
}

TEST(LowerFiltration, Examples) {
  EXPECT_EQ(lower_filtration(FieldParams::char_zero(3, 2, 1, false)).jumps, (JumpList{{-1, 1}, {1, 1}, {4, 1}}));
  EXPECT_EQ(lower_filtration(FieldParams::q_p(2)).jumps, (JumpList{{-1, 1}, {1, 1}, {3, 1}}));
  // c(5) = 4 breaks; psi on upper breaks 1, 2, 4, 5 with slopes 1, 3, 9, 27
  const auto c3 = lower_filtration(FieldParams::char_p(3, 1), 5);
  EXPECT_EQ(c3.jumps, (JumpList{{-1, 1}, {1, 1}, {4, 1}, {22, 1}, {49, 1}}));
  EXPECT_EQ(c3.total_dim, 5u);
  EXPECT_FALSE(c3.truncated);
}

TEST(HerbrandPsi, Examples) {
  RamificationFiltration single{Numbering::upper, 5, 2, {{-1, 1}, {7, 1}}, false};
  const HerbrandMap id = herbrand_psi(single);
  for (int x = 0; x <= 7; ++x) EXPECT_EQ(id(R(x)), R(x));
  EXPECT_EQ(id(R(8)), R(12));

  const HerbrandMap psi = herbrand_psi(upper_filtration(FieldParams::char_zero(3, 2, 1, false)));
  EXPECT_EQ(psi(R(1)), R(1));
  EXPECT_EQ(psi(R(2)), R(4));
  EXPECT_EQ(psi(R(3, 2)), R(5, 2));

  const HerbrandMap psi2 = herbrand_psi(upper_filtration(FieldParams::char_zero(2, 2, 2, true)));
  EXPECT_EQ(psi2(R(3)), R(9));

  EXPECT_THROW((void)herbrand_psi(lower_filtration(FieldParams::q_p(3))), Error);
  EXPECT_THROW((void)psi(R(-1, 2)), Error);
}

TEST(HerbrandPhi, Examples) {
  RamificationFiltration trivial{Numbering::lower, 3, 1, {{-1, 1}}, false};
  const HerbrandMap id = herbrand_phi(trivial);
  for (int x = 0; x < 10; ++x) EXPECT_EQ(id(R(x)), R(x));

  const HerbrandMap phi = herbrand_phi(lower_filtration(FieldParams::char_zero(3, 2, 1, false)));
  EXPECT_EQ(phi(R(4)), R(2));

  for (std::uint32_t e = 1; e <= 4; ++e) {
    for (const auto& params : char_zero_variants(3, e, 1)) {
      const HerbrandMap inv = herbrand_phi(lower_filtration(params));
      for (std::uint64_t i = 1; i <= e; ++i) {
        EXPECT_EQ(inv(Rational(b_lower(i, 3, params.q()))), R(static_cast<long long>(b_upper(i, 3))));
      }
    }
  }
  EXPECT_THROW((void)herbrand_phi(upper_filtration(FieldParams::q_p(3))), Error);
}

TEST(Herbrand, PhiInvertsPsiOnGrid) {
  for (std::uint32_t p : {2, 3, 5}) {
    for (std::uint32_t e = 1; e <= 6; ++e) {
      for (std::uint32_t f = 1; f <= 3; ++f) {
        for (const auto& params : char_zero_variants(p, e, f)) {
          const auto upper = upper_filtration(params);
          const HerbrandMap psi = herbrand_psi(upper);
          const HerbrandMap phi = herbrand_phi(lower_filtration(params));
          const Rational top(upper.jumps.back().location + 2);
          for (int k = 0; k < 50; ++k) {
            const Rational u = top * R(k, 49);
            EXPECT_EQ(phi(psi(u)), u) << params.describe() << " u=" << u;
          }
        }
      }
    }
  }
}

TEST(Herbrand, LowerBreaksArePsiOfUpperBreaks) {
  for (std::uint32_t p : {3, 5, 7}) {
    for (std::uint32_t e = 1; e <= 8; ++e) {
      for (std::uint32_t f = 1; f <= 3; ++f) {
        const FieldParams params = FieldParams::char_zero(p, e, f, false);
        const HerbrandMap psi = herbrand_psi(upper_filtration(params));
        for (std::uint64_t i = 1; i <= e; ++i) {
          EXPECT_EQ(Rational(b_lower(i, p, params.q())), psi(R(static_cast<long long>(b_upper(i, p)))));
        }
      }
    }
  }
  // the same closed form on the regular-model grid of the breaks module
  for (std::uint32_t p : {2, 3, 5}) {
    for (std::uint32_t f : {1, 2}) {
      const FieldParams params = FieldParams::char_p(p, f);
      const HerbrandMap psi = herbrand_psi(upper_filtration(params, 30));
      for (std::uint64_t i = 1; i <= 30; ++i) {
        EXPECT_EQ(Rational(b_lower(i, p, params.q())), psi(R(static_cast<long long>(b_upper(i, p)))));
      }
    }
  }
}

TEST(Filtration, LowerViaPsiMatchesClosedForm) {
  for (std::uint32_t p : {2, 3, 5}) {
    for (std::uint32_t e = 1; e <= 6; ++e) {
      for (std::uint32_t f = 1; f <= 3; ++f) {
        for (const auto& params : char_zero_variants(p, e, f)) {
          EXPECT_EQ(lower_via_psi(upper_filtration(params)), lower_filtration(params)) << params.describe();
        }
      }
    }
    for (std::uint64_t m = 1; m <= 20; ++m) {
      const FieldParams params = FieldParams::char_p(p, 2);
      auto via_psi = lower_via_psi(upper_filtration(params, c_truncation(m, p)));
      via_psi.truncated = false;
      EXPECT_EQ(via_psi, lower_filtration(params, m)) << "p=" << p << " m=" << m;
    }
  }
}

TEST(Filtration, DimensionBookkeeping) {
  for (std::uint32_t p : {2, 3, 5, 7}) {
    for (std::uint32_t e = 1; e <= 8; ++e) {
      for (std::uint32_t f = 1; f <= 3; ++f) {
        for (const auto& params : char_zero_variants(p, e, f)) {
          const auto upper = upper_filtration(params);
          const auto lower = lower_filtration(params);
          const std::uint64_t expected = (params.zeta_in_field() ? 2u : 1u) + static_cast<std::uint64_t>(e) * f;
          std::uint64_t sum = 0;
          for (const auto& j : upper.jumps) sum += j.codim;
          EXPECT_EQ(sum, expected);
          EXPECT_EQ(upper.total_dim, expected);
          EXPECT_EQ(lower.total_dim, expected);
          EXPECT_EQ(sorted_codims(upper), sorted_codims(lower));
          EXPECT_EQ(upper.jumps.front(), (Jump{-1, 1}));
          for (std::size_t k = 1; k < upper.jumps.size(); ++k) {
            EXPECT_LT(upper.jumps[k - 1].location, upper.jumps[k].location);
            EXPECT_LT(lower.jumps[k - 1].location, lower.jumps[k].location);
          }
          // G^{pj} = G^{pj+1}: only p*e1 may be a multiple of p
          for (const auto& j : upper.jumps) {
            if (j.location > 0 && j.location % p == 0) {
              EXPECT_TRUE(params.zeta_in_field());
              EXPECT_EQ(j.location, params.p_e1());
            }
          }
        }
      }
    }
  }
}

TEST(IndexTable, Examples) {
  const auto q3 = index_table(FieldParams::q_p(3));
  ASSERT_EQ(q3.size(), 2u);
  EXPECT_EQ(q3[0], (IndexInterval{0, true, BigInt(1), 1}));
  EXPECT_EQ(q3[1], (IndexInterval{1, false, std::nullopt, 3}));

  const auto t = index_table(FieldParams::char_zero(3, 2, 1, false));
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[1], (IndexInterval{1, false, BigInt(2), 3}));
  EXPECT_EQ(t[2], (IndexInterval{2, false, std::nullopt, 9}));

  try {
    (void)index_table(FieldParams::q_p(2));
    FAIL();
  } catch (const Error& err) {
    EXPECT_STREQ(err.what(), "table defined for regular case");
  }
}

TEST(IndexTable, MatchesCodimensionsOfJumps) {
  for (std::uint32_t p : {3, 5, 7}) {
    for (std::uint32_t e = 1; e <= 8; ++e) {
      for (std::uint32_t f = 1; f <= 3; ++f) {
        const FieldParams params = FieldParams::char_zero(p, e, f, false);
        const auto upper = upper_filtration(params);
        const auto table = index_table(params);
        EXPECT_EQ(table.back().index, pow(params.q(), e));
        const Rational last(BigInt(b_upper(e, p)));
        for (int k = 0; k <= 60; ++k) {
          const Rational u = (last + 2) * R(k, 60);
          // (G^0 : G^u) from the jump list
          const BigNat from_jumps = pow(BigNat(p), upper.dim_at(R(0)) - upper.dim_at(u));
          const auto row = std::find_if(table.begin(), table.end(), [&](const IndexInterval& iv) {
            const bool above_lo = iv.lo_closed ? Rational(iv.lo) <= u : Rational(iv.lo) < u;
            return above_lo && (!iv.hi || u <= Rational(*iv.hi));
          });
          ASSERT_NE(row, table.end());
          EXPECT_EQ(row->index, from_jumps) << params.describe() << " u=" << u;
        }
      }
    }
  }
}

TEST(DifferentExponent, OracleExamples) {
  RamificationFiltration unramified{Numbering::lower, 3, 1, {{-1, 1}}, false};
  EXPECT_EQ(different_exponent_oracle(unramified), 0);
  EXPECT_EQ(different_exponent_oracle(lower_filtration(FieldParams::q_p(3))), 4);
  EXPECT_EQ(different_exponent_oracle(lower_filtration(FieldParams::char_zero(3, 2, 1, false))), 22);
  try {
    (void)different_exponent_oracle(upper_filtration(FieldParams::char_p(3, 1), 4));
    FAIL();
  } catch (const Error& err) {
    EXPECT_TRUE(err.code() == Errc::invalid_params || err.code() == Errc::incomplete_filtration);
  }
  auto truncated = lower_filtration(FieldParams::char_p(3, 1), 5);
  truncated.truncated = true;
  try {
    (void)different_exponent_oracle(truncated);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::incomplete_filtration);
    EXPECT_STREQ(err.what(), "cannot sum infinite filtration");
  }
}

TEST(DifferentExponent, BlockSumMatchesLevelByLevelOracle) {
  for (std::uint32_t p : {2, 3, 5}) {
    for (std::uint32_t e = 1; e <= 4; ++e) {
      for (const auto& params : char_zero_variants(p, e, 1)) {
        const auto lower = lower_filtration(params);
        std::vector<std::pair<std::int64_t, std::uint64_t>> jumps;
        for (const auto& j : lower.jumps) jumps.emplace_back(static_cast<std::int64_t>(j.location), j.codim);
        EXPECT_EQ(different_exponent_oracle(lower), oracle::different_by_levels(p, lower.total_dim, jumps))
            << params.describe();
      }
    }
  }
}

TEST(DifferentExponent, ClosedFormExamples) {
  EXPECT_EQ(different_exponent_closed(FieldParams::q_p(3)), 4);
  EXPECT_EQ(different_exponent_closed(FieldParams::char_zero(3, 2, 1, false)), 22);
  EXPECT_EQ(different_exponent_closed(FieldParams::q_p(5)), 8);
  EXPECT_EQ(discriminant_exponent(FieldParams::q_p(3)), 12);
  EXPECT_EQ(discriminant_exponent(FieldParams::char_zero(3, 2, 1, false)), 66);
  EXPECT_EQ(discriminant_exponent(FieldParams::q_p(5)), 40);
  EXPECT_THROW((void)different_exponent_closed(FieldParams::q_p(2)), Error);
  EXPECT_THROW((void)discriminant_exponent(FieldParams::char_p(3, 1)), Error);
}

TEST(DifferentExponent, ClosedFormMatchesOracleOnRegularGrid) {
  for (std::uint32_t p : {3, 5, 7}) {
    for (std::uint32_t e = 1; e <= 8; ++e) {
      for (std::uint32_t f = 1; f <= 3; ++f) {
        const FieldParams params = FieldParams::char_zero(p, e, f, false);
        EXPECT_EQ(different_exponent_closed(params), different_exponent_oracle(lower_filtration(params)))
            << params.describe();
      }
    }
  }
}

TEST(CyclicDiscriminant, Examples) {
  EXPECT_EQ(cyclic_discriminant(FieldParams::q_p(3), 1), (CyclicDiscriminant{4, 2}));
  EXPECT_EQ(cyclic_discriminant(FieldParams::char_p(2, 1), 3), (CyclicDiscriminant{6, 5}));
  EXPECT_EQ(cyclic_discriminant(FieldParams::char_zero(2, 3, 1, true), 3), (CyclicDiscriminant{6, 5}));
  EXPECT_EQ(tres_ramifiee_discriminant(FieldParams::char_zero(3, 2, 1, true)).c, 6);
  EXPECT_EQ(tres_ramifiee_discriminant(FieldParams::q_p(2)).c, 2);
  EXPECT_THROW((void)cyclic_discriminant(FieldParams::q_p(3), 2), Error);
  EXPECT_THROW((void)cyclic_discriminant(FieldParams::q_p(3), 0), Error);
  EXPECT_THROW((void)tres_ramifiee_discriminant(FieldParams::q_p(3)), Error);
}

TEST(VSpaceModel, Examples) {
  const FilteredSpace q3 = v_space_model(FieldParams::q_p(3));
  EXPECT_EQ(q3.total_dim, 2u);
  EXPECT_EQ(q3.jumps, (std::vector<SpaceJump>{{3, 1}, {1, 1}}));
  const FilteredSpace v = v_space_model(FieldParams::char_zero(3, 2, 1, false));
  EXPECT_EQ(v.jumps, (std::vector<SpaceJump>{{3, 1}, {2, 1}, {1, 1}}));
  for (std::uint32_t p : {3, 5, 7}) {
    for (std::uint32_t e = 1; e <= 8; ++e) {
      for (std::uint32_t f = 1; f <= 3; ++f) {
        const FilteredSpace space = v_space_model(FieldParams::char_zero(p, e, f, false));
        EXPECT_EQ(space.total_dim, 1u + e * f);
        EXPECT_EQ(space.dim_at(space.jumps.back().index), space.total_dim);
      }
    }
  }
  EXPECT_THROW((void)v_space_model(FieldParams::q_p(2)), Error);
}

TEST(UnitSpaceModel, Examples) {
  EXPECT_EQ(unit_space_model(FieldParams::q_p(2)).total_dim, 3u);
  const FilteredSpace z = unit_space_model(FieldParams::char_zero(3, 2, 1, true));
  EXPECT_EQ(z.total_dim, 4u);
  EXPECT_EQ(z.jumps, (std::vector<SpaceJump>{{3, 1}, {2, 1}, {1, 1}, {0, 1}}));
  const FilteredSpace c = unit_space_model(FieldParams::char_p(3, 1), 3);
  EXPECT_EQ(c.jumps, (std::vector<SpaceJump>{{0, 1}, {-1, 1}, {-2, 1}, {-4, 1}}));
  EXPECT_TRUE(c.truncated);
  try {
    (void)unit_space_model(FieldParams::q_p(3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_NE(std::string(err.what()).find("use v_space_model"), std::string::npos);
  }
}

TEST(BreakOfLine, Examples) {
  const FieldParams z = FieldParams::char_zero(3, 2, 1, true);
  const FilteredSpace units = unit_space_model(z);
  EXPECT_EQ(break_of_line(units, 3, z), -1);  // m = p e1
  EXPECT_EQ(break_of_line(units, 2, z), 1);
  EXPECT_EQ(break_of_line(units, 1, z), 2);
  EXPECT_EQ(break_of_line(units, 0, z), 3);  // tres ramifiee

  const FieldParams c = FieldParams::char_p(3, 1);
  const FilteredSpace poles = unit_space_model(c, 5);
  EXPECT_EQ(break_of_line(poles, 0, c), -1);
  EXPECT_EQ(break_of_line(poles, -static_cast<std::int64_t>(b_upper(2, 3)), c), 2);

  const FieldParams reg = FieldParams::char_zero(5, 3, 1, false);
  const FilteredSpace v = v_space_model(reg);
  EXPECT_EQ(break_of_line(v, v.jumps[0].index, reg), -1);  // W_0
  for (std::uint64_t i = 1; i <= 3; ++i) {
    EXPECT_EQ(break_of_line(v, v.jumps[i].index, reg), static_cast<std::int64_t>(b_upper(i, 5)));
  }
  try {
    (void)break_of_line(poles, -3, c);  // 3 is divisible by p
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::out_of_domain);
  }
}

TEST(OrthogonalIndex, Examples) {
  const FieldParams params = FieldParams::char_zero(3, 2, 1, false);
  EXPECT_EQ(orthogonal_index(R(1), params), (OrthogonalIndex{OrthogonalIndex::Kind::index, 3}));
  const std::int64_t top = 3;
  const std::int64_t be = static_cast<std::int64_t>(b_upper(2, 3));
  EXPECT_EQ(orthogonal_index(R(be), params).index, top - be * 1 + 1);
  EXPECT_EQ(orthogonal_index(R(1, 2), params).kind, OrthogonalIndex::Kind::inertia);
  EXPECT_EQ(orthogonal_index(R(-1), params).kind, OrthogonalIndex::Kind::whole_group);
  EXPECT_EQ(orthogonal_index(R(5, 2), params).kind, OrthogonalIndex::Kind::trivial);
  EXPECT_THROW((void)orthogonal_index(R(1), FieldParams::q_p(2)), Error);
}

TEST(OrthogonalIndex, PairingIsDimensionPerfect) {
  for (std::uint32_t p : {3, 5, 7}) {
    for (std::uint32_t e = 1; e <= 8; ++e) {
      for (std::uint32_t f = 1; f <= 3; ++f) {
        const FieldParams params = FieldParams::char_zero(p, e, f, false);
        const auto upper = upper_filtration(params);
        const FilteredSpace v = v_space_model(params);
        const Rational last(BigInt(b_upper(e, p)));
        for (int k = 0; k <= 40; ++k) {
          const Rational u = Rational(1) + (last - 1) * R(k, 40);
          const OrthogonalIndex idx = orthogonal_index(u, params);
          ASSERT_EQ(idx.kind, OrthogonalIndex::Kind::index);
          // (G^u)^perp has dimension dim V - dim G^u
          EXPECT_EQ(upper.dim_at(u) + v.dim_at(*idx.index), v.total_dim) << params.describe() << " u=" << u;
          EXPECT_EQ(upper.codim_at(u), v.dim_at(*idx.index));
        }
      }
    }
  }
}

}  // namespace
}  // namespace ramfil
