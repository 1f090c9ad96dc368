#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gprs/gprs.hpp"
#include "oracles.hpp"

using namespace gprs;

namespace {

Polynomial poly(const Field& f, std::vector<Symbol> c) { return Polynomial(f, std::move(c)); }

ReceivedWord word(const Field& f, std::vector<Symbol> c) { return ReceivedWord(f, std::move(c)); }

GprsCode code5(std::vector<Symbol> excluded, std::size_t k) {
  return GprsCode::create(Field::of_order(5), std::move(excluded), k);
}

std::vector<Symbol> values_of(const std::vector<FieldElement>& xs) {
  std::vector<Symbol> out;
  for (const auto& x : xs) out.push_back(x.value());
  return out;
}

}  // namespace

TEST(Oracle, Examples) {
  const Field f = Field::of_order(5);
  const GprsCode a = code5({3, 4}, 2), b = code5({0, 4}, 2);
  const DeepHoleVerdict va = is_deep_hole_oracle(a, word_from_poly(a, poly(f, {0, 0, 1})));
  EXPECT_TRUE(va.is_deep_hole);
  EXPECT_EQ(va.distance, 2u);
  EXPECT_EQ(va.covering_radius, 2u);
  const DeepHoleVerdict vb = is_deep_hole_oracle(b, word_from_poly(b, poly(f, {0, 0, 1})));
  EXPECT_FALSE(vb.is_deep_hole);
  EXPECT_EQ(vb.distance, 1u);
  const DeepHoleVerdict vc = is_deep_hole_oracle(a, encode(a, poly(f, {4, 1})));
  EXPECT_FALSE(vc.is_deep_hole);
  EXPECT_EQ(vc.distance, 0u);
  EXPECT_EQ(va.method, Method::oracle);
}

TEST(MdsExtension, Examples) {
  const Field f = Field::of_order(5);
  const GprsCode b = code5({0, 4}, 2);
  const DeepHoleVerdict v = is_deep_hole_mds_extension(b, word(f, {1, 4, 4, 0}));
  EXPECT_FALSE(v.is_deep_hole);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->kind, Witness::Kind::columns);
  EXPECT_EQ(v.witness->values, (std::vector<std::uint32_t>{1, 2, 3}));
  EXPECT_EQ(witness_to_string(b, *v.witness), "2,3,inf");
  EXPECT_TRUE(validate_mds_witness(b, word(f, {1, 4, 4, 0}), v.witness->values));

  const GprsCode a = code5({3, 4}, 2);
  const DeepHoleVerdict w = is_deep_hole_mds_extension(a, word(f, {0, 1, 4, 0}));
  EXPECT_TRUE(w.is_deep_hole);
  EXPECT_FALSE(w.witness);

  EXPECT_THROW(is_deep_hole_mds_extension(a, word(f, {1, 1, 1, 0})), InvalidArgument);
}

TEST(MdsExtension, AgreesWithOracleOnAllWordsOfSmallCodes) {
  for (auto [excluded, k] : {std::pair{std::vector<Symbol>{3, 4}, 2u}, {std::vector<Symbol>{0, 4}, 2u},
                             {std::vector<Symbol>{1}, 2u}, {std::vector<Symbol>{2}, 3u}}) {
    const GprsCode code = code5(excluded, k);
    oracle::for_each_word(5, code.length(), [&](const std::vector<Symbol>& w) {
      const ReceivedWord u = word(code.field(), w);
      if (is_codeword(code, u)) return;
      const auto mds = is_deep_hole_mds_extension(code, u);
      ASSERT_EQ(mds.is_deep_hole, is_deep_hole_oracle(code, u).is_deep_hole) << code.to_string() << " " << u.to_string();
      if (mds.witness) { EXPECT_TRUE(validate_mds_witness(code, u, mds.witness->values)); }
    });
  }
}

TEST(DegreeKCriterion, Examples) {
  const DeepHoleVerdict a = thm14_criterion(code5({3, 4}, 2));
  EXPECT_TRUE(a.is_deep_hole);
  EXPECT_FALSE(a.witness);

  const GprsCode b = code5({0, 4}, 2);
  const DeepHoleVerdict v = thm14_criterion(b);
  EXPECT_FALSE(v.is_deep_hole);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->values, (std::vector<std::uint32_t>{2, 3}));
  EXPECT_TRUE(validate_thm14_witness(b, v.witness->values));

  EXPECT_THROW(thm14_criterion(code5({4}, 3)), HypothesisViolation);
}

TEST(DegreeKCriterion, RefusesOutsideHypotheses) {
  EXPECT_THROW(thm14_criterion(GprsCode::create(Field::of_order(8), std::vector<Symbol>{0}, 2)), HypothesisViolation);
  EXPECT_THROW(thm14_criterion(GprsCode::create(Field::of_order(4), std::vector<Symbol>{0}, 2)), HypothesisViolation);
  EXPECT_THROW(thm14_criterion(GprsCode::create(Field::of_order(7), std::vector<Symbol>{0}, 5)), HypothesisViolation);
}

TEST(DegreeKCriterion, AgreesWithOracleOnSampledWords) {
  std::mt19937_64 rng(71);
  for (std::uint64_t q : {5, 7, 9}) {
    const Field f = Field::of_order(q);
    for (std::size_t l = 1; l + 3 <= q; ++l) {
      for (int sample = 0; sample < 3; ++sample) {
        std::vector<Symbol> all(q);
        for (Symbol i = 0; i < q; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        const std::vector<Symbol> ex(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(l));
        for (std::size_t k = 2; k <= std::min(q - 3, q - l - 1); ++k) {
          const GprsCode code = GprsCode::create(f, ex, k);
          const DeepHoleVerdict v = thm14_criterion(code);
          for (int t = 0; t < 5; ++t) {
            WordFamilySpec spec{FamilyKind::degree_k, static_cast<Symbol>(1 + rng() % (q - 1)),
                                static_cast<Symbol>(rng() % q), 0, {}};
            for (std::size_t d = 0; d + 1 < k; ++d) spec.low.push_back(static_cast<Symbol>(rng() % q));
            const ReceivedWord u = build_family_word(code, spec);
            ASSERT_EQ(is_deep_hole_oracle(code, u).is_deep_hole, v.is_deep_hole) << code.to_string();
            ASSERT_EQ(is_deep_hole_mds_extension(code, u).is_deep_hole, v.is_deep_hole) << code.to_string();
          }
        }
      }
    }
  }
}

TEST(ShiftedCriterion, Examples) {
  const GprsCode code = code5({0, 1}, 2);
  const DeepHoleVerdict v = thm15_criterion(code, Symbol{1});
  EXPECT_FALSE(v.is_deep_hole);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->values, (std::vector<std::uint32_t>{2, 4}));
  EXPECT_TRUE(validate_thm15_witness(code, 1, v.witness->values));

  // lambda = 1, nu = 0 word of the family is confirmed by the oracle
  const WordFamilySpec spec{FamilyKind::shifted_qminus2, 1, 0, 1, {}};
  EXPECT_FALSE(is_deep_hole_oracle(code, build_family_word(code, spec)).is_deep_hole);
}

TEST(ShiftedCriterion, CharacteristicDividesK) {
  const Field f = Field::of_order(9);
  for (std::size_t l = 1; l <= 5; ++l) {
    std::vector<Symbol> ex;
    for (Symbol a = 0; a < l; ++a) ex.push_back(a * 2 % 9);
    const GprsCode code = GprsCode::create(f, ex, 3);
    for (Symbol a_j : code.excluded()) EXPECT_TRUE(thm15_criterion(code, a_j).is_deep_hole);
  }
}

TEST(ShiftedCriterion, ZeroExcludedPoint) {
  for (std::uint64_t q : {5, 7, 9, 11}) {
    const Field f = Field::of_order(q);
    for (std::size_t k = 2; k + 2 <= q; ++k) {
      const GprsCode code = GprsCode::create(f, std::vector<Symbol>{0}, k);
      EXPECT_TRUE(thm15_criterion(code, f.zero()).is_deep_hole) << q << " " << k;
    }
  }
}

TEST(ShiftedCriterion, Errors) {
  const GprsCode code = code5({0, 1}, 2);
  EXPECT_THROW(thm15_criterion(code, Symbol{2}), InvalidArgument);
  const GprsCode even = GprsCode::create(Field::of_order(8), std::vector<Symbol>{0}, 2);
  EXPECT_THROW(thm15_criterion(even, Symbol{0}), HypothesisViolation);
}

TEST(ShiftedCriterion, AgreesWithOracleOnSampledWords) {
  std::mt19937_64 rng(73);
  for (std::uint64_t q : {5, 7, 9}) {
    const Field f = Field::of_order(q);
    for (std::size_t l = 1; l + 3 <= q; ++l) {
      for (int sample = 0; sample < 3; ++sample) {
        std::vector<Symbol> all(q);
        for (Symbol i = 0; i < q; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        const std::vector<Symbol> ex(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(l));
        for (std::size_t k = 2; k + l + 1 <= q; ++k) {
          const GprsCode code = GprsCode::create(f, ex, k);
          for (Symbol a_j : code.excluded()) {
            const DeepHoleVerdict v = thm15_criterion(code, a_j);
            if (v.witness) { EXPECT_TRUE(validate_thm15_witness(code, a_j, v.witness->values)); }
            for (int t = 0; t < 4; ++t) {
              WordFamilySpec spec{FamilyKind::shifted_qminus2, static_cast<Symbol>(1 + rng() % (q - 1)),
                                  static_cast<Symbol>(rng() % q), a_j, {}};
              for (std::size_t d = 0; d + 1 < k; ++d) spec.low.push_back(static_cast<Symbol>(rng() % q));
              const ReceivedWord u = build_family_word(code, spec);
              ASSERT_EQ(is_deep_hole_oracle(code, u).is_deep_hole, v.is_deep_hole)
                  << code.to_string() << " a_j=" << a_j << " word=" << u.to_string();
            }
          }
        }
      }
    }
  }
}

TEST(FamilyWords, Examples) {
  const Field f = Field::of_order(5);
  const GprsCode a = code5({3, 4}, 2);
  EXPECT_EQ(build_family_word(a, {FamilyKind::degree_k, 1, 0, 0, {}}), word(f, {0, 1, 4, 0}));

  const GprsCode pprs = code5({0}, 2);
  EXPECT_EQ(build_family_word(pprs, {FamilyKind::shifted_qminus2, 1, 0, 0, {}}), word(f, {1, 3, 2, 4, 0}));
  const ReceivedWord shifted = build_family_word(pprs, {FamilyKind::shifted_qminus2, 1, 2, 0, {}});
  EXPECT_EQ(shifted[pprs.n()], 2u);

  EXPECT_THROW(build_family_word(a, {FamilyKind::degree_k, 0, 0, 0, {}}), InvalidArgument);
  EXPECT_THROW(build_family_word(a, {FamilyKind::shifted_qminus2, 1, 0, 2, {}}), InvalidArgument);
}

TEST(FamilyWords, ShiftedProjectiveCoordinate) {
  std::mt19937_64 rng(79);
  for (std::uint64_t q : {5, 7, 9, 11}) {
    const Field f = Field::of_order(q);
    for (Symbol a_j = 0; a_j < q; ++a_j)
      for (std::size_t k = 2; k + 2 <= q; ++k) {
        const GprsCode code = GprsCode::create(f, std::vector<Symbol>{a_j}, k);
        const Symbol lambda = static_cast<Symbol>(1 + rng() % (q - 1)), nu = static_cast<Symbol>(rng() % q);
        const ReceivedWord u = build_family_word(code, {FamilyKind::shifted_qminus2, lambda, nu, a_j, {}});
        const Symbol c = f.mul(binom_mod_p(q - 2, k - 1, f).value(), f.pow(f.neg(a_j), static_cast<std::int64_t>(q - k - 1)));
        EXPECT_EQ(u[code.n()], f.add(f.mul(lambda, c), nu));
      }
  }
}

TEST(FamilyWords, MatchersRecoverParameters) {
  std::mt19937_64 rng(83);
  for (std::uint64_t q : {5, 7, 9}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 40; ++t) {
      const Symbol a_j = static_cast<Symbol>(rng() % q);
      const std::size_t k = 2 + rng() % (q - 3);
      const GprsCode code = GprsCode::create(f, std::vector<Symbol>{a_j}, k);
      WordFamilySpec spec{FamilyKind::degree_k, static_cast<Symbol>(1 + rng() % (q - 1)),
                          static_cast<Symbol>(rng() % q), 0, {}};
      for (std::size_t d = 0; d + 1 < k; ++d) spec.low.push_back(static_cast<Symbol>(rng() % q));
      const auto m = match_degree_k_family(code, build_family_word(code, spec));
      ASSERT_TRUE(m);
      EXPECT_EQ(build_family_word(code, *m), build_family_word(code, spec));

      spec.kind = FamilyKind::shifted_qminus2;
      spec.a_j = a_j;
      const ReceivedWord u = build_family_word(code, spec);
      const auto s = match_shifted_family(code, u, a_j);
      ASSERT_TRUE(s);
      EXPECT_EQ(s->lambda, spec.lambda);
      EXPECT_EQ(build_family_word(code, *s), u);
    }
  }
  const GprsCode code = code5({0}, 2);
  EXPECT_FALSE(match_degree_k_family(code, word(Field::of_order(5), {1, 1, 1, 1, 0})));
}

TEST(ZeroSumSubset, Examples) {
  EXPECT_EQ(values_of(zero_sum_subset(Field::of_order(5), 2)), (std::vector<Symbol>{1, 4}));
  EXPECT_EQ(values_of(zero_sum_subset(Field::of_order(7), 3)), (std::vector<Symbol>{1, 2, 4}));
  const Field f9 = Field::of_order(9);
  const auto triple = zero_sum_subset(f9, 3);
  ASSERT_EQ(triple.size(), 3u);
  EXPECT_EQ((triple[0] + triple[1] + triple[2]).value(), 0u);
}

TEST(ZeroSumSubset, ValidForOddOrdersUpTo49) {
  for (std::uint64_t q = 5; q <= 49; q += 2) {
    if (!decompose_prime_power(q)) continue;
    const Field f = Field::of_order(q);
    for (std::size_t k = 2; k + 3 <= q; ++k) {
      const auto s = values_of(zero_sum_subset(f, k));
      ASSERT_EQ(s.size(), k);
      Symbol sum = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_NE(s[i], 0u);
        if (i) { EXPECT_LT(s[i - 1], s[i]); }
        sum = f.add(sum, s[i]);
      }
      EXPECT_EQ(sum, 0u) << q << " " << k;
    }
  }
}

TEST(ZeroSumSubset, Errors) {
  EXPECT_THROW(zero_sum_subset(Field::of_order(8), 2), HypothesisViolation);
  EXPECT_THROW(zero_sum_subset(Field::of_order(7), 5), HypothesisViolation);
  EXPECT_THROW(zero_sum_subset(Field::of_order(7), 1), HypothesisViolation);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(vp_binomial(9, 3), 1u);
  EXPECT_EQ(vp_binomial(7, 2), 0u);
  EXPECT_EQ(vp_binomial(25, 10), 1u);
  EXPECT_THROW(vp_binomial(8, 3), InvalidArgument);
  EXPECT_THROW(vp_binomial(9, 9), InvalidArgument);
  EXPECT_THROW(vp_binomial(9, 1), InvalidArgument);
}

TEST(Valuation, AgreesWithPascalAndLegendre) {
  for (std::uint64_t q = 3; q <= 81; q += 2) {
    const auto pp = decompose_prime_power(q);
    if (!pp) continue;
    for (std::uint64_t t = 2; t + 1 <= q; ++t) {
      const unsigned pascal = oracle::valuation(oracle::pascal_binomial(static_cast<unsigned>(q - 2),
                                                                       static_cast<unsigned>(t - 1)), pp->p);
      const unsigned legendre = oracle::legendre(q - 2, pp->p) - oracle::legendre(t - 1, pp->p) -
                                oracle::legendre(q - 1 - t, pp->p);
      ASSERT_EQ(vp_binomial(q, t), pascal) << q << " " << t;
      ASSERT_EQ(pascal, legendre);
    }
  }
}

TEST(BinomModP, Examples) {
  EXPECT_EQ(binom_mod_p(3, 1, Field::of_order(5)).value(), 3u);
  EXPECT_EQ(binom_mod_p(7, 2, Field::of_order(9)).value(), 0u);
  EXPECT_EQ(binom_mod_p(40, 0, Field::of_order(7)).value(), 1u);
  EXPECT_THROW(binom_mod_p(2, 3, Field::of_order(7)), InvalidArgument);
}

TEST(BinomModP, AgreesWithPascal) {
  for (std::uint64_t q : {3, 5, 7, 9, 25, 27}) {
    const Field f = Field::of_order(q);
    for (unsigned m = 0; m <= 100; ++m)
      for (unsigned r = 0; r <= m; ++r)
        ASSERT_EQ(binom_mod_p(m, r, f).value(),
                  static_cast<Symbol>(oracle::pascal_binomial(m, r) % f.characteristic()))
            << q << " C(" << m << "," << r << ")";
  }
}

TEST(MethodNames, Text) {
  EXPECT_EQ(to_string(Method::oracle), "oracle");
  EXPECT_EQ(to_string(Method::mds_extension), "mds_extension");
  EXPECT_EQ(to_string(Method::thm14), "thm14");
  EXPECT_EQ(to_string(Method::thm15), "thm15");
}
