// Copyright 2026 The iccc-potts Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "errc.hpp"
#include "iccc/mceliece.hpp"
#include "oracles.hpp"

using namespace iccc;

namespace {

WeightSpectrum exact_spectrum(u64 q, u64 n) {
  const CyclicCodeParams p = CyclicCodeParams::make(q, n);
  const ThetaParams t = compute_theta(p.n, p.k, p.q);
  const GaussSumEngine engine(p.field);
  return weight_table(p, t, exact_phases(engine, p), certified_window(t, p)).spectrum;
}

ThetaParams theta_with_grid(u64 q, u64 numerator) {
  ThetaParams t;
  t.q = q;
  t.min_digit_sum = numerator;
  t.theta = static_cast<double>(numerator) / static_cast<double>(q - 1);
  const u64 c = t.ceil_theta();
  t.grid = *nt::checked_pow(q, c > 0 ? c - 1 : 0);
  return t;
}

}  // namespace

TEST(Theta, Examples) {
  const ThetaParams a = compute_theta(7, 3, 2);
  EXPECT_EQ(a.theta, 3.0);
  EXPECT_EQ(a.N, 1u);
  EXPECT_EQ(a.grid, 4u);
  const ThetaParams b = compute_theta(5, 4, 2);
  EXPECT_EQ(b.theta, 2.0);
  EXPECT_EQ(b.N, 3u);
  EXPECT_EQ(b.grid, 2u);
  // 2 divides 3 - 1, so this pair is consistent: N = 1, theta = S'(2) / 2 = 1.
  const ThetaParams c = compute_theta(2, 1, 3);
  EXPECT_EQ(c.theta, 1.0);
  EXPECT_ERRC(compute_theta(5, 3, 2), Errc::InconsistentParams);
  EXPECT_ERRC(compute_theta(5, 4, 4), Errc::NotPrime);
  // Non-integer theta: n = 1 over GF(5), S'(j) minimal at j = 1.
  const ThetaParams d = compute_theta(1, 1, 5);
  EXPECT_EQ(d.min_digit_sum, 1u);
  EXPECT_DOUBLE_EQ(d.theta, 0.25);
  EXPECT_EQ(d.grid, 1u);
}

TEST(Theta, EpsilonZero) {
  const ThetaParams t = compute_theta(15, 4, 2);
  EXPECT_EQ(t.exp_num, 1);
  EXPECT_EQ(t.exp_den, 1);
  EXPECT_DOUBLE_EQ(t.epsilon0, 0.5);
  const ThetaParams u = compute_theta(7, 3, 2);
  EXPECT_EQ(u.exp_num, 1);
  EXPECT_EQ(u.exp_den, 2);
  EXPECT_DOUBLE_EQ(u.epsilon0, std::sqrt(2.0) / 4);
}

TEST(Theta, MatchesNaiveScan) {
  for (u64 q : {2u, 3u, 5u})
    for (u64 k = 1; k <= 6; ++k) {
      const u64 m = *nt::checked_pow(q, k) - 1;
      for (u64 n : nt::divisors(m)) {
        if (*nt::fast_order(q, n) > k) continue;
        const ThetaParams t = compute_theta(n, k, q);
        EXPECT_EQ(t.min_digit_sum, oracle::theta_numerator(n, q, m / n));
      }
    }
}

TEST(Cosets, Examples) {
  const CosetPartition p = cyclotomic_cosets(16, 3);
  const std::vector<std::vector<u64>> expected{{0}, {1, 3, 9, 11}, {2, 6}, {4, 12}, {5, 7, 13, 15}, {8}, {10, 14}};
  EXPECT_EQ(p.cosets, expected);
  EXPECT_EQ(p.representatives, (std::vector<u64>{0, 1, 2, 4, 5, 8, 10}));
  EXPECT_EQ(cyclotomic_cosets(1, 2).cosets, (std::vector<std::vector<u64>>{{0}}));
  EXPECT_EQ(cyclotomic_cosets(7, 2).cosets, (std::vector<std::vector<u64>>{{0}, {1, 2, 4}, {3, 5, 6}}));
  EXPECT_ERRC(cyclotomic_cosets(6, 3), Errc::NotCoprime);
}

TEST(Cosets, CountFormula) {
  EXPECT_EQ(coset_count_formula(16, 3), 7u);
  EXPECT_EQ(coset_count_formula(1, 2), 1u);
  for (u64 q : {2u, 3u, 7u})
    for (u64 N = 1; N < 300; ++N) {
      if (N % q == 0) continue;
      const auto naive = oracle::cosets(N, q);
      ASSERT_EQ(coset_count_formula(N, q), naive.size());
      ASSERT_EQ(cyclotomic_cosets(N, q).count(), naive.size());
    }
}

TEST(Rounding, Grid) {
  EXPECT_EQ(round_weight(4.0, theta_with_grid(2, 1)), 4);
  EXPECT_EQ(round_weight(3.9, theta_with_grid(2, 2)), 4);
  EXPECT_ERRC(round_weight(3.0, theta_with_grid(2, 2)), Errc::AmbiguousRounding);
  EXPECT_ERRC(round_weight(3.6, theta_with_grid(2, 2), 0.3), Errc::AmbiguousRounding);
  EXPECT_EQ(round_weight(17.99, theta_with_grid(3, 5)), 18);
}

TEST(McEliece, SmallCodesMatchBruteForce) {
  EXPECT_EQ(exact_spectrum(2, 7), WeightSpectrum(std::vector<BigInt>{1, 0, 0, 0, 7, 0, 0, 0}));
  for (auto [q, n] : std::vector<std::pair<u64, u64>>{
           {2, 5}, {2, 9}, {2, 15}, {2, 17}, {2, 21}, {2, 31}, {2, 51}, {2, 73}, {3, 8}, {3, 10}, {3, 13}, {3, 20}, {3, 26}, {5, 6}, {5, 13}, {7, 8}}) {
    const CyclicCodeParams p = CyclicCodeParams::make(q, n);
    const WeightSpectrum s = exact_spectrum(q, n);
    EXPECT_EQ(oracle::to_u64(s), oracle::spectrum(irreducible_cyclic_generator(p).generator())) << q << " " << n;
  }
}

TEST(McEliece, OneClassCodes) {
  // N = 1: every nonzero word has the same weight.
  for (auto [q, n] : std::vector<std::pair<u64, u64>>{{2, 3}, {3, 8}, {5, 24}, {2, 63}}) {
    const WeightSpectrum s = exact_spectrum(q, n);
    EXPECT_EQ(s.nonzero().size(), 2u);
    EXPECT_EQ(s.total(), BigInt(n + 1));
  }
}

TEST(McEliece, RawWeightsNearGrid) {
  for (auto [q, n] : std::vector<std::pair<u64, u64>>{{2, 73}, {3, 91}, {2, 85}}) {
    const CyclicCodeParams p = CyclicCodeParams::make(q, n);
    const ThetaParams t = compute_theta(p.n, p.k, p.q);
    const GaussSumEngine engine(p.field);
    const WeightTable table = weight_table(p, t, exact_phases(engine, p));
    for (const auto& row : table.entries) {
      EXPECT_LT(std::abs(row.raw - static_cast<double>(row.rounded)), 1e-6);
      EXPECT_EQ(row.rounded % static_cast<long long>(t.grid), 0);
    }
  }
}

TEST(McEliece, AssembleChecksCounts) {
  const CyclicCodeParams p = CyclicCodeParams::make(2, 7);
  WeightTable t;
  t.entries.push_back({0, 4.0, 4, 1});
  EXPECT_EQ(assemble_spectrum(t, 7, 2, 3), WeightSpectrum(std::vector<BigInt>{1, 0, 0, 0, 7, 0, 0, 0}));
  t.entries[0].rounded = 2;
  EXPECT_ERRC(assemble_spectrum(t, 7, 2, 3), Errc::CountMismatch);
  t.entries[0].rounded = 9;
  EXPECT_ERRC(assemble_spectrum(t, 7, 2, 3), Errc::CountMismatch);
  t.entries[0] = {0, 4.0, 4, 2};
  EXPECT_ERRC(assemble_spectrum(t, 7, 2, 3), Errc::CountMismatch);
}

TEST(McEliece, NoisyPhasesBelowEpsilonZero) {
  const CyclicCodeParams p = CyclicCodeParams::make(2, 73);
  const ThetaParams t = compute_theta(p.n, p.k, p.q);
  const GaussSumEngine engine(p.field);
  const auto exact = exact_phases(engine, p);
  const WeightSpectrum truth = weight_table(p, t, exact).spectrum;
  for (u64 seed = 1; seed <= 50; ++seed) {
    const auto noisy = oracle_phases(exact, 0.99 * t.epsilon0, seed, false, p.field.size());
    EXPECT_EQ(weight_table(p, t, noisy, certified_window(t, p)).spectrum, truth);
  }
}

TEST(McEliece, ParallelTableIsDeterministic) {
  const CyclicCodeParams p = CyclicCodeParams::make(3, 91);
  const ThetaParams t = compute_theta(p.n, p.k, p.q);
  const GaussSumEngine engine(p.field);
  const auto ph = exact_phases(engine, p);
  const WeightTable a = weight_table(p, t, ph, std::nullopt, 1);
  const WeightTable b = weight_table(p, t, ph, std::nullopt, 4);
  EXPECT_EQ(a.spectrum, b.spectrum);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) EXPECT_EQ(a.entries[i].raw, b.entries[i].raw);
}
