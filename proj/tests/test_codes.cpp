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
#include "iccc/codes.hpp"
#include "iccc/graph.hpp"
#include "oracles.hpp"

using namespace iccc;

namespace {

Graph fixture(const std::string& name) { return load_graph(std::string(ICCC_DATA_DIR) + "/graphs/" + name + ".txt"); }

WeightSpectrum spec(std::vector<long long> v) {
  std::vector<BigInt> c(v.begin(), v.end());
  return WeightSpectrum(c);
}

}  // namespace

TEST(Codes, CocycleCodes) {
  const LinearCode sq = cocycle_code(reduce_to_cmm(fixture("square"), 2));
  EXPECT_EQ(sq.length(), 4u);
  EXPECT_EQ(sq.dimension(), 3u);
  const LinearCode tri = cocycle_code(reduce_to_cmm(fixture("triangle"), 2));
  EXPECT_EQ(tri.dimension(), 2u);
  EXPECT_EQ(brute_force_spectrum(tri), spec({1, 0, 3, 0}));
  EXPECT_EQ(brute_force_spectrum(sq), spec({1, 0, 6, 0, 1}));
  const LinearCode forest = cocycle_code(reduce_to_cmm(parse_graph("vertices 3\n0 1\n1 2\n"), 5));
  EXPECT_EQ(forest.dimension(), 2u);
  EXPECT_EQ(forest.length(), 2u);
}

TEST(Codes, DualCode) {
  const LinearCode sq = cocycle_code(reduce_to_cmm(fixture("square"), 2));
  const LinearCode d = dual_code(sq);
  EXPECT_EQ(d.generator(), Matrix::from_rows(2, {{1, 1, 1, 1}}));
  EXPECT_EQ(dual_code(LinearCode(Matrix::identity(4, 3))).dimension(), 0u);
  const LinearCode rep(Matrix::from_rows(2, {{1, 1, 1}}));
  EXPECT_EQ(brute_force_spectrum(dual_code(rep)), spec({1, 0, 3, 0}));
  EXPECT_EQ(dual_code(LinearCode::zero_code(3, 2)).dimension(), 3u);
}

TEST(Codes, DualCodeIsOrthogonalComplement) {
  std::mt19937_64 rng(3);
  for (u64 q : {2u, 3u, 5u}) {
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 2 + rng() % 5, k = 1 + rng() % (n - 1);
      const LinearCode c(oracle::random_full_rank(rng, k, n, q));
      const LinearCode d = dual_code(c);
      EXPECT_EQ(d.dimension(), n - k);
      EXPECT_EQ(oracle::spectrum(d.generator()), oracle::dual_spectrum_scan(c.generator()));
      const Matrix prod = multiply(c.generator(), d.generator().transpose());
      for (std::size_t r = 0; r < prod.rows(); ++r)
        for (std::size_t s = 0; s < prod.cols(); ++s) EXPECT_EQ(prod(r, s), 0u);
    }
  }
}

TEST(Codes, BruteForceSpectrumMatchesOracle) {
  std::mt19937_64 rng(5);
  for (u64 q : {2u, 3u, 7u, 131u}) {
    for (int t = 0; t < 6; ++t) {
      const std::size_t n = 3 + rng() % 6, k = 1 + rng() % (q > 100 ? 2 : 4);
      if (k > n) continue;
      const LinearCode c(oracle::random_full_rank(rng, k, n, q));
      EXPECT_EQ(oracle::to_u64(brute_force_spectrum(c)), oracle::spectrum(c.generator()));
      EXPECT_EQ(brute_force_spectrum(c, u64{1} << 24, 3), brute_force_spectrum(c));
    }
  }
  // Words wider than one machine word on the binary path.
  const LinearCode wide(oracle::random_full_rank(rng, 6, 150, 2));
  EXPECT_EQ(oracle::to_u64(brute_force_spectrum(wide)), oracle::spectrum(wide.generator()));
  EXPECT_EQ(brute_force_spectrum(LinearCode::zero_code(3, 2)), spec({1, 0, 0, 0}));
  EXPECT_ERRC(brute_force_spectrum(LinearCode(Matrix::identity(30, 2)), u64{1} << 20), Errc::TooLarge);
}

TEST(Codes, Cyclicity) {
  EXPECT_TRUE(is_cyclic(LinearCode(Matrix::from_rows(2, {{1, 1, 1}}))));
  EXPECT_FALSE(is_cyclic(LinearCode(Matrix::from_rows(2, {{1, 0, 0}, {0, 1, 0}}))));
  EXPECT_TRUE(is_cyclic(LinearCode::zero_code(4, 3)));
}

TEST(Codes, TraceCodeword) {
  const CyclicCodeParams p = CyclicCodeParams::make(2, 3);
  EXPECT_EQ(p.k, 2u);
  EXPECT_EQ(p.N, 1u);
  EXPECT_EQ(trace_codeword(p.field.zero(), p), (std::vector<u32>{0, 0, 0}));
  EXPECT_EQ(trace_codeword(p.field.one(), p), (std::vector<u32>{0, 1, 1}));
}

TEST(Codes, TraceCodewordsSpanIrreducibleCode) {
  for (auto [q, n] : std::vector<std::pair<u64, u64>>{{2, 7}, {2, 5}, {3, 8}, {3, 13}, {5, 6}}) {
    const CyclicCodeParams p = CyclicCodeParams::make(q, n);
    const LinearCode c = irreducible_cyclic_generator(p);
    std::set<std::vector<u64>> words;
    for (u64 i = 0; i < p.field.size(); ++i) {
      auto w = trace_codeword(p.field.from_index(i), p);
      words.insert(std::vector<u64>(w.begin(), w.end()));
    }
    EXPECT_EQ(words, oracle::codewords(c.generator())) << q << " " << n;
    EXPECT_TRUE(is_cyclic(c));
  }
}

TEST(Codes, IrreducibleCyclicRecognition) {
  ExtensionField gf8(2, 3);
  Matrix simplex(3, 7, 2);
  for (u64 j = 0; j < 7; ++j) {
    const std::vector<u32> c = gf8.generator().pow(j).coeffs();
    for (unsigned r = 0; r < 3; ++r) simplex(r, j) = c[r];
  }
  EXPECT_TRUE(is_irreducible_cyclic(LinearCode(simplex), gf8));
  EXPECT_EQ(oracle::spectrum(simplex), (std::vector<u64>{1, 0, 0, 0, 7, 0, 0, 0}));
  EXPECT_FALSE(is_irreducible_cyclic(LinearCode(Matrix::from_rows(2, {{1, 0, 0}, {0, 1, 0}})), ExtensionField(2, 2)));
  const CyclicCodeParams p = CyclicCodeParams::make(3, 13);
  EXPECT_TRUE(is_irreducible_cyclic(irreducible_cyclic_generator(p), p.field));
}

TEST(Codes, LogPatternPowerBasis) {
  // Row operations destroy the polynomial-basis pattern; the power basis recovers it.
  const CyclicCodeParams p = CyclicCodeParams::make(2, 5);
  const LinearCode c = irreducible_cyclic_generator(p, 3);
  const LogOracle logs(p.field);
  const LogPatternResult r = match_log_pattern(c.generator(), p, logs);
  EXPECT_TRUE(r.matches);
  const Echelon e = row_reduce(c.generator());
  const LogPatternResult r2 = match_log_pattern(e.reduced, p, logs);
  EXPECT_TRUE(r2.matches);
  Matrix zero_col = c.generator();
  for (unsigned r0 = 0; r0 < p.k; ++r0) zero_col(r0, 2) = 0;
  EXPECT_TRUE(match_log_pattern(zero_col, p, logs).zero_column);
}

TEST(Codes, MacWilliams) {
  EXPECT_EQ(macwilliams(spec({1, 0, 0, 1}), 3, 1, 2), spec({1, 0, 3, 0}));
  EXPECT_EQ(macwilliams(spec({1, 0, 6, 0, 1}), 4, 3, 2), spec({1, 0, 0, 0, 1}));
  EXPECT_EQ(macwilliams(spec({1, 3, 3, 1}), 3, 3, 2), spec({1, 0, 0, 0}));
  EXPECT_ERRC(macwilliams(spec({1, 0, 0}), 2, 1, 2), Errc::NonIntegerCoefficient);
  EXPECT_EQ(detail::binomial(10, 3), 120);
  EXPECT_EQ(krawtchouk(3, 2, 1, 1), 1);
}

TEST(Codes, DirectSum) {
  const LinearCode tri = cocycle_code(reduce_to_cmm(fixture("triangle"), 2));
  const LinearCode s = compose_direct_sum(tri, tri);
  EXPECT_EQ(s.length(), 6u);
  EXPECT_EQ(s.dimension(), 4u);
  EXPECT_EQ(brute_force_spectrum(s), convolve(brute_force_spectrum(tri), brute_force_spectrum(tri)));
  EXPECT_EQ(compose_direct_sum(tri, LinearCode::zero_code(0, 2)).generator(), tri.generator());
  EXPECT_ERRC(compose_direct_sum(tri, LinearCode::zero_code(1, 3)), Errc::FieldMismatch);
}
