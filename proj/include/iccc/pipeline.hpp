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

/// @file pipeline.hpp
/// Graph -> membership -> Gauss phases -> weights -> MacWilliams -> Z.

#pragma once

#include <optional>
#include <vector>

#include "iccc/codes.hpp"
#include "iccc/gauss.hpp"
#include "iccc/graph.hpp"
#include "iccc/mceliece.hpp"
#include "iccc/membership.hpp"
#include "iccc/potts.hpp"

namespace iccc {

struct PipelineOptions {
  double epsilon = 1e-3;
  u64 seed = 1;
  bool exact_phases = false;  // skip the noise model entirely
  bool inject_failures = false;
  unsigned attempts = 1;  // oracle reruns when a run is rejected
  unsigned threads = 1;
  MembershipCaps caps;
};

struct BlockResult {
  BlockVerdict verdict;
  std::vector<GaussPhase> phases;
  WeightTable table;
  WeightSpectrum spectrum;  // spectrum of the block code (length = block n)
  double window = 0;
  unsigned attempts_used = 0;
};

struct PipelineResult {
  MembershipVerdict verdict;
  std::vector<BlockResult> blocks;
  WeightSpectrum dual_spectrum;
  WeightSpectrum cocycle_spectrum;
  std::optional<PartitionFunction> Z;
};

inline bool is_oracle_rejection(Errc e) {
  return e == Errc::AmbiguousRounding || e == Errc::CountMismatch || e == Errc::ImaginaryResidue;
}

/// Spectrum of one accepted block. A zero block of length n contributes the
/// all-zero word only.
inline BlockResult block_spectrum(const BlockVerdict& v, const PipelineOptions& opt, u64 block_index = 0) {
  BlockResult r;
  r.verdict = v;
  if (!v.accepted) fail(Errc::InvalidArgument, "block was not accepted");
  if (v.k() == 0) {
    r.spectrum = WeightSpectrum::zero_code(v.n());
    return r;
  }
  const CyclicCodeParams& p = *v.params;
  const ThetaParams& t = *v.theta;
  const GaussSumEngine engine(p.field, u64{1} << opt.caps.max_field_bits);
  const std::vector<GaussPhase> exact = exact_phases(engine, p);
  r.window = certified_window(t, p);
  for (unsigned attempt = 0;; ++attempt) {
    const u64 seed = opt.seed + 0x9e3779b97f4a7c15ULL * block_index + 0x632be59bd9b4e019ULL * attempt;
    r.phases = opt.exact_phases ? exact : oracle_phases(exact, opt.epsilon, seed, opt.inject_failures, p.field.size());
    r.attempts_used = attempt + 1;
    try {
      r.table = weight_table(p, t, r.phases, r.window, opt.threads);
      r.spectrum = r.table.spectrum;
      return r;
    } catch (const Error& e) {
      if (!is_oracle_rejection(e.code()) || attempt + 1 >= std::max(1u, opt.attempts)) throw;
    }
  }
}

/// Runs the full pipeline. Rejected graphs return with no Z.
inline PipelineResult run_pipeline(const Graph& g, u64 q, const PipelineOptions& opt) {
  PipelineResult res;
  const CycleMatroidMatrix cmm = reduce_to_cmm(g, q);
  const Matrix dual = dual_generator(cmm);
  res.verdict = membership_test_code(dual, opt.epsilon, opt.caps);
  if (!res.verdict.accepted) return res;
  const std::size_t n = g.edge_count();
  res.dual_spectrum = WeightSpectrum::zero_code(0);
  for (std::size_t b = 0; b < res.verdict.blocks.size(); ++b) {
    res.blocks.push_back(block_spectrum(res.verdict.blocks[b], opt, b));
    res.dual_spectrum = convolve(res.dual_spectrum, res.blocks.back().spectrum);
  }
  if (res.dual_spectrum.length() != n) fail(Errc::CountMismatch, "block lengths do not add up to |E|");
  res.cocycle_spectrum = macwilliams(res.dual_spectrum, n, dual.rows(), q);
  res.Z = Z_from_spectrum(res.cocycle_spectrum, n, cmm.components, q, g.vertex_count());
  BigInt expected = 1;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) expected *= q;
  if (res.Z->total() != expected) fail(Errc::CountMismatch, "partition function total differs from q^|V|");
  return res;
}

}  // namespace iccc
