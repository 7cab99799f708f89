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

/// @file membership.hpp
/// Membership test for graphs whose dual cocycle code is irreducible cyclic
/// with a tolerable phase error, the instance generator loop, block
/// decomposition, and the sparse edge-count equation.

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "iccc/codes.hpp"
#include "iccc/error.hpp"
#include "iccc/graph.hpp"
#include "iccc/mceliece.hpp"
#include "iccc/numtheory.hpp"

namespace iccc {

enum class MembershipReason { Accepted, DecomposedAccept, NotCyclicDual, OrdMismatch, EpsilonTooLarge, LogPatternFail, Reject };

inline const char* to_string(MembershipReason r) {
  switch (r) {
    case MembershipReason::Accepted: return "Accepted";
    case MembershipReason::DecomposedAccept: return "DecomposedAccept";
    case MembershipReason::NotCyclicDual: return "NotCyclicDual";
    case MembershipReason::OrdMismatch: return "OrdMismatch";
    case MembershipReason::EpsilonTooLarge: return "EpsilonTooLarge";
    case MembershipReason::LogPatternFail: return "LogPatternFail";
    case MembershipReason::Reject: return "Reject";
  }
  return "?";
}

struct MembershipCaps {
  unsigned max_field_bits = 24;  // q^k <= 2^max_field_bits
  u64 log_table_cap = u64{1} << 20;
  u64 theta_max_N = 10'000'000;
};

/// Sub-block of a row-reduced generator.
struct MatrixBlock {
  Matrix generator;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Connected components of the bipartite row/column graph of the nonzero
/// entries of the row-reduced generator. Zero columns are blocks of their own
/// with no rows. One block means no decomposition exists.
inline std::vector<MatrixBlock> block_decompose(const Matrix& gen) {
  const Matrix r = row_reduce(gen).reduced;
  const std::size_t R = r.rows(), C = r.cols();
  detail::DisjointSets ds(R + C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (r(i, j)) ds.unite(i, R + j);
  std::vector<MatrixBlock> blocks;
  std::vector<std::size_t> block_of(R + C, SIZE_MAX);
  for (std::size_t j = 0; j < C; ++j) {
    const std::size_t root = ds.find(R + j);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = blocks.size();
      blocks.push_back({});
    }
    blocks[block_of[root]].cols.push_back(j);
  }
  for (std::size_t i = 0; i < R; ++i) blocks[block_of[ds.find(i)]].rows.push_back(i);
  for (auto& b : blocks) b.generator = r.select_rows(b.rows).select_columns(b.cols);
  return blocks;
}

struct BlockVerdict {
  bool accepted = false;
  MembershipReason reason = MembershipReason::Reject;
  Matrix generator;
  std::vector<std::size_t> columns;  // coordinates of the tested code
  std::optional<CyclicCodeParams> params;
  std::optional<ThetaParams> theta;
  LogPatternResult pattern;
  std::string detail;

  std::size_t n() const { return generator.cols(); }
  std::size_t k() const { return generator.rows(); }
};

struct MembershipVerdict {
  bool accepted = false;
  MembershipReason reason = MembershipReason::Reject;
  std::optional<CyclicCodeParams> params;  // set when accepted as one block
  std::vector<u64> log_list;
  std::vector<BlockVerdict> blocks;  // accepted blocks, or the tested code
  std::size_t n = 0;                 // dual code length |E|
  std::size_t k = 0;                 // dual code dimension |E| - |V| + c
  std::string detail;
};

/// Steps 1-4 on one generator: ord_q(n) = k, theta, epsilon <= epsilon0, and
/// the discrete-log pattern of the columns.
inline BlockVerdict test_block(const Matrix& gen, double epsilon, const MembershipCaps& caps = {}) {
  BlockVerdict v;
  v.generator = gen;
  for (std::size_t j = 0; j < gen.cols(); ++j) v.columns.push_back(j);
  const u64 q = gen.q(), n = gen.cols(), k = gen.rows();
  if (k == 0) {
    v.accepted = true;
    v.reason = MembershipReason::Accepted;
    v.detail = "zero code";
    return v;
  }
  auto ord = nt::fast_order(q, n);
  if (!ord || *ord != k) {
    v.reason = MembershipReason::OrdMismatch;
    v.detail = !ord ? "gcd(q, n) != 1" : "ord_q(n) = " + std::to_string(*ord) + " but k = " + std::to_string(k);
    return v;
  }
  if (!nt::pow_fits(q, k, u64{1} << caps.max_field_bits))
    fail(Errc::TooLarge, "q^k = " + std::to_string(q) + "^" + std::to_string(k) + " exceeds the field cap");
  v.params = CyclicCodeParams::make(q, n);
  v.theta = compute_theta(n, k, q, caps.theta_max_N);
  if (epsilon > v.theta->epsilon0) {
    v.reason = MembershipReason::EpsilonTooLarge;
    v.detail = "epsilon0 = " + std::to_string(v.theta->epsilon0);
    return v;
  }
  const LogOracle logs(v.params->field, caps.log_table_cap);
  v.pattern = match_log_pattern(gen, *v.params, logs);
  if (v.pattern.zero_column) {
    v.reason = MembershipReason::NotCyclicDual;
    v.detail = "zero column";
  } else if (!v.pattern.matches) {
    v.reason = MembershipReason::LogPatternFail;
  } else {
    v.accepted = true;
    v.reason = MembershipReason::Accepted;
  }
  return v;
}

/// Full test on a dual generator, with block decomposition on failure.
inline MembershipVerdict membership_test_code(const Matrix& gen, double epsilon, const MembershipCaps& caps = {}) {
  MembershipVerdict out;
  out.n = gen.cols();
  out.k = gen.rows();
  std::optional<BlockVerdict> whole;
  std::optional<Error> whole_error;
  try {
    whole = test_block(gen, epsilon, caps);
  } catch (const Error& e) {
    if (e.code() != Errc::TooLarge) throw;
    whole_error = e;
  }
  if (whole && whole->accepted) {
    out.accepted = true;
    out.reason = MembershipReason::Accepted;
    out.params = whole->params;
    out.log_list = whole->pattern.logs;
    out.detail = whole->detail;
    out.blocks.push_back(std::move(*whole));
    return out;
  }
  auto parts = block_decompose(gen);
  if (parts.size() <= 1) {
    if (whole_error) throw *whole_error;
    out.reason = whole->reason;
    out.detail = whole->detail;
    out.blocks.push_back(std::move(*whole));
    return out;
  }
  for (auto& part : parts) {
    BlockVerdict b = test_block(part.generator, epsilon, caps);
    b.columns = part.cols;
    if (!b.accepted) {
      out.reason = b.reason;
      out.detail = "block at column " + std::to_string(part.cols.front()) + ": " + b.detail;
      out.blocks.clear();
      out.blocks.push_back(std::move(b));
      return out;
    }
    out.blocks.push_back(std::move(b));
  }
  out.accepted = true;
  out.reason = MembershipReason::DecomposedAccept;
  out.detail = std::to_string(parts.size()) + " blocks";
  return out;
}

/// Dual generator [-X^T | I] of the cocycle code of g, in CMM column order.
inline Matrix dual_generator(const CycleMatroidMatrix& cmm) { return dual_code(cocycle_code(cmm)).generator(); }

inline MembershipVerdict membership_test(const Graph& g, u64 q, double epsilon, const MembershipCaps& caps = {}) {
  if (!nt::is_prime(q)) fail(Errc::NotPrime, "q = " + std::to_string(q) + " is not prime");
  return membership_test_code(dual_generator(reduce_to_cmm(g, q)), epsilon, caps);
}

/// Family parameters: q, the exponent s, the scale alpha and the error budget.
struct InstanceFamily {
  u64 q = 2;
  double s = 0;
  double alpha = 1;
  double epsilon = 0.5;
};

struct GeneratedInstance {
  u64 n = 0, k = 0, m = 0, j = 0, N = 0;
  ThetaParams theta;
};

struct GeneratorCaps {
  u64 max_field_size = u64{1} << 24;  // q^k bound
  std::optional<u64> m_ceiling;       // default floor(24 / log2 q)
};

/// For m = 1, 2, ... and j = 1, 2, ...: n = j (q^m - 1), k = ord_q(n);
/// accept when q^(theta - 1 - k/2) >= epsilon. Repeated n are reported once.
inline std::vector<GeneratedInstance> generate_instances(const InstanceFamily& fam, std::size_t limit,
                                                         const GeneratorCaps& caps = {}) {
  if (!nt::is_prime(fam.q)) fail(Errc::NotPrime, "q = " + std::to_string(fam.q) + " is not prime");
  if (!(fam.epsilon > 0 && fam.epsilon < 1)) fail(Errc::InvalidArgument, "family epsilon must lie in (0, 1)");
  const u64 q = fam.q;
  const u64 m_max = caps.m_ceiling.value_or(static_cast<u64>(std::floor(24.0 / std::log2(static_cast<double>(q)))));
  // n can only have q^ord_q(n) <= cap if it divides some q^k - 1 below the cap.
  std::unordered_set<u64> admissible;
  for (u64 k = 1; nt::pow_fits(q, k, caps.max_field_size); ++k)
    for (u64 d : nt::divisors(*nt::checked_pow(q, k) - 1)) admissible.insert(d);
  std::vector<GeneratedInstance> out;
  std::unordered_set<u64> seen;
  for (u64 m = 1; m <= m_max && out.size() < limit; ++m) {
    auto qm = nt::checked_pow(q, m);
    if (!qm || *qm > caps.max_field_size) break;
    const u64 base = *qm - 1;
    for (u64 j = 1; j * base < caps.max_field_size && out.size() < limit; ++j) {
      const u64 n = j * base;
      if (std::gcd(q, n) != 1 || !admissible.count(n) || seen.count(n)) continue;
      const u64 k = *nt::fast_order(q, n);
      if (!nt::pow_fits(q, k, caps.max_field_size)) continue;
      const ThetaParams t = compute_theta(n, k, q);
      if (std::pow(static_cast<double>(q), t.log_margin()) < fam.epsilon) continue;
      seen.insert(n);
      out.push_back({n, k, m, j, t.N, t});
    }
  }
  return out;
}

struct EdgeCountResult {
  double E = 0;
  unsigned iterations = 0;
  double residual = 0;  // |E - rhs(E)|
};

/// Solves E = V - c + log_q(E (E - V + c)^s + 1) by fixed-point iteration from E = V.
inline EdgeCountResult edge_count_solver(double V, u64 q, double s, double c = 1, unsigned max_iter = 1000) {
  if (!(V >= 2)) fail(Errc::InvalidArgument, "edge-count solver needs V >= 2");
  const double lq = std::log(static_cast<double>(q));
  auto rhs = [&](double E) { return V - c + std::log(E * std::pow(E - V + c, s) + 1.0) / lq; };
  double E = V;
  for (unsigned it = 1; it <= max_iter; ++it) {
    const double next = rhs(E);
    if (!std::isfinite(next)) break;
    const bool done = std::abs(next - E) <= 1e-12 * std::abs(next);
    E = next;
    if (done) return {E, it, std::abs(E - rhs(E))};
  }
  fail(Errc::NoConvergence, "edge-count iteration did not converge");
}

struct LogFit {
  double a = 0, b = 0;
  double residual_std = 0;
  std::vector<double> V, excess;
};

/// Least-squares fit of E(V) - V = a + b ln V over log-spaced V.
inline LogFit fit_edge_excess(u64 q, double s, double c = 1, double v_min = 10, double v_max = 1e6,
                              std::size_t points = 61) {
  LogFit fit;
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points > 1 ? static_cast<double>(i) / static_cast<double>(points - 1) : 0.0;
    const double V = std::round(std::exp(std::log(v_min) + t * (std::log(v_max) - std::log(v_min))));
    fit.V.push_back(V);
    fit.excess.push_back(edge_count_solver(V, q, s, c).E - V);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = std::log(fit.V[i]);
    sx += x;
    sy += fit.excess[i];
    sxx += x * x;
    sxy += x * fit.excess[i];
  }
  fit.b = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  fit.a = (sy - fit.b * sx) / m;
  double ss = 0;
  for (std::size_t i = 0; i < points; ++i) {
    const double r = fit.excess[i] - (fit.a + fit.b * std::log(fit.V[i]));
    ss += r * r;
  }
  fit.residual_std = std::sqrt(ss / m);
  return fit;
}

}  // namespace iccc
