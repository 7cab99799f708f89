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

/// @file mceliece.hpp
/// Weights of irreducible cyclic codes from Gauss-sum phases.
///
/// For the [n, k] code with N = (q^k - 1)/n and d = gcd(N, (q^k - 1)/(q - 1)),
/// the words of class i in [0, N) have weight
///
///   S(i) = q^k (q-1)/(qN) - (q-1)/(qN) sum_{a=1}^{d-1} exp(-2 pi i a i / d) sqrt(q^k) exp(i gamma_a)
///
/// where gamma_a is the phase of G(chi^a, e_1) and chi(g) = exp(2 pi i / d).
/// All weights are multiples of q^(theta - 1); noisy phases are snapped back to
/// that grid.

#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "iccc/codes.hpp"
#include "iccc/error.hpp"
#include "iccc/gauss.hpp"
#include "iccc/numtheory.hpp"
#include "iccc/parallel.hpp"

namespace iccc {

struct ThetaParams {
  u64 n = 1, k = 1, q = 2, N = 1;
  u64 min_digit_sum = 1;  // min over 0 < j <= N of the base-q digit sum of j n
  double theta = 1;       // min_digit_sum / (q - 1); not always an integer
  u64 grid = 1;           // q^(max(0, ceil(theta) - 1)), the rounding step
  // epsilon0 = q^(exp_num / exp_den) / 4 with exp = theta - 1 - k/2.
  long long exp_num = 0;
  long long exp_den = 1;
  double epsilon0 = 0;

  u64 ceil_theta() const { return (min_digit_sum + q - 2) / (q - 1); }
  bool theta_is_integer() const { return min_digit_sum % (q - 1) == 0; }
  /// log_q(epsilon0 * 4), i.e. theta - 1 - k/2.
  double log_margin() const { return static_cast<double>(exp_num) / static_cast<double>(exp_den); }
  std::string epsilon0_expr() const {
    return std::to_string(q) + "^(" + std::to_string(exp_num) + "/" + std::to_string(exp_den) + ")/4";
  }
};

/// theta = (1/(q-1)) min_{0 < j <= N} S'(j n), scanned directly.
inline ThetaParams compute_theta(u64 n, u64 k, u64 q, u64 max_N = 10'000'000) {
  if (!nt::is_prime(q)) fail(Errc::NotPrime, "q = " + std::to_string(q) + " is not prime");
  auto size = nt::checked_pow(q, k);
  if (!size || *size > (u64{1} << 62)) fail(Errc::TooLarge, "q^k exceeds 2^62");
  if (n == 0 || k == 0 || (*size - 1) % n != 0)
    fail(Errc::InconsistentParams, "n = " + std::to_string(n) + " does not divide q^k - 1");
  ThetaParams t;
  t.n = n;
  t.k = k;
  t.q = q;
  t.N = (*size - 1) / n;
  if (t.N > max_N) fail(Errc::TooLarge, "N = " + std::to_string(t.N) + " exceeds the theta scan limit");
  u64 best = UINT64_MAX;
  for (u64 j = 1; j <= t.N; ++j) best = std::min(best, nt::digit_sum(j * n, q));
  t.min_digit_sum = best;
  t.theta = static_cast<double>(best) / static_cast<double>(q - 1);
  const u64 c = t.ceil_theta();
  t.grid = *nt::checked_pow(q, c > 0 ? c - 1 : 0);
  const long long qm1 = static_cast<long long>(q - 1);
  long long num = 2 * static_cast<long long>(best) - 2 * qm1 - static_cast<long long>(k) * qm1;
  long long den = 2 * qm1;
  const long long g = std::gcd(num < 0 ? -num : num, den);
  t.exp_num = num / (g ? g : 1);
  t.exp_den = den / (g ? g : 1);
  t.epsilon0 = std::pow(static_cast<double>(q), t.log_margin()) / 4.0;
  return t;
}

struct CosetPartition {
  u64 N = 1;
  u64 q = 2;
  std::vector<std::vector<u64>> cosets;  // each sorted; ordered by representative
  std::vector<u64> representatives;      // smallest member
  std::vector<u64> multiplicities;       // coset sizes
  std::size_t count() const { return cosets.size(); }
};

/// Orbits of {0, ..., N-1} under x -> q x mod N.
inline CosetPartition cyclotomic_cosets(u64 N, u64 q) {
  if (N == 0 || std::gcd(N, q) != 1) fail(Errc::NotCoprime, "gcd(N, q) != 1");
  CosetPartition p{N, q, {}, {}, {}};
  std::vector<bool> seen(N, false);
  for (u64 r = 0; r < N; ++r) {
    if (seen[r]) continue;
    std::vector<u64> c;
    for (u64 x = r; !seen[x]; x = nt::mul_mod(x, q, N)) {
      seen[x] = true;
      c.push_back(x);
    }
    std::sort(c.begin(), c.end());
    p.representatives.push_back(r);
    p.multiplicities.push_back(c.size());
    p.cosets.push_back(std::move(c));
  }
  return p;
}

/// N_C = sum over f | N of phi(f) / ord_f(q).
inline u64 coset_count_formula(u64 N, u64 q) {
  if (N == 0 || std::gcd(N, q) != 1) fail(Errc::NotCoprime, "gcd(N, q) != 1");
  u64 total = 0;
  for (u64 f : nt::divisors(N)) total += nt::totient(f) / *nt::fast_order(q, f);
  return total;
}

/// The d - 1 phases are turned into c_a = sqrt(q^k) exp(i gamma_a) once and
/// reused for every class i.
class McElieceEvaluator {
 public:
  McElieceEvaluator(const CyclicCodeParams& params, const std::vector<GaussPhase>& phases)
      : d_(params.d), roots_(roots_of_unity(params.d)) {
    if (phases.size() + 1 != params.d)
      fail(Errc::InvalidArgument, "expected d - 1 = " + std::to_string(params.d - 1) + " phases");
    const double root = std::sqrt(static_cast<double>(params.field.size()));
    double eps_sum = 0;
    for (const auto& ph : phases) {
      terms_.push_back(std::polar(root, ph.noisy_phase));
      eps_sum += std::min(ph.epsilon, 2.0);
    }
    const double qd = static_cast<double>(params.q);
    scale_ = (qd - 1) / (qd * static_cast<double>(params.N));
    base_ = static_cast<double>(params.field.size()) * scale_;
    imag_tol_ = 1e-6 * root + scale_ * root * eps_sum;
  }

  cplx value(u64 i) const {
    KahanSum acc;
    const u64 d = d_;
    const u64 step = (d - i % d) % d;  // exp(-2 pi i a i / d) = roots[(-a i) mod d]
    u64 e = step;
    for (std::size_t a = 0; a < terms_.size(); ++a) {
      acc.add(roots_[e] * terms_[a]);
      e += step;
      if (e >= d) e -= d;
    }
    return cplx(base_, 0.0) - scale_ * acc.value();
  }

  /// Real part of S(i); the imaginary part must vanish up to the noise allowance.
  double weight(u64 i) const {
    const cplx v = value(i);
    if (std::abs(v.imag()) > imag_tol_)
      fail(Errc::ImaginaryResidue, "S(" + std::to_string(i) + ") has imaginary part " + std::to_string(v.imag()));
    return v.real();
  }

  double imaginary_tolerance() const { return imag_tol_; }

 private:
  u64 d_;
  std::vector<cplx> roots_;
  std::vector<cplx> terms_;
  double scale_ = 0, base_ = 0, imag_tol_ = 0;
};

inline double mceliece_weight(u64 i, const std::vector<GaussPhase>& phases, const CyclicCodeParams& params) {
  return McElieceEvaluator(params, phases).weight(i);
}

/// Half-width of the acceptance window around grid points. A phase error e_a
/// moves S(i) by at most (q-1)/(qN) sqrt(q^k) |e_a|; at epsilon0 that unit is
/// A = (q-1)/(qN) q^(theta-1)/4. The window is the smaller of the worst case
/// A (d-1) and six standard deviations A sqrt((d-1)/3) of the summed uniform
/// errors, capped at grid/2. With d = 1 there is no noise and the window is a
/// float tolerance.
inline double certified_window(const ThetaParams& t, const CyclicCodeParams& p) {
  const double qd = static_cast<double>(p.q);
  const double half = static_cast<double>(t.grid) / 2.0;
  const double unit = (qd - 1) / (qd * static_cast<double>(p.N)) * std::pow(qd, t.theta - 1) / 4.0;
  const double terms = static_cast<double>(p.d - 1);
  const double drift = unit * std::min(terms, 6.0 * std::sqrt(terms / 3.0));
  return std::max(1e-6, std::min(half, drift));
}

/// Nearest multiple of the grid step; the distance must be below `window`
/// (default: half a grid step).
inline long long round_weight(double raw, const ThetaParams& t, std::optional<double> window = std::nullopt) {
  const double step = static_cast<double>(t.grid);
  const double w = window.value_or(step / 2.0);
  const double m = std::round(raw / step);
  const double dist = std::abs(raw - m * step);
  if (!(dist < w))
    fail(Errc::AmbiguousRounding, "raw weight " + std::to_string(raw) + " is " + std::to_string(dist) +
                                      " from the grid (window " + std::to_string(w) + ")");
  return static_cast<long long>(m) * static_cast<long long>(t.grid);
}

struct WeightRow {
  u64 representative = 0;
  double raw = 0;
  long long rounded = 0;
  u64 multiplicity = 0;
};

struct WeightTable {
  std::vector<WeightRow> entries;
  WeightSpectrum spectrum;
};

/// A_w = n * (sum of multiplicities with weight w), A_0 = 1. Besides the total
/// q^k, the first moment sum_w w A_w = n (q - 1) q^(k - 1) is checked: it holds
/// for every code without zero coordinates.
inline WeightSpectrum assemble_spectrum(const WeightTable& table, u64 n, u64 q, u64 k) {
  WeightSpectrum s(n);
  s[0] = 1;
  std::map<long long, u64> tally;
  for (const auto& row : table.entries) {
    if (row.rounded < 1 || row.rounded > static_cast<long long>(n))
      fail(Errc::CountMismatch, "weight " + std::to_string(row.rounded) + " outside [1, n]");
    tally[row.rounded] += row.multiplicity;
  }
  for (const auto& [w, a] : tally) s[static_cast<std::size_t>(w)] += BigInt(n) * a;
  BigInt qk = 1;
  for (u64 i = 0; i < k; ++i) qk *= q;
  if (s.total() != qk) fail(Errc::CountMismatch, "spectrum total " + s.total().str() + " differs from q^k");
  BigInt moment = 0;
  for (std::size_t w = 1; w <= n; ++w) moment += BigInt(w) * s[w];
  if (moment * q != BigInt(n) * (q - 1) * qk)
    fail(Errc::CountMismatch, "first moment " + moment.str() + " inconsistent with the code length");
  return s;
}

/// Exact phases gamma_a of G(chi^a, e_1), a = 1..d-1, as noiseless records.
inline std::vector<GaussPhase> exact_phases(const GaussSumEngine& engine, const CyclicCodeParams& p) {
  std::vector<GaussPhase> out;
  if (p.d < 2) return out;
  for (const auto& g : engine.sums_of_order(p.d)) out.push_back({g.phase, g.magnitude, g.phase, 0.0, false});
  return out;
}

/// Oracle phases: exact phases with seeded noise of size epsilon.
inline std::vector<GaussPhase> oracle_phases(const std::vector<GaussPhase>& exact, double epsilon, u64 seed,
                                             bool inject_failures, u64 field_size) {
  std::vector<GaussPhase> out;
  std::optional<double> rate;
  if (inject_failures) rate = failure_probability(epsilon, field_size);
  for (std::size_t a = 0; a < exact.size(); ++a)
    out.push_back(noisy_phase(exact[a].exact_phase, exact[a].magnitude, epsilon, seed, a + 1, rate));
  return out;
}

/// Evaluates S at each coset representative, rounds, and assembles.
inline WeightTable weight_table(const CyclicCodeParams& p, const ThetaParams& t, const std::vector<GaussPhase>& phases,
                                std::optional<double> window = std::nullopt, unsigned threads = 1) {
  const CosetPartition cosets = cyclotomic_cosets(p.N, p.q);
  const McElieceEvaluator eval(p, phases);
  WeightTable table;
  table.entries.resize(cosets.count());
  parallel_chunks(cosets.count(), threads, [&](unsigned, u64 begin, u64 end) {
    for (u64 c = begin; c < end; ++c) {
      const u64 rep = cosets.representatives[c];
      const double raw = eval.weight(rep);
      table.entries[c] = {rep, raw, round_weight(raw, t, window), cosets.multiplicities[c]};
    }
  });
  table.spectrum = assemble_spectrum(table, p.n, p.q, p.k);
  return table;
}

}  // namespace iccc
