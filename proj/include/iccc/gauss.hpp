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

/// @file gauss.hpp
/// Multiplicative and additive characters of GF(q^k), Gauss sums by direct
/// summation, and a seeded phase oracle with bounded uniform noise.
///
/// Characters are fixed by their value on the field generator g:
///   chi(g^j) = exp(2 pi i a j / d),   e_beta(x) = exp(2 pi i Tr(beta x) / q).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "iccc/error.hpp"
#include "iccc/ff.hpp"

namespace iccc {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps an angle to [0, 2 pi).
inline double wrap_phase(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0;
  return r;
}

/// chi^a for the character chi of order d with chi(g) = exp(2 pi i / d),
/// paired with the additive parameter beta.
struct CharacterSpec {
  ExtensionField field;
  u64 order = 2;  // d, divides q^k - 1
  u64 index = 1;  // a in [1, d - 1]
  FieldElement beta;

  CharacterSpec(ExtensionField f, u64 d, u64 a, std::optional<FieldElement> b = std::nullopt)
      : field(f), order(d), index(a), beta(b ? *b : f.one()) {
    if (d == 0 || field.group_order() % d != 0)
      fail(Errc::InvalidArgument, "character order " + std::to_string(d) + " does not divide q^k - 1");
    if (!(beta.field() == field)) fail(Errc::FieldMismatch, "beta is not in the character's field");
  }
};

/// Root of unity table: z[t] = exp(2 pi i t / m), computed in long double.
inline std::vector<cplx> roots_of_unity(u64 m) {
  std::vector<cplx> z(m);
  const long double pi2 = 2.0L * std::numbers::pi_v<long double>;
  for (u64 t = 0; t < m; ++t) {
    const long double ang = pi2 * static_cast<long double>(t) / static_cast<long double>(m);
    z[t] = cplx(static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang)));
  }
  return z;
}

/// chi(x) given log_g(x); 0 for x = 0.
inline cplx char_eval_mult(const CharacterSpec& spec, const FieldElement& x, const DiscreteLog& log) {
  if (x.is_zero()) return 0.0;
  const u64 e = nt::mul_mod(spec.index % spec.order, log(x) % spec.order, spec.order);
  const long double ang = 2.0L * std::numbers::pi_v<long double> * e / spec.order;
  return {static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang))};
}

inline cplx char_eval_mult(const CharacterSpec& spec, const FieldElement& x) {
  return char_eval_mult(spec, x, DiscreteLog(spec.field.generator()));
}

inline cplx char_eval_add(const FieldElement& beta, const FieldElement& x) {
  const u64 q = beta.field().q();
  const u32 t = trace(beta * x);
  const long double ang = 2.0L * std::numbers::pi_v<long double> * t / q;
  return {static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang))};
}

/// Kahan-compensated complex accumulator.
class KahanSum {
 public:
  void add(cplx v) {
    add_part(v.real(), re_, cre_);
    add_part(v.imag(), im_, cim_);
  }
  cplx value() const { return {re_, im_}; }

 private:
  static void add_part(double v, double& sum, double& comp) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

struct GaussSum {
  cplx value;
  double magnitude = 0;
  double phase = 0;  // in [0, 2 pi)
};

inline GaussSum make_gauss_sum(cplx v, u64 field_size) {
  GaussSum g{v, std::abs(v), wrap_phase(std::arg(v))};
  const double expected = std::sqrt(static_cast<double>(field_size));
  if (std::abs(g.magnitude - expected) > 1e-6 * expected)
    fail(Errc::InvalidArgument, "Gauss sum magnitude " + std::to_string(g.magnitude) + " differs from sqrt(q^k)");
  return g;
}

/// Gauss sums of one field from its power tables. Reuse one engine for many
/// characters of the same field.
class GaussSumEngine {
 public:
  explicit GaussSumEngine(const ExtensionField& field, u64 cap = u64{1} << 24)
      : tables_(field, cap), additive_(roots_of_unity(field.q())) {}

  const FieldTables& tables() const { return tables_; }
  const ExtensionField& field() const { return tables_.field(); }

  /// G(chi^a, e_beta) with chi of order d, by direct summation over g^j.
  GaussSum sum(u64 d, u64 a, const FieldElement& beta) const {
    check(d, a);
    if (beta.is_zero()) fail(Errc::TrivialCharacter, "additive parameter beta = 0 gives the trivial character");
    const u64 m = tables_.group_order();
    const u64 shift = tables_.log_of_index(beta.index());
    const auto mult = roots_of_unity(d);
    KahanSum acc;
    u64 e = 0;
    const u64 step = a % d;
    for (u64 j = 0; j < m; ++j) {
      acc.add(mult[e] * additive_[tables_.trace_of_power(j + shift)]);
      e += step;
      if (e >= d) e -= d;
    }
    return make_gauss_sum(acc.value(), field().size());
  }

  /// G(chi^a, e_1) for a = 1..d-1. The field is swept once, tallying
  /// (j mod d, Tr(g^j)) pairs; each sum is then a length-d transform.
  std::vector<GaussSum> sums_of_order(u64 d) const {
    check(d, 1);
    const u64 m = tables_.group_order();
    const u64 q = field().q();
    std::vector<u64> counts(d * q, 0);
    u64 r = 0;
    for (u64 j = 0; j < m; ++j) {
      ++counts[r * q + tables_.trace_of_power(j)];
      if (++r == d) r = 0;
    }
    std::vector<cplx> w(d);
    for (u64 t = 0; t < d; ++t) {
      KahanSum acc;
      for (u64 s = 0; s < q; ++s)
        if (counts[t * q + s]) acc.add(static_cast<double>(counts[t * q + s]) * additive_[s]);
      w[t] = acc.value();
    }
    const auto mult = roots_of_unity(d);
    std::vector<GaussSum> out;
    out.reserve(d - 1);
    for (u64 a = 1; a < d; ++a) {
      KahanSum acc;
      u64 e = 0;
      for (u64 t = 0; t < d; ++t) {
        acc.add(mult[e] * w[t]);
        e += a;
        if (e >= d) e -= d;
      }
      out.push_back(make_gauss_sum(acc.value(), field().size()));
    }
    return out;
  }

 private:
  void check(u64 d, u64 a) const {
    if (d < 2) fail(Errc::TrivialCharacter, "character order must be at least 2");
    if (tables_.group_order() % d != 0)
      fail(Errc::InvalidArgument, "character order " + std::to_string(d) + " does not divide q^k - 1");
    if (a % d == 0) fail(Errc::TrivialCharacter, "character index is a multiple of its order");
  }

  FieldTables tables_;
  std::vector<cplx> additive_;
};

/// Exact Gauss sum of a nontrivial character pair.
inline GaussSum gauss_sum_exact(const CharacterSpec& spec, u64 cap = u64{1} << 24) {
  if (spec.order < 2 || spec.index % spec.order == 0)
    fail(Errc::TrivialCharacter, "multiplicative character is trivial");
  if (spec.field.size() > cap) fail(Errc::TooLarge, "field exceeds the Gauss-sum cap");
  return GaussSumEngine(spec.field, cap).sum(spec.order, spec.index, spec.beta);
}

/// Oracle output for one phase.
struct GaussPhase {
  double exact_phase = 0;
  double magnitude = 0;
  double noisy_phase = 0;
  double epsilon = 0;
  bool failed = false;
};

/// Failure probability 1 / (2 (q^k - 1)^2 eps - 2), clamped to [0, 1/2].
inline double failure_probability(double epsilon, u64 field_size) {
  const double m = static_cast<double>(field_size - 1);
  const double denom = 2.0 * m * m * epsilon - 2.0;
  if (!(denom > 0)) return 0.5;
  return std::clamp(1.0 / denom, 0.0, 0.5);
}

namespace detail {

inline u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform double in the open interval (0, 1).
inline double open_unit(std::mt19937_64& rng) { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; }

}  // namespace detail

/// Perturbs an exact phase: gamma + u with u uniform on (-eps, eps). With
/// failure injection the record fails with probability delta and then carries
/// a uniformly random phase. `stream` separates independent draws under one seed.
inline GaussPhase noisy_phase(double exact_phase, double magnitude, double epsilon, u64 seed, u64 stream,
                              std::optional<double> failure_rate = std::nullopt) {
  if (!(epsilon > 0)) fail(Errc::InvalidArgument, "epsilon must be positive");
  std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(stream)));
  GaussPhase p{exact_phase, magnitude, 0, epsilon, false};
  const double u = (2.0 * detail::open_unit(rng) - 1.0) * epsilon;
  p.noisy_phase = wrap_phase(exact_phase + u);
  const double fail_draw = detail::open_unit(rng);
  if (failure_rate && fail_draw < *failure_rate) {
    p.failed = true;
    p.noisy_phase = wrap_phase(kTwoPi * detail::open_unit(rng));
  }
  return p;
}

/// Seeded stand-in for the quantum phase estimator.
inline GaussPhase gauss_phase_oracle(const CharacterSpec& spec, double epsilon, u64 seed, bool inject_failures = false) {
  const GaussSum g = gauss_sum_exact(spec);
  std::optional<double> rate;
  if (inject_failures) rate = failure_probability(epsilon, spec.field.size());
  return noisy_phase(g.phase, g.magnitude, epsilon, seed, spec.index, rate);
}

}  // namespace iccc
