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

/// @file ff.hpp
/// Exact arithmetic in GF(q) and GF(q^k) for prime q.
///
/// Elements of GF(q^k) are dense coefficient vectors in the polynomial basis
/// {1, x, ..., x^(k-1)} of a monic irreducible modulus. The default modulus is
/// the first monic irreducible polynomial of degree k when the low-order
/// coefficient vectors (c_0, ..., c_(k-1)) are enumerated by the integer
/// c_0 + c_1 q + ... + c_(k-1) q^(k-1). The same integer is the element
/// "index" used by lookup tables.

#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "iccc/error.hpp"
#include "iccc/numtheory.hpp"

namespace iccc {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

/// GF(q) for prime q < 2^31.
class PrimeField {
 public:
  explicit PrimeField(u64 q) : q_(q) {
    if (!nt::is_prime(q)) fail(Errc::NotPrime, "q = " + std::to_string(q) + " is not prime");
    if (q >= (u64{1} << 31)) fail(Errc::TooLarge, "prime modulus must be below 2^31");
  }

  u64 q() const { return q_; }
  u32 add(u32 a, u32 b) const { return static_cast<u32>((u64{a} + b) % q_); }
  u32 sub(u32 a, u32 b) const { return static_cast<u32>((u64{a} + q_ - b) % q_); }
  u32 neg(u32 a) const { return a == 0 ? 0 : static_cast<u32>(q_ - a); }
  u32 mul(u32 a, u32 b) const { return static_cast<u32>(u64{a} * b % q_); }
  u32 inv(u32 a) const {
    if (a % q_ == 0) fail(Errc::InverseOfZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
    return static_cast<u32>(nt::pow_mod(a, q_ - 2, q_));
  }
  u32 reduce(long long v) const {
    long long m = v % static_cast<long long>(q_);
    return static_cast<u32>(m < 0 ? m + static_cast<long long>(q_) : m);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  u64 q_;
};

namespace detail {

using Poly = std::vector<u32>;  // coefficients, lowest degree first

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Remainder of a modulo monic-or-not b over GF(q); b must be nonzero.
inline Poly poly_mod(Poly a, const Poly& b, const PrimeField& f) {
  poly_trim(a);
  const std::size_t db = b.size() - 1;
  const u32 lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const u32 factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
    poly_trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  poly_trim(r);
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, const PrimeField& f) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly poly_powmod(Poly base, u64 exp, const Poly& mod, const PrimeField& f) {
  Poly result{1};
  base = poly_mod(std::move(base), mod, f);
  while (exp) {
    if (exp & 1) result = poly_mod(poly_mul(result, base, f), mod, f);
    base = poly_mod(poly_mul(base, base, f), mod, f);
    exp >>= 1;
  }
  return result;
}

/// Ben-Or irreducibility test: gcd(f, x^(q^i) - x) = 1 for all i <= deg/2.
inline bool is_irreducible(const Poly& modulus, const PrimeField& f) {
  Poly m = modulus;
  poly_trim(m);
  if (m.size() < 2) return false;
  const std::size_t k = m.size() - 1;
  if (k == 1) return true;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, f.q(), m, f);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = f.sub(diff[1], 1);
    poly_trim(diff);
    if (diff.empty()) return false;
    Poly g = poly_gcd(m, diff, f);
    if (g.size() > 1) return false;
  }
  return true;
}

struct FieldCore {
  PrimeField base;
  unsigned k;
  Poly modulus;                 // k + 1 coefficients, monic
  u64 size;                     // q^k
  std::vector<u64> order_primes;  // distinct primes dividing q^k - 1
  std::vector<u32> basis_trace;   // Tr(x^i) for i < k
  Poly generator;               // fixed primitive element (length k)

  u64 q() const { return base.q(); }

  Poly mul(const Poly& a, const Poly& b) const {
    std::vector<u64> acc(2 * k - 1, 0);
    const u64 q = base.q();
    for (unsigned i = 0; i < k; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < k; ++j) acc[i + j] = (acc[i + j] + u64{a[i]} * b[j]) % q;
    }
    for (std::size_t d = acc.size(); d-- > k;) {
      const u64 t = acc[d];
      if (t == 0) continue;
      for (unsigned i = 0; i < k; ++i) acc[d - k + i] = (acc[d - k + i] + (q - t) * modulus[i]) % q;
    }
    Poly out(k);
    for (unsigned i = 0; i < k; ++i) out[i] = static_cast<u32>(acc[i]);
    return out;
  }

  Poly pow(Poly a, u64 e) const {
    Poly r(k, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  bool is_one(const Poly& a) const {
    if (a[0] != 1) return false;
    for (unsigned i = 1; i < k; ++i)
      if (a[i] != 0) return false;
    return true;
  }

  Poly from_index(u64 idx) const {
    Poly c(k);
    const u64 q = base.q();
    for (unsigned i = 0; i < k; ++i) {
      c[i] = static_cast<u32>(idx % q);
      idx /= q;
    }
    return c;
  }

  u64 index_of(const Poly& c) const {
    u64 idx = 0;
    for (unsigned i = k; i-- > 0;) idx = idx * base.q() + c[i];
    return idx;
  }

  bool has_full_order(const Poly& a) const {
    const u64 m = size - 1;
    if (m == 1) return !std::all_of(a.begin(), a.end(), [](u32 v) { return v == 0; });
    for (u64 p : order_primes)
      if (is_one(pow(a, m / p))) return false;
    return !std::all_of(a.begin(), a.end(), [](u32 v) { return v == 0; });
  }

  bool same_field(const FieldCore& other) const {
    return this == &other || (base == other.base && modulus == other.modulus);
  }
};

inline Poly first_irreducible(const PrimeField& f, unsigned k) {
  const u64 q = f.q();
  auto count = nt::checked_pow(q, k);
  if (!count) fail(Errc::TooLarge, "field too large");
  for (u64 idx = 0; idx < *count; ++idx) {
    Poly m(k + 1);
    u64 v = idx;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = static_cast<u32>(v % q);
      v /= q;
    }
    m[k] = 1;
    if (is_irreducible(m, f)) return m;
  }
  fail(Errc::InvalidArgument, "no irreducible polynomial found");
}

inline std::shared_ptr<const FieldCore> make_core(const PrimeField& f, Poly modulus) {
  poly_trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    fail(Errc::InvalidArgument, "modulus must be monic of degree >= 1");
  for (u32 c : modulus)
    if (c >= f.q()) fail(Errc::InvalidArgument, "modulus coefficient not reduced mod q");
  if (!is_irreducible(modulus, f)) fail(Errc::InvalidArgument, "modulus is reducible");
  auto core = std::make_shared<FieldCore>(FieldCore{f, static_cast<unsigned>(modulus.size() - 1), modulus, 0, {}, {}, {}});
  auto size = nt::checked_pow(f.q(), core->k);
  if (!size || *size > (u64{1} << 62)) fail(Errc::TooLarge, "field size exceeds 2^62");
  core->size = *size;
  core->order_primes = nt::prime_factors(*size - 1);

  // Tr(x^i) = sum_j (x^i)^(q^j); the result is a constant polynomial.
  core->basis_trace.resize(core->k);
  for (unsigned i = 0; i < core->k; ++i) {
    Poly xi(core->k, 0);
    xi[i] = 1;
    Poly sum(core->k, 0);
    Poly term = xi;
    for (unsigned j = 0; j < core->k; ++j) {
      for (unsigned t = 0; t < core->k; ++t) sum[t] = f.add(sum[t], term[t]);
      term = core->pow(term, f.q());
    }
    core->basis_trace[i] = sum[0];
  }

  for (u64 idx = 1; idx < core->size; ++idx) {
    Poly c = core->from_index(idx);
    if (core->has_full_order(c)) {
      core->generator = std::move(c);
      break;
    }
  }
  return core;
}

}  // namespace detail

class FieldElement;

/// GF(q^k) with a fixed irreducible modulus and a fixed primitive element.
/// Copies share the immutable field description.
class ExtensionField {
 public:
  ExtensionField(u64 q, unsigned k) {
    if (k == 0) fail(Errc::InvalidArgument, "extension degree must be positive");
    PrimeField f(q);
    core_ = detail::make_core(f, detail::first_irreducible(f, k));
  }

  ExtensionField(u64 q, std::vector<u32> modulus) : core_(detail::make_core(PrimeField(q), std::move(modulus))) {}

  u64 q() const { return core_->q(); }
  unsigned degree() const { return core_->k; }
  u64 size() const { return core_->size; }
  u64 group_order() const { return core_->size - 1; }
  const std::vector<u32>& modulus() const { return core_->modulus; }
  const PrimeField& base() const { return core_->base; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::vector<u32> coeffs) const;
  FieldElement from_index(u64 index) const;
  /// The fixed primitive element (first full-order element in index order).
  FieldElement generator() const;

  const detail::FieldCore& core() const { return *core_; }
  const std::shared_ptr<const detail::FieldCore>& core_ptr() const { return core_; }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) { return a.core_->same_field(*b.core_); }

 private:
  explicit ExtensionField(std::shared_ptr<const detail::FieldCore> core) : core_(std::move(core)) {}
  friend class FieldElement;

  std::shared_ptr<const detail::FieldCore> core_;
};

class FieldElement {
 public:
  FieldElement(std::shared_ptr<const detail::FieldCore> core, detail::Poly coeffs)
      : core_(std::move(core)), c_(std::move(coeffs)) {
    if (c_.size() != core_->k) fail(Errc::InvalidArgument, "coefficient vector has wrong length");
    for (auto& v : c_) v = static_cast<u32>(v % core_->q());
  }

  const std::vector<u32>& coeffs() const { return c_; }
  u64 index() const { return core_->index_of(c_); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u32 v) { return v == 0; });
  }
  bool is_one() const { return core_->is_one(c_); }
  ExtensionField field() const { return ExtensionField(core_); }

  FieldElement operator+(const FieldElement& o) const {
    check(o);
    detail::Poly r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = core_->base.add(c_[i], o.c_[i]);
    return {core_, std::move(r)};
  }
  FieldElement operator-(const FieldElement& o) const {
    check(o);
    detail::Poly r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = core_->base.sub(c_[i], o.c_[i]);
    return {core_, std::move(r)};
  }
  FieldElement operator-() const {
    detail::Poly r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = core_->base.neg(c_[i]);
    return {core_, std::move(r)};
  }
  FieldElement operator*(const FieldElement& o) const {
    check(o);
    return {core_, core_->mul(c_, o.c_)};
  }
  FieldElement scaled(u32 s) const {
    detail::Poly r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = core_->base.mul(c_[i], s);
    return {core_, std::move(r)};
  }
  FieldElement pow(u64 e) const { return {core_, core_->pow(c_, e)}; }
  FieldElement inverse() const {
    if (is_zero()) fail(Errc::InverseOfZero, "inverse of zero field element");
    return pow(core_->size - 2);
  }
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

  /// Multiplicative order (requires nonzero).
  u64 order() const {
    if (is_zero()) fail(Errc::InvalidArgument, "order of zero");
    u64 m = core_->size - 1;
    for (u64 p : core_->order_primes) {
      while (m % p == 0 && core_->is_one(core_->pow(c_, m / p))) m /= p;
    }
    return m;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.core_->same_field(*b.core_) && a.c_ == b.c_;
  }

  const detail::FieldCore& core() const { return *core_; }

 private:
  void check(const FieldElement& o) const {
    if (!core_->same_field(*o.core_)) fail(Errc::FieldMismatch, "operands belong to different fields");
  }

  std::shared_ptr<const detail::FieldCore> core_;
  detail::Poly c_;
};

inline FieldElement ExtensionField::zero() const { return {core_, detail::Poly(core_->k, 0)}; }
inline FieldElement ExtensionField::one() const {
  detail::Poly c(core_->k, 0);
  c[0] = 1;
  return {core_, std::move(c)};
}
inline FieldElement ExtensionField::element(std::vector<u32> coeffs) const { return {core_, std::move(coeffs)}; }
inline FieldElement ExtensionField::from_index(u64 index) const {
  if (index >= core_->size) fail(Errc::InvalidArgument, "element index out of range");
  return {core_, core_->from_index(index)};
}
inline FieldElement ExtensionField::generator() const { return {core_, core_->generator}; }

/// Tr(x) = x + x^q + ... + x^(q^(k-1)), evaluated through the precomputed
/// traces of the basis monomials (the trace is GF(q)-linear).
inline u32 trace(const FieldElement& x) {
  const auto& core = x.core();
  u64 s = 0;
  for (unsigned i = 0; i < core.k; ++i) s += u64{x.coeffs()[i]} * core.basis_trace[i] % core.q();
  return static_cast<u32>(s % core.q());
}

/// First element in index order whose multiplicative order is q^k - 1.
inline FieldElement find_primitive(const ExtensionField& field) {
  const auto& core = field.core();
  for (u64 idx = 1; idx < core.size; ++idx) {
    auto c = core.from_index(idx);
    if (core.has_full_order(c)) return field.element(std::move(c));
  }
  fail(Errc::InvalidArgument, "no primitive element");  // unreachable for a field
}

/// Baby-step giant-step discrete logarithm in <g>. The baby-step table is
/// built once so repeated queries cost O(sqrt(ord g)) each.
class DiscreteLog {
 public:
  explicit DiscreteLog(const FieldElement& g) : g_(g), order_(g.order()) {
    step_ = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(order_))));
    if (step_ == 0) step_ = 1;
    baby_.reserve(step_);
    FieldElement cur = g.field().one();
    for (u64 j = 0; j < step_; ++j) {
      baby_.emplace(cur.index(), j);
      cur = cur * g;
    }
    giant_ = g.pow(step_).inverse();
  }

  u64 group_order() const { return order_; }

  u64 operator()(const FieldElement& x) const {
    if (x.is_zero()) fail(Errc::LogOfZero, "discrete log of zero");
    FieldElement y = x;
    for (u64 i = 0; i <= step_; ++i) {
      auto it = baby_.find(y.index());
      if (it != baby_.end()) return (i * step_ + it->second) % order_;
      y = y * giant_;
    }
    fail(Errc::InvalidArgument, "element is not a power of the base");
  }

 private:
  FieldElement g_;
  u64 order_;
  u64 step_ = 1;
  std::unordered_map<u64, u64> baby_;
  FieldElement giant_ = g_;
};

inline u64 discrete_log(const FieldElement& x, const FieldElement& g) { return DiscreteLog(g)(x); }

/// Exponent/log/trace lookup tables for whole-field sweeps, indexed by the
/// power of the fixed generator: power j <-> element g^j.
class FieldTables {
 public:
  explicit FieldTables(const ExtensionField& field, u64 cap = u64{1} << 24) : field_(field) {
    const auto& core = field.core();
    if (core.size > cap) fail(Errc::TooLarge, "field of size " + std::to_string(core.size) + " exceeds table cap");
    const u64 m = core.size - 1;
    const unsigned k = core.k;
    const u64 q = core.q();
    // Multiplication by g as a k x k matrix acting on coefficient vectors.
    std::vector<detail::Poly> times_g(k);
    for (unsigned i = 0; i < k; ++i) {
      detail::Poly xi(k, 0);
      xi[i] = 1;
      times_g[i] = core.mul(xi, core.generator);
    }
    exp_.resize(m);
    trace_.resize(m);
    log_.assign(core.size, 0);
    detail::Poly cur(k, 0);
    cur[0] = 1;
    std::vector<u64> next(k);
    for (u64 j = 0; j < m; ++j) {
      const u64 idx = core.index_of(cur);
      exp_[j] = static_cast<u32>(idx);
      log_[idx] = static_cast<u32>(j);
      u64 t = 0;
      for (unsigned i = 0; i < k; ++i) t += u64{cur[i]} * core.basis_trace[i];
      trace_[j] = static_cast<u32>(t % q);
      std::fill(next.begin(), next.end(), 0);
      for (unsigned i = 0; i < k; ++i) {
        if (cur[i] == 0) continue;
        for (unsigned r = 0; r < k; ++r) next[r] += u64{cur[i]} * times_g[i][r];
      }
      for (unsigned r = 0; r < k; ++r) cur[r] = static_cast<u32>(next[r] % q);
    }
  }

  const ExtensionField& field() const { return field_; }
  u64 group_order() const { return exp_.size(); }
  /// Index of g^j.
  u64 power_index(u64 j) const { return exp_[j % exp_.size()]; }
  /// log_g of the element with the given (nonzero) index.
  u64 log_of_index(u64 index) const {
    if (index == 0) fail(Errc::LogOfZero, "discrete log of zero");
    return log_[index];
  }
  /// Tr(g^j).
  u32 trace_of_power(u64 j) const { return trace_[j % trace_.size()]; }
  std::span<const u32> traces() const { return trace_; }

 private:
  ExtensionField field_;
  std::vector<u32> exp_;
  std::vector<u32> log_;
  std::vector<u32> trace_;
};

}  // namespace iccc
