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

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace iccc::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Deterministic Miller-Rabin; the fixed witness set is exact for all 64-bit n.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Trial-division factorisation as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t existing = out.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline u64 totient(u64 n) {
  u64 result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

/// Smallest k >= 1 with q^k = 1 (mod n), found by iterated multiplication.
/// Returns nullopt when gcd(q, n) != 1 or when k would exceed `limit`.
inline std::optional<u64> multiplicative_order(u64 q, u64 n, u64 limit = UINT64_MAX) {
  if (n == 0 || std::gcd(q, n) != 1) return std::nullopt;
  if (n == 1) return 1;
  const u64 base = q % n;
  u64 value = base;
  for (u64 k = 1; k <= limit && k <= n; ++k) {
    if (value == 1) return k;
    value = mul_mod(value, base, n);
  }
  return std::nullopt;
}

/// ord_n(q) by reducing phi(n) over its prime factors; O(sqrt n).
inline std::optional<u64> fast_order(u64 q, u64 n) {
  if (n == 0 || std::gcd(q, n) != 1) return std::nullopt;
  if (n == 1) return 1;
  u64 ord = totient(n);
  for (auto [p, e] : factorize(ord)) {
    for (unsigned i = 0; i < e && ord % p == 0 && pow_mod(q, ord / p, n) == 1; ++i) ord /= p;
  }
  return ord;
}

/// Sum of the base-`base` digits of x.
inline u64 digit_sum(u64 x, u64 base) {
  u64 s = 0;
  while (x) {
    s += x % base;
    x /= base;
  }
  return s;
}

/// base^exp, or nullopt on 64-bit overflow.
inline std::optional<u64> checked_pow(u64 base, u64 exp) {
  u64 result = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

/// True when base^exp <= cap (no overflow in the comparison).
inline bool pow_fits(u64 base, u64 exp, u64 cap) {
  auto v = checked_pow(base, exp);
  return v && *v <= cap;
}

}  // namespace iccc::nt
