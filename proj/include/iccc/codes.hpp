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

/// @file codes.hpp
/// Linear codes over GF(q), weight spectra, irreducible cyclic codes and the
/// MacWilliams transform.

#pragma once

#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "iccc/error.hpp"
#include "iccc/ff.hpp"
#include "iccc/graph.hpp"
#include "iccc/matrix.hpp"
#include "iccc/numtheory.hpp"
#include "iccc/parallel.hpp"

namespace iccc {

using BigInt = boost::multiprecision::cpp_int;

/// Weight spectrum {A_0, ..., A_n} with exact counts.
class WeightSpectrum {
 public:
  WeightSpectrum() : counts_(1, 0) {}
  explicit WeightSpectrum(std::size_t n) : counts_(n + 1, 0) {}
  explicit WeightSpectrum(std::vector<BigInt> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) counts_.assign(1, 0);
  }

  /// Spectrum of the zero code of length n.
  static WeightSpectrum zero_code(std::size_t n) {
    WeightSpectrum s(n);
    s[0] = 1;
    return s;
  }

  std::size_t length() const { return counts_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return counts_.at(i); }
  BigInt& operator[](std::size_t i) { return counts_.at(i); }
  const std::vector<BigInt>& counts() const { return counts_; }

  BigInt total() const {
    BigInt t = 0;
    for (const auto& c : counts_) t += c;
    return t;
  }

  std::map<std::size_t, BigInt> nonzero() const {
    std::map<std::size_t, BigInt> out;
    for (std::size_t i = 0; i < counts_.size(); ++i)
      if (counts_[i] != 0) out.emplace(i, counts_[i]);
    return out;
  }

  friend bool operator==(const WeightSpectrum&, const WeightSpectrum&) = default;

 private:
  std::vector<BigInt> counts_;
};

inline std::string to_string(const WeightSpectrum& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [w, c] : s.nonzero()) {
    if (!first) out += ", ";
    out += "A_" + std::to_string(w) + ":" + c.str();
    first = false;
  }
  return out + "}";
}

/// Enumerator of a direct sum: the product W1 * W2.
inline WeightSpectrum convolve(const WeightSpectrum& a, const WeightSpectrum& b) {
  WeightSpectrum out(a.length() + b.length());
  for (std::size_t i = 0; i <= a.length(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j <= b.length(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// [n, k] linear code given by a full-rank k x n generator.
class LinearCode {
 public:
  explicit LinearCode(Matrix generator) : gen_(std::move(generator)) {
    if (rank(gen_) != gen_.rows()) fail(Errc::InvalidArgument, "generator matrix is not of full row rank");
  }

  /// Code spanned by arbitrary rows (dependent rows are dropped).
  static LinearCode span_of(const Matrix& rows) { return LinearCode(row_reduce(rows).reduced); }

  static LinearCode zero_code(std::size_t n, u64 q) { return LinearCode(Matrix(0, n, q)); }

  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return gen_.rows(); }
  u64 q() const { return gen_.q(); }
  const Matrix& generator() const { return gen_; }

  /// True when v lies in the row space.
  bool contains(std::span<const u32> v) const {
    Matrix m = gen_.stacked(Matrix::from_rows(q(), {std::vector<long long>(v.begin(), v.end())}, length()));
    return rank(m) == dimension();
  }

 private:
  Matrix gen_;
};

/// Cocycle code: the row space of the cycle matroid matrix.
inline LinearCode cocycle_code(const CycleMatroidMatrix& cmm) { return LinearCode(cmm.matrix); }

/// Dual code. With G = [I | X] (after the column permutation that brings the
/// pivots to the front) the dual is generated by [-X^T | I].
inline LinearCode dual_code(const LinearCode& c) {
  const Echelon ech = row_reduce(c.generator());
  const std::size_t n = c.length();
  const auto& f = c.generator().field();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix h(free_cols.size(), n, c.q());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    h(t, free_cols[t]) = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) h(t, ech.pivots[i]) = f.neg(ech.reduced(i, free_cols[t]));
  }
  return LinearCode(std::move(h));
}

/// Block-diagonal generator of a (+) b.
inline LinearCode compose_direct_sum(const LinearCode& a, const LinearCode& b) {
  if (a.q() != b.q()) fail(Errc::FieldMismatch, "direct sum of codes over different fields");
  Matrix g(a.dimension() + b.dimension(), a.length() + b.length(), a.q());
  for (std::size_t r = 0; r < a.dimension(); ++r)
    for (std::size_t c = 0; c < a.length(); ++c) g(r, c) = a.generator()(r, c);
  for (std::size_t r = 0; r < b.dimension(); ++r)
    for (std::size_t c = 0; c < b.length(); ++c) g(a.dimension() + r, a.length() + c) = b.generator()(r, c);
  return LinearCode(std::move(g));
}

namespace detail {

template <class Word>
void sweep_dense(const Matrix& g, u64 begin, u64 end, std::vector<u64>& counts) {
  const std::size_t k = g.rows(), n = g.cols();
  const u64 q = g.q();
  std::vector<u32> digit(k, 0);
  std::vector<Word> word(n, 0);
  u64 m = begin;
  for (std::size_t r = 0; r < k; ++r) {
    digit[r] = static_cast<u32>(m % q);
    m /= q;
    for (std::size_t c = 0; c < n; ++c) word[c] = static_cast<Word>((word[c] + u64{digit[r]} * g(r, c)) % q);
  }
  std::vector<std::vector<Word>> rows(k, std::vector<Word>(n));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = static_cast<Word>(g(r, c));
  const Word qw = static_cast<Word>(q);
  for (u64 msg = begin; msg < end; ++msg) {
    std::size_t w = 0;
    for (std::size_t c = 0; c < n; ++c) w += word[c] != 0;
    ++counts[w];
    for (std::size_t r = 0; r < k; ++r) {
      Word* wp = word.data();
      const Word* rp = rows[r].data();
      for (std::size_t c = 0; c < n; ++c) {
        Word s = static_cast<Word>(wp[c] + rp[c]);
        wp[c] = s >= qw ? static_cast<Word>(s - qw) : s;
      }
      if (++digit[r] < q) break;
      digit[r] = 0;  // wrapped: the row was added q times in total, net zero
    }
  }
}

inline void sweep_binary(const Matrix& g, u64 begin, u64 end, std::vector<u64>& counts) {
  const std::size_t k = g.rows(), n = g.cols();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<u64>> rows(k, std::vector<u64>(words, 0));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (g(r, c)) rows[r][c / 64] |= u64{1} << (c % 64);
  std::vector<u64> word(words, 0);
  for (std::size_t r = 0; r < k; ++r)
    if ((begin >> r) & 1)
      for (std::size_t i = 0; i < words; ++i) word[i] ^= rows[r][i];
  for (u64 msg = begin; msg < end; ++msg) {
    std::size_t w = 0;
    for (auto x : word) w += static_cast<std::size_t>(std::popcount(x));
    ++counts[w];
    // Bits that flip from msg to msg+1 are the trailing ones plus the next zero.
    const u64 flips = msg ^ (msg + 1);
    for (std::size_t r = 0; r < k; ++r) {
      if (!((flips >> r) & 1)) break;
      for (std::size_t i = 0; i < words; ++i) word[i] ^= rows[r][i];
    }
  }
}

}  // namespace detail

/// Exhaustive spectrum: enumerates all q^k messages. The message space is
/// split into chunks (one per thread); counts are summed in chunk order.
inline WeightSpectrum brute_force_spectrum(const LinearCode& c, u64 cap = u64{1} << 24, unsigned threads = 1) {
  const std::size_t k = c.dimension(), n = c.length();
  const u64 q = c.q();
  auto total = nt::checked_pow(q, k);
  if (!total || *total > cap)
    fail(Errc::TooLarge, "code has " + std::to_string(q) + "^" + std::to_string(k) + " words, above the enumeration cap");
  const unsigned chunks = chunk_count(*total, threads);
  std::vector<std::vector<u64>> partial(chunks, std::vector<u64>(n + 1, 0));
  parallel_chunks(*total, chunks, [&](unsigned t, u64 begin, u64 end) {
    if (q == 2)
      detail::sweep_binary(c.generator(), begin, end, partial[t]);
    else if (q < 128)
      detail::sweep_dense<std::uint8_t>(c.generator(), begin, end, partial[t]);
    else
      detail::sweep_dense<u64>(c.generator(), begin, end, partial[t]);
  });
  WeightSpectrum s(n);
  for (const auto& p : partial)
    for (std::size_t i = 0; i <= n; ++i) s[i] += p[i];
  return s;
}

/// Shift-closure test: every cyclic shift of a generator row lies in the row space.
inline bool is_cyclic(const LinearCode& c) {
  const std::size_t n = c.length();
  if (c.dimension() == 0 || n == 0) return true;
  Matrix shifted(c.dimension(), n, c.q());
  for (std::size_t r = 0; r < c.dimension(); ++r)
    for (std::size_t j = 0; j < n; ++j) shifted(r, (j + 1) % n) = c.generator()(r, j);
  return rank(c.generator().stacked(shifted)) == c.dimension();
}

/// Parameters of the [n, k] irreducible cyclic code with k = ord_q(n),
/// N = (q^k - 1) / n and d = gcd(N, (q^k - 1) / (q - 1)).
struct CyclicCodeParams {
  u64 q = 2;
  u64 n = 1;
  unsigned k = 1;
  u64 N = 1;
  u64 d = 1;
  ExtensionField field;

  static CyclicCodeParams make(u64 q, u64 n, std::optional<ExtensionField> field = std::nullopt) {
    if (!nt::is_prime(q)) fail(Errc::NotPrime, "q = " + std::to_string(q) + " is not prime");
    if (n == 0 || std::gcd(q, n) != 1)
      fail(Errc::InconsistentParams, "n = " + std::to_string(n) + " is not coprime to q");
    auto k = nt::multiplicative_order(q, n);
    if (!k) fail(Errc::InconsistentParams, "ord_q(n) undefined");
    if (field && (field->q() != q || field->degree() != *k))
      fail(Errc::InconsistentParams, "field degree differs from ord_q(n)");
    auto size = nt::checked_pow(q, *k);
    if (!size || *size > (u64{1} << 62)) fail(Errc::TooLarge, "field of degree " + std::to_string(*k) + " too large");
    const u64 m = *size - 1;
    const u64 N = m / n;
    const u64 d = std::gcd(N, m / (q - 1));
    return {q, n, static_cast<unsigned>(*k), N, d, field ? *field : ExtensionField(q, static_cast<unsigned>(*k))};
  }
};

/// (Tr(x), Tr(x g^N), ..., Tr(x g^((n-1)N))) for the fixed generator g.
inline std::vector<u32> trace_codeword(const FieldElement& x, const CyclicCodeParams& p) {
  if (!(x.field() == p.field)) fail(Errc::FieldMismatch, "element not in the code's field");
  std::vector<u32> word(p.n);
  const FieldElement step = p.field.generator().pow(p.N);
  FieldElement cur = x;
  for (u64 j = 0; j < p.n; ++j) {
    word[j] = trace(cur);
    cur = cur * step;
  }
  return word;
}

/// k x n generator whose column j is g^(j N u) in the polynomial basis. Its row
/// space is {(Tr(x g^(jNu)))_j}: every linear functional is Tr(x .) for some x.
inline LinearCode irreducible_cyclic_generator(const CyclicCodeParams& p, u64 u = 1) {
  Matrix g(p.k, p.n, p.q);
  const FieldElement step = p.field.generator().pow(p.N * u % p.field.group_order());
  FieldElement cur = p.field.one();
  for (u64 j = 0; j < p.n; ++j) {
    for (unsigned r = 0; r < p.k; ++r) g(r, j) = cur.coeffs()[r];
    cur = cur * step;
  }
  return LinearCode(std::move(g));
}

/// Discrete logs to the fixed generator: table lookup for small fields,
/// baby-step giant-step otherwise.
class LogOracle {
 public:
  explicit LogOracle(const ExtensionField& field, u64 table_cap = u64{1} << 20) : field_(field) {
    if (field.size() <= table_cap)
      tables_.emplace(field);
    else
      bsgs_.emplace(field.generator());
  }

  u64 operator()(const FieldElement& x) const {
    if (x.is_zero()) fail(Errc::LogOfZero, "discrete log of zero");
    return tables_ ? tables_->log_of_index(x.index()) : (*bsgs_)(x);
  }

  const ExtensionField& field() const { return field_; }

 private:
  ExtensionField field_;
  std::optional<FieldTables> tables_;
  std::optional<DiscreteLog> bsgs_;
};

enum class BasisKind { Polynomial, Power };

struct LogPatternResult {
  bool matches = false;
  bool zero_column = false;
  BasisKind basis = BasisKind::Polynomial;
  u64 root_exponent = 0;  // power basis {h^r} with h = g^root_exponent
  std::vector<u64> logs;  // log_g of each column under the chosen basis
  u64 offset = 0;         // common residue of the logs mod N
};

namespace detail {

/// All logs distinct and congruent mod N. For n values this is the same as
/// {c + jNu : j < n} for any unit u, since the multiples of N form a cyclic
/// group of order n generated by Nu.
inline bool logs_fit_pattern(const std::vector<u64>& logs, u64 N) {
  if (logs.empty()) return true;
  const u64 c = logs.front() % N;
  std::set<u64> seen;
  for (u64 l : logs) {
    if (l % N != c) return false;
    if (!seen.insert(l).second) return false;
  }
  return true;
}

}  // namespace detail

/// Checks whether the columns of `gen`, read as field elements, are a permuted
/// list {g^(c + jN)}. The polynomial basis is tried first; if that fails the
/// row-reduced generator is read in power bases {1, h, ..., h^(k-1)} with
/// h = g^(Nu) for unit representatives u modulo Frobenius. Each basis gives a
/// linear bijection GF(q)^k -> GF(q^k), so a match in any basis certifies the
/// code as a column permutation of the irreducible cyclic code.
inline LogPatternResult match_log_pattern(const Matrix& gen, const CyclicCodeParams& p, const LogOracle& logs,
                                          u64 work_budget = u64{1} << 24) {
  LogPatternResult res;
  if (gen.rows() != p.k || gen.cols() != p.n) return res;
  for (std::size_t j = 0; j < gen.cols(); ++j)
    if (gen.column_is_zero(j)) {
      res.zero_column = true;
      return res;
    }

  auto try_elements = [&](auto&& element_of) -> bool {
    std::vector<u64> ls;
    ls.reserve(p.n);
    std::set<u64> seen;
    u64 c = 0;
    for (std::size_t j = 0; j < p.n; ++j) {
      FieldElement e = element_of(j);
      if (e.is_zero()) return false;
      const u64 l = logs(e);
      if (j == 0) c = l % p.N;
      if (l % p.N != c || !seen.insert(l).second) return false;
      ls.push_back(l);
    }
    res.logs = std::move(ls);
    res.offset = c;
    return true;
  };

  std::vector<u32> col(p.k);
  if (try_elements([&](std::size_t j) {
        for (unsigned r = 0; r < p.k; ++r) col[r] = gen(r, j);
        return p.field.element(col);
      })) {
    res.matches = true;
    res.basis = BasisKind::Polynomial;
    return res;
  }

  const Echelon ech = row_reduce(gen);
  const u64 order = p.field.group_order();
  std::vector<bool> visited(p.n, false);
  u64 spent = 0;
  for (u64 u = 1; u < std::max<u64>(p.n, 2); ++u) {
    if (p.n > 1 && (visited[u] || std::gcd(u, p.n) != 1)) continue;
    // Frobenius orbit of u gives conjugate bases with identical outcomes.
    for (u64 v = u % p.n, i = 0; p.n > 1 && i < p.k; ++i, v = v * p.q % p.n) visited[v] = true;
    spent += p.n;
    if (spent > work_budget) break;
    const u64 e = p.N * u % order;
    const FieldElement h = p.field.generator().pow(e);
    std::vector<FieldElement> powers;
    FieldElement cur = p.field.one();
    for (unsigned r = 0; r < p.k; ++r) {
      powers.push_back(cur);
      cur = cur * h;
    }
    if (try_elements([&](std::size_t j) {
          FieldElement acc = p.field.zero();
          for (unsigned r = 0; r < p.k; ++r)
            if (ech.reduced(r, j)) acc = acc + powers[r].scaled(ech.reduced(r, j));
          return acc;
        })) {
      res.matches = true;
      res.basis = BasisKind::Power;
      res.root_exponent = e;
      return res;
    }
    if (p.n <= 1) break;
  }
  return res;
}

/// True when c is cyclic and its columns are the irreducible cyclic code of
/// length n over `field`, certified through the discrete-log pattern.
inline bool is_irreducible_cyclic(const LinearCode& c, const ExtensionField& field) {
  const u64 n = c.length();
  if (n == 0 || std::gcd(field.q(), n) != 1) return false;
  auto k = nt::multiplicative_order(field.q(), n);
  if (!k || *k != field.degree() || c.dimension() != field.degree()) return false;
  if (!is_cyclic(c)) return false;
  for (std::size_t j = 0; j < n; ++j)
    if (c.generator().column_is_zero(j)) fail(Errc::ZeroColumn, "generator column " + std::to_string(j) + " is zero");
  auto params = CyclicCodeParams::make(field.q(), n, field);
  LogOracle logs(field);
  return match_log_pattern(c.generator(), params, logs).matches;
}

namespace detail {

inline BigInt binomial(u64 n, u64 r) {
  if (r > n) return 0;
  BigInt b = 1;
  for (u64 i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

}  // namespace detail

/// Krawtchouk polynomial K_j(i) for length n over GF(q).
inline BigInt krawtchouk(u64 n, u64 q, u64 j, u64 i) {
  BigInt s = 0;
  for (u64 t = 0; t <= std::min(i, j); ++t) {
    BigInt term = detail::binomial(i, t) * detail::binomial(n - i, j - t);
    BigInt pw = 1;
    for (u64 e = 0; e < j - t; ++e) pw *= (q - 1);
    term *= pw;
    s += (t % 2) ? -term : term;
  }
  return s;
}

/// Dual spectrum by the MacWilliams identity over GF(q):
/// A'_j = q^(-k) sum_i A_i K_j(i).
inline WeightSpectrum macwilliams(const WeightSpectrum& s, std::size_t n, std::size_t k, u64 q) {
  if (s.length() != n) fail(Errc::InvalidArgument, "spectrum length differs from n");
  if (k > n) fail(Errc::InvalidArgument, "dimension exceeds length");
  BigInt qk = 1;
  for (std::size_t i = 0; i < k; ++i) qk *= q;
  WeightSpectrum out(n);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i)
      if (s[i] != 0) acc += s[i] * krawtchouk(n, q, j, i);
    if (acc % qk != 0) fail(Errc::NonIntegerCoefficient, "dual coefficient " + std::to_string(j) + " is not an integer");
    acc /= qk;
    if (acc < 0) fail(Errc::NonIntegerCoefficient, "dual coefficient " + std::to_string(j) + " is negative");
    out[j] = acc;
  }
  return out;
}

}  // namespace iccc
