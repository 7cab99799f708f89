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

/// @file potts.hpp
/// Potts partition functions as exact Laurent polynomials in y = exp(-beta J).
///
///   Z(y) = sum_sigma y^(-U(sigma)),  U(sigma) = number of monochromatic edges,
///        = q^c sum_i A_i y^(i - n)  for the cocycle code spectrum A.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "iccc/codes.hpp"
#include "iccc/error.hpp"
#include "iccc/graph.hpp"
#include "iccc/numtheory.hpp"
#include "iccc/parallel.hpp"

namespace iccc {

struct PottsInstance {
  Graph graph;
  u64 q = 2;
  double J = 1.0;
  double beta = 0.0;
};

/// Z(y) = sum_e c_e y^(-e), keyed by the monochromatic edge count e.
struct PartitionFunction {
  std::map<u64, BigInt> laurent;
  u64 q = 2;
  u64 vertices = 0;
  u64 edges = 0;
  u64 components = 0;

  BigInt total() const {
    BigInt t = 0;
    for (const auto& [e, c] : laurent) t += c;
    return t;
  }

  /// Same polynomial (metadata ignored).
  bool same_polynomial(const PartitionFunction& o) const { return laurent == o.laurent; }
  friend bool operator==(const PartitionFunction&, const PartitionFunction&) = default;
};

inline std::string to_string(const PartitionFunction& z) {
  std::string out;
  for (auto it = z.laurent.rbegin(); it != z.laurent.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.str();
    if (it->first != 0) out += "y^-" + std::to_string(it->first);
  }
  return out.empty() ? "0" : out;
}

/// Enumerates all q^|V| spin assignments.
inline PartitionFunction brute_force_Z(const Graph& g, u64 q, u64 cap = u64{1} << 24, unsigned threads = 1) {
  const std::size_t V = g.vertex_count();
  auto total = nt::checked_pow(q, V);
  if (!total || *total > cap) fail(Errc::TooLarge, "q^|V| exceeds the configuration cap");
  const std::size_t E = g.edge_count();
  const unsigned chunks = chunk_count(*total, threads);
  std::vector<std::vector<u64>> partial(chunks, std::vector<u64>(E + 1, 0));
  parallel_chunks(*total, chunks, [&](unsigned t, u64 begin, u64 end) {
    std::vector<u32> spin(V, 0);
    u64 m = begin;
    for (std::size_t v = 0; v < V; ++v) {
      spin[v] = static_cast<u32>(m % q);
      m /= q;
    }
    for (u64 cfg = begin; cfg < end; ++cfg) {
      std::size_t mono = 0;
      for (const auto& e : g.edges()) mono += spin[e.u] == spin[e.v];
      ++partial[t][mono];
      for (std::size_t v = 0; v < V; ++v) {
        if (++spin[v] < q) break;
        spin[v] = 0;
      }
    }
  });
  PartitionFunction z{{}, q, V, E, component_count(g)};
  for (std::size_t e = 0; e <= E; ++e) {
    BigInt c = 0;
    for (const auto& p : partial) c += p[e];
    if (c != 0) z.laurent.emplace(e, c);
  }
  return z;
}

inline PartitionFunction brute_force_Z(const PottsInstance& inst, u64 cap = u64{1} << 24, unsigned threads = 1) {
  return brute_force_Z(inst.graph, inst.q, cap, threads);
}

/// Z(y) = q^c sum_i A_i y^(i - n); a weight-i word contributes at e = n - i.
inline PartitionFunction Z_from_spectrum(const WeightSpectrum& a, u64 n, u64 components, u64 q, u64 vertices = 0) {
  if (a.length() != n) fail(Errc::InvalidArgument, "spectrum length differs from n");
  BigInt qc = 1;
  for (u64 i = 0; i < components; ++i) qc *= q;
  PartitionFunction z{{}, q, vertices, n, components};
  for (u64 i = 0; i <= n; ++i)
    if (a[i] != 0) z.laurent.emplace(n - i, qc * a[i]);
  if (vertices == 0) {
    // Recover |V| from the total q^|V| when it was not supplied.
    BigInt t = z.total();
    u64 v = 0;
    while (t > 1 && t % q == 0) {
      t /= q;
      ++v;
    }
    z.vertices = v;
  }
  return z;
}

/// MacWilliams on the dual spectrum, then the cocycle-code formula.
inline PartitionFunction Z_via_dual_pipeline(const WeightSpectrum& dual, u64 n, u64 k, u64 components, u64 q,
                                             u64 vertices = 0) {
  return Z_from_spectrum(macwilliams(dual, n, k, q), n, components, q, vertices);
}

/// One direct-sum summand: a code spectrum with its graph metadata.
struct SpectrumPart {
  WeightSpectrum spectrum;
  u64 n = 0;
  u64 k = 0;
  u64 components = 0;
  u64 vertices = 0;
};

/// W = W1 W2 ...; n, k, c and |V| add up.
inline PartitionFunction direct_sum_Z(const std::vector<SpectrumPart>& parts, u64 q) {
  WeightSpectrum w = WeightSpectrum::zero_code(0);
  u64 n = 0, c = 0, v = 0;
  for (const auto& p : parts) {
    if (p.spectrum.length() != p.n) fail(Errc::InvalidArgument, "summand spectrum length differs from n");
    w = convolve(w, p.spectrum);
    n += p.n;
    c += p.components;
    v += p.vertices;
  }
  return Z_from_spectrum(w, n, c, q, v);
}

/// ln Z at y = exp(-beta J), by log-sum-exp over the terms.
inline double log_evaluate_Z(const PartitionFunction& z, double beta, double J) {
  if (beta < 0) fail(Errc::InvalidArgument, "beta must be non-negative");
  if (z.laurent.empty()) fail(Errc::InvalidArgument, "empty partition function");
  std::vector<double> logs;
  for (const auto& [e, c] : z.laurent) {
    // ln c from the leading digits of c to stay finite for huge counts.
    const std::string s = c.str();
    const std::size_t keep = std::min<std::size_t>(s.size(), 17);
    const double lc = std::log(std::stod(s.substr(0, keep))) + static_cast<double>(s.size() - keep) * std::log(10.0);
    logs.push_back(lc + beta * J * static_cast<double>(e));
  }
  const double mx = *std::max_element(logs.begin(), logs.end());
  double acc = 0;
  for (double l : logs) acc += std::exp(l - mx);
  return mx + std::log(acc);
}

inline double evaluate_Z(const PartitionFunction& z, double beta, double J) { return std::exp(log_evaluate_Z(z, beta, J)); }

/// Tutte polynomial T(x, y) = sum t_ij x^i y^j.
struct TuttePolynomial {
  std::map<std::pair<u64, u64>, BigInt> coeffs;

  TuttePolynomial& operator+=(const TuttePolynomial& o) {
    for (const auto& [ij, c] : o.coeffs) coeffs[ij] += c;
    return *this;
  }
  TuttePolynomial shifted(u64 dx, u64 dy) const {
    TuttePolynomial t;
    for (const auto& [ij, c] : coeffs) t.coeffs[{ij.first + dx, ij.second + dy}] = c;
    return t;
  }
};

namespace detail {

/// Deletion-contraction on a loopless multigraph given as an edge list.
/// Loops are peeled off as factors of y, bridges as factors of x.
class TutteSolver {
 public:
  TuttePolynomial solve(std::size_t vertices, std::vector<Edge> edges) {
    std::size_t loops = 0;
    std::vector<Edge> kept;
    for (const auto& e : edges) {
      if (e.u == e.v)
        ++loops;
      else
        kept.push_back(e);
    }
    return canonical(vertices, std::move(kept)).shifted(0, loops);
  }

 private:
  TuttePolynomial canonical(std::size_t vertices, std::vector<Edge> edges) {
    if (edges.empty()) return TuttePolynomial{{{{0, 0}, 1}}};
    // Relabel vertices by first appearance and sort the edges.
    std::vector<std::size_t> label(vertices, SIZE_MAX);
    std::size_t next = 0;
    for (auto& e : edges) {
      if (label[e.u] == SIZE_MAX) label[e.u] = next++;
      if (label[e.v] == SIZE_MAX) label[e.v] = next++;
      e = {std::min(label[e.u], label[e.v]), std::max(label[e.u], label[e.v])};
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    std::string key;
    for (const auto& e : edges) key += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Edge e = edges.back();
    std::vector<Edge> rest(edges.begin(), edges.end() - 1);
    TuttePolynomial result;
    if (is_bridge(next, rest, e)) {
      result = solve(next, contract(rest, e)).shifted(1, 0);
    } else {
      result = solve(next, rest);
      result += solve(next, contract(rest, e));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  static bool is_bridge(std::size_t vertices, const std::vector<Edge>& rest, const Edge& e) {
    DisjointSets ds(vertices);
    for (const auto& f : rest) ds.unite(f.u, f.v);
    return ds.find(e.u) != ds.find(e.v);
  }

  static std::vector<Edge> contract(const std::vector<Edge>& rest, const Edge& e) {
    std::vector<Edge> out;
    for (auto f : rest) {
      if (f.u == e.v) f.u = e.u;
      if (f.v == e.v) f.v = e.u;
      out.push_back({std::min(f.u, f.v), std::max(f.u, f.v)});
    }
    return out;
  }

  std::unordered_map<std::string, TuttePolynomial> memo_;
};

}  // namespace detail

inline TuttePolynomial tutte_polynomial(const Graph& g, std::size_t max_edges = 14) {
  if (g.edge_count() > max_edges) fail(Errc::TooLarge, "deletion-contraction limited to " + std::to_string(max_edges) + " edges");
  return detail::TutteSolver().solve(g.vertex_count(), g.edges());
}

/// q^c v^(|V|-c) T((q+v)/v, v+1), expanded as
/// q^c sum t_ij v^(r-i) (q+v)^i (1+v)^j with r = |V| - c, valid at v = 0.
inline double tutte_oracle(const Graph& g, u64 q, double v, std::size_t max_edges = 14) {
  const TuttePolynomial t = tutte_polynomial(g, max_edges);
  const u64 c = component_count(g);
  const u64 r = g.vertex_count() - c;
  const long double vq = static_cast<long double>(v);
  long double sum = 0;
  for (const auto& [ij, coef] : t.coeffs) {
    const auto [i, j] = ij;
    sum += coef.convert_to<long double>() * std::pow(vq, static_cast<long double>(r - i)) *
           std::pow(static_cast<long double>(q) + vq, static_cast<long double>(i)) *
           std::pow(1.0L + vq, static_cast<long double>(j));
  }
  return static_cast<double>(std::pow(static_cast<long double>(q), static_cast<long double>(c)) * sum);
}

}  // namespace iccc
