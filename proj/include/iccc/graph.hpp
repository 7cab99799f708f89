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

/// @file graph.hpp
/// Multigraphs and their cycle matroid matrix [I | X] over GF(q).
///
/// Text format:
///   # comment
///   vertices N
///   u v          (one edge per line, 0-based)

#pragma once

#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "iccc/error.hpp"
#include "iccc/matrix.hpp"

namespace iccc {

struct Edge {
  std::size_t u;  // u < v
  std::size_t v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless multigraph. Edge order is significant: it fixes the column order
/// of the incidence and cycle matroid matrices.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {})
      : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    for (auto& e : edges_) {
      if (e.u == e.v) fail(Errc::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.v >= vertex_count_)
        fail(Errc::InvalidArgument, "edge endpoint " + std::to_string(e.v) + " out of range");
    }
    if (!labels_.empty() && labels_.size() != edges_.size())
      fail(Errc::InvalidArgument, "label count does not match edge count");
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

inline Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t vertices = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    auto where = [&] { return "line " + std::to_string(line_no); };
    if (!have_header) {
      std::string keyword;
      long long n = -1;
      if (!(ls >> keyword >> n) || keyword != "vertices" || n < 0)
        fail(Errc::Parse, where() + ": expected 'vertices N'");
      std::string rest;
      if (ls >> rest) fail(Errc::Parse, where() + ": trailing tokens");
      vertices = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    long long u = -1, v = -1;
    if (!(ls >> u >> v) || u < 0 || v < 0) fail(Errc::Parse, where() + ": expected 'u v'");
    std::string rest;
    if (ls >> rest) fail(Errc::Parse, where() + ": trailing tokens");
    if (u == v) fail(Errc::SelfLoop, where() + ": self-loop at vertex " + std::to_string(u));
    if (static_cast<std::size_t>(std::max(u, v)) >= vertices)
      fail(Errc::Parse, where() + ": vertex out of range");
    edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  }
  if (!have_header) fail(Errc::Parse, "missing 'vertices N' header");
  return Graph(vertices, std::move(edges));
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open graph file '" + path + "'");
  return parse_graph(in);
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

/// Vertices of g relabelled after those of h; edges of g follow edges of h.
inline Graph disjoint_union(const Graph& h, const Graph& g) {
  std::vector<Edge> edges = h.edges();
  for (const auto& e : g.edges()) edges.push_back({e.u + h.vertex_count(), e.v + h.vertex_count()});
  return Graph(h.vertex_count() + g.vertex_count(), std::move(edges));
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Number of connected components, isolated vertices included.
inline std::size_t component_count(const Graph& g) {
  detail::DisjointSets ds(g.vertex_count());
  std::size_t c = g.vertex_count();
  for (const auto& e : g.edges())
    if (ds.unite(e.u, e.v)) --c;
  return c;
}

/// |V| x |E| signed incidence matrix: +1 at the smaller endpoint, -1 at the larger.
inline Matrix incidence_matrix(const Graph& g, u64 q) {
  Matrix m(g.vertex_count(), g.edge_count(), q);
  for (std::size_t c = 0; c < g.edge_count(); ++c) {
    m(g.edges()[c].u, c) = 1;
    m(g.edges()[c].v, c) = m.field().neg(1);
  }
  return m;
}

struct CycleMatroidMatrix {
  Matrix matrix;                               // [I | X], (|V| - c) x |E|
  std::vector<std::size_t> column_permutation;  // column j holds original edge column_permutation[j]
  std::size_t components = 0;

  std::size_t rank() const { return matrix.rows(); }
  /// The X block (rank x (|E| - rank)).
  Matrix x_block() const {
    std::vector<std::size_t> idx;
    for (std::size_t c = rank(); c < matrix.cols(); ++c) idx.push_back(c);
    return matrix.select_columns(idx);
  }
  bool permuted() const {
    for (std::size_t j = 0; j < column_permutation.size(); ++j)
      if (column_permutation[j] != j) return true;
    return false;
  }
};

/// Row-reduces the incidence matrix over GF(q) and moves pivot columns to the
/// front (stable), so the result has the form [I | X]. The permutation is
/// recorded so that columns can be mapped back to edges.
inline CycleMatroidMatrix reduce_to_cmm(const Graph& g, u64 q) {
  Echelon ech = row_reduce(incidence_matrix(g, q));
  std::vector<std::size_t> perm = ech.pivots;
  std::vector<bool> is_pivot(g.edge_count(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < g.edge_count(); ++c)
    if (!is_pivot[c]) perm.push_back(c);
  return {ech.reduced.select_columns(perm), std::move(perm), component_count(g)};
}

}  // namespace iccc
