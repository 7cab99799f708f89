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

/// @file serialize.hpp
/// Ordered JSON documents with exact big integers and 17-digit reals, plus
/// encoders for the library's result types.

#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "iccc/codes.hpp"
#include "iccc/ff.hpp"
#include "iccc/mceliece.hpp"
#include "iccc/membership.hpp"
#include "iccc/potts.hpp"

namespace iccc {

class Json {
 public:
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;

  Json() = default;
  Json(std::nullptr_t) {}
  Json(bool b) : v_(b) {}
  template <class T, std::enable_if_t<std::is_integral_v<T> && !std::is_same_v<T, bool>, int> = 0>
  Json(T x) : v_(Number{std::to_string(x)}) {}
  Json(double x) : v_(number(x)) {}
  Json(const BigInt& x) : v_(Number{x.str()}) {}
  Json(const char* s) : v_(std::string(s)) {}
  Json(std::string s) : v_(std::move(s)) {}
  Json(Array a) : v_(std::move(a)) {}

  static Json object() {
    Json j;
    j.v_ = Object{};
    return j;
  }
  static Json array() { return Json(Array{}); }

  /// Appends a key (insertion order is kept).
  Json& set(std::string key, Json value) {
    std::get<Object>(v_).emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Json& push(Json value) {
    std::get<Array>(v_).push_back(std::move(value));
    return *this;
  }

  /// Compact when indent < 0.
  std::string dump(int indent = -1) const {
    std::string out;
    write(out, indent, 0);
    return out;
  }

 private:
  struct Number {
    std::string text;
  };

  static Number number(double x) {
    if (!std::isfinite(x)) return {"null"};
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return {buf};
  }

  static void escape(std::string& out, const std::string& s) {
    out += '"';
    for (unsigned char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
          if (c < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
          } else {
            out += static_cast<char>(c);
          }
      }
    }
    out += '"';
  }

  static void newline(std::string& out, int indent, int depth) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * depth), ' ');
  }

  void write(std::string& out, int indent, int depth) const {
    if (std::holds_alternative<std::monostate>(v_)) {
      out += "null";
    } else if (auto b = std::get_if<bool>(&v_)) {
      out += *b ? "true" : "false";
    } else if (auto n = std::get_if<Number>(&v_)) {
      out += n->text;
    } else if (auto s = std::get_if<std::string>(&v_)) {
      escape(out, *s);
    } else if (auto a = std::get_if<Array>(&v_)) {
      out += '[';
      for (std::size_t i = 0; i < a->size(); ++i) {
        if (i) out += ',';
        newline(out, indent, depth + 1);
        (*a)[i].write(out, indent, depth + 1);
      }
      if (!a->empty()) newline(out, indent, depth);
      out += ']';
    } else {
      const auto& o = std::get<Object>(v_);
      out += '{';
      for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) out += ',';
        newline(out, indent, depth + 1);
        escape(out, o[i].first);
        out += indent < 0 ? ":" : ": ";
        o[i].second.write(out, indent, depth + 1);
      }
      if (!o.empty()) newline(out, indent, depth);
      out += '}';
    }
  }

  std::variant<std::monostate, bool, Number, std::string, Array, Object> v_;
};

inline Json to_json(const std::vector<u32>& v) {
  Json a = Json::array();
  for (auto x : v) a.push(x);
  return a;
}

inline Json to_json(const std::vector<u64>& v) {
  Json a = Json::array();
  for (auto x : v) a.push(x);
  return a;
}

inline Json to_json(const ExtensionField& f) {
  return Json::object()
      .set("q", f.q())
      .set("k", f.degree())
      .set("modulus", to_json(f.modulus()))
      .set("generator", to_json(f.generator().coeffs()));
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push(to_json(std::vector<u32>(m.row(r).begin(), m.row(r).end())));
  return rows;
}

inline Json to_json(const LinearCode& c) {
  return Json::object()
      .set("q", c.q())
      .set("n", c.length())
      .set("k", c.dimension())
      .set("generator", to_json(c.generator()));
}

/// {"weight": count} with string keys, nonzero entries only.
inline Json to_json(const WeightSpectrum& s) {
  Json o = Json::object();
  for (const auto& [w, c] : s.nonzero()) o.set(std::to_string(w), c);
  return o;
}

inline Json to_json(const ThetaParams& t) {
  return Json::object()
      .set("n", t.n)
      .set("k", t.k)
      .set("q", t.q)
      .set("N", t.N)
      .set("theta", t.theta)
      .set("theta_numerator", t.min_digit_sum)
      .set("theta_denominator", t.q - 1)
      .set("grid", t.grid)
      .set("epsilon0", t.epsilon0)
      .set("epsilon0_expr", t.epsilon0_expr());
}

inline Json to_json(const CyclicCodeParams& p) {
  return Json::object()
      .set("q", p.q)
      .set("n", p.n)
      .set("k", p.k)
      .set("N", p.N)
      .set("d", p.d)
      .set("field", to_json(p.field));
}

inline Json to_json(const WeightTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.entries)
    rows.push(Json::object()
                  .set("representative", r.representative)
                  .set("raw", r.raw)
                  .set("rounded", r.rounded)
                  .set("multiplicity", r.multiplicity));
  return rows;
}

inline Json to_json(const GaussPhase& p) {
  return Json::object()
      .set("exact_phase", p.exact_phase)
      .set("magnitude", p.magnitude)
      .set("noisy_phase", p.noisy_phase)
      .set("epsilon", p.epsilon)
      .set("failed", p.failed);
}

inline Json terms_json(const PartitionFunction& z) {
  Json terms = Json::array();
  // Descending powers of 1/y, exponent being the power of y.
  for (auto it = z.laurent.rbegin(); it != z.laurent.rend(); ++it)
    terms.push(Json::object().set("exponent", -static_cast<long long>(it->first)).set("coefficient", it->second));
  return terms;
}

struct Evaluation {
  double beta = 0;
  double J = 1;
  double value = 0;
  double log_value = 0;
};

inline Json to_json(const PartitionFunction& z, const std::vector<Evaluation>& evals = {}) {
  Json ev = Json::array();
  for (const auto& e : evals)
    ev.push(Json::object().set("beta", e.beta).set("J", e.J).set("value", e.value).set("log_value", e.log_value));
  return Json::object()
      .set("q", z.q)
      .set("V", z.vertices)
      .set("E", z.edges)
      .set("components", z.components)
      .set("terms", terms_json(z))
      .set("evaluations", ev);
}

inline Json to_json(const BlockVerdict& b) {
  Json o = Json::object()
               .set("accepted", b.accepted)
               .set("reason", to_string(b.reason))
               .set("n", b.n())
               .set("k", b.k())
               .set("columns", to_json(std::vector<u64>(b.columns.begin(), b.columns.end())));
  if (b.params) o.set("params", to_json(*b.params));
  if (b.theta) o.set("theta", to_json(*b.theta));
  if (b.pattern.matches)
    o.set("basis", b.pattern.basis == BasisKind::Polynomial ? "polynomial" : "power")
        .set("basis_root_exponent", b.pattern.root_exponent)
        .set("log_offset", b.pattern.offset)
        .set("logs", to_json(b.pattern.logs));
  if (!b.detail.empty()) o.set("detail", b.detail);
  return o;
}

inline Json to_json(const MembershipVerdict& v) {
  Json blocks = Json::array();
  for (const auto& b : v.blocks) blocks.push(to_json(b));
  Json o = Json::object()
               .set("accepted", v.accepted)
               .set("reason", to_string(v.reason))
               .set("n", v.n)
               .set("k", v.k);
  if (v.params) o.set("params", to_json(*v.params));
  o.set("log_list", to_json(v.log_list)).set("blocks", blocks);
  if (!v.detail.empty()) o.set("detail", v.detail);
  return o;
}

}  // namespace iccc
