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

/// @file cli.hpp
/// Command dispatch for the `iccc` tool. Exit status: 0 success, 2 the graph
/// is not a member (and no fallback ran), 1 error.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "iccc/codes.hpp"
#include "iccc/gauss.hpp"
#include "iccc/graph.hpp"
#include "iccc/mceliece.hpp"
#include "iccc/membership.hpp"
#include "iccc/pipeline.hpp"
#include "iccc/potts.hpp"
#include "iccc/serialize.hpp"

namespace iccc {

enum class OutputFormat { Json, Text };

struct RunConfig {
  std::string command;
  std::string graph_path;
  u64 q = 2;
  std::optional<double> epsilon;  // default 1e-3 for membership/partition
  std::vector<double> betas{1.0};
  double J = 1.0;
  u64 seed = 1;
  unsigned threads = 1;
  unsigned max_field_bits = 24;
  unsigned max_config_bits = 24;
  OutputFormat format = OutputFormat::Json;
  bool no_fallback = false;
  bool inject_failures = false;
  unsigned attempts = 8;
  // Single-stage commands.
  u64 n = 0;           // weights
  unsigned k = 1;      // gauss-sum
  u64 d = 2;           // gauss-sum
  u64 a = 1;           // gauss-sum
  u64 beta_index = 1;  // gauss-sum additive parameter, as a field element index
  u64 N = 1;           // cosets
  std::size_t limit = 50;
};

namespace detail {

inline double default_epsilon(const RunConfig& c) { return c.epsilon.value_or(1e-3); }

inline std::vector<Evaluation> evaluations(const PartitionFunction& z, const RunConfig& c) {
  std::vector<Evaluation> out;
  for (double b : c.betas) {
    const double lv = log_evaluate_Z(z, b, c.J);
    out.push_back({b, c.J, std::exp(lv), lv});
  }
  return out;
}

inline void emit(std::ostream& out, const RunConfig& c, const Json& doc, const std::string& text) {
  if (c.format == OutputFormat::Json)
    out << doc.dump(2) << '\n';
  else
    out << text;
}

inline std::string text_Z(const PartitionFunction& z, const std::vector<Evaluation>& ev) {
  std::string s = "Z(y) = " + to_string(z) + "\n";
  for (const auto& e : ev) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "beta=%.17g J=%.17g Z=%.17g\n", e.beta, e.J, e.value);
    s += buf;
  }
  return s;
}

inline int cmd_membership(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c.graph_path);
  MembershipCaps caps;
  caps.max_field_bits = c.max_field_bits;
  const MembershipVerdict v = membership_test(g, c.q, default_epsilon(c), caps);
  Json doc = Json::object().set("command", "membership").set("q", c.q).set("epsilon", default_epsilon(c));
  doc.set("verdict", to_json(v));
  emit(out, c, doc, std::string(v.accepted ? "accept" : "reject") + " " + to_string(v.reason) + "\n");
  return v.accepted ? 0 : 2;
}

inline Json brute_force_doc(const Graph& g, const RunConfig& c, PartitionFunction& z_out) {
  const u64 cap = u64{1} << c.max_config_bits;
  z_out = brute_force_Z(g, c.q, cap, c.threads);
  Json doc = Json::object();
  const CycleMatroidMatrix cmm = reduce_to_cmm(g, c.q);
  if (nt::pow_fits(c.q, cmm.rank(), cap))
    doc.set("cocycle_spectrum", to_json(brute_force_spectrum(cocycle_code(cmm), cap, c.threads)));
  return doc;
}

inline int cmd_bruteforce(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c.graph_path);
  PartitionFunction z;
  Json extra = brute_force_doc(g, c, z);
  const auto ev = evaluations(z, c);
  Json doc = Json::object().set("command", "bruteforce").set("method", "bruteforce");
  doc.set("partition_function", to_json(z, ev));
  doc.set("oracle", extra);
  emit(out, c, doc, text_Z(z, ev));
  return 0;
}

inline int cmd_partition(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(c.graph_path);
  PipelineOptions opt;
  opt.epsilon = default_epsilon(c);
  opt.seed = c.seed;
  opt.inject_failures = c.inject_failures;
  opt.attempts = c.attempts;
  opt.threads = c.threads;
  opt.caps.max_field_bits = c.max_field_bits;
  const PipelineResult res = run_pipeline(g, c.q, opt);
  Json doc = Json::object().set("command", "partition").set("q", c.q).set("epsilon", opt.epsilon).set("seed", c.seed);
  doc.set("membership", to_json(res.verdict));
  if (!res.verdict.accepted) {
    if (c.no_fallback) {
      doc.set("method", "rejected");
      emit(out, c, doc, std::string("reject ") + to_string(res.verdict.reason) + "\n");
      return 2;
    }
    err << "warning: graph rejected (" << to_string(res.verdict.reason) << "); using brute-force enumeration\n";
    PartitionFunction z;
    Json extra = brute_force_doc(g, c, z);
    const auto ev = evaluations(z, c);
    doc.set("method", "bruteforce-fallback");
    doc.set("partition_function", to_json(z, ev));
    doc.set("oracle", extra);
    emit(out, c, doc, text_Z(z, ev));
    return 0;
  }
  Json blocks = Json::array();
  for (const auto& b : res.blocks) {
    Json phases = Json::array();
    for (const auto& p : b.phases) phases.push(to_json(p));
    blocks.push(Json::object()
                    .set("n", b.verdict.n())
                    .set("k", b.verdict.k())
                    .set("attempts", b.attempts_used)
                    .set("window", b.window)
                    .set("phases", phases)
                    .set("weight_table", to_json(b.table))
                    .set("spectrum", to_json(b.spectrum)));
  }
  const auto ev = evaluations(*res.Z, c);
  doc.set("method", "pipeline");
  doc.set("blocks", blocks);
  doc.set("dual_spectrum", to_json(res.dual_spectrum));
  doc.set("cocycle_spectrum", to_json(res.cocycle_spectrum));
  doc.set("partition_function", to_json(*res.Z, ev));
  emit(out, c, doc, text_Z(*res.Z, ev));
  return 0;
}

inline int cmd_weights(const RunConfig& c, std::ostream& out) {
  const CyclicCodeParams p = CyclicCodeParams::make(c.q, c.n);
  if (!nt::pow_fits(p.q, p.k, u64{1} << c.max_field_bits)) fail(Errc::TooLarge, "q^k exceeds the field cap");
  const ThetaParams t = compute_theta(p.n, p.k, p.q);
  const GaussSumEngine engine(p.field, u64{1} << c.max_field_bits);
  const auto exact = exact_phases(engine, p);
  const auto phases = c.epsilon ? oracle_phases(exact, *c.epsilon, c.seed, c.inject_failures, p.field.size()) : exact;
  const double window = certified_window(t, p);
  const WeightTable table = weight_table(p, t, phases, window, c.threads);
  Json ph = Json::array();
  for (const auto& x : phases) ph.push(to_json(x));
  Json doc = Json::object()
                 .set("command", "weights")
                 .set("params", to_json(p))
                 .set("theta", to_json(t))
                 .set("window", window)
                 .set("phases", ph)
                 .set("weight_table", to_json(table))
                 .set("spectrum", to_json(table.spectrum));
  emit(out, c, doc, "spectrum " + to_string(table.spectrum) + "\n");
  return 0;
}

inline int cmd_gauss_sum(const RunConfig& c, std::ostream& out) {
  if (!nt::pow_fits(c.q, c.k, u64{1} << c.max_field_bits)) fail(Errc::TooLarge, "q^k exceeds the field cap");
  const ExtensionField f(c.q, c.k);
  const CharacterSpec spec(f, c.d, c.a, f.from_index(c.beta_index));
  const GaussSum g = gauss_sum_exact(spec, u64{1} << c.max_field_bits);
  Json doc = Json::object()
                 .set("command", "gauss-sum")
                 .set("q", c.q)
                 .set("k", c.k)
                 .set("d", c.d)
                 .set("a", c.a)
                 .set("beta", to_json(spec.beta.coeffs()))
                 .set("magnitude", g.magnitude)
                 .set("phase", g.phase)
                 .set("re", g.value.real())
                 .set("im", g.value.imag())
                 .set("field", to_json(f));
  if (c.epsilon) doc.set("oracle", to_json(gauss_phase_oracle(spec, *c.epsilon, c.seed, c.inject_failures)));
  char buf[96];
  std::snprintf(buf, sizeof buf, "|G|=%.17g phase=%.17g\n", g.magnitude, g.phase);
  emit(out, c, doc, buf);
  return 0;
}

inline int cmd_generate(const RunConfig& c, std::ostream& out) {
  InstanceFamily fam;
  fam.q = c.q;
  fam.epsilon = c.epsilon.value_or(0.5);
  GeneratorCaps caps;
  caps.max_field_size = u64{1} << c.max_field_bits;
  for (const auto& inst : generate_instances(fam, c.limit, caps)) {
    Json row = Json::object()
                   .set("n", inst.n)
                   .set("k", inst.k)
                   .set("m", inst.m)
                   .set("j", inst.j)
                   .set("N", inst.N)
                   .set("theta", inst.theta.theta)
                   .set("epsilon0", inst.theta.epsilon0);
    if (c.format == OutputFormat::Json)
      out << row.dump() << '\n';
    else
      out << "n=" << inst.n << " k=" << inst.k << " N=" << inst.N << " theta=" << inst.theta.theta << '\n';
  }
  return 0;
}

inline int cmd_cosets(const RunConfig& c, std::ostream& out) {
  const CosetPartition p = cyclotomic_cosets(c.N, c.q);
  Json cosets = Json::array();
  std::string text;
  for (const auto& cs : p.cosets) {
    cosets.push(to_json(cs));
    text += "{";
    for (std::size_t i = 0; i < cs.size(); ++i) text += (i ? "," : "") + std::to_string(cs[i]);
    text += "}\n";
  }
  Json doc = Json::object()
                 .set("command", "cosets")
                 .set("N", c.N)
                 .set("q", c.q)
                 .set("count", p.count())
                 .set("formula_count", coset_count_formula(c.N, c.q))
                 .set("representatives", to_json(p.representatives))
                 .set("multiplicities", to_json(p.multiplicities))
                 .set("cosets", cosets);
  emit(out, c, doc, text);
  return 0;
}

}  // namespace detail

/// Executes one command; errors are reported on `err` with exit status 1.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "membership") return detail::cmd_membership(c, out);
    if (c.command == "partition") return detail::cmd_partition(c, out, err);
    if (c.command == "bruteforce") return detail::cmd_bruteforce(c, out);
    if (c.command == "weights") return detail::cmd_weights(c, out);
    if (c.command == "gauss-sum") return detail::cmd_gauss_sum(c, out);
    if (c.command == "generate") return detail::cmd_generate(c, out);
    if (c.command == "cosets") return detail::cmd_cosets(c, out);
    fail(Errc::InvalidArgument, "unknown command '" + c.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace iccc
