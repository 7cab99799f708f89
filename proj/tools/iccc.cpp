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

// Command-line front end. Flags are parsed here; all work happens in
// iccc::run so the tests can drive commands without a subprocess.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "iccc/cli.hpp"

int main(int argc, char** argv) {
  iccc::RunConfig cfg;
  CLI::App app{"Exact Potts partition functions through irreducible cyclic codes"};
  app.require_subcommand(1);

  std::string format = "json";
  double epsilon = 0;
  std::string betas;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "prime number of spin states / field characteristic");
    sub->add_option("--epsilon", epsilon, "phase error budget");
    sub->add_option("--seed", cfg.seed, "oracle seed");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
    sub->add_option("--max-field-bits", cfg.max_field_bits, "cap q^k <= 2^bits");
    sub->add_option("--max-config-bits", cfg.max_config_bits, "cap for exhaustive enumeration");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto physics = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_path, "graph file")->required();
    sub->add_option("--beta", betas, "inverse temperatures, comma separated");
    sub->add_option("--J", cfg.J, "coupling (sign selects ferro/anti-ferro)");
  };

  auto* membership = app.add_subcommand("membership", "test a graph for membership");
  common(membership);
  membership->add_option("--graph", cfg.graph_path, "graph file")->required();

  auto* partition = app.add_subcommand("partition", "partition function through the code pipeline");
  common(partition);
  physics(partition);
  partition->add_flag("--no-fallback", cfg.no_fallback, "exit 2 instead of enumerating when rejected");
  partition->add_flag("--inject-failures", cfg.inject_failures, "let oracle phases fail with probability delta");
  partition->add_option("--attempts", cfg.attempts, "oracle reruns after a rejected run");

  auto* brute = app.add_subcommand("bruteforce", "partition function by enumeration");
  common(brute);
  physics(brute);

  auto* weights = app.add_subcommand("weights", "weights of the [n, ord_q n] irreducible cyclic code");
  common(weights);
  weights->add_option("--n", cfg.n, "code length")->required();
  weights->add_flag("--inject-failures", cfg.inject_failures, "let oracle phases fail with probability delta");

  auto* gauss = app.add_subcommand("gauss-sum", "exact Gauss sum G(chi^a, e_beta) over GF(q^k)");
  common(gauss);
  gauss->add_option("--k", cfg.k, "extension degree");
  gauss->add_option("--d", cfg.d, "character order");
  gauss->add_option("--a", cfg.a, "character index");
  gauss->add_option("--beta-index", cfg.beta_index, "additive parameter as an element index");
  gauss->add_flag("--inject-failures", cfg.inject_failures, "let the oracle phase fail with probability delta");

  auto* generate = app.add_subcommand("generate", "instance generator loop");
  common(generate);
  generate->add_option("--limit", cfg.limit, "maximum number of instances");

  auto* cosets = app.add_subcommand("cosets", "q-cyclotomic cosets of Z/N");
  common(cosets);
  cosets->add_option("--N", cfg.N, "modulus")->required();

  CLI11_PARSE(app, argc, argv);

  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    if (sub->count("--epsilon")) cfg.epsilon = epsilon;
    if (sub->get_option_no_throw("--beta") && sub->count("--beta")) {
      cfg.betas.clear();
      std::size_t start = 0;
      while (start <= betas.size()) {
        const std::size_t comma = betas.find(',', start);
        const std::string item = betas.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) cfg.betas.push_back(std::stod(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  }
  cfg.format = format == "text" ? iccc::OutputFormat::Text : iccc::OutputFormat::Json;
  return iccc::run(cfg, std::cout, std::cerr);
}
