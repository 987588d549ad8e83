//  Copyright 2026 The egas Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// egas: command-line front end over the C library.
//
// Exit status: 0 the analysis ran (whatever its verdict), 2 usage error,
// 3 I/O error, 4 invalid input (parse error, not a lattice, size limit),
// 1 internal failure.

#include "egas/egas.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

enum Exit { kRan = 0, kInternal = 1, kUsage = 2, kIo = 3, kInput = 4 };

int exit_for(egas_status s) {
  switch (s) {
    case EGAS_OK:
      return kRan;
    case EGAS_ERR_ARGUMENT:
      return kUsage;
    case EGAS_ERR_IO:
      return kIo;
    case EGAS_ERR_PARSE:
    case EGAS_ERR_SEMANTIC:
    case EGAS_ERR_LIMIT:
      return kInput;
    case EGAS_ERR_INTERNAL:
      break;
  }
  return kInternal;
}

int finish(egas_status s, char** out) {
  if (s != EGAS_OK) {
    std::fprintf(stderr, "egas: %s error: %s\n", egas_status_name(s), egas_last_error());
    return exit_for(s);
  }
  std::fputs(*out, stdout);
  egas_string_free(*out);
  return kRan;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

struct Common {
  bool json = false;
  std::string dot_dir;

  egas_report_options options() const {
    return {json ? 1 : 0, dot_dir.empty() ? nullptr : dot_dir.c_str()};
  }
};

void add_common(CLI::App* cmd, Common& c, bool dot) {
  cmd->add_flag("--json", c.json, "Print a JSON document instead of text");
  if (dot) cmd->add_option("--dot-dir", c.dot_dir, "Write DOT documents into this directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correctness kernels of abstract interpretations"};
  app.set_version_flag("--version", egas_version());
  app.require_subcommand(1);

  std::string lattice_path, system_path, domain = "full";
  std::vector<std::string> fns;

  Common lc;
  auto* lattice_check = app.add_subcommand("lattice-check", "Validate a lattice file");
  lattice_check->add_option("lattice,--lattice", lattice_path, "Lattice file")->required();
  add_common(lattice_check, lc, true);

  Common bc;
  auto* bca = app.add_subcommand("bca", "Best correct approximation tables");
  bca->add_option("--lattice", lattice_path, "Lattice file")->required();
  bca->add_option("--domain", domain, "full, a domain named in the lattice file, or an image file");
  bca->add_option("--fn", fns, "Function name")->required();
  add_common(bca, bc, false);

  Common kc;
  bool oracle = false, inequality = false, disjunctive = false;
  auto* kernel = app.add_subcommand("kernel", "Correctness kernel of a domain");
  kernel->add_option("--lattice", lattice_path, "Lattice file")->required();
  kernel->add_option("--domain", domain, "full, a domain named in the lattice file, or an image file");
  kernel->add_option("--fn", fns, "Function name")->required();
  kernel->add_flag("--oracle", oracle, "Cross-check against exhaustive enumeration");
  kernel->add_flag("--inequality", inequality, "Also report the inequality-form required sets");
  kernel->add_flag("--disjunctive", disjunctive, "Close the kernel under joins as well");
  add_common(kernel, kc, true);

  Common pc;
  bool iterate = false;
  auto* pkernel = app.add_subcommand("partition-kernel", "Merge blocks of a partition abstraction");
  pkernel->add_option("system,--system", system_path, "System file")->required();
  pkernel->add_flag("--iterate", iterate,
                    "Re-apply to its own output until fixpoint (each stage relative to the previous)");
  add_common(pkernel, pc, true);

  Common cc;
  std::string heuristic = "basic";
  long long max_iters = -1;
  auto* cegar = app.add_subcommand("cegar", "Counterexample-guided refinement");
  cegar->add_option("system,--system", system_path, "System file")->required();
  cegar->add_option("--heuristic", heuristic, "Refinement heuristic")
      ->check(CLI::IsMember({"basic", "egas"}));
  cegar->add_option("--max-iters", max_iters, "Refinement budget")->check(CLI::NonNegativeNumber);
  add_common(cegar, cc, true);

  Common rc;
  egas_coro2_options co{6, 0, 10, 5, 0.2, 0};
  auto* coro2 = app.add_subcommand("coro2-check", "Spurious-path preimage property of the kernel");
  coro2->add_option("system,--system", system_path, "System file");
  coro2->add_option("--random", co.random, "Number of random systems");
  coro2->add_option("--seed", co.seed, "Random seed");
  coro2->add_option("--states", co.states, "States per random system")->check(CLI::Range(1, 12));
  coro2->add_option("--blocks", co.blocks, "Blocks per random system")->check(CLI::Range(1, 12));
  coro2->add_option("--edge-prob", co.edge_prob, "Edge probability")->check(CLI::Range(0.0, 1.0));
  coro2->add_option("--max-len", co.max_len, "Longest path")->check(CLI::Range(1, 6));
  add_common(coro2, rc, false);

  Common ac;
  std::string fixture = "foo", abstraction = "boolean";
  unsigned modulus = 4;
  auto* predabs = app.add_subcommand("predabs", "Predicate abstraction of a fixture program");
  predabs->add_option("--fixture", fixture, "Program")->check(CLI::IsMember({"foo"}));
  predabs->add_option("--abstraction", abstraction, "Abstract domain")
      ->check(CLI::IsMember({"boolean", "kernel", "uco-kernel", "cartesian"}));
  predabs->add_option("--modulus", modulus, "Variables range over Z mod N")
      ->check(CLI::Range(3u, 4096u));
  add_common(predabs, ac, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc_ = app.exit(e);
    return rc_ == 0 ? kRan : kUsage;
  }

  char* out = nullptr;
  if (*lattice_check) {
    int valid = 0;
    auto o = lc.options();
    auto s = egas_report_lattice_check(lattice_path.c_str(), &o, &out, &valid);
    int code = finish(s, &out);
    return code == kRan && !valid ? kInput : code;
  }
  if (*bca) {
    auto names = c_strings(fns);
    auto o = bc.options();
    return finish(egas_report_bca(lattice_path.c_str(), domain.c_str(), names.data(), names.size(),
                                  &o, &out),
                  &out);
  }
  if (*kernel) {
    auto names = c_strings(fns);
    unsigned flags = (oracle ? unsigned{EGAS_KERNEL_ORACLE} : 0u) | (inequality ? unsigned{EGAS_KERNEL_INEQUALITY} : 0u) |
                     (disjunctive ? unsigned{EGAS_KERNEL_DISJUNCTIVE} : 0u);
    auto o = kc.options();
    return finish(egas_report_kernel(lattice_path.c_str(), domain.c_str(), names.data(),
                                     names.size(), flags, &o, &out),
                  &out);
  }
  if (*pkernel) {
    auto o = pc.options();
    return finish(egas_report_partition_kernel(system_path.c_str(), iterate ? 1 : 0, &o, &out), &out);
  }
  if (*cegar) {
    auto o = cc.options();
    return finish(egas_report_cegar(system_path.c_str(), heuristic.c_str(), max_iters, &o, &out),
                  &out);
  }
  if (*coro2) {
    if (system_path.empty() && co.random == 0) {
      std::fprintf(stderr, "egas: coro2-check needs a system file or --random N\n");
      return kUsage;
    }
    auto o = rc.options();
    return finish(egas_report_coro2(system_path.empty() ? nullptr : system_path.c_str(), &co, &o,
                                    &out),
                  &out);
  }
  auto o = ac.options();
  return finish(egas_report_predabs(fixture.c_str(), abstraction.c_str(), modulus, &o, &out), &out);
}
