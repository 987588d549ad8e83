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

#ifndef EGAS_REPORT_HPP
#define EGAS_REPORT_HPP

#include "egas/cegar.hpp"
#include "egas/io.hpp"
#include "egas/kernel.hpp"
#include "egas/predabs.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

/// Deterministic text and JSON reports behind the command-line tool. Text
/// ends with a newline; JSON has sorted keys and an
/// {command, inputs, result} top level.
namespace egas::report {

/// A file the report was computed from.
struct Input {
  std::string role;
  std::string path;
  std::string sha256;
};

Input input_of(std::string role, const std::string& path, const std::string& content);

struct Report {
  std::string text;
  std::string json;
  /// Extra documents (name, content), e.g. DOT snapshots.
  std::vector<std::pair<std::string, std::string>> files;
  /// False when the command found its input unusable (lattice-check on a
  /// non-lattice).
  bool ok = true;
};

/// DOT digraph of an abstract system: one node per block in block order,
/// labelled with its states, one arrow per abstract edge. Init blocks are
/// drawn as boxes, error blocks double-circled.
std::string dot_ats(const TransitionSystem& ts, const Partition& p, const std::string& name = "ats");

/// DOT digraph of the Hasse diagram, bottom to top. Elements in
/// `highlight` are filled.
std::string dot_lattice(const Lattice& l, const ElementSet* highlight = nullptr,
                        const std::string& name = "lattice");

Report lattice_check(const Input& in, const LatticeSource& src);

/// Resolves a domain argument: "full", a domain named in the lattice file,
/// or the path of a file of `image` lines (whose input is appended to
/// `inputs`).
AbstractDomain resolve_domain(const LatticeDocument& doc, const std::string& spec,
                              std::vector<Input>& inputs);

Report bca(const std::vector<Input>& inputs, const LatticeDocument& doc, const AbstractDomain& a,
           const std::string& domain_name, const std::vector<std::string>& fns);

struct KernelOptions {
  bool oracle = false;
  bool inequality = false;
  bool disjunctive = false;
};

Report kernel(const std::vector<Input>& inputs, const LatticeDocument& doc, const AbstractDomain& a,
              const std::string& domain_name, const std::vector<std::string>& fns,
              const KernelOptions& opt);

Report partition_kernel(const std::vector<Input>& inputs, const SystemDocument& doc, bool iterate);

Report cegar(const std::vector<Input>& inputs, const SystemDocument& doc, Heuristic h,
             std::optional<std::size_t> max_iters, bool dot);

struct Coro2Options {
  std::size_t max_len = 6;
  /// Random systems instead of (or when no) input file.
  std::size_t random = 0;
  std::size_t states = 10;
  std::size_t blocks = 5;
  double edge_prob = 0.2;
  std::uint64_t seed = 0;
};

Report coro2(const std::vector<Input>& inputs, const SystemDocument* doc, const Coro2Options& opt);

Report predabs(const FooRun& run);

}  // namespace egas::report

#endif  // EGAS_REPORT_HPP
