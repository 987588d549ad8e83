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

#ifndef EGAS_IO_HPP
#define EGAS_IO_HPP

#include "egas/absdom.hpp"
#include "egas/ats.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace egas {

/// Lattice files, line based, '#' starts a comment:
///
///   elem <name>
///   cover <lower> <upper>
///   map <fn> <arg> <value>
///   domain <name> <elem>...
///
/// The order is the reflexive-transitive closure of the cover pairs.

/// Syntactic content of a lattice file, before any order checks.
struct LatticeSource {
  Poset poset;
  struct Map {
    std::string function;
    ElemId arg;
    ElemId value;
    std::size_t line;
  };
  struct Domain {
    std::string name;
    std::vector<ElemId> elems;
    std::size_t line;
  };
  std::vector<Map> maps;
  std::vector<Domain> domains;
};

/// Throws ParseError on malformed lines or unknown element names.
LatticeSource parse_lattice_source(std::string_view text);

struct LatticeDocument {
  LatticePtr lattice;
  /// In order of first appearance.
  FunctionFamily functions;
  std::vector<std::pair<std::string, AbstractDomain>> domains;

  /// Throws SemanticError on an unknown name.
  const MonotoneFn& function(const std::string& name) const;
  std::optional<AbstractDomain> domain(const std::string& name) const;
};

/// Throws SemanticError when the order is not a lattice or a map is not a
/// total monotone function.
LatticeDocument build_lattice_document(const LatticeSource& src);
LatticeDocument parse_lattice(std::string_view text);
/// Canonical text: elements in id order, Hasse covers, full function
/// tables, domains. Explicit lattices only.
std::string serialize_lattice(const LatticeDocument& doc);

/// Domain files hold `image <elem>...` lines; the domain is the meet
/// closure of all listed elements.
AbstractDomain parse_domain(std::string_view text, const LatticePtr& lattice);

/// Transition-system files, 0-based state ids:
///
///   states <n>
///   label <id> <name>
///   edge <a> <b>
///   init <id>...
///   error <id>...
///   block <name> <id>...
///
/// Without block lines the partition is discrete.
struct SystemDocument {
  TransitionSystem system;
  Partition partition;
  /// True when the file listed blocks.
  bool explicit_blocks = false;
};

SystemDocument parse_system(std::string_view text);
std::string serialize_system(const SystemDocument& doc);

/// Whole file; throws IoError naming the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace egas

#endif  // EGAS_IO_HPP
