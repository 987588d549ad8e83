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

#ifndef EGAS_LATTICE_HPP
#define EGAS_LATTICE_HPP

#include "egas/bits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace egas {

using ElemId = std::uint32_t;

/// Set of element ids of one lattice; width equals the lattice size.
using ElementSet = Bits;

/// A finite order given as a dense reachability matrix: `up[x]` holds every
/// y with x <= y. Not necessarily a lattice; see `validate`.
struct Poset {
  std::vector<std::string> names;
  std::vector<Bits> up;

  std::size_t size() const { return names.size(); }

  /// Reflexive-transitive closure of the given (lower, upper) pairs.
  static Poset from_covers(std::vector<std::string> names,
                           const std::vector<std::pair<ElemId, ElemId>>& covers);
};

struct Diagnostics {
  bool ok = true;
  std::string message;
  /// First violating pair, when the failure is pair-specific.
  std::optional<std::pair<ElemId, ElemId>> pair;
};

/// Checks the order axioms, existence of top and bottom, and existence of a
/// unique glb and lub for every pair. Reports the first violation found in
/// id order.
Diagnostics validate(const Poset& p);

/// Explicit finite complete lattice. Two representations share this type:
/// an explicit order matrix over named elements, and the powerset of up to
/// `kMaxAtoms` atoms whose element ids are bitmasks over the atoms.
/// Immutable after construction.
class Lattice {
 public:
  static constexpr std::size_t kMaxAtoms = 20;

  /// Throws SemanticError when `p` is not a lattice.
  static Lattice from_poset(Poset p);
  static Lattice from_covers(std::vector<std::string> names,
                             const std::vector<std::pair<ElemId, ElemId>>& covers);
  /// The subset lattice over `atoms`; element id `m` is the set of atoms
  /// whose bit is set in `m`.
  static Lattice powerset(std::vector<std::string> atoms);

  bool is_powerset() const { return powerset_; }
  std::size_t size() const { return size_; }
  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  std::string name(ElemId x) const;
  std::optional<ElemId> find(std::string_view name) const;

  bool leq(ElemId a, ElemId b) const {
    if (powerset_) return (a & ~b) == 0;
    return up_[a].test(b);
  }
  bool lt(ElemId a, ElemId b) const { return a != b && leq(a, b); }

  ElemId top() const { return top_; }
  ElemId bottom() const { return bottom_; }

  ElemId meet(ElemId a, ElemId b) const;
  ElemId join(ElemId a, ElemId b) const;
  /// glb of the empty set is top.
  ElemId glb(const ElementSet& s) const;
  /// lub of the empty set is bottom.
  ElemId lub(const ElementSet& s) const;

  ElementSet empty_set() const { return ElementSet(size_); }
  ElementSet full_set() const;
  ElementSet set_of(std::initializer_list<ElemId> ids) const;

  /// Smallest superset closed under glb of arbitrary subsets (so it always
  /// contains top).
  ElementSet meet_closure(const ElementSet& x) const;
  /// Dual: closed under lub, always contains bottom.
  ElementSet join_closure(const ElementSet& x) const;

  ElementSet maximal(const ElementSet& s) const;
  ElementSet downset(ElemId y) const;
  ElementSet upset(ElemId y) const;

  /// Covering pairs (lower, upper) of the Hasse diagram, sorted.
  std::vector<std::pair<ElemId, ElemId>> hasse_edges() const;

  /// "{a, b, c}" in id order.
  std::string format(const ElementSet& s) const;

  /// The explicit order view; only for explicit lattices.
  Poset to_poset() const;

 private:
  Lattice() = default;
  void build_tables();

  bool powerset_ = false;
  std::size_t size_ = 0;
  ElemId top_ = 0;
  ElemId bottom_ = 0;

  // explicit representation
  std::vector<std::string> names_;
  std::unordered_map<std::string, ElemId> index_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::size_t> down_count_;
  std::vector<std::size_t> up_count_;
  std::vector<ElemId> meet_tab_;
  std::vector<ElemId> join_tab_;

  // powerset representation
  std::vector<std::string> atoms_;
};

}  // namespace egas

#endif  // EGAS_LATTICE_HPP
