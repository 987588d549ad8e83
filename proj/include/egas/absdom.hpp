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

#ifndef EGAS_ABSDOM_HPP
#define EGAS_ABSDOM_HPP

#include "egas/lattice.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace egas {

using LatticePtr = std::shared_ptr<const Lattice>;

/// Total monotone function on a lattice, stored as a table indexed by
/// element id.
class MonotoneFn {
 public:
  /// Throws SemanticError if the table is partial, out of range, or not
  /// monotone.
  MonotoneFn(LatticePtr carrier, std::string name, std::vector<ElemId> table);

  /// Identity on `carrier`.
  static MonotoneFn identity(LatticePtr carrier);
  /// Constant function.
  static MonotoneFn constant(LatticePtr carrier, ElemId value, std::string name = "const");

  const std::string& name() const { return name_; }
  const Lattice& carrier() const { return *carrier_; }
  const LatticePtr& carrier_ptr() const { return carrier_; }
  const std::vector<ElemId>& table() const { return table_; }
  ElemId operator()(ElemId x) const { return table_[x]; }

  friend bool operator==(const MonotoneFn& a, const MonotoneFn& b) {
    return a.table_ == b.table_;
  }

 private:
  struct Unchecked {};
  MonotoneFn(Unchecked, LatticePtr carrier, std::string name, std::vector<ElemId> table)
      : carrier_(std::move(carrier)), name_(std::move(name)), table_(std::move(table)) {}
  friend class AbstractDomain;

  LatticePtr carrier_;
  std::string name_;
  std::vector<ElemId> table_;
};

using FunctionFamily = std::vector<MonotoneFn>;

/// Best correct approximation restricted to the abstract elements: one
/// (a, mu(f(a))) entry per image element, in id order.
struct BcaTable {
  std::string function;
  std::vector<std::pair<ElemId, ElemId>> entries;

  ElementSet image(std::size_t width) const;
  std::optional<ElemId> at(ElemId a) const;
};

struct BcaComparison {
  bool equal = true;
  /// True when every carrier element was compared.
  bool exhaustive = true;
  /// Least carrier element on which the two approximations differ.
  std::optional<ElemId> witness;
};

/// Abstract domain as an upper closure operator on a carrier lattice,
/// represented by its meet-closed image.
class AbstractDomain {
 public:
  /// Carriers up to this size are compared exhaustively by `bca_equal`.
  static constexpr std::size_t kExhaustiveLimit = std::size_t{1} << 12;

  /// Image becomes Cl_meet(x + top).
  static AbstractDomain from_image(LatticePtr carrier, const ElementSet& x);
  /// The identity closure: every carrier element is abstract.
  static AbstractDomain identity(LatticePtr carrier);

  const Lattice& carrier() const { return *carrier_; }
  const LatticePtr& carrier_ptr() const { return carrier_; }
  const ElementSet& image() const { return image_; }
  const std::vector<ElemId>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(ElemId c) const { return image_.test(c); }

  /// mu(c): least image element above c.
  ElemId apply(ElemId c) const;

  BcaTable bca(const MonotoneFn& f) const;
  /// mu . f . mu on the whole carrier.
  MonotoneFn bca_extended(const MonotoneFn& f) const;

  friend bool operator==(const AbstractDomain& a, const AbstractDomain& b) {
    return a.image_ == b.image_;
  }

 private:
  AbstractDomain(LatticePtr carrier, ElementSet image);

  LatticePtr carrier_;
  ElementSet image_;
  std::vector<ElemId> elements_;
};

/// Compares mu_A . f . mu_A with mu_B . f . mu_B. Carriers within
/// `kExhaustiveLimit` are checked on every element; larger carriers on the
/// images of both domains plus `sample`.
BcaComparison bca_compare(const AbstractDomain& a, const AbstractDomain& b, const MonotoneFn& f,
                          const std::vector<ElemId>& sample = {});

inline bool bca_equal(const AbstractDomain& a, const AbstractDomain& b, const MonotoneFn& f,
                      const std::vector<ElemId>& sample = {}) {
  return bca_compare(a, b, f, sample).equal;
}

/// A is at least as precise as B: image(B) is contained in image(A).
bool precision_leq(const AbstractDomain& a, const AbstractDomain& b);

/// Most concrete common abstraction: image intersection. The list must be
/// nonempty and share one carrier.
AbstractDomain abs_lub(const std::vector<AbstractDomain>& ds);
/// Most abstract common refinement: meet closure of the image union.
AbstractDomain abs_glb(const std::vector<AbstractDomain>& ds);

}  // namespace egas

#endif  // EGAS_ABSDOM_HPP
