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

#ifndef EGAS_KERNEL_HPP
#define EGAS_KERNEL_HPP

#include "egas/absdom.hpp"

#include <map>
#include <string>
#include <vector>

namespace egas {

/// Correctness kernels: the most abstract simplification of a domain that
/// keeps the best correct approximation of every function in a family.
///
/// For a domain A and monotone f, the generator set of the kernel is
///
///   img(f^A)  u  U_{y in img(f^A)} max { x in A | f^A(x) = y }
///
/// and the kernel is its meet closure. On finite lattices every monotone
/// function is continuous, so the kernel always exists.

/// Per-function pieces of the generator set.
struct FunctionRequirement {
  std::string function;
  ElementSet bca_image;
  /// y -> maximal abstract elements mapped to exactly y.
  std::map<ElemId, ElementSet> max_preimages;
};

enum class Verification { Exhaustive, Sampled };

struct KernelResult {
  AbstractDomain kernel;
  /// Union of the per-function generator sets, before closure.
  ElementSet required;
  std::vector<FunctionRequirement> per_function;
  Verification verification = Verification::Exhaustive;
};

/// Generator set, equality form (one max-set per value in img(f^A)).
ElementSet required_set(const AbstractDomain& a, const MonotoneFn& f);

/// Generator set, inequality form: img(f^A) together with
/// max { x in A | f^A(x) <= y } for every y in A. Its meet closure equals
/// the closure of the equality form.
ElementSet required_set_bounded(const AbstractDomain& a, const MonotoneFn& f);

FunctionRequirement requirement(const AbstractDomain& a, const MonotoneFn& f);

/// Computes K_F(A) and re-checks F^K = F^A for every f. A failed re-check
/// throws std::logic_error: it can only mean an implementation bug.
/// Carriers above AbstractDomain::kExhaustiveLimit are re-checked on a
/// deterministic sample and flagged as such.
KernelResult correctness_kernel(const AbstractDomain& a, const FunctionFamily& fs);

/// Most abstract domain by direct enumeration: every meet-closed subset of
/// image(A) holding top whose approximations agree with A, intersected.
/// Refuses images larger than `kOracleLimit`.
inline constexpr std::size_t kOracleLimit = 16;
AbstractDomain kernel_oracle(const AbstractDomain& a, const FunctionFamily& fs);

/// Kernel restricted to disjunctive domains: the generator set is closed
/// under both meets and joins. Requires image(A) to be join-closed (throws
/// SemanticError otherwise). Re-checked like correctness_kernel.
KernelResult disjunctive_kernel(const AbstractDomain& a, const FunctionFamily& fs);

/// Enumeration counterpart of disjunctive_kernel: every meet- and
/// join-closed subset of image(A) whose approximations agree with A,
/// intersected. Same size limit as kernel_oracle.
AbstractDomain disjunctive_kernel_oracle(const AbstractDomain& a, const FunctionFamily& fs);

/// Outcome of the "no most concrete domain" demonstration.
struct MostConcreteReport {
  std::string lattice_text;
  AbstractDomain mu;
  AbstractDomain rho1;
  AbstractDomain rho2;
  AbstractDomain meet;  // abs_glb(rho1, rho2)
  bool rho1_equal = false;
  bool rho2_equal = false;
  bool meet_equal = true;
  /// Carrier element where the refined approximation departs from mu's.
  std::optional<ElemId> witness;
  std::string witness_name;
};

/// Runs the built-in five-element fixture (1 < 2 < {3, 4} < 5 with
/// f = {1:1, 2:1, 3:5, 4:5, 5:5} and mu = {1, 5}) against the refinements
/// rho1 = {1,3,5}, rho2 = {1,4,5}. Both preserve mu's approximation, their
/// glb does not.
MostConcreteReport most_concrete_counterexample();

/// Same demonstration for caller-supplied domains.
MostConcreteReport most_concrete_counterexample(const AbstractDomain& mu,
                                                const AbstractDomain& rho1,
                                                const AbstractDomain& rho2,
                                                const MonotoneFn& f);

}  // namespace egas

#endif  // EGAS_KERNEL_HPP
