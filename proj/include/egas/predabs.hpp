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

#ifndef EGAS_PREDABS_HPP
#define EGAS_PREDABS_HPP

#include "egas/ats.hpp"
#include "egas/kernel.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace egas {

/// Program states: total maps from variables to Z mod N. State ids encode
/// the values in base N, first variable most significant.
class ProgramSpace {
 public:
  static constexpr std::size_t kMaxStates = 4096;

  /// Throws SemanticError when N < 3, LimitError above kMaxStates states.
  ProgramSpace(std::vector<std::string> variables, unsigned modulus);

  std::size_t variable_count() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  unsigned modulus() const { return modulus_; }
  std::size_t state_count() const { return states_; }
  /// Index of a variable; throws SemanticError when unknown.
  std::size_t var(const std::string& name) const;

  unsigned value(StateId s, std::size_t var) const;
  StateId with(StateId s, std::size_t var, unsigned v) const;

  StateSet empty_set() const { return StateSet(states_); }
  StateSet full_set() const;
  /// "x=1,y=0,..."
  std::string format(StateId s) const;

 private:
  std::vector<std::string> vars_;
  unsigned modulus_;
  std::size_t states_;
  std::vector<std::size_t> stride_;
};

/// Total, possibly nondeterministic state transformer.
class Statement {
 public:
  static Statement skip(const ProgramSpace& sp);
  /// target := source
  static Statement assign(const ProgramSpace& sp, const std::string& target,
                          const std::string& source);
  /// target := c mod N
  static Statement assign_const(const ProgramSpace& sp, const std::string& target, unsigned c);
  /// var := var + 1 mod N
  static Statement increment(const ProgramSpace& sp, const std::string& var);
  /// a; b
  static Statement seq(std::string name, const Statement& a, const Statement& b);
  /// a [] b
  static Statement choice(std::string name, const Statement& a, const Statement& b);

  const std::string& name() const { return name_; }
  const StateSet& successors(StateId s) const { return succ_[s]; }
  StateSet post(const StateSet& s) const;

 private:
  Statement(std::string name, std::vector<StateSet> succ)
      : name_(std::move(name)), succ_(std::move(succ)) {}

  std::string name_;
  std::vector<StateSet> succ_;
};

struct Predicate {
  std::string name;
  StateSet holds;
};

Predicate var_equals(const ProgramSpace& sp, const std::string& var, unsigned c);
Predicate vars_equal(const ProgramSpace& sp, const std::string& a, const std::string& b);

/// Valuation of n predicates; p1 is the most significant bit, so "<1,0>"
/// is the value 2.
using BoolVec = std::uint32_t;
/// Set of valuations as a bit mask indexed by BoolVec. It doubles as the
/// element id in the powerset lattice returned by `lattice()`.
using BoolSet = std::uint32_t;

/// Best correct approximation of post, one entry per valuation.
using BoolTable = std::vector<BoolSet>;

class BooleanAbstraction {
 public:
  static constexpr std::size_t kMaxPredicates = 4;

  /// Throws LimitError above kMaxPredicates predicates.
  BooleanAbstraction(const ProgramSpace& sp, std::vector<Predicate> preds);

  const ProgramSpace& space() const { return *space_; }
  const std::vector<Predicate>& predicates() const { return preds_; }
  std::size_t predicate_count() const { return preds_.size(); }
  std::size_t vector_count() const { return std::size_t{1} << preds_.size(); }
  BoolSet full() const { return static_cast<BoolSet>((std::uint64_t{1} << vector_count()) - 1); }

  BoolVec eval(StateId s) const { return eval_[s]; }
  BoolSet alpha(const StateSet& s) const;
  StateSet gamma(BoolSet v) const;

  /// alpha . post . gamma on each singleton.
  BoolTable post_table(const Statement& stmt) const;
  /// Additive extension of a table.
  static BoolSet apply(const BoolTable& t, BoolSet v);

  /// wp({0,1}^n); element ids are BoolSets.
  const LatticePtr& lattice() const { return lattice_; }
  MonotoneFn lift(const BoolTable& t, std::string name) const;

  /// "<1,0>"
  std::string format_vec(BoolVec v) const;
  /// "{<0,0>, <1,1>}"
  std::string format_set(BoolSet v) const;

 private:
  const ProgramSpace* space_;
  std::vector<Predicate> preds_;
  std::vector<BoolVec> eval_;
  LatticePtr lattice_;
};

/// Kernel of the whole Boolean abstraction for the given statements,
/// restricted to disjunctive domains (closed under unions and
/// intersections).
KernelResult boolean_kernel(const BooleanAbstraction& b, const std::vector<Statement>& stmts);
/// Same, over all upper closures of the Boolean lattice.
KernelResult boolean_uco_kernel(const BooleanAbstraction& b, const std::vector<Statement>& stmts);

/// Element of {0,1,*}^n or the bottom element.
struct CartesianElem {
  bool bottom = true;
  /// '0', '1' or '*', p1 first.
  std::string values;

  static CartesianElem bot() { return {}; }
  static CartesianElem top(std::size_t n) { return {false, std::string(n, '*')}; }
  static CartesianElem of(BoolVec v, std::size_t n);

  friend bool operator==(const CartesianElem&, const CartesianElem&) = default;
};

CartesianElem cart_join(const CartesianElem& a, const CartesianElem& b);
/// Componentwise meet; a 0/1 clash gives bottom.
CartesianElem cart_meet(const CartesianElem& a, const CartesianElem& b);
bool cart_leq(const CartesianElem& a, const CartesianElem& b);
/// Every element, bottom first, then {0,1,*}^n in lexicographic order of
/// "01*".
std::vector<CartesianElem> cart_elements(std::size_t n);
/// "<*,1>" or "bot"
std::string format_cart(const CartesianElem& e);

class CartesianAbstraction {
 public:
  explicit CartesianAbstraction(const BooleanAbstraction& b) : b_(&b) {}

  std::size_t predicate_count() const { return b_->predicate_count(); }
  StateSet gamma(const CartesianElem& e) const;
  CartesianElem alpha(const StateSet& s) const;
  /// alpha . post . gamma
  CartesianElem post(const Statement& stmt, const CartesianElem& e) const;

 private:
  const BooleanAbstraction* b_;
};

/// Least fixpoint above `seed` of x |-> join(x, step(x)).
template <typename T, typename Step, typename Join>
T kleene_lfp(Step step, T seed, Join join, std::vector<T>* trace = nullptr) {
  T x = std::move(seed);
  for (;;) {
    if (trace) trace->push_back(x);
    T next = join(x, step(x));
    if (next == x) return x;
    x = std::move(next);
  }
}

/// The example program over x, y, z, w:
///
///   do { z := 0; x := y; if (w) { x++; z := 1; } } while (x != y);
///   if (z) reach (*);
///
/// with predicates p1 = (z = 0) and p2 = (x = y). Guards are ignored, so
/// the branch is a choice with skip.
struct FooProgram {
  ProgramSpace space;
  Statement s1;      // z := 0; x := y
  Statement s2;      // x++; z := 1
  Statement branch;  // s2 [] skip
  std::vector<Predicate> predicates;
};

FooProgram foo_program(unsigned modulus = 4);

enum class Abstraction { Boolean, Kernel, UcoKernel, Cartesian };
enum class Reachability { Unreachable, Inconclusive };

const char* to_string(Abstraction a);
const char* to_string(Reachability r);
/// Parses "boolean", "kernel", "uco-kernel", "cartesian".
std::optional<Abstraction> parse_abstraction(const std::string& s);

struct FooRun {
  Abstraction abstraction = Abstraction::Boolean;
  unsigned modulus = 4;
  BoolTable s1_table;
  BoolTable s2_table;
  /// Kernel modes only.
  std::optional<KernelResult> kernel;
  /// Loop iterates, rendered, seed first.
  std::vector<std::string> iterates;
  std::string lfp;
  /// lfp restricted to p2.
  std::string exit;
  Reachability verdict = Reachability::Inconclusive;
  /// Cartesian mode only: the approximations of s1 and s2 on every element.
  std::vector<std::pair<CartesianElem, CartesianElem>> s1_cartesian;
  std::vector<std::pair<CartesianElem, CartesianElem>> s2_cartesian;
};

FooRun foo_verification(Abstraction a, unsigned modulus = 4);

}  // namespace egas

#endif  // EGAS_PREDABS_HPP
