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

#include "egas/predabs.hpp"

#include "egas/error.hpp"

#include <algorithm>

namespace egas {

ProgramSpace::ProgramSpace(std::vector<std::string> variables, unsigned modulus)
    : vars_(std::move(variables)), modulus_(modulus), states_(1) {
  if (modulus_ < 3) throw SemanticError("modulus must be at least 3");
  if (vars_.empty()) throw SemanticError("no variables");
  stride_.assign(vars_.size(), 1);
  for (std::size_t i = vars_.size(); i-- > 0;) {
    stride_[i] = states_;
    states_ *= modulus_;
    if (states_ > kMaxStates)
      throw LimitError("state space exceeds " + std::to_string(kMaxStates) + " states");
  }
}

std::size_t ProgramSpace::var(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw SemanticError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

unsigned ProgramSpace::value(StateId s, std::size_t var) const {
  return static_cast<unsigned>(s / stride_[var] % modulus_);
}

StateId ProgramSpace::with(StateId s, std::size_t var, unsigned v) const {
  auto old = value(s, var);
  return static_cast<StateId>(s - old * stride_[var] + (v % modulus_) * stride_[var]);
}

StateSet ProgramSpace::full_set() const {
  StateSet s(states_);
  s.set();
  return s;
}

std::string ProgramSpace::format(StateId s) const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ",";
    out += vars_[i] + "=" + std::to_string(value(s, i));
  }
  return out;
}

namespace {

template <typename Fn>
std::vector<StateSet> deterministic(const ProgramSpace& sp, Fn next) {
  std::vector<StateSet> succ(sp.state_count(), sp.empty_set());
  for (StateId s = 0; s < sp.state_count(); ++s) succ[s].set(next(s));
  return succ;
}

}  // namespace

Statement Statement::skip(const ProgramSpace& sp) {
  return Statement("skip", deterministic(sp, [](StateId s) { return s; }));
}

Statement Statement::assign(const ProgramSpace& sp, const std::string& target,
                            const std::string& source) {
  auto t = sp.var(target), u = sp.var(source);
  return Statement(target + ":=" + source,
                   deterministic(sp, [&](StateId s) { return sp.with(s, t, sp.value(s, u)); }));
}

Statement Statement::assign_const(const ProgramSpace& sp, const std::string& target, unsigned c) {
  auto t = sp.var(target);
  return Statement(target + ":=" + std::to_string(c),
                   deterministic(sp, [&](StateId s) { return sp.with(s, t, c); }));
}

Statement Statement::increment(const ProgramSpace& sp, const std::string& var) {
  auto t = sp.var(var);
  return Statement(var + "++",
                   deterministic(sp, [&](StateId s) { return sp.with(s, t, sp.value(s, t) + 1); }));
}

Statement Statement::seq(std::string name, const Statement& a, const Statement& b) {
  std::vector<StateSet> succ;
  succ.reserve(a.succ_.size());
  for (const auto& row : a.succ_) succ.push_back(b.post(row));
  return Statement(std::move(name), std::move(succ));
}

Statement Statement::choice(std::string name, const Statement& a, const Statement& b) {
  std::vector<StateSet> succ;
  succ.reserve(a.succ_.size());
  for (std::size_t s = 0; s < a.succ_.size(); ++s) succ.push_back(a.succ_[s] | b.succ_[s]);
  return Statement(std::move(name), std::move(succ));
}

StateSet Statement::post(const StateSet& s) const {
  StateSet out(succ_.size());
  for_each_member(s, [&](std::size_t x) { out |= succ_[x]; });
  return out;
}

Predicate var_equals(const ProgramSpace& sp, const std::string& var, unsigned c) {
  auto v = sp.var(var);
  Predicate p{var + "=" + std::to_string(c), sp.empty_set()};
  for (StateId s = 0; s < sp.state_count(); ++s)
    if (sp.value(s, v) == c % sp.modulus()) p.holds.set(s);
  return p;
}

Predicate vars_equal(const ProgramSpace& sp, const std::string& a, const std::string& b) {
  auto u = sp.var(a), v = sp.var(b);
  Predicate p{a + "=" + b, sp.empty_set()};
  for (StateId s = 0; s < sp.state_count(); ++s)
    if (sp.value(s, u) == sp.value(s, v)) p.holds.set(s);
  return p;
}

BooleanAbstraction::BooleanAbstraction(const ProgramSpace& sp, std::vector<Predicate> preds)
    : space_(&sp), preds_(std::move(preds)) {
  if (preds_.empty()) throw SemanticError("no predicates");
  if (preds_.size() > kMaxPredicates)
    throw LimitError("Boolean abstraction is limited to " + std::to_string(kMaxPredicates) +
                     " predicates");
  const auto n = preds_.size();
  eval_.resize(sp.state_count());
  for (StateId s = 0; s < sp.state_count(); ++s) {
    BoolVec v = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (preds_[i].holds.test(s)) v |= BoolVec{1} << (n - 1 - i);
    eval_[s] = v;
  }
  std::vector<std::string> atoms;
  for (BoolVec v = 0; v < vector_count(); ++v) {
    std::string bits;
    for (std::size_t i = 0; i < n; ++i) bits += (v >> (n - 1 - i) & 1u) ? '1' : '0';
    atoms.push_back(std::move(bits));
  }
  lattice_ = std::make_shared<const Lattice>(Lattice::powerset(std::move(atoms)));
}

BoolSet BooleanAbstraction::alpha(const StateSet& s) const {
  BoolSet out = 0;
  for_each_member(s, [&](std::size_t x) { out |= BoolSet{1} << eval_[x]; });
  return out;
}

StateSet BooleanAbstraction::gamma(BoolSet v) const {
  auto out = space_->empty_set();
  for (StateId s = 0; s < eval_.size(); ++s)
    if (v >> eval_[s] & 1u) out.set(s);
  return out;
}

BoolTable BooleanAbstraction::post_table(const Statement& stmt) const {
  BoolTable t(vector_count());
  for (BoolVec v = 0; v < vector_count(); ++v) t[v] = alpha(stmt.post(gamma(BoolSet{1} << v)));
  return t;
}

BoolSet BooleanAbstraction::apply(const BoolTable& t, BoolSet v) {
  BoolSet out = 0;
  for (BoolVec i = 0; i < t.size(); ++i)
    if (v >> i & 1u) out |= t[i];
  return out;
}

MonotoneFn BooleanAbstraction::lift(const BoolTable& t, std::string name) const {
  std::vector<ElemId> table(lattice_->size());
  for (BoolSet v = 0; v < table.size(); ++v) table[v] = apply(t, v);
  return MonotoneFn(lattice_, std::move(name), std::move(table));
}

std::string BooleanAbstraction::format_vec(BoolVec v) const {
  const auto n = preds_.size();
  std::string out = "<";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ",";
    out += (v >> (n - 1 - i) & 1u) ? '1' : '0';
  }
  return out + ">";
}

std::string BooleanAbstraction::format_set(BoolSet v) const {
  std::string out = "{";
  bool first = true;
  for (BoolVec i = 0; i < vector_count(); ++i) {
    if (!(v >> i & 1u)) continue;
    if (!first) out += ", ";
    out += format_vec(i);
    first = false;
  }
  return out + "}";
}

namespace {

FunctionFamily lifted(const BooleanAbstraction& b, const std::vector<Statement>& stmts) {
  FunctionFamily fs;
  for (const auto& s : stmts) fs.push_back(b.lift(b.post_table(s), s.name()));
  return fs;
}

}  // namespace

KernelResult boolean_kernel(const BooleanAbstraction& b, const std::vector<Statement>& stmts) {
  return disjunctive_kernel(AbstractDomain::identity(b.lattice()), lifted(b, stmts));
}

KernelResult boolean_uco_kernel(const BooleanAbstraction& b, const std::vector<Statement>& stmts) {
  return correctness_kernel(AbstractDomain::identity(b.lattice()), lifted(b, stmts));
}

CartesianElem CartesianElem::of(BoolVec v, std::size_t n) {
  CartesianElem e{false, std::string(n, '0')};
  for (std::size_t i = 0; i < n; ++i)
    if (v >> (n - 1 - i) & 1u) e.values[i] = '1';
  return e;
}

CartesianElem cart_join(const CartesianElem& a, const CartesianElem& b) {
  if (a.bottom) return b;
  if (b.bottom) return a;
  CartesianElem out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    if (a.values[i] != b.values[i]) out.values[i] = '*';
  return out;
}

CartesianElem cart_meet(const CartesianElem& a, const CartesianElem& b) {
  if (a.bottom || b.bottom) return CartesianElem::bot();
  CartesianElem out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (a.values[i] == '*') {
      out.values[i] = b.values[i];
    } else if (b.values[i] != '*' && b.values[i] != a.values[i]) {
      return CartesianElem::bot();
    }
  }
  return out;
}

bool cart_leq(const CartesianElem& a, const CartesianElem& b) {
  if (a.bottom) return true;
  if (b.bottom) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (b.values[i] != '*' && a.values[i] != b.values[i]) return false;
  return true;
}

std::vector<CartesianElem> cart_elements(std::size_t n) {
  std::vector<CartesianElem> out{CartesianElem::bot()};
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= 3;
  for (std::size_t k = 0; k < count; ++k) {
    CartesianElem e{false, std::string(n, '0')};
    auto r = k;
    for (std::size_t i = n; i-- > 0;) {
      e.values[i] = "01*"[r % 3];
      r /= 3;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string format_cart(const CartesianElem& e) {
  if (e.bottom) return "bot";
  std::string out = "<";
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    if (i) out += ",";
    out += e.values[i];
  }
  return out + ">";
}

StateSet CartesianAbstraction::gamma(const CartesianElem& e) const {
  auto out = b_->space().empty_set();
  if (e.bottom) return out;
  const auto n = b_->predicate_count();
  for (StateId s = 0; s < out.size(); ++s)
    if (cart_leq(CartesianElem::of(b_->eval(s), n), e)) out.set(s);
  return out;
}

CartesianElem CartesianAbstraction::alpha(const StateSet& s) const {
  auto out = CartesianElem::bot();
  BoolSet seen = b_->alpha(s);
  for (BoolVec v = 0; v < b_->vector_count(); ++v)
    if (seen >> v & 1u) out = cart_join(out, CartesianElem::of(v, b_->predicate_count()));
  return out;
}

CartesianElem CartesianAbstraction::post(const Statement& stmt, const CartesianElem& e) const {
  return alpha(stmt.post(gamma(e)));
}

FooProgram foo_program(unsigned modulus) {
  ProgramSpace sp({"x", "y", "z", "w"}, modulus);
  auto s1 = Statement::seq("z:=0; x:=y", Statement::assign_const(sp, "z", 0),
                           Statement::assign(sp, "x", "y"));
  auto s2 = Statement::seq("x++; z:=1", Statement::increment(sp, "x"),
                           Statement::assign_const(sp, "z", 1));
  auto branch = Statement::choice("if (w) { x++; z:=1 }", s2, Statement::skip(sp));
  std::vector<Predicate> preds{var_equals(sp, "z", 0), vars_equal(sp, "x", "y")};
  return FooProgram{std::move(sp), std::move(s1), std::move(s2), std::move(branch),
                    std::move(preds)};
}

const char* to_string(Abstraction a) {
  switch (a) {
    case Abstraction::Boolean:
      return "boolean";
    case Abstraction::Kernel:
      return "kernel";
    case Abstraction::UcoKernel:
      return "uco-kernel";
    case Abstraction::Cartesian:
      return "cartesian";
  }
  return "?";
}

const char* to_string(Reachability r) {
  return r == Reachability::Unreachable ? "UNREACHABLE" : "INCONCLUSIVE";
}

std::optional<Abstraction> parse_abstraction(const std::string& s) {
  for (auto a : {Abstraction::Boolean, Abstraction::Kernel, Abstraction::UcoKernel,
                 Abstraction::Cartesian})
    if (s == to_string(a)) return a;
  return std::nullopt;
}

FooRun foo_verification(Abstraction a, unsigned modulus) {
  auto prog = foo_program(modulus);
  BooleanAbstraction b(prog.space, prog.predicates);
  FooRun run;
  run.abstraction = a;
  run.modulus = modulus;
  run.s1_table = b.post_table(prog.s1);
  run.s2_table = b.post_table(prog.s2);
  // valuations with p1 resp. p2 set
  BoolSet p1 = 0, p2 = 0;
  for (BoolVec v = 0; v < b.vector_count(); ++v) {
    if (v & 2u) p1 |= BoolSet{1} << v;
    if (v & 1u) p2 |= BoolSet{1} << v;
  }

  if (a == Abstraction::Cartesian) {
    CartesianAbstraction c(b);
    const auto n = b.predicate_count();
    for (const auto& e : cart_elements(n)) {
      run.s1_cartesian.emplace_back(e, c.post(prog.s1, e));
      run.s2_cartesian.emplace_back(e, c.post(prog.s2, e));
    }
    auto top = CartesianElem::top(n);
    auto step = [&](const CartesianElem& x) {
      auto after_s1 = c.post(prog.s1, cart_join(top, x));
      return cart_join(after_s1, c.post(prog.s2, after_s1));
    };
    std::vector<CartesianElem> trace;
    auto lfp = kleene_lfp(step, CartesianElem::bot(), cart_join, &trace);
    for (const auto& t : trace) run.iterates.push_back(format_cart(t));
    auto guard = CartesianElem{false, "*1"};
    auto exit = cart_meet(lfp, guard);
    run.lfp = format_cart(lfp);
    run.exit = format_cart(exit);
    run.verdict = exit.bottom || exit.values[0] == '1' ? Reachability::Unreachable
                                                       : Reachability::Inconclusive;
    return run;
  }

  std::optional<AbstractDomain> k;
  if (a == Abstraction::Kernel) run.kernel = boolean_kernel(b, {prog.s1, prog.s2});
  if (a == Abstraction::UcoKernel) run.kernel = boolean_uco_kernel(b, {prog.s1, prog.s2});
  if (run.kernel) k = run.kernel->kernel;
  auto mu = [&](BoolSet v) { return k ? static_cast<BoolSet>(k->apply(v)) : v; };
  auto post = [&](const BoolTable& t, BoolSet v) { return mu(BooleanAbstraction::apply(t, mu(v))); };
  auto join = [&](BoolSet x, BoolSet y) { return mu(x | y); };

  const BoolSet top = b.full();
  auto step = [&](BoolSet x) {
    auto after_s1 = post(run.s1_table, join(top, x));
    return join(after_s1, post(run.s2_table, after_s1));
  };
  std::vector<BoolSet> trace;
  auto lfp = kleene_lfp(step, mu(0), join, &trace);
  for (auto t : trace) run.iterates.push_back(b.format_set(t));
  auto exit = lfp & mu(p2);
  run.lfp = b.format_set(lfp);
  run.exit = b.format_set(exit);
  run.verdict = (exit & ~p1) == 0 ? Reachability::Unreachable : Reachability::Inconclusive;
  return run;
}

}  // namespace egas
