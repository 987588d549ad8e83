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

#include "egas/error.hpp"
#include "egas/predabs.hpp"

#include <doctest.h>

using namespace egas;

TEST_CASE("program space encoding") {
  ProgramSpace sp({"x", "y"}, 3);
  CHECK(sp.state_count() == 9);
  auto s = sp.with(sp.with(0, sp.var("x"), 2), sp.var("y"), 1);
  CHECK(s == 7);
  CHECK(sp.value(s, 0) == 2);
  CHECK(sp.format(s) == "x=2,y=1");
  CHECK_THROWS_AS(ProgramSpace({"x"}, 2), SemanticError);
  CHECK_THROWS_AS(ProgramSpace({"a", "b", "c", "d", "e", "f", "g"}, 4), LimitError);
  CHECK_THROWS_AS(sp.var("q"), SemanticError);
}

TEST_CASE("statements") {
  ProgramSpace sp({"x", "y"}, 3);
  auto inc = Statement::increment(sp, "x");
  CHECK(inc.successors(sp.with(0, 0, 2)).count() == 1);
  CHECK(inc.successors(sp.with(0, 0, 2)).test(0));
  auto asg = Statement::assign(sp, "x", "y");
  auto both = Statement::choice("c", inc, asg);
  CHECK(both.successors(sp.with(0, 1, 1)).count() == 1);
  CHECK(both.successors(0).count() == 2);
  auto seq = Statement::seq("s", Statement::assign_const(sp, "x", 5), inc);
  CHECK(sp.value(static_cast<StateId>(seq.successors(0).find_first()), 0) == 0);
}

TEST_CASE("boolean abstraction") {
  auto fp = foo_program(4);
  BooleanAbstraction b(fp.space, fp.predicates);
  CHECK(b.vector_count() == 4);
  CHECK(b.format_vec(2) == "<1,0>");
  CHECK(b.format_set(0b1001) == "{<0,0>, <1,1>}");
  CHECK(b.alpha(b.gamma(b.full())) == b.full());
  for (BoolSet v = 0; v <= b.full(); ++v) CHECK((b.alpha(b.gamma(v)) & ~v) == 0);
  auto t = b.post_table(fp.s1);
  CHECK(BooleanAbstraction::apply(t, 0b0011) == 0b1000);
  CHECK(BooleanAbstraction::apply(t, 0) == 0);
  auto lifted = b.lift(t, "s1");
  CHECK(lifted(0b0110) == 0b1000);
}

TEST_CASE("tables do not depend on the modulus") {
  auto ref = foo_verification(Abstraction::Boolean, 4);
  for (unsigned n : {3u, 5u, 7u}) {
    auto r = foo_verification(Abstraction::Boolean, n);
    CHECK(r.s1_table == ref.s1_table);
    CHECK(r.s2_table == ref.s2_table);
    CHECK(r.verdict == Reachability::Unreachable);
  }
}

TEST_CASE("verdicts per abstraction") {
  CHECK(foo_verification(Abstraction::Boolean).exit == "{<1,1>}");
  CHECK(foo_verification(Abstraction::Kernel).lfp == "{<0,0>, <1,1>}");
  auto uco = foo_verification(Abstraction::UcoKernel);
  CHECK(uco.verdict == Reachability::Inconclusive);
  REQUIRE(uco.kernel.has_value());
  CHECK(uco.kernel->kernel.size() == 7);
  auto cart = foo_verification(Abstraction::Cartesian);
  CHECK(cart.exit == "<*,1>");
  CHECK(cart.iterates.size() == 2);
  CHECK(cart.s1_cartesian.size() == 10);
}

TEST_CASE("uco kernel of the boolean abstraction") {
  auto fp = foo_program(4);
  BooleanAbstraction b(fp.space, fp.predicates);
  auto k = boolean_uco_kernel(b, {fp.s1, fp.s2});
  std::vector<ElemId> expected{0b0000, 0b0001, 0b0010, 0b0011, 0b1000, 0b1010, 0b1111};
  CHECK(k.kernel.elements() == expected);
  CHECK(k.kernel == kernel_oracle(AbstractDomain::identity(b.lattice()),
                                  {b.lift(b.post_table(fp.s1), "s1"), b.lift(b.post_table(fp.s2), "s2")}));
}

TEST_CASE("cartesian lattice") {
  auto a = CartesianElem{false, "01"};
  auto c = CartesianElem{false, "11"};
  CHECK(cart_join(a, c) == CartesianElem{false, "*1"});
  CHECK(cart_meet(a, c) == CartesianElem::bot());
  CHECK(cart_meet(CartesianElem::top(2), a) == a);
  CHECK(cart_leq(CartesianElem::bot(), a));
  CHECK(cart_leq(a, CartesianElem{false, "0*"}));
  CHECK_FALSE(cart_leq(a, c));
  auto all = cart_elements(2);
  CHECK(all.size() == 10);
  CHECK(all.front() == CartesianElem::bot());
  CHECK(format_cart(all.back()) == "<*,*>");
  CHECK(CartesianElem::of(2, 2) == CartesianElem{false, "10"});
  for (const auto& x : all)
    for (const auto& y : all) {
      CHECK(cart_leq(x, cart_join(x, y)));
      CHECK(cart_leq(cart_meet(x, y), x));
      CHECK(cart_leq(x, y) == (cart_join(x, y) == y));
    }
}

TEST_CASE("cartesian abstraction") {
  auto fp = foo_program(4);
  BooleanAbstraction b(fp.space, fp.predicates);
  CartesianAbstraction c(b);
  for (const auto& e : cart_elements(2)) CHECK(c.alpha(c.gamma(e)) == e);
  CHECK(c.alpha(b.gamma(0b1001)) == CartesianElem::top(2));
  CHECK(c.post(fp.s2, CartesianElem{false, "11"}) == CartesianElem{false, "00"});
}

TEST_CASE("kleene iteration") {
  std::vector<int> trace;
  auto lfp = kleene_lfp<int>([](int x) { return x < 5 ? x + 1 : x; }, 0,
                             [](int a, int b) { return a > b ? a : b; }, &trace);
  CHECK(lfp == 5);
  CHECK(trace.size() == 6);
}

TEST_CASE("abstraction names") {
  CHECK(parse_abstraction("uco-kernel") == Abstraction::UcoKernel);
  CHECK_FALSE(parse_abstraction("bogus").has_value());
  CHECK(std::string(to_string(Abstraction::Cartesian)) == "cartesian");
  CHECK(std::string(to_string(Reachability::Unreachable)) == "UNREACHABLE");
}
