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
#include "egas/fixtures.hpp"
#include "egas/kernel.hpp"
#include "egas/random.hpp"

#include "../oracles.hpp"

#include <doctest.h>

using namespace egas;

TEST_CASE("sign kernel pieces") {
  auto s = fixtures::sign();
  const auto& l = *s.lattice;
  auto k = correctness_kernel(s.full, {s.sq});
  REQUIRE(k.per_function.size() == 1);
  const auto& r = k.per_function[0];
  CHECK(r.bca_image == l.set_of({l.bottom(), *l.find("0"), *l.find("gt0"), *l.find("ge0")}));
  CHECK(r.max_preimages.at(*l.find("gt0")) == l.set_of({*l.find("ne0")}));
  CHECK(r.max_preimages.at(*l.find("ge0")) == l.set_of({l.top()}));
  CHECK(k.verification == Verification::Exhaustive);
  CHECK_FALSE(k.kernel.contains(*l.find("lt0")));
  CHECK_FALSE(k.kernel.contains(*l.find("le0")));
}

TEST_CASE("inequality form generates the same kernel") {
  random::Engine rng(5);
  for (int i = 0; i < 150; ++i) {
    auto l = random::lattice(rng, random::uniform(rng, 2, 4), 10);
    auto d = random::domain(rng, l, 8);
    auto f = random::monotone_fn(rng, l);
    auto equality = l->meet_closure(required_set(d, f));
    auto bounded = l->meet_closure(required_set_bounded(d, f));
    CHECK(equality == bounded);
  }
}

TEST_CASE("kernel of a family against brute force") {
  random::Engine rng(7);
  std::size_t simplified = 0;
  for (int i = 0; i < 150; ++i) {
    auto l = random::lattice(rng, random::uniform(rng, 2, 4), 10);
    auto d = random::domain(rng, l, 8);
    FunctionFamily fs{random::monotone_fn(rng, l, "f"), random::monotone_fn(rng, l, "g")};
    auto k = correctness_kernel(d, fs).kernel;
    CHECK(k == kernel_oracle(d, fs));
    CHECK(k.elements() == oracle::kernel(*l, d.elements(), {fs[0].table(), fs[1].table()}));
    CHECK(precision_leq(d, k));
    if (k.size() < d.size()) ++simplified;
  }
  CHECK(simplified > 10);
}

TEST_CASE("kernels of the identity and of a constant") {
  auto s = fixtures::sign();
  auto k = correctness_kernel(s.full, {MonotoneFn::identity(s.lattice)}).kernel;
  CHECK(k == s.full);
  auto top = MonotoneFn::constant(s.lattice, s.lattice->top());
  auto kt = correctness_kernel(s.full, {top}).kernel;
  CHECK(kt.size() == 1);
}

TEST_CASE("disjunctive kernel against both oracles") {
  random::Engine rng(11);
  std::size_t differs = 0;
  for (int i = 0; i < 80; ++i) {
    auto l = random::lattice(rng, random::uniform(rng, 2, 4), 9);
    auto d = AbstractDomain::identity(l);
    auto f = random::monotone_fn(rng, l);
    auto k = disjunctive_kernel(d, {f}).kernel;
    CHECK(k == disjunctive_kernel_oracle(d, {f}));
    CHECK(k.elements() == oracle::kernel(*l, d.elements(), {f.table()}, true));
    CHECK(oracle::join_closed(*l, k.elements()));
    CHECK(precision_leq(k, correctness_kernel(d, {f}).kernel));
    if (!(k == correctness_kernel(d, {f}).kernel)) ++differs;
  }
  CHECK(differs > 0);
}

TEST_CASE("disjunctive kernel needs a join-closed domain") {
  auto s = fixtures::sign();
  const auto& l = *s.lattice;
  auto d = AbstractDomain::from_image(s.lattice, l.set_of({*l.find("le0"), *l.find("ge0")}));
  CHECK_THROWS_AS(disjunctive_kernel(d, {s.sq}), SemanticError);
}

TEST_CASE("oracle refuses large images") {
  auto inc = fixtures::increment(2);
  auto full = AbstractDomain::identity(inc.lattice);
  CHECK_THROWS_AS(kernel_oracle(full, {inc.inc}), LimitError);
}

TEST_CASE("kernel on a sampled carrier") {
  auto inc = fixtures::increment(8);
  auto k = correctness_kernel(inc.a1, {inc.inc});
  CHECK(k.verification == Verification::Sampled);
  CHECK(bca_equal(k.kernel, inc.a1, inc.inc));
  CHECK(precision_leq(inc.a1, k.kernel));
}

TEST_CASE("no most concrete simplification") {
  auto r = most_concrete_counterexample();
  CHECK(r.rho1_equal);
  CHECK(r.rho2_equal);
  CHECK_FALSE(r.meet_equal);
  CHECK(r.witness_name == "2");
  CHECK(r.meet.size() == 5);
}
