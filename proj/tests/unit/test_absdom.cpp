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

#include "egas/absdom.hpp"
#include "egas/error.hpp"
#include "egas/fixtures.hpp"
#include "egas/random.hpp"

#include "../oracles.hpp"

#include <doctest.h>

using namespace egas;

TEST_CASE("domain from image adds top and closes under meets") {
  auto s = fixtures::sign();
  const auto& l = *s.lattice;
  auto d = AbstractDomain::from_image(s.lattice, l.set_of({*l.find("le0"), *l.find("ge0")}));
  CHECK(d.size() == 4);
  CHECK(d.contains(l.top()));
  CHECK(d.contains(*l.find("0")));
  CHECK(d.apply(*l.find("lt0")) == *l.find("le0"));
  CHECK(d.apply(*l.find("gt0")) == *l.find("ge0"));
  CHECK(d.apply(*l.find("ne0")) == l.top());
  CHECK(d.apply(l.bottom()) == *l.find("0"));
}

TEST_CASE("monotone functions are validated") {
  auto s = fixtures::sign();
  auto l = s.lattice;
  std::vector<ElemId> table(l->size(), l->top());
  table[l->top()] = l->bottom();
  CHECK_THROWS_AS(MonotoneFn(l, "bad", table), SemanticError);
  CHECK_THROWS_AS(MonotoneFn(l, "short", std::vector<ElemId>(3, 0)), SemanticError);
  CHECK_THROWS_AS(MonotoneFn(l, "range", std::vector<ElemId>(l->size(), 99)), SemanticError);
  auto id = MonotoneFn::identity(l);
  CHECK(id(*l.get()->find("lt0")) == *l->find("lt0"));
}

TEST_CASE("sign bca table") {
  auto s = fixtures::sign();
  const auto& l = *s.lattice;
  auto t = s.full.bca(s.sq);
  CHECK(t.entries.size() == l.size());
  CHECK(t.at(*l.find("lt0")) == l.find("gt0"));
  CHECK(t.at(*l.find("le0")) == l.find("ge0"));
  CHECK(t.image(l.size()) == l.set_of({l.bottom(), *l.find("0"), *l.find("gt0"), *l.find("ge0")}));
  auto coarse = AbstractDomain::from_image(s.lattice, l.set_of({*l.find("ge0")}));
  auto ct = coarse.bca(s.sq);
  CHECK(ct.entries.size() == 2);
  CHECK(ct.at(*l.find("ge0")) == l.find("ge0"));
  CHECK_FALSE(ct.at(*l.find("lt0")).has_value());
}

TEST_CASE("precision order and domain lub/glb") {
  auto ne = fixtures::non_existence();
  CHECK(precision_leq(ne.rho1, ne.mu));
  CHECK(precision_leq(ne.rho2, ne.mu));
  CHECK_FALSE(precision_leq(ne.mu, ne.rho1));
  CHECK(abs_lub({ne.rho1, ne.rho2}) == ne.mu);
  auto g = abs_glb({ne.rho1, ne.rho2});
  CHECK(precision_leq(g, ne.rho1));
  CHECK(precision_leq(g, ne.rho2));
  CHECK_THROWS(abs_lub({}));
}

TEST_CASE("bca comparison reports a witness") {
  auto ne = fixtures::non_existence();
  auto g = abs_glb({ne.rho1, ne.rho2});
  auto r = bca_compare(g, ne.mu, ne.f);
  CHECK_FALSE(r.equal);
  CHECK(r.exhaustive);
  REQUIRE(r.witness.has_value());
  CHECK(ne.lattice->name(*r.witness) == "2");
}

TEST_CASE("large carriers are compared on a sample") {
  auto inc = fixtures::increment(8);
  CHECK(inc.lattice->size() == (std::size_t{1} << 17));
  auto r = bca_compare(inc.a1, inc.a2, inc.inc);
  CHECK(r.equal);
  CHECK_FALSE(r.exhaustive);
  CHECK(inc.a2.size() == 2);
  CHECK(inc.a1.size() == 4);
}

TEST_CASE("closure operator laws against brute force") {
  random::Engine rng(3);
  for (int i = 0; i < 100; ++i) {
    auto l = random::lattice(rng, random::uniform(rng, 1, 5), 12);
    auto d = random::domain(rng, l, 6);
    REQUIRE(d.size() <= 6);
    CHECK(oracle::meet_closed(*l, d.elements()));
    for (ElemId c = 0; c < l->size(); ++c) CHECK(d.apply(c) == oracle::close(*l, d.elements(), c));
    auto f = random::monotone_fn(rng, l);
    auto ext = d.bca_extended(f);
    for (ElemId c = 0; c < l->size(); ++c)
      CHECK(ext(c) == oracle::close(*l, d.elements(), f(oracle::close(*l, d.elements(), c))));
  }
}
