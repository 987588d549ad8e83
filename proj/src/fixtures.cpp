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

#include "egas/fixtures.hpp"

#include "egas/error.hpp"

#include <algorithm>

namespace egas::fixtures {

Sign sign() {
  auto doc = parse_lattice(kSignLattice);
  return Sign{doc.lattice, doc.function("sq"), AbstractDomain::identity(doc.lattice)};
}

NonExistence non_existence() {
  auto doc = parse_lattice(kNonExistenceLattice);
  return NonExistence{doc.lattice, doc.function("f"), *doc.domain("mu"), *doc.domain("rho1"),
                      *doc.domain("rho2")};
}

Increment increment(int bound) {
  if (bound < 1) throw SemanticError("bound must be positive");
  std::vector<std::string> atoms;
  for (int v = -bound; v <= bound; ++v) atoms.push_back(std::to_string(v));
  auto lattice = std::make_shared<const Lattice>(Lattice::powerset(atoms));
  const auto n = static_cast<ElemId>(atoms.size());
  auto bit = [&](int v) { return ElemId{1} << static_cast<ElemId>(v + bound); };

  std::vector<ElemId> table(lattice->size());
  for (ElemId s = 0; s < table.size(); ++s) {
    ElemId out = 0;
    for (ElemId i = 0; i < n; ++i)
      if (s >> i & 1u) out |= bit(std::min(static_cast<int>(i) - bound + 1, bound));
    table[s] = out;
  }
  MonotoneFn inc(lattice, "inc", std::move(table));

  ElemId nonpos = 0, nonneg = 0;
  for (int v = -bound; v <= 0; ++v) nonpos |= bit(v);
  for (int v = 0; v <= bound; ++v) nonneg |= bit(v);
  auto img = [&](std::initializer_list<ElemId> xs) { return lattice->set_of(xs); };
  auto a1 = AbstractDomain::from_image(lattice, img({bit(0), nonpos, nonneg}));
  auto a2 = AbstractDomain::from_image(lattice, img({nonneg}));
  return Increment{lattice, std::move(inc), std::move(a1), std::move(a2)};
}

SystemDocument fig1() { return parse_system(kFig1System); }
SystemDocument fig2() { return parse_system(kFig2System); }

}  // namespace egas::fixtures
