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

#ifndef EGAS_FIXTURES_HPP
#define EGAS_FIXTURES_HPP

#include "egas/absdom.hpp"
#include "egas/io.hpp"

#include <string_view>

/// Small worked examples shared by the CLI, the tests and the data/ files.
namespace egas::fixtures {

/// Signs of an integer, with the square function.
inline constexpr std::string_view kSignLattice = R"(# signs of an integer variable
elem empty
elem lt0
elem 0
elem gt0
elem le0
elem ne0
elem ge0
elem Z
cover empty lt0
cover empty 0
cover empty gt0
cover lt0 le0
cover lt0 ne0
cover 0 le0
cover 0 ge0
cover gt0 ne0
cover gt0 ge0
cover le0 Z
cover ne0 Z
cover ge0 Z
map sq empty empty
map sq lt0 gt0
map sq 0 0
map sq gt0 gt0
map sq le0 ge0
map sq ne0 gt0
map sq ge0 ge0
map sq Z ge0
)";

/// Five elements, 1 < 2 < {3, 4} < 5. Both rho1 and rho2 keep mu's
/// approximation of f; their glb (the identity) does not.
inline constexpr std::string_view kNonExistenceLattice = R"(elem 1
elem 2
elem 3
elem 4
elem 5
cover 1 2
cover 2 3
cover 2 4
cover 3 5
cover 4 5
map f 1 1
map f 2 1
map f 3 5
map f 4 5
map f 5 5
domain mu 1 5
domain rho1 1 3 5
domain rho2 1 4 5
)";

/// Nine states; blocks [2,3]/[4,5] and [6]/[7] have the same abstract
/// neighbours.
inline constexpr std::string_view kFig1System = R"(states 9
label 0 1
label 1 2
label 2 3
label 3 4
label 4 5
label 5 6
label 6 7
label 7 8
label 8 9
edge 0 1
edge 0 3
edge 1 5
edge 2 6
edge 3 5
edge 4 6
edge 5 7
edge 6 8
block b1 0
block b23 1 2
block b45 3 4
block b6 5
block b7 6
block b89 7 8
)";

/// Seven states with the error state 6 reachable only from 3.
inline constexpr std::string_view kFig2System = R"(states 7
label 0 1
label 1 2
label 2 3
label 3 4
label 4 5
label 5 6
label 6 7
edge 0 4
edge 1 3
edge 1 4
edge 2 5
edge 3 6
edge 4 6
init 0 1
error 5
block b1 0
block b2 1
block b345 2 3 4
block b6 5
block b7 6
)";

struct Sign {
  LatticePtr lattice;
  MonotoneFn sq;
  AbstractDomain full;
};
Sign sign();

struct NonExistence {
  LatticePtr lattice;
  MonotoneFn f;
  AbstractDomain mu;
  AbstractDomain rho1;
  AbstractDomain rho2;
};
NonExistence non_existence();

/// Subsets of [-bound, bound] with x++ saturating at bound. a1 mirrors
/// {0, <=0, >=0, all}, a2 mirrors {>=0, all}; both give x++ the same
/// approximation.
struct Increment {
  LatticePtr lattice;
  MonotoneFn inc;
  AbstractDomain a1;
  AbstractDomain a2;
};
Increment increment(int bound = 8);

SystemDocument fig1();
SystemDocument fig2();

}  // namespace egas::fixtures

#endif  // EGAS_FIXTURES_HPP
