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

#ifndef EGAS_RANDOM_HPP
#define EGAS_RANDOM_HPP

#include "egas/absdom.hpp"
#include "egas/ats.hpp"

#include <random>

/// Seeded generators for property runs. Every generator draws only from
/// the engine it is given, so a seed fixes the whole sequence.
namespace egas::random {

using Engine = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::size_t uniform(Engine& rng, std::size_t lo, std::size_t hi);

/// Random order on n elements (arbitrary DAG closure), not necessarily a
/// lattice.
Poset poset(Engine& rng, std::size_t n, double density);

/// Intersection-closed family of subsets of `atoms` atoms (always holding
/// the full set and the empty set), ordered by inclusion. At most
/// `max_size` elements.
LatticePtr lattice(Engine& rng, std::size_t atoms, std::size_t max_size);

MonotoneFn monotone_fn(Engine& rng, const LatticePtr& l, std::string name = "f");

/// Meet closure of random picks, trimmed to at most `max_image` elements.
AbstractDomain domain(Engine& rng, const LatticePtr& l, std::size_t max_image);

/// Each ordered pair is an edge with probability `edge_prob`.
TransitionSystem system(Engine& rng, std::size_t states, double edge_prob);

/// Random surjection onto `blocks` blocks (fewer when states < blocks).
Partition partition(Engine& rng, std::size_t states, std::size_t blocks);

}  // namespace egas::random

#endif  // EGAS_RANDOM_HPP
