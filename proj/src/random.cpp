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

#include "egas/random.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace egas::random {

std::size_t uniform(Engine& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

namespace {

bool coin(Engine& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Poset poset(Engine& rng, std::size_t n, double density) {
  // edges only go from lower to higher index after a random relabelling,
  // so the closure stays antisymmetric
  std::vector<ElemId> perm(n);
  std::iota(perm.begin(), perm.end(), ElemId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<ElemId, ElemId>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, density)) covers.emplace_back(perm[i], perm[j]);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return Poset::from_covers(std::move(names), covers);
}

LatticePtr lattice(Engine& rng, std::size_t atoms, std::size_t max_size) {
  const std::uint32_t full = (std::uint32_t{1} << atoms) - 1;
  std::set<std::uint32_t> family{0, full};
  const auto target = uniform(rng, 2, std::max<std::size_t>(2, max_size));
  for (int attempt = 0; attempt < 64 && family.size() < target; ++attempt) {
    auto next = family;
    next.insert(static_cast<std::uint32_t>(uniform(rng, 0, full)));
    // close under intersection
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<std::uint32_t> xs(next.begin(), next.end());
      for (auto a : xs)
        for (auto b : xs)
          if (next.insert(a & b).second) grew = true;
    }
    if (next.size() <= max_size) family = std::move(next);
  }
  std::vector<std::uint32_t> sets(family.begin(), family.end());
  std::stable_sort(sets.begin(), sets.end(), [](auto a, auto b) {
    return std::popcount(a) < std::popcount(b);
  });
  Poset p;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    p.names.push_back("e" + std::to_string(i));
    Bits up(sets.size());
    for (std::size_t j = 0; j < sets.size(); ++j)
      if ((sets[i] & ~sets[j]) == 0) up.set(j);
    p.up.push_back(std::move(up));
  }
  return std::make_shared<const Lattice>(Lattice::from_poset(std::move(p)));
}

MonotoneFn monotone_fn(Engine& rng, const LatticePtr& l, std::string name) {
  const auto n = l->size();
  std::vector<ElemId> order(n);
  std::iota(order.begin(), order.end(), ElemId{0});
  std::stable_sort(order.begin(), order.end(), [&](ElemId a, ElemId b) {
    return l->downset(a).count() < l->downset(b).count();
  });
  std::vector<ElemId> table(n);
  for (auto x : order) {
    auto lower = l->downset(x);
    lower.reset(x);
    auto lb = l->bottom();
    for_each_member(lower, [&](std::size_t y) { lb = l->join(lb, table[y]); });
    auto choices = members(l->upset(lb));
    table[x] = choices[uniform(rng, 0, choices.size() - 1)];
  }
  return MonotoneFn(l, std::move(name), std::move(table));
}

AbstractDomain domain(Engine& rng, const LatticePtr& l, std::size_t max_image) {
  std::vector<ElemId> picks;
  const auto k = uniform(rng, 0, std::min(max_image, l->size()));
  for (std::size_t i = 0; i < k; ++i) picks.push_back(static_cast<ElemId>(uniform(rng, 0, l->size() - 1)));
  for (;;) {
    auto d = AbstractDomain::from_image(l, bits_of(l->size(), picks));
    if (d.size() <= max_image || picks.empty()) return d;
    picks.pop_back();
  }
}

TransitionSystem system(Engine& rng, std::size_t states, double edge_prob) {
  std::vector<Edge> edges;
  for (std::uint32_t a = 0; a < states; ++a)
    for (std::uint32_t b = 0; b < states; ++b)
      if (coin(rng, edge_prob)) edges.emplace_back(a, b);
  return TransitionSystem(states, std::move(edges));
}

Partition partition(Engine& rng, std::size_t states, std::size_t blocks) {
  blocks = std::max<std::size_t>(1, std::min(blocks, states));
  std::vector<std::size_t> owner(states);
  // first `blocks` states (after shuffling) seed one block each
  std::vector<std::size_t> perm(states);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < states; ++i)
    owner[perm[i]] = i < blocks ? i : uniform(rng, 0, blocks - 1);
  std::vector<StateSet> bs(blocks, StateSet(states));
  for (std::size_t s = 0; s < states; ++s) bs[owner[s]].set(s);
  return Partition(states, std::move(bs));
}

}  // namespace egas::random
