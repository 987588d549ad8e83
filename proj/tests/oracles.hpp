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

// Brute-force reference implementations used to cross-check the library.
// They work on plain vectors and edge lists and share no code with it
// beyond the leq relation of a lattice and the edge list of a system.

#ifndef EGAS_TESTS_ORACLES_HPP
#define EGAS_TESTS_ORACLES_HPP

#include "egas/absdom.hpp"
#include "egas/ats.hpp"
#include "egas/cegar.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using egas::ElemId;
using Elems = std::vector<ElemId>;

// Greatest lower bound by scanning all lower bounds; nullopt when no
// unique greatest one exists.
template <typename Leq>
std::optional<ElemId> glb(std::size_t n, Leq leq, const Elems& xs) {
  std::vector<ElemId> lower;
  for (ElemId c = 0; c < n; ++c)
    if (std::all_of(xs.begin(), xs.end(), [&](ElemId x) { return leq(c, x); })) lower.push_back(c);
  for (ElemId c : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](ElemId d) { return leq(d, c); })) return c;
  return std::nullopt;
}

template <typename Leq>
std::optional<ElemId> lub(std::size_t n, Leq leq, const Elems& xs) {
  std::vector<ElemId> upper;
  for (ElemId c = 0; c < n; ++c)
    if (std::all_of(xs.begin(), xs.end(), [&](ElemId x) { return leq(x, c); })) upper.push_back(c);
  for (ElemId c : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](ElemId d) { return leq(c, d); })) return c;
  return std::nullopt;
}

// Least element of `img` above c (the closure operator with image `img`).
inline ElemId close(const egas::Lattice& l, const Elems& img, ElemId c) {
  std::optional<ElemId> best;
  for (ElemId a : img)
    if (l.leq(c, a) && (!best || l.leq(a, *best))) best = a;
  return *best;
}

inline bool meet_closed(const egas::Lattice& l, const Elems& img) {
  if (std::find(img.begin(), img.end(), l.top()) == img.end()) return false;
  for (ElemId a : img)
    for (ElemId b : img) {
      auto m = glb(l.size(), [&](ElemId x, ElemId y) { return l.leq(x, y); }, {a, b});
      if (std::find(img.begin(), img.end(), *m) == img.end()) return false;
    }
  return true;
}

inline bool join_closed(const egas::Lattice& l, const Elems& img) {
  if (std::find(img.begin(), img.end(), l.bottom()) == img.end()) return false;
  for (ElemId a : img)
    for (ElemId b : img) {
      auto j = lub(l.size(), [&](ElemId x, ElemId y) { return l.leq(x, y); }, {a, b});
      if (std::find(img.begin(), img.end(), *j) == img.end()) return false;
    }
  return true;
}

// mu_img . f . mu_img agrees with mu_ref . f . mu_ref on every element.
inline bool same_bca(const egas::Lattice& l, const Elems& img, const Elems& ref,
                     const std::vector<ElemId>& f) {
  for (ElemId c = 0; c < l.size(); ++c)
    if (close(l, img, f[close(l, img, c)]) != close(l, ref, f[close(l, ref, c)])) return false;
  return true;
}

// Most abstract domain inside `ref` keeping every bca, by trying every
// subset of `ref`. With `disjunctive`, candidates must also be
// join-closed.
inline Elems kernel(const egas::Lattice& l, const Elems& ref,
                    const std::vector<std::vector<ElemId>>& fs, bool disjunctive = false) {
  const std::size_t n = ref.size();
  std::set<ElemId> meet;
  bool first = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Elems cand;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) cand.push_back(ref[i]);
    if (!meet_closed(l, cand)) continue;
    if (disjunctive && !join_closed(l, cand)) continue;
    if (!std::all_of(fs.begin(), fs.end(), [&](const auto& f) { return same_bca(l, cand, ref, f); }))
      continue;
    std::set<ElemId> s(cand.begin(), cand.end());
    if (first) {
      meet = s;
      first = false;
    } else {
      std::set<ElemId> both;
      std::set_intersection(meet.begin(), meet.end(), s.begin(), s.end(),
                            std::inserter(both, both.end()));
      meet = both;
    }
  }
  return Elems(meet.begin(), meet.end());
}

// --- transition systems over edge lists ---

using Edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
using Set = std::set<std::uint32_t>;

inline Set pre(const Edges& e, const Set& s) {
  Set out;
  for (auto [x, y] : e)
    if (s.count(y)) out.insert(x);
  return out;
}

inline Set post(const Edges& e, const Set& s) {
  Set out;
  for (auto [x, y] : e)
    if (s.count(x)) out.insert(y);
  return out;
}

inline std::vector<Set> blocks_of(const egas::Partition& p) {
  std::vector<Set> out;
  for (const auto& b : p.blocks()) {
    auto m = egas::members(b);
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

inline bool meets(const Set& a, const Set& b) {
  return std::any_of(a.begin(), a.end(), [&](auto x) { return b.count(x) > 0; });
}

// Blocks meeting the union of the given blocks' preimage (or image).
inline Set abstract_step(const Edges& e, const std::vector<Set>& blocks, const Set& bs, bool forward) {
  Set states;
  for (auto b : bs) states.insert(blocks[b].begin(), blocks[b].end());
  Set img = forward ? post(e, states) : pre(e, states);
  Set out;
  for (std::uint32_t b = 0; b < blocks.size(); ++b)
    if (meets(blocks[b], img)) out.insert(b);
  return out;
}

// Groups of blocks with identical abstract predecessor and successor sets,
// each group rendered as its union of states, sorted by least state.
inline std::vector<Set> partition_kernel(const Edges& e, const std::vector<Set>& blocks) {
  std::map<std::pair<Set, Set>, Set> groups;
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    auto key = std::make_pair(abstract_step(e, blocks, {b}, false), abstract_step(e, blocks, {b}, true));
    groups[key].insert(blocks[b].begin(), blocks[b].end());
  }
  std::vector<Set> out;
  for (auto& [k, v] : groups) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const Set& a, const Set& b) { return *a.begin() < *b.begin(); });
  return out;
}

// Whether some concrete path follows the block sequence, by depth-first
// search over states.
inline bool has_concrete_path(const Edges& e, const std::vector<Set>& blocks,
                              const std::vector<std::uint32_t>& path) {
  auto dfs = [&](auto&& self, std::uint32_t s, std::size_t i) -> bool {
    if (i + 1 == path.size()) return true;
    for (auto [x, y] : e)
      if (x == s && blocks[path[i + 1]].count(y) && self(self, y, i + 1)) return true;
    return false;
  };
  for (auto s : blocks[path[0]])
    if (dfs(dfs, s, 0)) return true;
  return false;
}

}  // namespace oracle

#endif  // EGAS_TESTS_ORACLES_HPP
