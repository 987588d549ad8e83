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

#include "egas/ats.hpp"

#include "egas/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace egas {

TransitionSystem::TransitionSystem(std::size_t states, std::vector<Edge> edges,
                                   std::vector<std::string> labels, std::optional<StateSet> init,
                                   std::optional<StateSet> error)
    : edges_(std::move(edges)),
      succ_(states, StateSet(states)),
      pred_(states, StateSet(states)),
      labels_(std::move(labels)),
      init_(std::move(init)),
      error_(std::move(error)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [a, b] : edges_) {
    if (a >= states || b >= states)
      throw SemanticError("edge " + std::to_string(a) + " -> " + std::to_string(b) +
                          " leaves the state space");
    succ_[a].set(b);
    pred_[b].set(a);
  }
  if (labels_.empty()) {
    for (std::size_t s = 0; s < states; ++s) labels_.push_back(std::to_string(s));
  } else if (labels_.size() != states) {
    throw SemanticError("label count does not match the state count");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw SemanticError("duplicate state label '" + l + "'");
  for (const auto* set : {&init_, &error_})
    if (*set && (*set)->size() != states) throw SemanticError("state set has the wrong width");
}

StateSet TransitionSystem::pre(const StateSet& s) const {
  StateSet out(size());
  for_each_member(s, [&](std::size_t y) { out |= pred_[y]; });
  return out;
}

StateSet TransitionSystem::post(const StateSet& s) const {
  StateSet out(size());
  for_each_member(s, [&](std::size_t x) { out |= succ_[x]; });
  return out;
}

std::optional<StateId> TransitionSystem::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<StateId>(it - labels_.begin());
}

StateId TransitionSystem::state(const std::string& label) const {
  auto s = find(label);
  if (!s) throw SemanticError("no state labelled '" + label + "'");
  return *s;
}

StateSet TransitionSystem::states(std::initializer_list<const char*> labels) const {
  StateSet out(size());
  for (const auto* l : labels) out.set(state(l));
  return out;
}

StateSet TransitionSystem::full_set() const {
  StateSet s(size());
  s.set();
  return s;
}

std::string TransitionSystem::format(const StateSet& s) const {
  std::string out = "[";
  bool first = true;
  for_each_member(s, [&](std::size_t x) {
    if (!first) out += ",";
    out += labels_[x];
    first = false;
  });
  return out + "]";
}

TransitionSystem TransitionSystem::with_init_error(std::optional<StateSet> init,
                                                   std::optional<StateSet> error) const {
  return TransitionSystem(size(), edges_, labels_, std::move(init), std::move(error));
}

Partition::Partition(std::size_t states, std::vector<StateSet> blocks,
                     std::vector<std::string> names)
    : block_of_(states, 0) {
  if (!names.empty() && names.size() != blocks.size())
    throw SemanticError("block name count does not match the block count");
  if (names.empty()) names.resize(blocks.size());

  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  for (const auto& b : blocks) {
    if (b.size() != states) throw SemanticError("block has the wrong width");
    if (b.none()) throw SemanticError("partition has an empty block");
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return blocks[i].find_first() < blocks[j].find_first(); });

  StateSet seen(states);
  for (auto i : order) {
    if (seen.intersects(blocks[i])) throw SemanticError("partition blocks overlap");
    seen |= blocks[i];
    const auto id = static_cast<BlockId>(blocks_.size());
    for_each_member(blocks[i], [&](std::size_t s) { block_of_[s] = id; });
    blocks_.push_back(std::move(blocks[i]));
    names_.push_back(std::move(names[i]));
  }
  if (!seen.all()) throw SemanticError("partition does not cover every state");
}

Partition Partition::discrete(std::size_t states) {
  std::vector<StateSet> blocks;
  for (std::size_t s = 0; s < states; ++s) {
    StateSet b(states);
    b.set(s);
    blocks.push_back(std::move(b));
  }
  return Partition(states, std::move(blocks));
}

Partition Partition::single(std::size_t states) {
  StateSet b(states);
  b.set();
  if (states == 0) return Partition(0, {});
  return Partition(states, {b});
}

std::optional<BlockId> Partition::find(const StateSet& block) const {
  if (block.none() || block.size() != state_count()) return std::nullopt;
  auto b = block_of_[block.find_first()];
  if (blocks_[b] != block) return std::nullopt;
  return b;
}

BlockId Partition::block_for(const StateSet& states) const {
  auto b = find(states);
  if (!b) throw SemanticError("state set is not a block of the partition");
  return *b;
}

BlockSet Partition::all_blocks() const {
  BlockSet s(size());
  s.set();
  return s;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.state_count() != state_count()) return false;
  for (const auto& b : blocks_)
    if (!b.is_subset_of(coarser.block(coarser.block_of(static_cast<StateId>(b.find_first())))))
      return false;
  return true;
}

BlockSet alpha(const Partition& p, const StateSet& s) {
  BlockSet out(p.size());
  for_each_member(s, [&](std::size_t x) { out.set(p.block_of(static_cast<StateId>(x))); });
  return out;
}

StateSet gamma(const Partition& p, const BlockSet& bs) {
  StateSet out(p.state_count());
  for_each_member(bs, [&](std::size_t b) { out |= p.block(static_cast<BlockId>(b)); });
  return out;
}

AbstractTransitionSystem::AbstractTransitionSystem(const TransitionSystem& ts, Partition p)
    : partition_(std::move(p)),
      succ_(partition_.size(), BlockSet(partition_.size())),
      pred_(partition_.size(), BlockSet(partition_.size())) {
  if (partition_.state_count() != ts.size())
    throw SemanticError("partition does not match the transition system");
  for (auto [x, y] : ts.edges()) {
    auto b = partition_.block_of(x), c = partition_.block_of(y);
    succ_[b].set(c);
    pred_[c].set(b);
  }
  for (BlockId b = 0; b < partition_.size(); ++b)
    for_each_member(succ_[b], [&](std::size_t c) { edges_.emplace_back(b, static_cast<BlockId>(c)); });
}

BlockSet AbstractTransitionSystem::pre_ee(const BlockSet& bs) const {
  BlockSet out(partition_.size());
  for_each_member(bs, [&](std::size_t c) { out |= pred_[c]; });
  return out;
}

BlockSet AbstractTransitionSystem::post_ee(const BlockSet& bs) const {
  BlockSet out(partition_.size());
  for_each_member(bs, [&](std::size_t b) { out |= succ_[b]; });
  return out;
}

namespace {

// Canonical (pre, post) signature of every block, as sorted id lists.
using Signature = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

std::vector<std::vector<BlockId>> signature_groups(const TransitionSystem& ts, const Partition& p) {
  AbstractTransitionSystem ats(ts, p);
  std::map<Signature, std::vector<BlockId>> groups;
  for (BlockId b = 0; b < p.size(); ++b)
    groups[{members(ats.predecessors(b)), members(ats.successors(b))}].push_back(b);
  std::vector<std::vector<BlockId>> out;
  for (auto& [sig, bs] : groups) out.push_back(std::move(bs));
  // order groups by their least block, hence by least member state
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Partition partition_kernel(const TransitionSystem& ts, const Partition& p) {
  std::vector<StateSet> blocks;
  std::vector<std::string> names;
  for (const auto& group : signature_groups(ts, p)) {
    StateSet merged(p.state_count());
    std::string name;
    for (auto b : group) {
      merged |= p.block(b);
      if (!p.name(b).empty()) name += (name.empty() ? "" : "+") + p.name(b);
    }
    blocks.push_back(std::move(merged));
    names.push_back(std::move(name));
  }
  return Partition(p.state_count(), std::move(blocks), std::move(names));
}

Partition partition_kernel_fixpoint(const TransitionSystem& ts, const Partition& p) {
  auto cur = p;
  for (;;) {
    auto next = partition_kernel(ts, cur);
    if (next.size() == cur.size()) return next;
    cur = std::move(next);
  }
}

std::vector<std::vector<BlockId>> kernel_merges(const TransitionSystem& ts, const Partition& p) {
  std::vector<std::vector<BlockId>> out;
  for (auto& g : signature_groups(ts, p))
    if (g.size() > 1) out.push_back(std::move(g));
  return out;
}

std::vector<StateSet> kernel_family_oracle(const TransitionSystem& ts, const Partition& p) {
  const auto m = p.size();
  if (m > 16) throw LimitError("kernel family oracle is limited to 16 blocks");
  AbstractTransitionSystem ats(ts, p);
  // Work on block masks; every generator is a union of blocks.
  std::set<std::uint32_t> family{0u, (1u << m) - 1u};
  auto to_mask = [](const BlockSet& bs) {
    std::uint32_t v = 0;
    for_each_member(bs, [&](std::size_t b) { v |= 1u << b; });
    return v;
  };
  for (BlockId b = 0; b < m; ++b) {
    family.insert(to_mask(ats.predecessors(b)));
    family.insert(to_mask(ats.successors(b)));
  }
  std::vector<std::uint32_t> list(family.begin(), family.end());
  std::vector<std::uint32_t> work = list;
  while (!work.empty()) {
    auto x = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (auto y : {x & list[i], x | list[i]}) {
        if (family.insert(y).second) {
          list.push_back(y);
          work.push_back(y);
        }
      }
    }
  }
  std::vector<StateSet> out;
  for (auto mask : family) {
    BlockSet bs(m);
    for (BlockId b = 0; b < m; ++b)
      if (mask >> b & 1u) bs.set(b);
    out.push_back(gamma(p, bs));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Partition family_atoms(std::size_t states, const std::vector<StateSet>& family) {
  // two states share a class iff every member contains both or neither
  std::map<std::vector<bool>, StateSet> classes;
  for (std::size_t s = 0; s < states; ++s) {
    std::vector<bool> key;
    key.reserve(family.size());
    for (const auto& f : family) key.push_back(f.test(s));
    auto [it, fresh] = classes.try_emplace(std::move(key), StateSet(states));
    it->second.set(s);
  }
  std::vector<StateSet> blocks;
  for (auto& [k, b] : classes) blocks.push_back(std::move(b));
  return Partition(states, std::move(blocks));
}

CorrespondenceResult bca_correspondence_check(const TransitionSystem& ts, const Partition& p,
                                              std::uint64_t seed) {
  AbstractTransitionSystem ats(ts, p);
  CorrespondenceResult r;
  auto check = [&](const BlockSet& bs) {
    ++r.checked;
    auto c = gamma(p, bs);
    if (alpha(p, ts.pre(c)) != ats.pre_ee(bs) || alpha(p, ts.post(c)) != ats.post_ee(bs)) {
      r.holds = false;
      r.counterexample = bs;
    }
    return r.holds;
  };
  const auto m = p.size();
  if (m <= 16) {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      BlockSet bs(m);
      for (BlockId b = 0; b < m; ++b)
        if (mask >> b & 1u) bs.set(b);
      if (!check(bs)) break;
    }
    return r;
  }
  r.exhaustive = false;
  for (BlockId b = 0; b < m && r.holds; ++b) {
    BlockSet bs(m);
    bs.set(b);
    check(bs);
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 4096 && r.holds; ++i) {
    BlockSet bs(m);
    for (BlockId b = 0; b < m; ++b)
      if (coin(rng)) bs.set(b);
    check(bs);
  }
  return r;
}

std::string format_blocks(const TransitionSystem& ts, const Partition& p, const BlockSet& bs) {
  std::string out = "{";
  bool first = true;
  for_each_member(bs, [&](std::size_t b) {
    if (!first) out += ",";
    out += ts.format(p.block(static_cast<BlockId>(b)));
    first = false;
  });
  return out + "}";
}

std::string format_partition(const TransitionSystem& ts, const Partition& p) {
  return format_blocks(ts, p, p.all_blocks());
}

}  // namespace egas
