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

#ifndef EGAS_ATS_HPP
#define EGAS_ATS_HPP

#include "egas/bits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace egas {

using StateId = std::uint32_t;
using BlockId = std::uint32_t;
/// Set of states; width equals the state count.
using StateSet = Bits;
/// Set of blocks of one partition; width equals the block count.
using BlockSet = Bits;

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Finite transition system over states 0..n-1. Init and error sets are
/// optional; only the CEGAR loop needs them.
class TransitionSystem {
 public:
  TransitionSystem(std::size_t states, std::vector<Edge> edges,
                   std::vector<std::string> labels = {},
                   std::optional<StateSet> init = std::nullopt,
                   std::optional<StateSet> error = std::nullopt);

  std::size_t size() const { return succ_.size(); }
  /// Sorted, duplicate-free.
  const std::vector<Edge>& edges() const { return edges_; }
  const StateSet& successors(StateId s) const { return succ_[s]; }
  const StateSet& predecessors(StateId s) const { return pred_[s]; }

  /// {x | exists y in s. x -> y}
  StateSet pre(const StateSet& s) const;
  /// {y | exists x in s. x -> y}
  StateSet post(const StateSet& s) const;

  const std::optional<StateSet>& init() const { return init_; }
  const std::optional<StateSet>& error() const { return error_; }

  const std::string& label(StateId s) const { return labels_[s]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Looks up a state by label.
  std::optional<StateId> find(const std::string& label) const;
  /// State with the given label; throws SemanticError when absent.
  StateId state(const std::string& label) const;
  StateSet states(std::initializer_list<const char*> labels) const;

  StateSet empty_set() const { return StateSet(size()); }
  StateSet full_set() const;

  /// "[a,b,c]" using state labels.
  std::string format(const StateSet& s) const;

  TransitionSystem with_init_error(std::optional<StateSet> init,
                                   std::optional<StateSet> error) const;

 private:
  std::vector<Edge> edges_;
  std::vector<StateSet> succ_;
  std::vector<StateSet> pred_;
  std::vector<std::string> labels_;
  std::optional<StateSet> init_;
  std::optional<StateSet> error_;
};

/// Partition of the states of a system into nonempty disjoint blocks.
/// Blocks are kept in canonical order (by least member state), so two
/// partitions with the same blocks compare equal and number their blocks
/// identically.
class Partition {
 public:
  /// Throws SemanticError on empty, overlapping or non-covering blocks.
  /// `names` is optional and travels with its block.
  Partition(std::size_t states, std::vector<StateSet> blocks, std::vector<std::string> names = {});

  static Partition discrete(std::size_t states);
  static Partition single(std::size_t states);

  std::size_t size() const { return blocks_.size(); }
  std::size_t state_count() const { return block_of_.size(); }
  const StateSet& block(BlockId b) const { return blocks_[b]; }
  const std::vector<StateSet>& blocks() const { return blocks_; }
  const std::string& name(BlockId b) const { return names_[b]; }
  const std::vector<std::string>& names() const { return names_; }
  BlockId block_of(StateId s) const { return block_of_[s]; }
  std::optional<BlockId> find(const StateSet& block) const;
  /// The block holding exactly these states; throws SemanticError otherwise.
  BlockId block_for(const StateSet& states) const;

  BlockSet empty_blocks() const { return BlockSet(size()); }
  BlockSet all_blocks() const;

  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<StateSet> blocks_;
  std::vector<std::string> names_;
  std::vector<BlockId> block_of_;
};

/// alpha_P(S): blocks meeting S.
BlockSet alpha(const Partition& p, const StateSet& s);
/// gamma_P(Bs): union of the blocks.
StateSet gamma(const Partition& p, const BlockSet& bs);

/// Abstract system over a partition with the exists-exists relation
/// B -> C iff some state of B steps to some state of C.
class AbstractTransitionSystem {
 public:
  AbstractTransitionSystem(const TransitionSystem& ts, Partition p);

  const Partition& partition() const { return partition_; }
  /// Sorted block pairs.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(BlockId from, BlockId to) const { return succ_[from].test(to); }
  const BlockSet& successors(BlockId b) const { return succ_[b]; }
  const BlockSet& predecessors(BlockId b) const { return pred_[b]; }

  BlockSet pre_ee(const BlockSet& bs) const;
  BlockSet post_ee(const BlockSet& bs) const;

 private:
  Partition partition_;
  std::vector<Edge> edges_;
  std::vector<BlockSet> succ_;
  std::vector<BlockSet> pred_;
};

inline AbstractTransitionSystem build_ats(const TransitionSystem& ts, Partition p) {
  return AbstractTransitionSystem(ts, std::move(p));
}

/// Merges the blocks of `p` whose abstract predecessor and successor sets
/// (computed once, over `p` itself) coincide. One pass; the result keeps
/// the best correct approximations of pre and post on `p`.
Partition partition_kernel(const TransitionSystem& ts, const Partition& p);

/// Re-applies partition_kernel to its own output until nothing merges.
/// Each stage keeps the approximations of the previous stage only, not
/// those of `p`.
Partition partition_kernel_fixpoint(const TransitionSystem& ts, const Partition& p);

/// Groups of original blocks merged by partition_kernel, one entry per
/// kernel block with more than one member, in kernel block order.
std::vector<std::vector<BlockId>> kernel_merges(const TransitionSystem& ts, const Partition& p);

/// Set-family view of the partition kernel: the closure under intersection
/// and union of gamma(pre_ee({C})) and gamma(post_ee({B})) over all blocks,
/// always holding the empty set and the full state set. Sorted. Limited to
/// 16 blocks.
std::vector<StateSet> kernel_family_oracle(const TransitionSystem& ts, const Partition& p);

/// Partition of the states into the classes no member of `family`
/// separates.
Partition family_atoms(std::size_t states, const std::vector<StateSet>& family);

struct CorrespondenceResult {
  bool holds = true;
  bool exhaustive = true;
  std::size_t checked = 0;
  std::optional<BlockSet> counterexample;
};

/// Checks alpha . pre . gamma == pre_ee and alpha . post . gamma == post_ee
/// on every block set (up to 16 blocks) or on a seeded sample plus all
/// singletons.
CorrespondenceResult bca_correspondence_check(const TransitionSystem& ts, const Partition& p,
                                              std::uint64_t seed = 0);

/// "{[1],[2,3]}"
std::string format_partition(const TransitionSystem& ts, const Partition& p);
/// "{[1],[2,3]}" for a block subset.
std::string format_blocks(const TransitionSystem& ts, const Partition& p, const BlockSet& bs);

}  // namespace egas

#endif  // EGAS_ATS_HPP
