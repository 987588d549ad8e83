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

#ifndef EGAS_CEGAR_HPP
#define EGAS_CEGAR_HPP

#include "egas/ats.hpp"

#include <optional>
#include <string>
#include <vector>

namespace egas {

/// Finite sequence of blocks of one partition. Lasso-shaped (infinite)
/// counterexamples are not representable.
struct AbstractPath {
  std::vector<BlockId> blocks;

  std::size_t length() const { return blocks.size(); }
  friend bool operator==(const AbstractPath&, const AbstractPath&) = default;
  friend auto operator<=>(const AbstractPath&, const AbstractPath&) = default;
};

/// Throws SemanticError unless `path` is nonempty and follows abstract
/// edges of `ats`.
void check_path(const AbstractTransitionSystem& ats, const AbstractPath& path);

/// Forward image of a path: S1 = B1, S(i+1) = post(Si) & B(i+1).
struct SpuResult {
  std::vector<StateSet> sets;
  /// Least 1-based k with S(k+1) empty.
  std::optional<std::size_t> failure_index;

  bool spurious() const { return failure_index.has_value(); }
};

SpuResult spu(const TransitionSystem& ts, const Partition& p, const AbstractPath& path);

/// All concrete paths abstracted to `path`, in lexicographic order.
/// Throws LimitError above `max_len` blocks.
std::vector<std::vector<StateId>> enumerate_concrete_paths(const TransitionSystem& ts,
                                                           const Partition& p,
                                                           const AbstractPath& path,
                                                           std::size_t max_len = 12);

/// Split of the failure block B_k of a spurious path.
///
///   dead       = S_k
///   bad        = B_k & pre(B_{k+1})
///   irrelevant = B_k minus (dead | bad)
///
/// and, for X in {bad, dead}, with As = pre_ee(X) and Cs = post_ee(X):
///
///   X_irr = post(gamma(As)) & pre(gamma(Cs)) & irrelevant
struct SplitResult {
  std::size_t k = 0;  // 1-based index into the path
  BlockId block = 0;
  StateSet dead;
  StateSet bad;
  StateSet irrelevant;
  StateSet bad_irr;
  StateSet dead_irr;
  StateSet fully_irr;  // neither bad- nor dead-irrelevant
  StateSet both_irr;   // bad_irr & dead_irr
};

/// Requires spu(path) to fail at `k`; throws SemanticError otherwise or when
/// the bad set is empty.
SplitResult split_failure_block(const TransitionSystem& ts, const Partition& p,
                                const AbstractPath& path, std::size_t k);

/// B_k -> {dead, bad + irrelevant}.
Partition refine_basic(const Partition& p, const SplitResult& split);

/// B_k -> {dead + dead_irr, bad + (bad_irr - both_irr) + fully_irr}.
/// States both bad- and dead-irrelevant go with the dead states; fully
/// irrelevant states go with the bad ones.
Partition refine_egas(const Partition& p, const SplitResult& split);

/// Shortest abstract path from a block in `init` to a block in `error`.
/// Breadth-first, seeded with init blocks in increasing id and expanding
/// successors in increasing id, so the result is deterministic.
std::optional<AbstractPath> find_counterexample(const AbstractTransitionSystem& ats,
                                                const BlockSet& init, const BlockSet& error);

enum class Heuristic { Basic, Egas };
enum class Verdict { Safe, RealCounterexample, Exhausted };

const char* to_string(Heuristic h);
const char* to_string(Verdict v);

struct IterationRecord {
  Partition partition;
  std::optional<AbstractPath> path;
  std::optional<SpuResult> spu;
  std::optional<SplitResult> split;
  std::string decision;
};

struct CegarOutcome {
  Verdict verdict = Verdict::Exhausted;
  /// Concrete init-to-error path when verdict is RealCounterexample.
  std::vector<StateId> counterexample;
  /// Partition the loop started from: the input, with blocks split so that
  /// init and error are unions of blocks.
  Partition initial;
  Partition final_partition;
  std::size_t refinements = 0;
  std::vector<IterationRecord> trace;
};

/// The refinement loop. Requires nonempty init and error sets. Performs at
/// most min(max_refinements, |states|) refinements; every refinement adds
/// exactly one block.
CegarOutcome cegar_loop(const TransitionSystem& ts, const Partition& initial, Heuristic h,
                        std::optional<std::size_t> max_refinements = std::nullopt);

/// Splits blocks of `p` so that `s` becomes a union of blocks.
Partition respect(const Partition& p, const StateSet& s);

/// Abstract paths of exactly `len` blocks, in lexicographic order.
std::vector<AbstractPath> enumerate_abstract_paths(const AbstractTransitionSystem& ats,
                                                   std::size_t len);

struct PreimageWitness {
  AbstractPath coarse;
  AbstractPath fine;
};

struct PreimageCheck {
  bool holds = true;
  std::size_t spurious_paths = 0;
  std::vector<PreimageWitness> witnesses;
  /// First spurious coarse path without a spurious fine preimage.
  std::optional<AbstractPath> violation;
};

/// Every spurious path of length <= max_len over `coarse` has a spurious
/// path over `fine` of equal length that is blockwise contained in it.
/// `fine` must refine `coarse`.
PreimageCheck preimage_check(const TransitionSystem& ts, const Partition& fine,
                             const Partition& coarse, std::size_t max_len);

/// preimage_check against the partition kernel of `p`. Limited to 12 states
/// and paths of length 6.
PreimageCheck coro2_check(const TransitionSystem& ts, const Partition& p, std::size_t max_len = 6);

/// "<[1],[3,4,5],[6]>"
std::string format_path(const TransitionSystem& ts, const Partition& p, const AbstractPath& path);

}  // namespace egas

#endif  // EGAS_CEGAR_HPP
