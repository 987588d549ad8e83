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

#include "egas/cegar.hpp"

#include "egas/error.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace egas {

void check_path(const AbstractTransitionSystem& ats, const AbstractPath& path) {
  if (path.blocks.empty()) throw SemanticError("abstract path is empty");
  const auto m = ats.partition().size();
  for (std::size_t i = 0; i < path.length(); ++i) {
    if (path.blocks[i] >= m) throw SemanticError("abstract path names an unknown block");
    if (i > 0 && !ats.has_edge(path.blocks[i - 1], path.blocks[i]))
      throw SemanticError("abstract path steps along a missing abstract edge at position " +
                          std::to_string(i));
  }
}

SpuResult spu(const TransitionSystem& ts, const Partition& p, const AbstractPath& path) {
  if (path.blocks.empty()) throw SemanticError("abstract path is empty");
  for (auto b : path.blocks)
    if (b >= p.size()) throw SemanticError("abstract path names an unknown block");
  SpuResult r;
  r.sets.push_back(p.block(path.blocks[0]));
  for (std::size_t i = 1; i < path.length(); ++i) {
    r.sets.push_back(ts.post(r.sets.back()) & p.block(path.blocks[i]));
    if (!r.failure_index && r.sets.back().none()) r.failure_index = i;  // S(i+1) empty, k = i
  }
  return r;
}

std::vector<std::vector<StateId>> enumerate_concrete_paths(const TransitionSystem& ts,
                                                           const Partition& p,
                                                           const AbstractPath& path,
                                                           std::size_t max_len) {
  if (path.length() > max_len)
    throw LimitError("concrete path enumeration is bounded to " + std::to_string(max_len) +
                     " blocks");
  if (path.blocks.empty()) throw SemanticError("abstract path is empty");
  std::vector<std::vector<StateId>> out;
  std::vector<StateId> cur;
  auto dfs = [&](auto&& self, const StateSet& candidates) -> void {
    const auto depth = cur.size();
    for_each_member(candidates, [&](std::size_t s) {
      cur.push_back(static_cast<StateId>(s));
      if (depth + 1 == path.length())
        out.push_back(cur);
      else
        self(self, ts.successors(static_cast<StateId>(s)) & p.block(path.blocks[depth + 1]));
      cur.pop_back();
    });
  };
  dfs(dfs, p.block(path.blocks[0]));
  return out;
}

SplitResult split_failure_block(const TransitionSystem& ts, const Partition& p,
                                const AbstractPath& path, std::size_t k) {
  auto s = spu(ts, p, path);
  if (s.failure_index != k)
    throw SemanticError("path does not fail at position " + std::to_string(k));
  SplitResult r;
  r.k = k;
  r.block = path.blocks[k - 1];
  const auto& bk = p.block(r.block);
  r.dead = s.sets[k - 1];
  r.bad = bk & ts.pre(p.block(path.blocks[k]));
  if (r.bad.none()) throw SemanticError("failure block has no bad states");
  if (r.dead.intersects(r.bad)) throw std::logic_error("dead and bad states overlap");
  r.irrelevant = bk - (r.dead | r.bad);

  auto relevant_to = [&](const StateSet& x) {
    auto from = gamma(p, alpha(p, ts.pre(x)));
    auto to = gamma(p, alpha(p, ts.post(x)));
    return ts.post(from) & ts.pre(to) & r.irrelevant;
  };
  r.bad_irr = relevant_to(r.bad);
  r.dead_irr = relevant_to(r.dead);
  r.both_irr = r.bad_irr & r.dead_irr;
  r.fully_irr = r.irrelevant - (r.bad_irr | r.dead_irr);
  return r;
}

namespace {

Partition replace_block(const Partition& p, BlockId target, const StateSet& a, const StateSet& b) {
  std::vector<StateSet> blocks;
  std::vector<std::string> names;
  for (BlockId i = 0; i < p.size(); ++i) {
    if (i == target) continue;
    blocks.push_back(p.block(i));
    names.push_back(p.name(i));
  }
  for (const auto* part : {&a, &b}) {
    if (part->none()) continue;
    blocks.push_back(*part);
    names.emplace_back();
  }
  return Partition(p.state_count(), std::move(blocks), std::move(names));
}

}  // namespace

Partition refine_basic(const Partition& p, const SplitResult& split) {
  return replace_block(p, split.block, split.dead, split.bad | split.irrelevant);
}

Partition refine_egas(const Partition& p, const SplitResult& split) {
  auto dead_side = split.dead | split.dead_irr;
  auto bad_side = split.bad | (split.bad_irr - split.both_irr) | split.fully_irr;
  return replace_block(p, split.block, dead_side, bad_side);
}

std::optional<AbstractPath> find_counterexample(const AbstractTransitionSystem& ats,
                                                const BlockSet& init, const BlockSet& error) {
  const auto m = ats.partition().size();
  std::vector<std::optional<BlockId>> parent(m);
  std::vector<char> seen(m, 0);
  std::deque<BlockId> queue;
  for_each_member(init, [&](std::size_t b) {
    seen[b] = 1;
    queue.push_back(static_cast<BlockId>(b));
  });
  while (!queue.empty()) {
    auto b = queue.front();
    queue.pop_front();
    if (error.test(b)) {
      AbstractPath path;
      for (std::optional<BlockId> cur = b; cur; cur = parent[*cur]) path.blocks.push_back(*cur);
      std::reverse(path.blocks.begin(), path.blocks.end());
      return path;
    }
    for_each_member(ats.successors(b), [&](std::size_t c) {
      if (seen[c]) return;
      seen[c] = 1;
      parent[c] = b;
      queue.push_back(static_cast<BlockId>(c));
    });
  }
  return std::nullopt;
}

const char* to_string(Heuristic h) { return h == Heuristic::Basic ? "basic" : "egas"; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Safe:
      return "SAFE";
    case Verdict::RealCounterexample:
      return "COUNTEREXAMPLE";
    case Verdict::Exhausted:
      return "EXHAUSTED";
  }
  return "?";
}

Partition respect(const Partition& p, const StateSet& s) {
  std::vector<StateSet> blocks;
  std::vector<std::string> names;
  for (BlockId b = 0; b < p.size(); ++b) {
    auto in = p.block(b) & s;
    auto out = p.block(b) - s;
    if (in.any() && out.any()) {
      blocks.push_back(std::move(in));
      blocks.push_back(std::move(out));
      names.emplace_back();
      names.emplace_back();
    } else {
      blocks.push_back(p.block(b));
      names.push_back(p.name(b));
    }
  }
  return Partition(p.state_count(), std::move(blocks), std::move(names));
}

namespace {

std::vector<StateId> concrete_witness(const TransitionSystem& ts, const SpuResult& s) {
  std::vector<StateId> path(s.sets.size());
  auto last = s.sets.back();
  path.back() = static_cast<StateId>(last.find_first());
  for (std::size_t i = s.sets.size() - 1; i-- > 0;) {
    auto choices = s.sets[i] & ts.predecessors(path[i + 1]);
    path[i] = static_cast<StateId>(choices.find_first());
  }
  return path;
}

}  // namespace

CegarOutcome cegar_loop(const TransitionSystem& ts, const Partition& initial, Heuristic h,
                        std::optional<std::size_t> max_refinements) {
  if (!ts.init() || ts.init()->none()) throw SemanticError("CEGAR needs a nonempty init set");
  if (!ts.error() || ts.error()->none()) throw SemanticError("CEGAR needs a nonempty error set");
  if (initial.state_count() != ts.size())
    throw SemanticError("partition does not match the transition system");

  auto p = respect(respect(initial, *ts.init()), *ts.error());
  CegarOutcome out{Verdict::Exhausted, {}, p, p, 0, {}};
  const auto cap = std::min(max_refinements.value_or(ts.size()), ts.size());

  for (;;) {
    AbstractTransitionSystem ats(ts, p);
    IterationRecord rec{p, std::nullopt, std::nullopt, std::nullopt, {}};
    auto path = find_counterexample(ats, alpha(p, *ts.init()), alpha(p, *ts.error()));
    if (!path) {
      rec.decision = "no abstract counterexample";
      out.trace.push_back(std::move(rec));
      out.verdict = Verdict::Safe;
      break;
    }
    rec.path = path;
    rec.spu = spu(ts, p, *path);
    if (!rec.spu->spurious()) {
      out.counterexample = concrete_witness(ts, *rec.spu);
      rec.decision = "counterexample is real";
      out.trace.push_back(std::move(rec));
      out.verdict = Verdict::RealCounterexample;
      break;
    }
    if (out.refinements >= cap) {
      rec.decision = "refinement budget exhausted";
      out.trace.push_back(std::move(rec));
      out.verdict = Verdict::Exhausted;
      break;
    }
    auto split = split_failure_block(ts, p, *path, *rec.spu->failure_index);
    auto next = h == Heuristic::Basic ? refine_basic(p, split) : refine_egas(p, split);
    if (next.size() != p.size() + 1) throw std::logic_error("refinement did not add one block");
    rec.decision = std::string(to_string(h)) + ": split " + ts.format(p.block(split.block)) + " into ";
    bool first = true;
    for (BlockId b = 0; b < next.size(); ++b) {
      if (p.find(next.block(b))) continue;
      rec.decision += (first ? "" : " | ") + ts.format(next.block(b));
      first = false;
    }
    rec.split = std::move(split);
    out.trace.push_back(std::move(rec));
    p = std::move(next);
    ++out.refinements;
  }
  out.final_partition = p;
  return out;
}

std::vector<AbstractPath> enumerate_abstract_paths(const AbstractTransitionSystem& ats,
                                                   std::size_t len) {
  std::vector<AbstractPath> out;
  if (len == 0) return out;
  AbstractPath cur;
  auto dfs = [&](auto&& self, const BlockSet& next) -> void {
    for_each_member(next, [&](std::size_t b) {
      cur.blocks.push_back(static_cast<BlockId>(b));
      if (cur.length() == len)
        out.push_back(cur);
      else
        self(self, ats.successors(static_cast<BlockId>(b)));
      cur.blocks.pop_back();
    });
  };
  dfs(dfs, ats.partition().all_blocks());
  return out;
}

PreimageCheck preimage_check(const TransitionSystem& ts, const Partition& fine,
                             const Partition& coarse, std::size_t max_len) {
  if (!fine.refines(coarse)) throw SemanticError("partition does not refine the coarser one");
  AbstractTransitionSystem fine_ats(ts, fine), coarse_ats(ts, coarse);
  // fine blocks inside each coarse block
  std::vector<BlockSet> inside(coarse.size(), fine.empty_blocks());
  for (BlockId b = 0; b < fine.size(); ++b)
    inside[coarse.block_of(static_cast<StateId>(fine.block(b).find_first()))].set(b);

  PreimageCheck r;
  for (std::size_t len = 2; len <= max_len; ++len) {
    for (const auto& pi : enumerate_abstract_paths(coarse_ats, len)) {
      if (!spu(ts, coarse, pi).spurious()) continue;
      ++r.spurious_paths;
      std::optional<AbstractPath> found;
      AbstractPath cur;
      auto dfs = [&](auto&& self, const BlockSet& candidates) -> void {
        for_each_member(candidates, [&](std::size_t c) {
          if (found) return;
          cur.blocks.push_back(static_cast<BlockId>(c));
          if (cur.length() == len) {
            if (spu(ts, fine, cur).spurious()) found = cur;
          } else {
            self(self, fine_ats.successors(static_cast<BlockId>(c)) & inside[pi.blocks[cur.length()]]);
          }
          cur.blocks.pop_back();
        });
      };
      dfs(dfs, inside[pi.blocks[0]]);
      if (found) {
        r.witnesses.push_back({pi, *found});
      } else {
        r.holds = false;
        if (!r.violation) r.violation = pi;
      }
    }
  }
  return r;
}

PreimageCheck coro2_check(const TransitionSystem& ts, const Partition& p, std::size_t max_len) {
  if (ts.size() > 12) throw LimitError("coro2 check is limited to 12 states");
  if (max_len > 6) throw LimitError("coro2 check is limited to paths of length 6");
  return preimage_check(ts, p, partition_kernel(ts, p), max_len);
}

std::string format_path(const TransitionSystem& ts, const Partition& p, const AbstractPath& path) {
  std::string out = "<";
  for (std::size_t i = 0; i < path.length(); ++i) {
    if (i) out += ",";
    out += ts.format(p.block(path.blocks[i]));
  }
  return out + ">";
}

}  // namespace egas
