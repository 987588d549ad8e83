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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when
// any criterion fails.

#include "egas/absdom.hpp"
#include "egas/ats.hpp"
#include "egas/cegar.hpp"
#include "egas/error.hpp"
#include "egas/fixtures.hpp"
#include "egas/io.hpp"
#include "egas/kernel.hpp"
#include "egas/predabs.hpp"
#include "egas/random.hpp"

#include "oracles.hpp"

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace egas;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures; the first few messages are kept for the report.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) msg_ += (msg_.empty() ? "" : "; ") + what;
  }
  std::size_t count() const { return count_; }
  Outcome outcome(const std::string& summary) const {
    if (failed_ == 0) return {true, summary};
    return {false, std::to_string(failed_) + " of " + std::to_string(count_) + " failed: " + msg_};
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::string msg_;
};

oracle::Elems elems(const AbstractDomain& d) { return d.elements(); }

std::vector<ElemId> image_minus(const Lattice& l, std::initializer_list<const char*> removed) {
  std::vector<ElemId> out;
  for (ElemId x = 0; x < l.size(); ++x) {
    bool drop = false;
    for (auto* r : removed) drop = drop || l.name(x) == r;
    if (!drop) out.push_back(x);
  }
  return out;
}

StateSet states(const TransitionSystem& ts, std::initializer_list<const char*> labels) {
  return ts.states(labels);
}

BlockId block(const TransitionSystem& ts, const Partition& p,
              std::initializer_list<const char*> labels) {
  return p.block_for(states(ts, labels));
}

Partition partition_of(const TransitionSystem& ts,
                       std::initializer_list<std::initializer_list<const char*>> blocks) {
  std::vector<StateSet> bs;
  for (auto b : blocks) bs.push_back(states(ts, b));
  return Partition(ts.size(), bs);
}

oracle::Edges edges_of(const TransitionSystem& ts) { return ts.edges(); }

// Random lattices, domains and functions shared by criteria 2 and 3.
struct KernelCase {
  LatticePtr lattice;
  AbstractDomain domain;
  MonotoneFn f;
};

std::vector<KernelCase> random_kernel_cases(std::size_t n) {
  random::Engine rng(0);
  std::vector<KernelCase> out;
  while (out.size() < n) {
    auto l = random::lattice(rng, random::uniform(rng, 2, 4), 10);
    auto d = random::domain(rng, l, 8);
    auto f = random::monotone_fn(rng, l);
    out.push_back({l, d, f});
  }
  return out;
}

Outcome sign_kernel() {
  Check c;
  auto s = fixtures::sign();
  auto k = correctness_kernel(s.full, {s.sq});
  auto expected = image_minus(*s.lattice, {"lt0", "le0"});
  c.expect(k.kernel.elements() == expected, "kernel is " + s.lattice->format(k.kernel.image()));

  auto doc = parse_lattice(fixtures::kSignLattice);
  auto k2 = correctness_kernel(AbstractDomain::identity(doc.lattice), {doc.function("sq")});
  c.expect(k2.kernel.elements() == image_minus(*doc.lattice, {"lt0", "le0"}),
           "parsed fixture kernel is " + doc.lattice->format(k2.kernel.image()));
  return c.outcome("image " + s.lattice->format(k.kernel.image()));
}

Outcome oracle_agreement() {
  Check c;
  auto s = fixtures::sign();
  auto k = correctness_kernel(s.full, {s.sq}).kernel;
  c.expect(k == kernel_oracle(s.full, {s.sq}), "sign: library oracle differs");
  c.expect(k.elements() == oracle::kernel(*s.lattice, elems(s.full), {s.sq.table()}),
           "sign: brute-force oracle differs");
  std::size_t i = 0;
  for (const auto& kc : random_kernel_cases(100)) {
    auto kern = correctness_kernel(kc.domain, {kc.f}).kernel;
    c.expect(kern == kernel_oracle(kc.domain, {kc.f}),
             "random case " + std::to_string(i) + ": library oracle differs");
    c.expect(kern.elements() == oracle::kernel(*kc.lattice, elems(kc.domain), {kc.f.table()}),
             "random case " + std::to_string(i) + ": brute-force oracle differs");
    ++i;
  }
  return c.outcome("sign + " + std::to_string(i) + " random cases, seed 0");
}

Outcome kernel_post_check() {
  Check c;
  auto same = [&](const AbstractDomain& a, const FunctionFamily& fs, const std::string& what) {
    auto k = correctness_kernel(a, fs).kernel;
    for (const auto& f : fs) c.expect(k.bca_extended(f) == a.bca_extended(f), what + "/" + f.name());
  };
  auto s = fixtures::sign();
  same(s.full, {s.sq}, "sign");
  auto ne = fixtures::non_existence();
  for (const auto* d : {&ne.mu, &ne.rho1, &ne.rho2}) same(*d, {ne.f}, "non-existence");
  same(AbstractDomain::identity(ne.lattice), {ne.f}, "non-existence identity");
  auto inc = fixtures::increment(4);
  same(inc.a1, {inc.inc}, "increment a1");
  same(inc.a2, {inc.inc}, "increment a2");
  std::size_t i = 0;
  for (const auto& kc : random_kernel_cases(100)) {
    auto k = correctness_kernel(kc.domain, {kc.f}).kernel;
    c.expect(k.bca_extended(kc.f) == kc.domain.bca_extended(kc.f),
             "random case " + std::to_string(i));
    c.expect(oracle::same_bca(*kc.lattice, k.elements(), kc.domain.elements(), kc.f.table()),
             "random case " + std::to_string(i) + " (brute force)");
    ++i;
  }
  return c.outcome(std::to_string(c.count()) + " pointwise comparisons");
}

Outcome non_existence() {
  Check c;
  auto ne = fixtures::non_existence();
  const auto& l = *ne.lattice;
  c.expect(ne.mu.elements() == std::vector<ElemId>{*l.find("1"), *l.find("5")}, "mu is not {1,5}");
  c.expect(bca_equal(ne.rho1, ne.mu, ne.f), "rho1 changes the approximation");
  c.expect(bca_equal(ne.rho2, ne.mu, ne.f), "rho2 changes the approximation");
  auto g = abs_glb({ne.rho1, ne.rho2});
  c.expect(g == AbstractDomain::identity(ne.lattice), "glb is " + l.format(g.image()));
  c.expect(!bca_equal(g, ne.mu, ne.f), "glb keeps the approximation");
  c.expect(!oracle::same_bca(l, g.elements(), ne.mu.elements(), ne.f.table()),
           "brute force: glb keeps the approximation");
  auto r = most_concrete_counterexample();
  c.expect(r.rho1_equal && r.rho2_equal && !r.meet_equal, "built-in demonstration disagrees");
  return c.outcome("glb = identity, witness " + r.witness_name);
}

Outcome fig1_kernel() {
  Check c;
  auto doc = fixtures::fig1();
  const auto& ts = doc.system;
  auto p = doc.partition;
  c.expect(p == partition_of(ts, {{"1"}, {"2", "3"}, {"4", "5"}, {"6"}, {"7"}, {"8", "9"}}),
           "unexpected input partition");
  auto k = partition_kernel(ts, p);
  auto expected = partition_of(ts, {{"1"}, {"2", "3", "4", "5"}, {"6", "7"}, {"8", "9"}});
  c.expect(k == expected, "kernel is " + format_partition(ts, k));
  c.expect(oracle::blocks_of(k) == oracle::partition_kernel(edges_of(ts), oracle::blocks_of(p)),
           "brute-force grouping differs");
  return c.outcome(format_partition(ts, k));
}

// Every block set: alpha(pre(gamma(Bs))) against pre_ee, both from the
// library and from the edge-list oracle.
void correspondence(Check& c, const TransitionSystem& ts, const Partition& p,
                    const std::string& what) {
  auto r = bca_correspondence_check(ts, p);
  c.expect(r.holds && r.exhaustive, what + ": library check fails");
  AbstractTransitionSystem ats(ts, p);
  auto blocks = oracle::blocks_of(p);
  auto e = edges_of(ts);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
    BlockSet bs(p.size());
    oracle::Set obs;
    for (BlockId b = 0; b < p.size(); ++b)
      if (m >> b & 1) {
        bs.set(b);
        obs.insert(b);
      }
    auto as_set = [](const BlockSet& x) {
      auto v = members(x);
      return oracle::Set(v.begin(), v.end());
    };
    c.expect(as_set(ats.pre_ee(bs)) == oracle::abstract_step(e, blocks, obs, false) &&
                 as_set(alpha(p, ts.pre(gamma(p, bs)))) == as_set(ats.pre_ee(bs)),
             what + ": pre");
    c.expect(as_set(ats.post_ee(bs)) == oracle::abstract_step(e, blocks, obs, true) &&
                 as_set(alpha(p, ts.post(gamma(p, bs)))) == as_set(ats.post_ee(bs)),
             what + ": post");
  }
}

Outcome exists_exists() {
  Check c;
  auto f1 = fixtures::fig1();
  auto f2 = fixtures::fig2();
  correspondence(c, f1.system, f1.partition, "fig1");
  correspondence(c, f2.system, f2.partition, "fig2");
  random::Engine rng(0);
  for (int i = 0; i < 50; ++i) {
    auto n = random::uniform(rng, 2, 10);
    auto ts = random::system(rng, n, 0.25);
    auto p = random::partition(rng, n, random::uniform(rng, 1, 5));
    correspondence(c, ts, p, "random " + std::to_string(i));
  }
  return c.outcome("fig1, fig2, 50 random systems; " + std::to_string(c.count()) + " block sets");
}

// Independent statement of the preimage property over edge lists: counts
// spurious coarse paths and reports whether each has a spurious blockwise
// contained fine path.
struct OracleCoro {
  std::size_t spurious = 0;
  bool holds = true;
};

OracleCoro coro_oracle(const TransitionSystem& ts, const Partition& fine, const Partition& coarse,
                       std::size_t max_len) {
  auto e = edges_of(ts);
  auto fb = oracle::blocks_of(fine);
  auto cb = oracle::blocks_of(coarse);
  auto edge = [&](const std::vector<oracle::Set>& bs, std::uint32_t a, std::uint32_t b) {
    return oracle::meets(oracle::post(e, bs[a]), bs[b]);
  };
  auto inside = [](const oracle::Set& a, const oracle::Set& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  OracleCoro out;
  std::vector<std::uint32_t> path;
  std::function<bool(const std::vector<std::uint32_t>&, std::vector<std::uint32_t>&)> fine_search =
      [&](const std::vector<std::uint32_t>& cp, std::vector<std::uint32_t>& fp) {
        if (fp.size() == cp.size()) return !oracle::has_concrete_path(e, fb, fp);
        for (std::uint32_t b = 0; b < fb.size(); ++b) {
          if (!inside(fb[b], cb[cp[fp.size()]])) continue;
          if (!fp.empty() && !edge(fb, fp.back(), b)) continue;
          fp.push_back(b);
          bool ok = fine_search(cp, fp);
          fp.pop_back();
          if (ok) return true;
        }
        return false;
      };
  std::function<void()> extend = [&] {
    if (!path.empty() && !oracle::has_concrete_path(e, cb, path)) {
      ++out.spurious;
      std::vector<std::uint32_t> fp;
      if (!fine_search(path, fp)) out.holds = false;
    }
    if (path.size() == max_len) return;
    for (std::uint32_t b = 0; b < cb.size(); ++b) {
      if (!path.empty() && !edge(cb, path.back(), b)) continue;
      path.push_back(b);
      extend();
      path.pop_back();
    }
  };
  extend();
  return out;
}

Outcome coro2() {
  Check c;
  auto doc = fixtures::fig1();
  const auto& ts = doc.system;
  const auto& p = doc.partition;
  auto r = coro2_check(ts, p, 6);
  auto o = coro_oracle(ts, p, partition_kernel(ts, p), 6);
  c.expect(r.holds && o.holds, "fig1 kernel");
  c.expect(r.spurious_paths == o.spurious, "fig1 spurious path count differs");

  // The pair from the worked example, over the partition with only [2,3]
  // and [4,5] merged.
  auto merged = partition_of(ts, {{"1"}, {"2", "3", "4", "5"}, {"6"}, {"7"}, {"8", "9"}});
  AbstractPath coarse{{block(ts, merged, {"1"}), block(ts, merged, {"2", "3", "4", "5"}),
                       block(ts, merged, {"7"}), block(ts, merged, {"8", "9"})}};
  AbstractPath fine{{block(ts, p, {"1"}), block(ts, p, {"4", "5"}), block(ts, p, {"7"}),
                     block(ts, p, {"8", "9"})}};
  AbstractTransitionSystem coarse_ats(ts, merged), fine_ats(ts, p);
  bool paths = true;
  try {
    check_path(coarse_ats, coarse);
    check_path(fine_ats, fine);
  } catch (const egas::Error&) {
    paths = false;
  }
  c.expect(paths, "witness pair is not a pair of abstract paths");
  if (paths) {
    bool contained = true;
    for (std::size_t i = 0; i < fine.length(); ++i)
      contained = contained && fine_ats.partition().block(fine.blocks[i]).is_subset_of(
                                   coarse_ats.partition().block(coarse.blocks[i]));
    c.expect(contained, "witness fine path is not inside the coarse one");
    c.expect(spu(ts, merged, coarse).spurious(), "coarse witness is not spurious");
    c.expect(spu(ts, p, fine).spurious(), "fine witness is not spurious");
  }
  auto w = preimage_check(ts, p, merged, 6);
  c.expect(w.holds, "merged partition violates the property");

  random::Engine rng(0);
  std::size_t spurious = 0;
  for (int i = 0; i < 50; ++i) {
    auto n = random::uniform(rng, 4, 12);
    auto rts = random::system(rng, n, 0.2);
    auto rp = random::partition(rng, n, random::uniform(rng, 2, 6));
    auto rr = coro2_check(rts, rp, 6);
    auto kern = partition_kernel(rts, rp);
    auto ro = coro_oracle(rts, rp, kern, 6);
    c.expect(rr.holds, "random " + std::to_string(i));
    c.expect(ro.holds, "random " + std::to_string(i) + " (brute force)");
    c.expect(rr.spurious_paths == ro.spurious,
             "random " + std::to_string(i) + ": spurious path count differs");
    spurious += ro.spurious;
  }
  return c.outcome("fig1, witness pair, 50 random systems, " + std::to_string(spurious) +
                   " spurious kernel paths");
}

Outcome fig2_step() {
  Check c;
  auto doc = fixtures::fig2();
  const auto& ts = doc.system;
  const auto& p = doc.partition;
  AbstractPath path{{block(ts, p, {"1"}), block(ts, p, {"3", "4", "5"}), block(ts, p, {"6"})}};
  auto s = spu(ts, p, path);
  c.expect(s.failure_index == std::optional<std::size_t>(2), "spu does not fail at block 2");
  c.expect(!oracle::has_concrete_path(edges_of(ts), oracle::blocks_of(p), path.blocks),
           "brute force finds a concrete path");
  auto split = split_failure_block(ts, p, path, 2);
  c.expect(split.dead == states(ts, {"5"}), "dead is " + ts.format(split.dead));
  c.expect(split.bad == states(ts, {"3"}), "bad is " + ts.format(split.bad));
  c.expect(split.irrelevant == states(ts, {"4"}), "irrelevant is " + ts.format(split.irrelevant));
  c.expect(split.dead_irr == states(ts, {"4"}), "dead_irr is " + ts.format(split.dead_irr));
  auto egas = refine_egas(p, split);
  c.expect(egas == partition_of(ts, {{"1"}, {"2"}, {"3"}, {"4", "5"}, {"6"}, {"7"}}),
           "egas gives " + format_partition(ts, egas));
  auto basic = refine_basic(p, split);
  c.expect(basic == partition_of(ts, {{"1"}, {"2"}, {"3", "4"}, {"5"}, {"6"}, {"7"}}),
           "basic gives " + format_partition(ts, basic));
  return c.outcome("egas " + format_partition(ts, egas) + ", basic " + format_partition(ts, basic));
}

Outcome cegar_traces() {
  Check c;
  auto doc = fixtures::fig2();
  const auto& ts = doc.system;
  auto a = partition_of(ts, {{"1"}, {"2"}, {"3", "4", "5"}, {"6"}, {"7"}});
  auto a1 = partition_of(ts, {{"1"}, {"2"}, {"3", "4"}, {"5"}, {"6"}, {"7"}});
  auto a2 = partition_of(ts, {{"1"}, {"2"}, {"3"}, {"4", "5"}, {"6"}, {"7"}});
  auto a3 = Partition::discrete(ts.size());

  auto trace_of = [](const CegarOutcome& o) {
    std::vector<Partition> out;
    for (const auto& it : o.trace) out.push_back(it.partition);
    return out;
  };
  auto render = [&](const CegarOutcome& o) {
    std::string s;
    for (const auto& it : o.trace) s += (s.empty() ? "" : " -> ") + format_partition(ts, it.partition);
    return s;
  };

  auto basic = cegar_loop(ts, doc.partition, Heuristic::Basic);
  c.expect(trace_of(basic) == std::vector<Partition>{a, a1, a3}, "basic: " + render(basic));
  c.expect(basic.verdict == Verdict::Safe && basic.refinements == 2, "basic verdict");

  auto egas = cegar_loop(ts, doc.partition, Heuristic::Egas);
  c.expect(trace_of(egas) == std::vector<Partition>{a, a2}, "egas: " + render(egas));
  c.expect(egas.verdict == Verdict::Safe && egas.refinements == 1, "egas verdict");
  c.expect(!egas.trace.empty() && !egas.trace.back().path.has_value(),
           "egas ends with a counterexample");
  AbstractTransitionSystem final_ats(ts, egas.final_partition);
  c.expect(!find_counterexample(final_ats, alpha(egas.final_partition, *ts.init()),
                                alpha(egas.final_partition, *ts.error())),
           "counterexample left after egas");
  return c.outcome("basic A -> A' -> A''', egas A -> A''");
}

void spu_cases(Check& c, const TransitionSystem& ts, const Partition& p, std::size_t max_len,
               const std::string& what) {
  AbstractTransitionSystem ats(ts, p);
  auto e = edges_of(ts);
  auto blocks = oracle::blocks_of(p);
  for (std::size_t len = 1; len <= max_len; ++len)
    for (const auto& path : enumerate_abstract_paths(ats, len)) {
      bool spurious = spu(ts, p, path).spurious();
      bool empty = enumerate_concrete_paths(ts, p, path, max_len).empty();
      bool none = !oracle::has_concrete_path(e, blocks, path.blocks);
      c.expect(spurious == empty && empty == none, what + ": " + format_path(ts, p, path));
    }
}

Outcome spu_equivalence() {
  Check c;
  auto f1 = fixtures::fig1();
  auto f2 = fixtures::fig2();
  spu_cases(c, f1.system, f1.partition, 8, "fig1");
  spu_cases(c, f1.system, partition_kernel(f1.system, f1.partition), 8, "fig1 kernel");
  spu_cases(c, f2.system, f2.partition, 8, "fig2");
  random::Engine rng(0);
  for (int i = 0; i < 30; ++i) {
    auto n = random::uniform(rng, 3, 7);
    auto ts = random::system(rng, n, 0.2);
    auto p = random::partition(rng, n, random::uniform(rng, 2, 3));
    spu_cases(c, ts, p, 8, "random " + std::to_string(i));
  }
  return c.outcome(std::to_string(c.count()) + " abstract paths up to length 8");
}

Outcome predicate_tables() {
  Check c;
  auto fp = foo_program(4);
  BooleanAbstraction b(fp.space, fp.predicates);
  // Valuation masks: <0,0> = bit 0, <0,1> = bit 1, <1,0> = bit 2, <1,1> = bit 3.
  BoolTable s1{0b1000, 0b1000, 0b1000, 0b1000};
  BoolTable s2{0b0011, 0b0001, 0b0011, 0b0001};
  auto t1 = b.post_table(fp.s1);
  auto t2 = b.post_table(fp.s2);
  c.expect(t1 == s1, "S1 table differs");
  c.expect(t2 == s2, "S2 table differs");

  auto boolean = foo_verification(Abstraction::Boolean, 4);
  c.expect(boolean.lfp == "{<0,0>, <1,1>}", "boolean lfp is " + boolean.lfp);
  c.expect(boolean.verdict == Reachability::Unreachable, "boolean verdict");
  auto kernel = foo_verification(Abstraction::Kernel, 4);
  c.expect(kernel.verdict == Reachability::Unreachable, "kernel verdict");
  auto cart = foo_verification(Abstraction::Cartesian, 4);
  c.expect(cart.lfp == "<*,*>", "cartesian lfp is " + cart.lfp);
  c.expect(cart.verdict == Reachability::Inconclusive, "cartesian verdict");

  auto k = boolean_kernel(b, {fp.s1, fp.s2});
  std::vector<ElemId> expected;
  for (ElemId m = 0; m < 16; ++m)
    if ((m & ~0b1011u) == 0 || m == 0b1111) expected.push_back(m);
  c.expect(k.kernel.elements() == expected, "kernel is " + b.lattice()->format(k.kernel.image()));
  return c.outcome("kernel " + b.lattice()->format(k.kernel.image()));
}

Outcome closure_laws() {
  Check c;
  random::Engine rng(0);
  std::size_t instances = 0;
  for (int i = 0; i < 300; ++i) {
    auto l = random::lattice(rng, random::uniform(rng, 2, 5), 12);
    auto d = random::domain(rng, l, 8);
    const auto& L = *l;
    bool ext = true, idem = true, mono = true;
    for (ElemId x = 0; x < L.size(); ++x) {
      ext = ext && L.leq(x, d.apply(x));
      idem = idem && d.apply(d.apply(x)) == d.apply(x);
      for (ElemId y = 0; y < L.size(); ++y)
        if (L.leq(x, y)) mono = mono && L.leq(d.apply(x), d.apply(y));
    }
    c.expect(ext, "extensive " + std::to_string(i));
    c.expect(idem, "idempotent " + std::to_string(i));
    c.expect(mono, "monotone " + std::to_string(i));
    ElementSet x(L.size());
    for (ElemId e = 0; e < L.size(); ++e)
      if (random::uniform(rng, 0, 2) == 0) x.set(e);
    auto m = L.meet_closure(x);
    auto j = L.join_closure(x);
    c.expect(L.meet_closure(m) == m && x.is_subset_of(m), "meet closure " + std::to_string(i));
    c.expect(L.join_closure(j) == j && x.is_subset_of(j), "join closure " + std::to_string(i));
    c.expect(oracle::meet_closed(L, members(m)), "meet closure not closed " + std::to_string(i));
    c.expect(oracle::join_closed(L, members(j)), "join closure not closed " + std::to_string(i));
    instances += 7;
  }
  for (int i = 0; i < 200; ++i) {
    auto n = random::uniform(rng, 2, 10);
    auto ts = random::system(rng, n, 0.3);
    auto p = random::partition(rng, n, random::uniform(rng, 1, 5));
    StateSet s(n);
    for (std::size_t k = 0; k < n; ++k)
      if (random::uniform(rng, 0, 1)) s.set(k);
    BlockSet bs(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
      if (random::uniform(rng, 0, 1)) bs.set(k);
    // alpha(S) <= Bs iff S <= gamma(Bs); gamma . alpha extensive;
    // alpha . gamma identity.
    c.expect(alpha(p, s).is_subset_of(bs) == s.is_subset_of(gamma(p, bs)),
             "adjunction " + std::to_string(i));
    c.expect(s.is_subset_of(gamma(p, alpha(p, s))), "gamma.alpha " + std::to_string(i));
    c.expect(alpha(p, gamma(p, bs)) == bs, "alpha.gamma " + std::to_string(i));
    StateSet cover(n);
    bool disjoint_blocks = true;
    for (const auto& blk : p.blocks()) {
      disjoint_blocks = disjoint_blocks && !blk.none() && !cover.intersects(blk);
      cover |= blk;
    }
    c.expect(disjoint_blocks && cover.all(), "partition blocks " + std::to_string(i));
    auto k = partition_kernel(ts, p);
    c.expect(p.refines(k), "kernel is not coarser " + std::to_string(i));
    auto r = respect(p, s);
    bool unions = true;
    for (const auto& blk : r.blocks()) unions = unions && (blk.is_subset_of(s) || !blk.intersects(s));
    c.expect(r.refines(p) && unions, "respect " + std::to_string(i));
    instances += 6;
  }
  return c.outcome(std::to_string(instances) + " randomized checks, seed 0");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "sign kernel", sign_kernel},
      {2, "kernel oracle agreement", oracle_agreement},
      {3, "kernel keeps every approximation", kernel_post_check},
      {4, "no most concrete simplification", non_existence},
      {5, "fig1 partition kernel", fig1_kernel},
      {6, "exists-exists correspondence", exists_exists},
      {7, "spurious path preimages", coro2},
      {8, "fig2 refinement step", fig2_step},
      {9, "refinement traces", cegar_traces},
      {10, "spu and path enumeration agree", spu_equivalence},
      {11, "predicate abstraction tables", predicate_tables},
      {12, "closure laws", closure_laws},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.title, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
