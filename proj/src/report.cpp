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

#include "egas/report.hpp"

#include "egas/error.hpp"
#include "egas/random.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

namespace egas::report {

using nlohmann::json;

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

json inputs_json(const std::vector<Input>& inputs) {
  auto sorted = inputs;
  std::sort(sorted.begin(), sorted.end(),
            [](const Input& a, const Input& b) { return std::tie(a.role, a.path) < std::tie(b.role, b.path); });
  json out = json::array();
  for (const auto& in : sorted) out.push_back({{"role", in.role}, {"path", in.path}, {"sha256", in.sha256}});
  return out;
}

std::string document(const std::string& command, const std::vector<Input>& inputs, json result) {
  json doc{{"command", command}, {"inputs", inputs_json(inputs)}, {"result", std::move(result)}};
  return doc.dump(2) + "\n";
}

json names(const Lattice& l, const ElementSet& s) {
  json out = json::array();
  for (auto x : members(s)) out.push_back(l.name(x));
  return out;
}

json states_json(const TransitionSystem& ts, const StateSet& s) {
  json out = json::array();
  for (auto x : members(s)) out.push_back(ts.label(x));
  return out;
}

json partition_json(const TransitionSystem& ts, const Partition& p) {
  json out = json::array();
  for (const auto& b : p.blocks()) out.push_back(states_json(ts, b));
  return out;
}

std::string list(const Lattice& l, const ElementSet& s) {
  std::string out;
  for (auto x : members(s)) out += (out.empty() ? "" : ", ") + l.name(x);
  return out.empty() ? "none" : out;
}

void describe_inputs(std::ostringstream& out, const std::vector<Input>& inputs) {
  for (const auto& in : inputs) out << in.role << ": " << in.path << '\n';
}

}  // namespace

Input input_of(std::string role, const std::string& path, const std::string& content) {
  return Input{std::move(role), path, sha256_hex(content)};
}

std::string dot_ats(const TransitionSystem& ts, const Partition& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  if (p.size() > 0) {
    out << "  node [shape=ellipse];\n";
    for (BlockId b = 0; b < p.size(); ++b) {
      const auto& blk = p.block(b);
      std::string shape;
      if (ts.error() && blk.intersects(*ts.error()))
        shape = ", shape=doublecircle";
      else if (ts.init() && blk.intersects(*ts.init()))
        shape = ", shape=box";
      out << "  b" << b << " [label=" << quote(ts.format(blk)) << shape << "];\n";
    }
    AbstractTransitionSystem ats(ts, p);
    for (auto [a, c] : ats.edges()) out << "  b" << a << " -> b" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_lattice(const Lattice& l, const ElementSet* highlight, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (ElemId x = 0; x < l.size(); ++x) {
    out << "  n" << x << " [label=" << quote(l.name(x));
    if (highlight && highlight->test(x)) out << ", style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  for (auto [lo, hi] : l.hasse_edges()) out << "  n" << lo << " -> n" << hi << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

Report lattice_check(const Input& in, const LatticeSource& src) {
  Report r;
  std::ostringstream out;
  out << "lattice-check\n";
  describe_inputs(out, {in});
  json result{{"elements", src.poset.size()}};
  auto diag = validate(src.poset);
  if (diag.ok) {
    try {
      auto doc = build_lattice_document(src);
      const auto& l = *doc.lattice;
      out << "elements: " << l.size() << "\nresult: valid\ntop: " << l.name(l.top())
          << "\nbottom: " << l.name(l.bottom()) << "\ncovers: " << l.hasse_edges().size() << '\n';
      json fns = json::array();
      for (const auto& f : doc.functions) {
        out << "function " << f.name() << ": monotone\n";
        fns.push_back(f.name());
      }
      json doms = json::array();
      for (const auto& [n, d] : doc.domains) {
        out << "domain " << n << ": " << l.format(d.image()) << '\n';
        doms.push_back({{"name", n}, {"image", names(l, d.image())}});
      }
      result["valid"] = true;
      result["top"] = l.name(l.top());
      result["bottom"] = l.name(l.bottom());
      result["covers"] = l.hasse_edges().size();
      result["functions"] = fns;
      result["domains"] = doms;
      r.files.emplace_back("lattice.dot", dot_lattice(l));
    } catch (const SemanticError& e) {
      diag.ok = false;
      diag.message = e.what();
    }
  }
  if (!diag.ok) {
    r.ok = false;
    out << "elements: " << src.poset.size() << "\nresult: invalid\nreason: " << diag.message << '\n';
    result["valid"] = false;
    result["reason"] = diag.message;
    if (diag.pair)
      result["pair"] = {src.poset.names[diag.pair->first], src.poset.names[diag.pair->second]};
  }
  r.text = out.str();
  r.json = document("lattice-check", {in}, result);
  return r;
}

AbstractDomain resolve_domain(const LatticeDocument& doc, const std::string& spec,
                              std::vector<Input>& inputs) {
  if (spec == "full") return AbstractDomain::identity(doc.lattice);
  if (auto d = doc.domain(spec)) return *d;
  auto text = read_file(spec);
  inputs.push_back(input_of("domain", spec, text));
  return parse_domain(text, doc.lattice);
}

Report bca(const std::vector<Input>& inputs, const LatticeDocument& doc, const AbstractDomain& a,
           const std::string& domain_name, const std::vector<std::string>& fns) {
  const auto& l = *doc.lattice;
  std::ostringstream out;
  out << "bca\n";
  describe_inputs(out, inputs);
  out << "domain: " << domain_name << " = " << l.format(a.image()) << '\n';
  json tables = json::object();
  for (const auto& name : fns) {
    const auto& f = doc.function(name);
    auto t = a.bca(f);
    out << "function " << name << '\n';
    json entries = json::array();
    for (auto [x, y] : t.entries) {
      out << "  " << l.name(x) << " -> " << l.name(y) << '\n';
      entries.push_back({l.name(x), l.name(y)});
    }
    out << "  image: " << l.format(t.image(l.size())) << '\n';
    tables[name] = {{"entries", entries}, {"image", names(l, t.image(l.size()))}};
  }
  Report r;
  r.text = out.str();
  r.json = document("bca", inputs,
                    {{"domain", {{"name", domain_name}, {"image", names(l, a.image())}}},
                     {"functions", tables}});
  return r;
}

Report kernel(const std::vector<Input>& inputs, const LatticeDocument& doc, const AbstractDomain& a,
              const std::string& domain_name, const std::vector<std::string>& fns,
              const KernelOptions& opt) {
  const auto& l = *doc.lattice;
  FunctionFamily family;
  for (const auto& name : fns) family.push_back(doc.function(name));
  auto k = opt.disjunctive ? disjunctive_kernel(a, family) : correctness_kernel(a, family);

  std::ostringstream out;
  json result;
  out << "kernel\n";
  describe_inputs(out, inputs);
  out << "domain: " << domain_name << " = " << l.format(a.image()) << " (" << a.size()
      << " elements)\n";
  out << "closure: " << (opt.disjunctive ? "meet and join" : "meet") << '\n';
  json per = json::object();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& req = k.per_function[i];
    out << "function " << req.function << '\n';
    out << "  image: " << l.format(req.bca_image) << '\n';
    json maxes = json::object();
    for (const auto& [y, mx] : req.max_preimages) {
      out << "  max preimage of " << l.name(y) << ": " << l.format(mx) << '\n';
      maxes[l.name(y)] = names(l, mx);
    }
    json entry{{"image", names(l, req.bca_image)}, {"max_preimages", maxes}};
    if (opt.inequality) {
      auto equality = required_set(a, family[i]);
      auto bounded = required_set_bounded(a, family[i]);
      bool same = l.meet_closure(equality) == l.meet_closure(bounded);
      out << "  inequality form: " << l.format(bounded) << '\n';
      out << "  closures " << (same ? "agree" : "differ") << '\n';
      entry["inequality_form"] = names(l, bounded);
      entry["closures_agree"] = same;
    }
    per[req.function] = entry;
  }
  auto removed = a.image() - k.kernel.image();
  out << "required: " << l.format(k.required) << '\n';
  out << "kernel: " << l.format(k.kernel.image()) << " (" << k.kernel.size() << " elements)\n";
  out << "removed: " << list(l, removed) << '\n';
  const char* verification = k.verification == Verification::Exhaustive ? "exhaustive" : "sampled";
  out << "verification: " << verification << '\n';
  result["functions"] = per;
  result["required"] = names(l, k.required);
  result["kernel"] = names(l, k.kernel.image());
  result["removed"] = names(l, removed);
  result["verification"] = verification;
  result["closure"] = opt.disjunctive ? "meet-join" : "meet";
  result["domain"] = {{"name", domain_name}, {"image", names(l, a.image())}};
  if (opt.oracle) {
    auto o = opt.disjunctive ? disjunctive_kernel_oracle(a, family) : kernel_oracle(a, family);
    bool agree = o == k.kernel;
    out << "oracle: " << (agree ? "agrees" : "disagrees, " + l.format(o.image())) << '\n';
    result["oracle"] = {{"agrees", agree}, {"image", names(l, o.image())}};
  }
  Report r;
  r.text = out.str();
  r.json = document("kernel", inputs, result);
  r.files.emplace_back("kernel.dot", dot_lattice(l, &k.kernel.image()));
  return r;
}

Report partition_kernel(const std::vector<Input>& inputs, const SystemDocument& doc, bool iterate) {
  const auto& ts = doc.system;
  const auto& p = doc.partition;
  AbstractTransitionSystem ats(ts, p);
  auto k = egas::partition_kernel(ts, p);
  auto merges = kernel_merges(ts, p);

  std::ostringstream out;
  json result;
  out << "partition-kernel\n";
  describe_inputs(out, inputs);
  out << "states: " << ts.size() << "\nedges: " << ts.edges().size() << '\n';
  out << "partition: " << format_partition(ts, p) << '\n';
  out << "abstract edges: " << ats.edges().size() << '\n';
  out << "kernel: " << format_partition(ts, k) << '\n';
  std::string merged;
  json merged_json = json::array();
  for (const auto& group : merges) {
    auto bs = p.empty_blocks();
    StateSet all = ts.empty_set();
    for (auto b : group) {
      bs.set(b);
      all |= p.block(b);
    }
    merged += (merged.empty() ? "" : "; ") + format_blocks(ts, p, bs) + " -> " + ts.format(all);
    json parts = json::array();
    for (auto b : group) parts.push_back(states_json(ts, p.block(b)));
    merged_json.push_back({{"blocks", parts}, {"into", states_json(ts, all)}});
  }
  out << "merged: " << (merged.empty() ? "none" : merged) << '\n';
  result["partition"] = partition_json(ts, p);
  result["kernel"] = partition_json(ts, k);
  result["merged"] = merged_json;
  result["abstract_edges"] = ats.edges().size();
  if (p.size() <= 16) {
    bool agree = family_atoms(ts.size(), kernel_family_oracle(ts, p)) == k;
    out << "family check: " << (agree ? "agrees" : "disagrees") << '\n';
    result["family_check"] = agree;
  } else {
    out << "family check: skipped (more than 16 blocks)\n";
  }
  if (iterate) {
    auto fix = partition_kernel_fixpoint(ts, p);
    out << "fixpoint: " << format_partition(ts, fix)
        << " (repeated merging; only the single pass keeps the approximations of the input partition)\n";
    result["fixpoint"] = partition_json(ts, fix);
  }
  Report r;
  r.text = out.str();
  r.json = document("partition-kernel", inputs, result);
  r.files.emplace_back("partition.dot", dot_ats(ts, p, "partition"));
  r.files.emplace_back("kernel.dot", dot_ats(ts, k, "kernel"));
  return r;
}

Report cegar(const std::vector<Input>& inputs, const SystemDocument& doc, Heuristic h,
             std::optional<std::size_t> max_iters, bool dot) {
  const auto& ts = doc.system;
  auto outcome = cegar_loop(ts, doc.partition, h, max_iters);
  std::ostringstream out;
  Report r;
  out << "cegar\n";
  describe_inputs(out, inputs);
  out << "heuristic: " << to_string(h) << '\n';
  out << "init: " << ts.format(*ts.init()) << "\nerror: " << ts.format(*ts.error()) << '\n';
  json trace = json::array();
  for (std::size_t i = 0; i < outcome.trace.size(); ++i) {
    const auto& it = outcome.trace[i];
    const auto& p = it.partition;
    out << "iteration " << i << ": " << format_partition(ts, p) << '\n';
    json step{{"partition", partition_json(ts, p)}, {"decision", it.decision}};
    if (it.path) {
      out << "  path: " << format_path(ts, p, *it.path) << '\n';
      json path = json::array();
      for (auto b : it.path->blocks) path.push_back(states_json(ts, p.block(b)));
      step["path"] = path;
    } else {
      out << "  path: none\n";
    }
    if (it.spu) {
      out << "  spu:";
      json sets = json::array();
      for (const auto& s : it.spu->sets) {
        out << ' ' << ts.format(s);
        sets.push_back(states_json(ts, s));
      }
      if (it.spu->failure_index) out << " (fails at " << *it.spu->failure_index << ")";
      out << '\n';
      step["spu"] = sets;
      if (it.spu->failure_index) step["failure_index"] = *it.spu->failure_index;
    }
    if (it.split) {
      const auto& s = *it.split;
      out << "  split: dead " << ts.format(s.dead) << ", bad " << ts.format(s.bad) << ", irrelevant "
          << ts.format(s.irrelevant) << ", bad-irrelevant " << ts.format(s.bad_irr)
          << ", dead-irrelevant " << ts.format(s.dead_irr) << '\n';
      step["split"] = {{"dead", states_json(ts, s.dead)},
                       {"bad", states_json(ts, s.bad)},
                       {"irrelevant", states_json(ts, s.irrelevant)},
                       {"bad_irrelevant", states_json(ts, s.bad_irr)},
                       {"dead_irrelevant", states_json(ts, s.dead_irr)}};
    }
    out << "  decision: " << it.decision << '\n';
    trace.push_back(step);
    if (dot) {
      char name[32];
      std::snprintf(name, sizeof name, "iter_%02zu.dot", i);
      r.files.emplace_back(name, dot_ats(ts, p, "iteration" + std::to_string(i)));
    }
  }
  out << "refinements: " << outcome.refinements << '\n';
  std::string verdict = to_string(outcome.verdict);
  json cex = json::array();
  if (outcome.verdict == Verdict::RealCounterexample) {
    for (auto s : outcome.counterexample) {
      verdict += ' ' + ts.label(s);
      cex.push_back(ts.label(s));
    }
  }
  out << verdict << '\n';
  r.text = out.str();
  r.json = document("cegar", inputs,
                    {{"heuristic", to_string(h)},
                     {"verdict", to_string(outcome.verdict)},
                     {"counterexample", cex},
                     {"refinements", outcome.refinements},
                     {"final_partition", partition_json(ts, outcome.final_partition)},
                     {"trace", trace}});
  return r;
}

Report coro2(const std::vector<Input>& inputs, const SystemDocument* doc, const Coro2Options& opt) {
  std::ostringstream out;
  json result;
  out << "coro2-check\n";
  describe_inputs(out, inputs);
  out << "max length: " << opt.max_len << '\n';
  result["max_length"] = opt.max_len;
  bool all = true;
  if (doc) {
    const auto& ts = doc->system;
    auto k = egas::partition_kernel(ts, doc->partition);
    auto c = coro2_check(ts, doc->partition, opt.max_len);
    AbstractTransitionSystem coarse(ts, k);
    out << "partition: " << format_partition(ts, doc->partition) << '\n';
    out << "kernel: " << format_partition(ts, k) << '\n';
    out << "spurious kernel paths: " << c.spurious_paths << '\n';
    json witnesses = json::array();
    for (const auto& w : c.witnesses) {
      auto a = format_path(ts, k, w.coarse), b = format_path(ts, doc->partition, w.fine);
      out << "  " << a << " covers " << b << '\n';
      witnesses.push_back({{"kernel_path", a}, {"preimage", b}});
    }
    if (c.violation) out << "violation: " << format_path(ts, k, *c.violation) << '\n';
    all = c.holds;
    result["spurious_paths"] = c.spurious_paths;
    result["witnesses"] = witnesses;
    result["holds"] = c.holds;
  }
  if (opt.random > 0) {
    random::Engine rng(opt.seed);
    out << "random systems: " << opt.random << " (states " << opt.states << ", blocks "
        << opt.blocks << ", edge probability " << opt.edge_prob << ", seed " << opt.seed << ")\n";
    std::size_t held = 0, spurious = 0;
    json failures = json::array();
    for (std::size_t i = 0; i < opt.random; ++i) {
      auto ts = random::system(rng, opt.states, opt.edge_prob);
      auto p = random::partition(rng, opt.states, opt.blocks);
      auto c = coro2_check(ts, p, opt.max_len);
      spurious += c.spurious_paths;
      if (c.holds) {
        ++held;
      } else {
        failures.push_back(i);
        out << "  system " << i << ": violation "
            << format_path(ts, egas::partition_kernel(ts, p), *c.violation) << '\n';
      }
    }
    out << "random holds: " << held << "/" << opt.random << " (" << spurious
        << " spurious kernel paths checked)\n";
    all = all && held == opt.random;
    result["random"] = {{"count", opt.random}, {"held", held}, {"seed", opt.seed},
                        {"spurious_paths", spurious}, {"failures", failures}};
  }
  out << "result: " << (all ? "HOLDS" : "FAILS") << '\n';
  result["result"] = all ? "HOLDS" : "FAILS";
  Report r;
  r.text = out.str();
  r.json = document("coro2-check", inputs, result);
  return r;
}

Report predabs(const FooRun& run) {
  auto prog = foo_program(run.modulus);
  BooleanAbstraction b(prog.space, prog.predicates);
  std::ostringstream out;
  json result;
  out << "predabs\nfixture: foo (modulus " << run.modulus << ")\n";
  out << "predicates: p1 = (" << prog.predicates[0].name << "), p2 = (" << prog.predicates[1].name
      << ")\n";
  out << "abstraction: " << to_string(run.abstraction) << '\n';

  auto table = [&](const std::string& name, const BoolTable& t) {
    out << "post[" << name << "]:\n";
    json j = json::object();
    for (BoolVec v = 0; v < t.size(); ++v) {
      out << "  " << b.format_vec(v) << " -> " << b.format_set(t[v]) << '\n';
      json img = json::array();
      for (BoolVec w = 0; w < b.vector_count(); ++w)
        if (t[v] >> w & 1u) img.push_back(b.format_vec(w));
      j[b.format_vec(v)] = img;
    }
    return j;
  };
  result["tables"] = {{"s1", table(prog.s1.name(), run.s1_table)},
                      {"s2", table(prog.s2.name(), run.s2_table)}};

  if (run.kernel) {
    json img = json::array();
    out << "kernel (" << run.kernel->kernel.size() << " elements):";
    for (auto x : run.kernel->kernel.elements()) {
      out << ' ' << b.format_set(x);
      img.push_back(b.format_set(x));
    }
    out << '\n';
    result["kernel"] = img;
  }
  if (run.abstraction == Abstraction::Cartesian) {
    auto ctable = [&](const std::string& name, const auto& rows) {
      out << "cartesian post[" << name << "]:\n";
      json j = json::object();
      for (const auto& [e, v] : rows) {
        out << "  " << format_cart(e) << " -> " << format_cart(v) << '\n';
        j[format_cart(e)] = format_cart(v);
      }
      return j;
    };
    result["cartesian_tables"] = {{"s1", ctable(prog.s1.name(), run.s1_cartesian)},
                                  {"s2", ctable(prog.s2.name(), run.s2_cartesian)}};
  }
  out << "iterates:";
  for (const auto& it : run.iterates) out << ' ' << it;
  out << "\nlfp: " << run.lfp << "\nexit with p2: " << run.exit << "\nverdict: "
      << to_string(run.verdict) << '\n';
  result["abstraction"] = to_string(run.abstraction);
  result["modulus"] = run.modulus;
  result["iterates"] = run.iterates;
  result["lfp"] = run.lfp;
  result["exit"] = run.exit;
  result["verdict"] = to_string(run.verdict);
  Report r;
  r.text = out.str();
  r.json = document("predabs", {}, result);
  return r;
}

}  // namespace egas::report
