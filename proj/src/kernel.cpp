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

#include "egas/kernel.hpp"

#include "egas/error.hpp"
#include "egas/fixtures.hpp"

#include <random>
#include <stdexcept>

namespace egas {

namespace {

ElementSet maximal_of(const Lattice& l, const std::vector<ElemId>& xs) {
  ElementSet out(l.size());
  if (xs.size() > 256) return l.maximal(bits_of(l.size(), xs));
  for (auto x : xs) {
    bool top = true;
    for (auto y : xs) {
      if (l.lt(x, y)) {
        top = false;
        break;
      }
    }
    if (top) out.set(x);
  }
  return out;
}

std::vector<ElemId> verification_sample(const Lattice& l) {
  std::vector<ElemId> s;
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(l.size() - 1));
  for (int i = 0; i < 4096; ++i) s.push_back(pick(rng));
  if (l.is_powerset())
    for (std::size_t a = 0; a < l.atom_count(); ++a) s.push_back(ElemId{1} << a);
  return s;
}

}  // namespace

FunctionRequirement requirement(const AbstractDomain& a, const MonotoneFn& f) {
  const auto& l = a.carrier();
  FunctionRequirement r{f.name(), l.empty_set(), {}};
  std::map<ElemId, std::vector<ElemId>> groups;
  for (auto x : a.elements()) groups[a.apply(f(x))].push_back(x);
  for (const auto& [y, xs] : groups) {
    r.bca_image.set(y);
    r.max_preimages.emplace(y, maximal_of(l, xs));
  }
  return r;
}

ElementSet required_set(const AbstractDomain& a, const MonotoneFn& f) {
  auto r = requirement(a, f);
  auto out = r.bca_image;
  for (const auto& [y, mx] : r.max_preimages) out |= mx;
  return out;
}

ElementSet required_set_bounded(const AbstractDomain& a, const MonotoneFn& f) {
  const auto& l = a.carrier();
  const auto& elems = a.elements();
  std::vector<ElemId> value(elems.size());
  auto out = l.empty_set();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    value[i] = a.apply(f(elems[i]));
    out.set(value[i]);
  }
  std::vector<ElemId> below;
  for (auto y : elems) {
    below.clear();
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (l.leq(value[i], y)) below.push_back(elems[i]);
    out |= maximal_of(l, below);
  }
  return out;
}

namespace {

void verify(KernelResult& r, const AbstractDomain& a, const FunctionFamily& fs) {
  const auto& l = a.carrier();
  std::vector<ElemId> sample;
  if (l.size() > AbstractDomain::kExhaustiveLimit) {
    r.verification = Verification::Sampled;
    sample = verification_sample(l);
  }
  for (const auto& f : fs) {
    auto cmp = bca_compare(r.kernel, a, f, sample);
    if (!cmp.equal)
      throw std::logic_error("kernel changes the approximation of '" + f.name() + "' at " +
                             l.name(*cmp.witness));
  }
}

KernelResult generators(const AbstractDomain& a, const FunctionFamily& fs) {
  const auto& l = a.carrier();
  auto required = l.empty_set();
  std::vector<FunctionRequirement> per;
  per.reserve(fs.size());
  for (const auto& f : fs) {
    if (&f.carrier() != &l) throw SemanticError("function '" + f.name() + "' has another carrier");
    per.push_back(requirement(a, f));
    required |= per.back().bca_image;
    for (const auto& [y, mx] : per.back().max_preimages) required |= mx;
  }
  return KernelResult{AbstractDomain::from_image(a.carrier_ptr(), required), required,
                      std::move(per), Verification::Exhaustive};
}

bool meet_closed(const Lattice& l, const ElementSet& img) {
  auto elems = members(img);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!img.test(l.meet(elems[i], elems[j]))) return false;
  return true;
}

bool join_closed(const Lattice& l, const ElementSet& img) {
  if (!img.test(l.bottom())) return false;
  auto elems = members(img);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!img.test(l.join(elems[i], elems[j]))) return false;
  return true;
}

ElementSet meet_join_closure(const Lattice& l, ElementSet x) {
  for (;;) {
    auto next = l.meet_closure(l.join_closure(x));
    if (next == x) return x;
    x = std::move(next);
  }
}

template <typename Admissible>
AbstractDomain enumerate_kernel(const AbstractDomain& a, const FunctionFamily& fs,
                                Admissible admissible) {
  const auto& l = a.carrier();
  if (a.size() > kOracleLimit)
    throw LimitError("oracle enumerates subsets of the image and is limited to " +
                     std::to_string(kOracleLimit) + " abstract elements, got " +
                     std::to_string(a.size()));
  std::vector<ElemId> rest;
  for (auto x : a.elements())
    if (x != l.top()) rest.push_back(x);

  auto survivors = a.image();
  const std::uint32_t count = std::uint32_t{1} << rest.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    auto img = l.set_of({l.top()});
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (mask >> i & 1u) img.set(rest[i]);
    if (!admissible(img)) continue;
    auto b = AbstractDomain::from_image(a.carrier_ptr(), img);
    bool same = true;
    for (const auto& f : fs) {
      if (!bca_equal(b, a, f)) {
        same = false;
        break;
      }
    }
    if (same) survivors &= img;
  }
  return AbstractDomain::from_image(a.carrier_ptr(), survivors);
}

}  // namespace

KernelResult correctness_kernel(const AbstractDomain& a, const FunctionFamily& fs) {
  auto r = generators(a, fs);
  verify(r, a, fs);
  return r;
}

KernelResult disjunctive_kernel(const AbstractDomain& a, const FunctionFamily& fs) {
  const auto& l = a.carrier();
  if (!join_closed(l, a.image())) throw SemanticError("domain is not closed under joins");
  auto r = generators(a, fs);
  r.kernel = AbstractDomain::from_image(a.carrier_ptr(), meet_join_closure(l, r.required));
  verify(r, a, fs);
  return r;
}

AbstractDomain kernel_oracle(const AbstractDomain& a, const FunctionFamily& fs) {
  const auto& l = a.carrier();
  // a uco image must be meet-closed in the carrier
  return enumerate_kernel(a, fs, [&](const ElementSet& img) { return meet_closed(l, img); });
}

AbstractDomain disjunctive_kernel_oracle(const AbstractDomain& a, const FunctionFamily& fs) {
  const auto& l = a.carrier();
  if (!join_closed(l, a.image())) throw SemanticError("domain is not closed under joins");
  return enumerate_kernel(a, fs, [&](const ElementSet& img) {
    return meet_closed(l, img) && join_closed(l, img);
  });
}

MostConcreteReport most_concrete_counterexample(const AbstractDomain& mu,
                                                const AbstractDomain& rho1,
                                                const AbstractDomain& rho2,
                                                const MonotoneFn& f) {
  auto meet = abs_glb({rho1, rho2});
  MostConcreteReport r{{}, mu, rho1, rho2, meet, false, false, true, std::nullopt, {}};
  r.rho1_equal = bca_equal(rho1, mu, f);
  r.rho2_equal = bca_equal(rho2, mu, f);
  auto cmp = bca_compare(meet, mu, f);
  r.meet_equal = cmp.equal;
  r.witness = cmp.witness;
  if (r.witness) r.witness_name = mu.carrier().name(*r.witness);
  return r;
}

MostConcreteReport most_concrete_counterexample() {
  auto fx = fixtures::non_existence();
  auto r = most_concrete_counterexample(fx.mu, fx.rho1, fx.rho2, fx.f);
  r.lattice_text = std::string(fixtures::kNonExistenceLattice);
  return r;
}

}  // namespace egas
