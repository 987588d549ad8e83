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

#include "egas/absdom.hpp"

#include "egas/error.hpp"

#include <algorithm>
#include <numeric>

namespace egas {

MonotoneFn::MonotoneFn(LatticePtr carrier, std::string name, std::vector<ElemId> table)
    : carrier_(std::move(carrier)), name_(std::move(name)), table_(std::move(table)) {
  const auto& l = *carrier_;
  if (table_.size() != l.size())
    throw SemanticError("function '" + name_ + "' is not total: " + std::to_string(table_.size()) +
                        " of " + std::to_string(l.size()) + " elements mapped");
  for (auto v : table_)
    if (v >= l.size()) throw SemanticError("function '" + name_ + "' maps outside the lattice");
  // Monotonicity only needs checking along covering pairs.
  for (auto [lo, hi] : l.hasse_edges())
    if (!l.leq(table_[lo], table_[hi]))
      throw SemanticError("function '" + name_ + "' is not monotone: " + l.name(lo) + " <= " +
                          l.name(hi) + " but " + l.name(table_[lo]) + " is not below " +
                          l.name(table_[hi]));
}

MonotoneFn MonotoneFn::identity(LatticePtr carrier) {
  std::vector<ElemId> t(carrier->size());
  std::iota(t.begin(), t.end(), ElemId{0});
  return MonotoneFn(Unchecked{}, std::move(carrier), "id", std::move(t));
}

MonotoneFn MonotoneFn::constant(LatticePtr carrier, ElemId value, std::string name) {
  std::vector<ElemId> t(carrier->size(), value);
  return MonotoneFn(Unchecked{}, std::move(carrier), std::move(name), std::move(t));
}

ElementSet BcaTable::image(std::size_t width) const {
  ElementSet s(width);
  for (auto [a, v] : entries) s.set(v);
  return s;
}

std::optional<ElemId> BcaTable::at(ElemId a) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), std::make_pair(a, ElemId{0}));
  if (it == entries.end() || it->first != a) return std::nullopt;
  return it->second;
}

AbstractDomain::AbstractDomain(LatticePtr carrier, ElementSet image)
    : carrier_(std::move(carrier)), image_(std::move(image)), elements_(members(image_)) {}

AbstractDomain AbstractDomain::from_image(LatticePtr carrier, const ElementSet& x) {
  if (x.size() != carrier->size()) throw SemanticError("element set does not match the carrier");
  auto img = carrier->meet_closure(x);
  return AbstractDomain(std::move(carrier), std::move(img));
}

AbstractDomain AbstractDomain::identity(LatticePtr carrier) {
  auto img = carrier->full_set();
  return AbstractDomain(std::move(carrier), std::move(img));
}

ElemId AbstractDomain::apply(ElemId c) const {
  if (image_.test(c)) return c;
  const auto& l = *carrier_;
  ElemId acc = l.top();
  for (auto y : elements_)
    if (l.leq(c, y)) acc = l.meet(acc, y);
  return acc;
}

BcaTable AbstractDomain::bca(const MonotoneFn& f) const {
  BcaTable t{f.name(), {}};
  t.entries.reserve(elements_.size());
  for (auto a : elements_) t.entries.emplace_back(a, apply(f(a)));
  return t;
}

MonotoneFn AbstractDomain::bca_extended(const MonotoneFn& f) const {
  const auto n = carrier_->size();
  std::vector<ElemId> t(n);
  for (ElemId c = 0; c < n; ++c) t[c] = apply(f(apply(c)));
  return MonotoneFn(MonotoneFn::Unchecked{}, carrier_, f.name() + "^A", std::move(t));
}

BcaComparison bca_compare(const AbstractDomain& a, const AbstractDomain& b, const MonotoneFn& f,
                          const std::vector<ElemId>& sample) {
  const auto& l = a.carrier();
  if (&l != &b.carrier() || &l != &f.carrier())
    throw SemanticError("domains and function must share one carrier");
  auto differs = [&](ElemId c) { return a.apply(f(a.apply(c))) != b.apply(f(b.apply(c))); };

  BcaComparison r;
  if (l.size() <= AbstractDomain::kExhaustiveLimit) {
    for (ElemId c = 0; c < l.size(); ++c) {
      if (differs(c)) {
        r.equal = false;
        r.witness = c;
        break;
      }
    }
    return r;
  }
  r.exhaustive = false;
  std::vector<ElemId> pts(a.elements().begin(), a.elements().end());
  pts.insert(pts.end(), b.elements().begin(), b.elements().end());
  for (auto c : sample)
    if (c < l.size()) pts.push_back(c);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (auto c : pts) {
    if (differs(c)) {
      r.equal = false;
      r.witness = c;
      break;
    }
  }
  return r;
}

bool precision_leq(const AbstractDomain& a, const AbstractDomain& b) {
  return b.image().is_subset_of(a.image());
}

AbstractDomain abs_lub(const std::vector<AbstractDomain>& ds) {
  if (ds.empty()) throw SemanticError("abs_lub of an empty family needs a carrier");
  auto img = ds.front().image();
  for (const auto& d : ds) img &= d.image();
  // an intersection of meet-closed sets is meet-closed
  return AbstractDomain::from_image(ds.front().carrier_ptr(), img);
}

AbstractDomain abs_glb(const std::vector<AbstractDomain>& ds) {
  if (ds.empty()) throw SemanticError("abs_glb of an empty family needs a carrier");
  auto img = ds.front().image();
  for (const auto& d : ds) img |= d.image();
  return AbstractDomain::from_image(ds.front().carrier_ptr(), img);
}

}  // namespace egas
