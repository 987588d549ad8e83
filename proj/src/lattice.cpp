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

#include "egas/lattice.hpp"

#include "egas/error.hpp"

#include <algorithm>
#include <sstream>

namespace egas {

namespace {

std::vector<Bits> transpose(const std::vector<Bits>& m) {
  const auto n = m.size();
  std::vector<Bits> t(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for_each_member(m[x], [&](std::size_t y) { t[y].set(x); });
  return t;
}

// Elements of `s` with no strictly greater element in `s`, for an explicit
// order given by `up`.
std::vector<ElemId> maxima(const std::vector<Bits>& up, const Bits& s) {
  std::vector<ElemId> out;
  for_each_member(s, [&](std::size_t x) {
    if ((up[x] & s).count() == 1) out.push_back(static_cast<ElemId>(x));
  });
  return out;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

// Unique-bound check for one pair. `cone` is the set of common bounds and
// `toward` maps an element to the bounds on the far side (up for glb).
std::optional<std::string> bound_problem(const std::vector<std::string>& names,
                                         const std::vector<Bits>& toward, const Bits& cone,
                                         const char* what, const char* bounds) {
  if (cone.none()) return std::string("no ") + bounds;
  auto best = maxima(toward, cone);
  if (best.size() == 1) return std::nullopt;
  std::ostringstream os;
  os << "no " << what << " (incomparable " << bounds;
  for (std::size_t i = 0; i < best.size(); ++i) os << (i ? ", " : " ") << quote(names[best[i]]);
  os << ")";
  return os.str();
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> names,
                         const std::vector<std::pair<ElemId, ElemId>>& covers) {
  const auto n = names.size();
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) up[x].set(x);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw SemanticError("order pair refers to an unknown element");
    up[lo].set(hi);
  }
  // Warshall over rows: if x <= k then everything above k is above x.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (up[x].test(k)) up[x] |= up[k];
  return Poset{std::move(names), std::move(up)};
}

Diagnostics validate(const Poset& p) {
  const auto n = p.size();
  const auto& up = p.up;
  const auto& nm = p.names;
  auto fail = [](std::string msg, std::optional<std::pair<ElemId, ElemId>> pair = std::nullopt) {
    return Diagnostics{false, std::move(msg), pair};
  };
  if (n == 0) return fail("empty order has no top or bottom");
  if (up.size() != n) return fail("order matrix does not match the element count");
  for (std::size_t x = 0; x < n; ++x)
    if (up[x].size() != n) return fail("order matrix row has the wrong width");

  for (ElemId x = 0; x < n; ++x)
    if (!up[x].test(x)) return fail("order is not reflexive at " + quote(nm[x]), {{x, x}});
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = x + 1; y < n; ++y)
      if (up[x].test(y) && up[y].test(x))
        return fail("order is not antisymmetric: " + quote(nm[x]) + " and " + quote(nm[y]) +
                        " are mutually below each other",
                    {{x, y}});
  for (ElemId x = 0; x < n; ++x) {
    std::optional<ElemId> bad;
    for_each_member(up[x], [&](std::size_t y) {
      if (!bad && !up[y].is_subset_of(up[x])) bad = static_cast<ElemId>(y);
    });
    if (bad)
      return fail("order is not transitive through " + quote(nm[x]) + " <= " + quote(nm[*bad]),
                  {{x, *bad}});
  }

  const auto down = transpose(up);
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = a + 1; b < n; ++b) {
      auto pair_msg = [&](const std::string& m) {
        return "elements " + quote(nm[a]) + " and " + quote(nm[b]) + " have " + m;
      };
      if (auto m = bound_problem(nm, down, up[a] & up[b], "least upper bound", "upper bounds"))
        return fail(pair_msg(*m), {{a, b}});
      if (auto m = bound_problem(nm, up, down[a] & down[b], "greatest lower bound", "lower bounds"))
        return fail(pair_msg(*m), {{a, b}});
    }
  }

  bool has_top = false, has_bottom = false;
  for (std::size_t x = 0; x < n; ++x) {
    has_top |= down[x].all();
    has_bottom |= up[x].all();
  }
  if (!has_top) return fail("order has no top element");
  if (!has_bottom) return fail("order has no bottom element");
  return {};
}

Lattice Lattice::from_poset(Poset p) {
  auto d = validate(p);
  if (!d.ok) throw SemanticError("not a lattice: " + d.message);
  Lattice l;
  l.size_ = p.size();
  l.names_ = std::move(p.names);
  l.up_ = std::move(p.up);
  l.down_ = transpose(l.up_);
  for (ElemId x = 0; x < l.size_; ++x) {
    if (!l.index_.emplace(l.names_[x], x).second)
      throw SemanticError("duplicate element name '" + l.names_[x] + "'");
    l.down_count_.push_back(l.down_[x].count());
    l.up_count_.push_back(l.up_[x].count());
    if (l.down_[x].all()) l.top_ = x;
    if (l.up_[x].all()) l.bottom_ = x;
  }
  l.build_tables();
  return l;
}

Lattice Lattice::from_covers(std::vector<std::string> names,
                             const std::vector<std::pair<ElemId, ElemId>>& covers) {
  return from_poset(Poset::from_covers(std::move(names), covers));
}

Lattice Lattice::powerset(std::vector<std::string> atoms) {
  if (atoms.size() > kMaxAtoms)
    throw LimitError("powerset lattice limited to " + std::to_string(kMaxAtoms) + " atoms");
  Lattice l;
  l.powerset_ = true;
  l.size_ = std::size_t{1} << atoms.size();
  l.atoms_ = std::move(atoms);
  l.bottom_ = 0;
  l.top_ = static_cast<ElemId>(l.size_ - 1);
  return l;
}

void Lattice::build_tables() {
  // Small lattices get O(1) meet/join; larger ones compute on demand.
  if (size_ > 256) return;
  meet_tab_.assign(size_ * size_, 0);
  join_tab_.assign(size_ * size_, 0);
  for (ElemId a = 0; a < size_; ++a) {
    for (ElemId b = 0; b < size_; ++b) {
      auto d = down_[a] & down_[b];
      auto c = d.count();
      for_each_member(d, [&](std::size_t m) {
        if (down_count_[m] == c) meet_tab_[a * size_ + b] = static_cast<ElemId>(m);
      });
      auto u = up_[a] & up_[b];
      c = u.count();
      for_each_member(u, [&](std::size_t m) {
        if (up_count_[m] == c) join_tab_[a * size_ + b] = static_cast<ElemId>(m);
      });
    }
  }
}

std::string Lattice::name(ElemId x) const {
  if (!powerset_) return names_.at(x);
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (x >> i & 1u) {
      if (!first) s += ",";
      s += atoms_[i];
      first = false;
    }
  }
  return s + "}";
}

std::optional<ElemId> Lattice::find(std::string_view name) const {
  if (!powerset_) {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  if (name.size() < 2 || name.front() != '{' || name.back() != '}') return std::nullopt;
  auto body = name.substr(1, name.size() - 2);
  ElemId m = 0;
  while (!body.empty()) {
    auto comma = body.find(',');
    auto tok = body.substr(0, comma);
    auto it = std::find(atoms_.begin(), atoms_.end(), tok);
    if (it == atoms_.end()) return std::nullopt;
    m |= ElemId{1} << (it - atoms_.begin());
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return m;
}

ElemId Lattice::meet(ElemId a, ElemId b) const {
  if (powerset_) return a & b;
  if (!meet_tab_.empty()) return meet_tab_[a * size_ + b];
  auto d = down_[a] & down_[b];
  auto c = d.count();
  for (auto m = d.find_first(); m != Bits::npos; m = d.find_next(m))
    if (down_count_[m] == c) return static_cast<ElemId>(m);
  return bottom_;  // unreachable on a validated lattice
}

ElemId Lattice::join(ElemId a, ElemId b) const {
  if (powerset_) return a | b;
  if (!join_tab_.empty()) return join_tab_[a * size_ + b];
  auto u = up_[a] & up_[b];
  auto c = u.count();
  for (auto m = u.find_first(); m != Bits::npos; m = u.find_next(m))
    if (up_count_[m] == c) return static_cast<ElemId>(m);
  return top_;
}

ElemId Lattice::glb(const ElementSet& s) const {
  ElemId acc = top_;
  for_each_member(s, [&](std::size_t x) { acc = meet(acc, static_cast<ElemId>(x)); });
  return acc;
}

ElemId Lattice::lub(const ElementSet& s) const {
  ElemId acc = bottom_;
  for_each_member(s, [&](std::size_t x) { acc = join(acc, static_cast<ElemId>(x)); });
  return acc;
}

ElementSet Lattice::full_set() const {
  ElementSet s(size_);
  s.set();
  return s;
}

ElementSet Lattice::set_of(std::initializer_list<ElemId> ids) const {
  ElementSet s(size_);
  for (auto i : ids) s.set(i);
  return s;
}

namespace {

template <typename Op>
ElementSet binary_closure(ElementSet result, ElemId unit, Op op) {
  result.set(unit);
  auto list = members(result);
  std::vector<ElemId> work(list.begin(), list.end());
  while (!work.empty()) {
    ElemId x = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < list.size(); ++i) {
      ElemId m = op(x, list[i]);
      if (!result.test(m)) {
        result.set(m);
        list.push_back(m);
        work.push_back(m);
      }
    }
  }
  return result;
}

}  // namespace

ElementSet Lattice::meet_closure(const ElementSet& x) const {
  return binary_closure(x, top_, [this](ElemId a, ElemId b) { return meet(a, b); });
}

ElementSet Lattice::join_closure(const ElementSet& x) const {
  return binary_closure(x, bottom_, [this](ElemId a, ElemId b) { return join(a, b); });
}

ElementSet Lattice::maximal(const ElementSet& s) const {
  ElementSet out(size_);
  if (!powerset_) {
    for_each_member(s, [&](std::size_t x) {
      if ((up_[x] & s).count() == 1) out.set(x);
    });
    return out;
  }
  // above[m]: some strict superset of m lies in s. Supersets have larger ids,
  // so a descending sweep sees them first.
  const auto k = atoms_.size();
  std::vector<char> above(size_, 0);
  for (std::size_t m = size_; m-- > 0;) {
    for (std::size_t a = 0; a < k; ++a) {
      auto sup = m | (std::size_t{1} << a);
      if (sup != m && (s.test(sup) || above[sup])) {
        above[m] = 1;
        break;
      }
    }
    if (s.test(m) && !above[m]) out.set(m);
  }
  return out;
}

ElementSet Lattice::downset(ElemId y) const {
  if (!powerset_) return down_[y];
  ElementSet out(size_);
  // all submasks of y, including 0
  for (ElemId sub = y;; sub = (sub - 1) & y) {
    out.set(sub);
    if (sub == 0) break;
  }
  return out;
}

ElementSet Lattice::upset(ElemId y) const {
  if (!powerset_) return up_[y];
  ElementSet out(size_);
  const ElemId rest = top_ & ~y;
  for (ElemId sub = rest;; sub = (sub - 1) & rest) {
    out.set(y | sub);
    if (sub == 0) break;
  }
  return out;
}

std::vector<std::pair<ElemId, ElemId>> Lattice::hasse_edges() const {
  std::vector<std::pair<ElemId, ElemId>> out;
  if (powerset_) {
    for (ElemId m = 0; m < size_; ++m)
      for (std::size_t a = 0; a < atoms_.size(); ++a)
        if (!(m >> a & 1u)) out.emplace_back(m, m | (ElemId{1} << a));
  } else {
    for (ElemId x = 0; x < size_; ++x) {
      for_each_member(up_[x], [&](std::size_t y) {
        if (y == x) return;
        // y covers x iff nothing lies strictly between them
        if ((up_[x] & down_[y]).count() == 2) out.emplace_back(x, static_cast<ElemId>(y));
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Lattice::format(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](std::size_t x) {
    if (!first) out += ", ";
    out += name(static_cast<ElemId>(x));
    first = false;
  });
  return out + "}";
}

Poset Lattice::to_poset() const {
  if (powerset_) throw LimitError("powerset lattices have no explicit order view");
  return Poset{names_, up_};
}

}  // namespace egas
