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

#ifndef EGAS_BITS_HPP
#define EGAS_BITS_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace egas {

/// Fixed-width set of dense ids. Used for element sets of a lattice, state
/// sets of a transition system and block sets of a partition.
using Bits = boost::dynamic_bitset<std::uint64_t>;

inline Bits make_bits(std::size_t width, std::initializer_list<std::size_t> ids) {
  Bits b(width);
  for (auto i : ids) b.set(i);
  return b;
}

template <typename Range>
Bits bits_of(std::size_t width, const Range& ids) {
  Bits b(width);
  for (auto i : ids) b.set(static_cast<std::size_t>(i));
  return b;
}

/// Members in increasing order.
inline std::vector<std::uint32_t> members(const Bits& b) {
  std::vector<std::uint32_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i))
    out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

template <typename Fn>
void for_each_member(const Bits& b, Fn&& fn) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) fn(i);
}

inline bool subset_of(const Bits& a, const Bits& b) { return a.is_subset_of(b); }

inline bool disjoint(const Bits& a, const Bits& b) { return !a.intersects(b); }

/// Total order on equal-width sets by their sorted member lists.
inline bool lex_less(const Bits& a, const Bits& b) { return members(a) < members(b); }

}  // namespace egas

#endif  // EGAS_BITS_HPP
