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

#include "egas/io.hpp"

#include "egas/error.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

namespace egas {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      auto j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) l.words.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.words.empty()) out.push_back(std::move(l));
  }
  return out;
}

std::size_t parse_index(std::string_view w, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc{} || p != w.data() + w.size())
    throw ParseError("expected a nonnegative integer, got '" + std::string(w) + "'", line);
  return v;
}

void expect_arity(const Line& l, std::size_t n, const char* usage) {
  if (l.words.size() != n) throw ParseError(std::string("expected '") + usage + "'", l.number);
}

void expect_min_arity(const Line& l, std::size_t n, const char* usage) {
  if (l.words.size() < n) throw ParseError(std::string("expected '") + usage + "'", l.number);
}

}  // namespace

LatticeSource parse_lattice_source(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, ElemId> index;
  std::vector<std::pair<ElemId, ElemId>> covers;
  LatticeSource src;

  auto lookup = [&](std::string_view w, std::size_t line) {
    auto it = index.find(std::string(w));
    if (it == index.end()) throw ParseError("unknown element '" + std::string(w) + "'", line);
    return it->second;
  };

  for (const auto& l : tokenize(text)) {
    const auto& kw = l.words[0];
    if (kw == "elem") {
      expect_arity(l, 2, "elem <name>");
      std::string name(l.words[1]);
      if (index.count(name)) throw ParseError("duplicate element '" + name + "'", l.number);
      index.emplace(name, static_cast<ElemId>(names.size()));
      names.push_back(std::move(name));
    } else if (kw == "cover") {
      expect_arity(l, 3, "cover <lower> <upper>");
      covers.emplace_back(lookup(l.words[1], l.number), lookup(l.words[2], l.number));
    } else if (kw == "map") {
      expect_arity(l, 4, "map <fn> <arg> <value>");
      src.maps.push_back({std::string(l.words[1]), lookup(l.words[2], l.number),
                          lookup(l.words[3], l.number), l.number});
    } else if (kw == "domain") {
      expect_min_arity(l, 2, "domain <name> <elem>...");
      LatticeSource::Domain d{std::string(l.words[1]), {}, l.number};
      for (std::size_t i = 2; i < l.words.size(); ++i) d.elems.push_back(lookup(l.words[i], l.number));
      src.domains.push_back(std::move(d));
    } else {
      throw ParseError("unknown directive '" + std::string(kw) + "'", l.number);
    }
  }
  src.poset = Poset::from_covers(std::move(names), covers);
  return src;
}

const MonotoneFn& LatticeDocument::function(const std::string& name) const {
  for (const auto& f : functions)
    if (f.name() == name) return f;
  throw SemanticError("unknown function '" + name + "'");
}

std::optional<AbstractDomain> LatticeDocument::domain(const std::string& name) const {
  for (const auto& [n, d] : domains)
    if (n == name) return d;
  return std::nullopt;
}

LatticeDocument build_lattice_document(const LatticeSource& src) {
  auto lattice = std::make_shared<const Lattice>(Lattice::from_poset(src.poset));
  constexpr auto kUnset = std::numeric_limits<ElemId>::max();

  std::vector<std::string> order;
  std::map<std::string, std::vector<ElemId>> tables;
  for (const auto& m : src.maps) {
    auto [it, fresh] = tables.try_emplace(m.function, lattice->size(), kUnset);
    if (fresh) order.push_back(m.function);
    auto& slot = it->second[m.arg];
    if (slot != kUnset && slot != m.value)
      throw ParseError("function '" + m.function + "' maps '" + lattice->name(m.arg) + "' twice",
                       m.line);
    slot = m.value;
  }

  LatticeDocument doc{lattice, {}, {}};
  for (const auto& name : order) {
    auto& t = tables[name];
    for (ElemId x = 0; x < t.size(); ++x)
      if (t[x] == kUnset)
        throw SemanticError("function '" + name + "' is not total: no value for '" +
                            lattice->name(x) + "'");
    doc.functions.emplace_back(lattice, name, std::move(t));
  }
  for (const auto& d : src.domains) {
    if (doc.domain(d.name)) throw ParseError("duplicate domain '" + d.name + "'", d.line);
    doc.domains.emplace_back(d.name,
                             AbstractDomain::from_image(lattice, bits_of(lattice->size(), d.elems)));
  }
  return doc;
}

LatticeDocument parse_lattice(std::string_view text) {
  return build_lattice_document(parse_lattice_source(text));
}

std::string serialize_lattice(const LatticeDocument& doc) {
  const auto& l = *doc.lattice;
  if (l.is_powerset()) throw SemanticError("powerset lattices have no file form");
  std::ostringstream out;
  for (ElemId x = 0; x < l.size(); ++x) out << "elem " << l.name(x) << '\n';
  for (auto [lo, hi] : l.hasse_edges()) out << "cover " << l.name(lo) << ' ' << l.name(hi) << '\n';
  for (const auto& f : doc.functions)
    for (ElemId x = 0; x < l.size(); ++x)
      out << "map " << f.name() << ' ' << l.name(x) << ' ' << l.name(f(x)) << '\n';
  for (const auto& [name, d] : doc.domains) {
    out << "domain " << name;
    for (auto x : d.elements()) out << ' ' << l.name(x);
    out << '\n';
  }
  return out.str();
}

AbstractDomain parse_domain(std::string_view text, const LatticePtr& lattice) {
  auto img = lattice->empty_set();
  for (const auto& l : tokenize(text)) {
    if (l.words[0] != "image")
      throw ParseError("unknown directive '" + std::string(l.words[0]) + "'", l.number);
    for (std::size_t i = 1; i < l.words.size(); ++i) {
      auto x = lattice->find(l.words[i]);
      if (!x) throw ParseError("unknown element '" + std::string(l.words[i]) + "'", l.number);
      img.set(*x);
    }
  }
  return AbstractDomain::from_image(lattice, img);
}

SystemDocument parse_system(std::string_view text) {
  auto lines = tokenize(text);
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::optional<StateSet> init, error;
  std::vector<StateSet> blocks;
  std::vector<std::string> names;

  auto state = [&](std::string_view w, std::size_t line) {
    auto s = parse_index(w, line);
    if (s >= *n)
      throw ParseError("state " + std::to_string(s) + " out of range (states " +
                       std::to_string(*n) + ")", line);
    return static_cast<StateId>(s);
  };
  auto state_set = [&](const Line& l, std::size_t from) {
    StateSet s(*n);
    for (std::size_t i = from; i < l.words.size(); ++i) s.set(state(l.words[i], l.number));
    return s;
  };

  for (const auto& l : lines) {
    const auto& kw = l.words[0];
    if (kw == "states") {
      expect_arity(l, 2, "states <n>");
      if (n) throw ParseError("duplicate 'states' line", l.number);
      n = parse_index(l.words[1], l.number);
      labels.resize(*n);
      for (std::size_t i = 0; i < *n; ++i) labels[i] = std::to_string(i);
      continue;
    }
    if (!n) throw ParseError("'states' must come first", l.number);
    if (kw == "label") {
      expect_arity(l, 3, "label <id> <name>");
      labels[state(l.words[1], l.number)] = std::string(l.words[2]);
    } else if (kw == "edge") {
      expect_arity(l, 3, "edge <a> <b>");
      edges.emplace_back(state(l.words[1], l.number), state(l.words[2], l.number));
    } else if (kw == "init" || kw == "error") {
      auto& target = kw == "init" ? init : error;
      auto s = state_set(l, 1);
      target = target ? (*target | s) : s;
    } else if (kw == "block") {
      expect_min_arity(l, 3, "block <name> <id>...");
      names.emplace_back(l.words[1]);
      blocks.push_back(state_set(l, 2));
    } else {
      throw ParseError("unknown directive '" + std::string(kw) + "'", l.number);
    }
  }
  if (!n) throw ParseError("missing 'states' line", 0);

  TransitionSystem ts(*n, std::move(edges), std::move(labels), std::move(init), std::move(error));
  const bool explicit_blocks = !blocks.empty();
  Partition p = explicit_blocks ? Partition(*n, std::move(blocks), std::move(names))
                                : Partition::discrete(*n);
  return SystemDocument{std::move(ts), std::move(p), explicit_blocks};
}

std::string serialize_system(const SystemDocument& doc) {
  const auto& ts = doc.system;
  std::ostringstream out;
  out << "states " << ts.size() << '\n';
  for (StateId s = 0; s < ts.size(); ++s)
    if (ts.label(s) != std::to_string(s)) out << "label " << s << ' ' << ts.label(s) << '\n';
  for (auto [a, b] : ts.edges()) out << "edge " << a << ' ' << b << '\n';
  auto set_line = [&](const char* kw, const StateSet& s) {
    out << kw;
    for (auto x : members(s)) out << ' ' << x;
    out << '\n';
  };
  if (ts.init()) set_line("init", *ts.init());
  if (ts.error()) set_line("error", *ts.error());
  if (doc.explicit_blocks) {
    const auto& p = doc.partition;
    for (BlockId b = 0; b < p.size(); ++b) {
      auto name = p.name(b).empty() ? "B" + std::to_string(b) : p.name(b);
      out << "block " << name;
      for (auto x : members(p.block(b))) out << ' ' << x;
      out << '\n';
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("cannot write '" + path + "'");
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw Error("SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

}  // namespace egas
