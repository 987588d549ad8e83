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

#include "egas/egas.h"

#include "egas/cegar.hpp"
#include "egas/error.hpp"
#include "egas/io.hpp"
#include "egas/kernel.hpp"
#include "egas/predabs.hpp"
#include "egas/report.hpp"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <stdexcept>

using namespace egas;

struct egas_lattice {
  std::shared_ptr<const LatticeDocument> doc;
};

struct egas_domain {
  std::shared_ptr<const LatticeDocument> doc;
  AbstractDomain domain;
};

struct egas_system {
  SystemDocument doc;
};

namespace {

thread_local std::string last_error;

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

egas_status fail(egas_status s, const char* msg) {
  last_error = msg;
  return s;
}

template <typename Fn>
egas_status guard(Fn&& fn) {
  try {
    fn();
    return EGAS_OK;
  } catch (const ArgumentError& e) {
    return fail(EGAS_ERR_ARGUMENT, e.what());
  } catch (const ParseError& e) {
    return fail(EGAS_ERR_PARSE, e.what());
  } catch (const IoError& e) {
    return fail(EGAS_ERR_IO, e.what());
  } catch (const LimitError& e) {
    return fail(EGAS_ERR_LIMIT, e.what());
  } catch (const SemanticError& e) {
    return fail(EGAS_ERR_SEMANTIC, e.what());
  } catch (const std::exception& e) {
    return fail(EGAS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EGAS_ERR_INTERNAL, "unknown failure");
  }
}

template <typename T>
const T& need(const T* p, const char* what) {
  if (!p) throw ArgumentError(std::string(what) + " is null");
  return *p;
}

const char* str(const char* p, const char* what) {
  if (!p) throw ArgumentError(std::string(what) + " is null");
  return p;
}

template <typename T>
void need_out(T* p) {
  if (!p) throw ArgumentError("output pointer is null");
}

char* copy(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ElemId checked(const Lattice& l, std::uint32_t id) {
  if (id >= l.size()) throw ArgumentError("element id " + std::to_string(id) + " out of range");
  return id;
}

ElementSet id_set(const Lattice& l, const std::uint32_t* ids, std::size_t n) {
  if (n && !ids) throw ArgumentError("id array is null");
  auto s = l.empty_set();
  for (std::size_t i = 0; i < n; ++i) s.set(checked(l, ids[i]));
  return s;
}

FunctionFamily family_of(const LatticeDocument& doc, const char* const* fns, std::size_t n) {
  if (n && !fns) throw ArgumentError("function name array is null");
  FunctionFamily out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!fns[i]) throw ArgumentError("function name is null");
    try {
      out.push_back(doc.function(fns[i]));
    } catch (const SemanticError& e) {
      throw ArgumentError(e.what());
    }
  }
  return out;
}

std::vector<std::string> names_of(const char* const* fns, std::size_t n) {
  if (n && !fns) throw ArgumentError("function name array is null");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!fns[i]) throw ArgumentError("function name is null");
    out.emplace_back(fns[i]);
  }
  return out;
}

std::shared_ptr<const LatticeDocument> load_lattice(const std::string& path,
                                                    std::vector<report::Input>& inputs) {
  auto text = read_file(path);
  inputs.push_back(report::input_of("lattice", path, text));
  return std::make_shared<const LatticeDocument>(parse_lattice(text));
}

SystemDocument load_system(const std::string& path, std::vector<report::Input>& inputs) {
  auto text = read_file(path);
  inputs.push_back(report::input_of("system", path, text));
  return parse_system(text);
}

void deliver(const report::Report& r, const egas_report_options* opt, char** out) {
  const bool json = opt && opt->json;
  if (opt && opt->dot_dir && *opt->dot_dir) {
    std::filesystem::path dir(opt->dot_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create '" + dir.string() + "'");
    for (const auto& [name, content] : r.files) write_file((dir / name).string(), content);
  }
  *out = copy(json ? r.json : r.text);
}

Heuristic heuristic_of(const char* h) {
  if (!h) throw ArgumentError("heuristic is null");
  if (std::strcmp(h, "basic") == 0) return Heuristic::Basic;
  if (std::strcmp(h, "egas") == 0) return Heuristic::Egas;
  throw ArgumentError(std::string("unknown heuristic '") + h + "'");
}

}  // namespace

extern "C" {

const char* egas_version(void) { return "0.1.0"; }

const char* egas_status_name(egas_status s) {
  switch (s) {
    case EGAS_OK:
      return "ok";
    case EGAS_ERR_ARGUMENT:
      return "argument";
    case EGAS_ERR_IO:
      return "io";
    case EGAS_ERR_PARSE:
      return "parse";
    case EGAS_ERR_SEMANTIC:
      return "semantic";
    case EGAS_ERR_LIMIT:
      return "limit";
    case EGAS_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* egas_last_error(void) { return last_error.c_str(); }

void egas_string_free(char* s) { std::free(s); }

egas_status egas_lattice_parse(const char* text, egas_lattice** out) {
  return guard([&] {
    need_out(out);
    auto doc = parse_lattice(str(text, "text"));
    *out = new egas_lattice{std::make_shared<const LatticeDocument>(std::move(doc))};
  });
}

egas_status egas_lattice_load(const char* path, egas_lattice** out) {
  return guard([&] {
    need_out(out);
    auto doc = parse_lattice(read_file(str(path, "path")));
    *out = new egas_lattice{std::make_shared<const LatticeDocument>(std::move(doc))};
  });
}

void egas_lattice_free(egas_lattice* l) { delete l; }

size_t egas_lattice_size(const egas_lattice* l) { return l ? l->doc->lattice->size() : 0; }

egas_status egas_lattice_find(const egas_lattice* l, const char* name, uint32_t* id) {
  return guard([&] {
    need_out(id);
    auto x = need(l, "lattice").doc->lattice->find(str(name, "name"));
    if (!x) throw ArgumentError(std::string("unknown element '") + name + "'");
    *id = *x;
  });
}

egas_status egas_lattice_name(const egas_lattice* l, uint32_t id, char** out) {
  return guard([&] {
    need_out(out);
    const auto& lat = *need(l, "lattice").doc->lattice;
    *out = copy(lat.name(checked(lat, id)));
  });
}

egas_status egas_lattice_leq(const egas_lattice* l, uint32_t a, uint32_t b, int* out) {
  return guard([&] {
    need_out(out);
    const auto& lat = *need(l, "lattice").doc->lattice;
    *out = lat.leq(checked(lat, a), checked(lat, b)) ? 1 : 0;
  });
}

egas_status egas_lattice_glb(const egas_lattice* l, const uint32_t* ids, size_t n, uint32_t* out) {
  return guard([&] {
    need_out(out);
    const auto& lat = *need(l, "lattice").doc->lattice;
    *out = lat.glb(id_set(lat, ids, n));
  });
}

egas_status egas_lattice_lub(const egas_lattice* l, const uint32_t* ids, size_t n, uint32_t* out) {
  return guard([&] {
    need_out(out);
    const auto& lat = *need(l, "lattice").doc->lattice;
    *out = lat.lub(id_set(lat, ids, n));
  });
}

egas_status egas_domain_from_image(const egas_lattice* l, const uint32_t* ids, size_t n,
                                   egas_domain** out) {
  return guard([&] {
    need_out(out);
    const auto& doc = need(l, "lattice").doc;
    auto d = AbstractDomain::from_image(doc->lattice, id_set(*doc->lattice, ids, n));
    *out = new egas_domain{doc, std::move(d)};
  });
}

egas_status egas_domain_named(const egas_lattice* l, const char* name, egas_domain** out) {
  return guard([&] {
    need_out(out);
    const auto& doc = need(l, "lattice").doc;
    std::string n = str(name, "name");
    if (n == "full") {
      *out = new egas_domain{doc, AbstractDomain::identity(doc->lattice)};
      return;
    }
    auto d = doc->domain(n);
    if (!d) throw ArgumentError("unknown domain '" + n + "'");
    *out = new egas_domain{doc, std::move(*d)};
  });
}

void egas_domain_free(egas_domain* d) { delete d; }

size_t egas_domain_size(const egas_domain* d) { return d ? d->domain.size() : 0; }

egas_status egas_domain_elements(const egas_domain* d, uint32_t* buf, size_t cap, size_t* n) {
  return guard([&] {
    need_out(n);
    const auto& elems = need(d, "domain").domain.elements();
    if (cap && !buf) throw ArgumentError("buffer is null");
    for (std::size_t i = 0; i < elems.size() && i < cap; ++i) buf[i] = elems[i];
    *n = elems.size();
  });
}

egas_status egas_domain_apply(const egas_domain* d, uint32_t c, uint32_t* out) {
  return guard([&] {
    need_out(out);
    const auto& dom = need(d, "domain").domain;
    *out = dom.apply(checked(dom.carrier(), c));
  });
}

egas_status egas_bca_equal(const egas_domain* a, const egas_domain* b, const char* fn, int* out) {
  return guard([&] {
    need_out(out);
    const auto& da = need(a, "domain");
    const auto& db = need(b, "domain");
    if (da.doc != db.doc) throw ArgumentError("domains have different carriers");
    auto fs = family_of(*da.doc, &fn, 1);
    *out = bca_equal(da.domain, db.domain, fs[0]) ? 1 : 0;
  });
}

egas_status egas_kernel(const egas_domain* d, const char* const* fns, size_t nfns, unsigned flags,
                        egas_domain** out) {
  return guard([&] {
    need_out(out);
    const auto& dom = need(d, "domain");
    auto fs = family_of(*dom.doc, fns, nfns);
    auto k = (flags & EGAS_KERNEL_DISJUNCTIVE) ? disjunctive_kernel(dom.domain, fs)
                                                : correctness_kernel(dom.domain, fs);
    *out = new egas_domain{dom.doc, std::move(k.kernel)};
  });
}

egas_status egas_kernel_oracle(const egas_domain* d, const char* const* fns, size_t nfns,
                               unsigned flags, egas_domain** out) {
  return guard([&] {
    need_out(out);
    const auto& dom = need(d, "domain");
    auto fs = family_of(*dom.doc, fns, nfns);
    auto k = (flags & EGAS_KERNEL_DISJUNCTIVE) ? disjunctive_kernel_oracle(dom.domain, fs)
                                                : kernel_oracle(dom.domain, fs);
    *out = new egas_domain{dom.doc, std::move(k)};
  });
}

egas_status egas_system_parse(const char* text, egas_system** out) {
  return guard([&] {
    need_out(out);
    *out = new egas_system{parse_system(str(text, "text"))};
  });
}

egas_status egas_system_load(const char* path, egas_system** out) {
  return guard([&] {
    need_out(out);
    *out = new egas_system{parse_system(read_file(str(path, "path")))};
  });
}

void egas_system_free(egas_system* s) { delete s; }

size_t egas_system_state_count(const egas_system* s) { return s ? s->doc.system.size() : 0; }

size_t egas_system_block_count(const egas_system* s) { return s ? s->doc.partition.size() : 0; }

egas_status egas_partition_kernel(const egas_system* s, char** out) {
  return guard([&] {
    need_out(out);
    const auto& doc = need(s, "system").doc;
    *out = copy(format_partition(doc.system, partition_kernel(doc.system, doc.partition)));
  });
}

egas_status egas_cegar(const egas_system* s, const char* heuristic, size_t* refinements,
                       char** verdict) {
  return guard([&] {
    need_out(refinements);
    need_out(verdict);
    const auto& doc = need(s, "system").doc;
    auto o = cegar_loop(doc.system, doc.partition, heuristic_of(heuristic));
    std::string line = to_string(o.verdict);
    if (o.verdict == Verdict::RealCounterexample)
      for (auto st : o.counterexample) line += ' ' + doc.system.label(st);
    *refinements = o.refinements;
    *verdict = copy(line);
  });
}

egas_status egas_dot_system(const egas_system* s, char** out) {
  return guard([&] {
    need_out(out);
    const auto& doc = need(s, "system").doc;
    *out = copy(report::dot_ats(doc.system, doc.partition));
  });
}

egas_status egas_dot_lattice(const egas_lattice* l, char** out) {
  return guard([&] {
    need_out(out);
    *out = copy(report::dot_lattice(*need(l, "lattice").doc->lattice));
  });
}

egas_status egas_report_lattice_check(const char* path, const egas_report_options* opt, char** out,
                                      int* valid) {
  return guard([&] {
    need_out(out);
    need_out(valid);
    std::string p = str(path, "path");
    auto text = read_file(p);
    auto r = report::lattice_check(report::input_of("lattice", p, text), parse_lattice_source(text));
    deliver(r, opt, out);
    *valid = r.ok ? 1 : 0;
  });
}

egas_status egas_report_bca(const char* lattice_path, const char* domain, const char* const* fns,
                            size_t nfns, const egas_report_options* opt, char** out) {
  return guard([&] {
    need_out(out);
    std::vector<report::Input> inputs;
    auto doc = load_lattice(str(lattice_path, "lattice path"), inputs);
    std::string dname = domain ? domain : "full";
    auto d = report::resolve_domain(*doc, dname, inputs);
    auto names = names_of(fns, nfns);
    family_of(*doc, fns, nfns);
    deliver(report::bca(inputs, *doc, d, dname, names), opt, out);
  });
}

egas_status egas_report_kernel(const char* lattice_path, const char* domain, const char* const* fns,
                               size_t nfns, unsigned flags, const egas_report_options* opt,
                               char** out) {
  return guard([&] {
    need_out(out);
    std::vector<report::Input> inputs;
    auto doc = load_lattice(str(lattice_path, "lattice path"), inputs);
    std::string dname = domain ? domain : "full";
    auto d = report::resolve_domain(*doc, dname, inputs);
    auto names = names_of(fns, nfns);
    family_of(*doc, fns, nfns);
    report::KernelOptions ko{(flags & EGAS_KERNEL_ORACLE) != 0, (flags & EGAS_KERNEL_INEQUALITY) != 0,
                             (flags & EGAS_KERNEL_DISJUNCTIVE) != 0};
    deliver(report::kernel(inputs, *doc, d, dname, names, ko), opt, out);
  });
}

egas_status egas_report_partition_kernel(const char* system_path, int iterate,
                                         const egas_report_options* opt, char** out) {
  return guard([&] {
    need_out(out);
    std::vector<report::Input> inputs;
    auto doc = load_system(str(system_path, "system path"), inputs);
    deliver(report::partition_kernel(inputs, doc, iterate != 0), opt, out);
  });
}

egas_status egas_report_cegar(const char* system_path, const char* heuristic,
                              long long max_refinements, const egas_report_options* opt,
                              char** out) {
  return guard([&] {
    need_out(out);
    auto h = heuristic_of(heuristic);
    std::vector<report::Input> inputs;
    auto doc = load_system(str(system_path, "system path"), inputs);
    std::optional<std::size_t> cap;
    if (max_refinements >= 0) cap = static_cast<std::size_t>(max_refinements);
    const bool dot = opt && opt->dot_dir && *opt->dot_dir;
    deliver(report::cegar(inputs, doc, h, cap, dot), opt, out);
  });
}

egas_status egas_report_coro2(const char* system_path, const egas_coro2_options* c,
                              const egas_report_options* opt, char** out) {
  return guard([&] {
    need_out(out);
    const auto& co = need(c, "coro2 options");
    if (!system_path && co.random == 0)
      throw ArgumentError("need a system file or a number of random systems");
    report::Coro2Options o{co.max_len, co.random, co.states, co.blocks, co.edge_prob, co.seed};
    std::vector<report::Input> inputs;
    std::optional<SystemDocument> doc;
    if (system_path) doc = load_system(system_path, inputs);
    deliver(report::coro2(inputs, doc ? &*doc : nullptr, o), opt, out);
  });
}

egas_status egas_report_predabs(const char* fixture, const char* abstraction, unsigned modulus,
                                const egas_report_options* opt, char** out) {
  return guard([&] {
    need_out(out);
    if (std::string(str(fixture, "fixture")) != "foo")
      throw ArgumentError(std::string("unknown fixture '") + fixture + "'");
    auto a = parse_abstraction(str(abstraction, "abstraction"));
    if (!a) throw ArgumentError(std::string("unknown abstraction '") + abstraction + "'");
    deliver(report::predabs(foo_verification(*a, modulus)), opt, out);
  });
}

}  // extern "C"
