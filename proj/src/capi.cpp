// Copyright 2026 the bbsym authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bbsym.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "bbsym/json_io.hpp"
#include "bbsym/numeric.hpp"

struct bbsym_hamiltonian {
  bbsym::SBHamiltonian impl;
};

struct bbsym_sequence {
  bbsym::Sequence impl;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
bbsym_status guarded(F&& body) {
  try {
    body();
    return BBSYM_OK;
  } catch (const bbsym::ClosureError& e) {
    g_last_error = e.what();
    return BBSYM_ERR_CLOSURE;
  } catch (const bbsym::CapError& e) {
    g_last_error = e.what();
    return BBSYM_ERR_CAP;
  } catch (const bbsym::ValidationError& e) {
    g_last_error = e.what();
    return BBSYM_ERR_INVALID;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BBSYM_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BBSYM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw bbsym::ValidationError(what);
}

int effective_cap(int cap_dim) {
  return cap_dim > 0 ? cap_dim : bbsym::kDefaultCapDim;
}

std::vector<double> tau_vector(const double* taus, size_t n_taus) {
  require(taus != nullptr || n_taus == 0, "null tau array");
  return std::vector<double>(taus, taus + n_taus);
}

}  // namespace

extern "C" {

const char* bbsym_version(void) { return "1.0.0"; }

const char* bbsym_last_error(void) { return g_last_error.c_str(); }

const char* bbsym_status_name(bbsym_status status) {
  switch (status) {
    case BBSYM_OK: return "ok";
    case BBSYM_ERR_INVALID: return "validation";
    case BBSYM_ERR_CLOSURE: return "closure";
    case BBSYM_ERR_CAP: return "cap";
    case BBSYM_ERR_NOMEM: return "nomem";
    case BBSYM_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

void bbsym_string_free(char* s) { std::free(s); }

bbsym_status bbsym_hamiltonian_build(const char* builder, uint32_t n_qubits,
                                     bbsym_hamiltonian** out) {
  return guarded([&] {
    require(builder && out, "null argument");
    auto h = bbsym::hamiltonian_from_spec(builder, n_qubits);
    *out = new bbsym_hamiltonian{std::move(h)};
  });
}

bbsym_status bbsym_hamiltonian_from_json(const char* json_text,
                                         bbsym_hamiltonian** out) {
  return guarded([&] {
    require(json_text && out, "null argument");
    bbsym::json j = bbsym::json::parse(json_text, nullptr, false);
    require(!j.is_discarded(), "malformed JSON");
    *out = new bbsym_hamiltonian{bbsym::hamiltonian_from_json(j)};
  });
}

bbsym_status bbsym_hamiltonian_to_json(const bbsym_hamiltonian* h,
                                       char** out_json) {
  return guarded([&] {
    require(h && out_json, "null argument");
    *out_json = dup_string(bbsym::hamiltonian_to_json(h->impl).dump());
  });
}

uint32_t bbsym_hamiltonian_n_qubits(const bbsym_hamiltonian* h) {
  return h ? h->impl.n_qubits() : 0;
}

size_t bbsym_hamiltonian_term_count(const bbsym_hamiltonian* h) {
  return h ? h->impl.term_count() : 0;
}

bbsym_status bbsym_hamiltonian_scale(const bbsym_hamiltonian* h,
                                     const char* factor,
                                     bbsym_hamiltonian** out) {
  return guarded([&] {
    require(h && factor && out, "null argument");
    *out = new bbsym_hamiltonian{h->impl.scaled(bbsym::Rat::parse(factor))};
  });
}

void bbsym_hamiltonian_free(bbsym_hamiltonian* h) { delete h; }

bbsym_status bbsym_sequence_build(const char* name, uint32_t n_qubits,
                                  bbsym_sequence** out) {
  return guarded([&] {
    require(name && out, "null argument");
    std::optional<uint32_t> n;
    if (n_qubits > 0) n = n_qubits;
    *out = new bbsym_sequence{bbsym::sequence_from_spec(name, n)};
  });
}

bbsym_status bbsym_sequence_from_json(const char* json_text, uint32_t n_hint,
                                      bbsym_sequence** out) {
  return guarded([&] {
    require(json_text && out, "null argument");
    bbsym::json j = bbsym::json::parse(json_text, nullptr, false);
    require(!j.is_discarded(), "malformed JSON");
    std::optional<uint32_t> n;
    if (n_hint > 0) n = n_hint;
    *out = new bbsym_sequence{bbsym::sequence_from_json(j, n)};
  });
}

bbsym_status bbsym_sequence_to_json(const bbsym_sequence* s, char** out_json) {
  return guarded([&] {
    require(s && out_json, "null argument");
    *out_json = dup_string(bbsym::sequence_to_json(s->impl).dump());
  });
}

uint32_t bbsym_sequence_n_qubits(const bbsym_sequence* s) {
  return s ? s->impl.n_qubits() : 0;
}

size_t bbsym_sequence_pulse_count(const bbsym_sequence* s) {
  return s ? s->impl.pulse_count() : 0;
}

size_t bbsym_sequence_evolve_count(const bbsym_sequence* s) {
  return s ? s->impl.evolve_count() : 0;
}

bbsym_status bbsym_sequence_total_weight(const bbsym_sequence* s,
                                         char** out_rational) {
  return guarded([&] {
    require(s && out_rational, "null argument");
    *out_rational = dup_string(s->impl.total_weight().str());
  });
}

void bbsym_sequence_free(bbsym_sequence* s) { delete s; }

bbsym_status bbsym_average_hamiltonian(const bbsym_sequence* s,
                                       const bbsym_hamiltonian* h,
                                       bbsym_hamiltonian** out) {
  return guarded([&] {
    require(s && h && out, "null argument");
    *out = new bbsym_hamiltonian{s->impl.average(h->impl)};
  });
}

bbsym_status bbsym_frames_json(const bbsym_sequence* s, char** out_json) {
  return guarded([&] {
    require(s && out_json, "null argument");
    *out_json = dup_string(bbsym::frames_json(s->impl).dump());
  });
}

bbsym_status bbsym_group_analysis_json(const bbsym_hamiltonian* h,
                                       char** out_json) {
  return guarded([&] {
    require(h && out_json, "null argument");
    auto g = bbsym::ErrorGroup::from_hamiltonian(h->impl);
    *out_json = dup_string(bbsym::group_json(g).dump());
  });
}

bbsym_status bbsym_collective_groups_json(const bbsym_hamiltonian* h,
                                          char** out_json) {
  return guarded([&] {
    require(h && out_json, "null argument");
    *out_json = dup_string(bbsym::collective_groups_json(h->impl).dump());
  });
}

namespace {

bbsym::json scaling_json(const bbsym::ScalingReport& report, const char* key) {
  bbsym::json points = bbsym::json::array();
  for (const auto& pt : report.points)
    points.push_back({{"tau", pt.tau}, {key, pt.value}});
  bbsym::json out = {{"points", std::move(points)},
                     {"classification", report.exact ? "exact" : "slope"},
                     {"slope", nullptr}};
  if (report.slope.has_value()) out["slope"] = *report.slope;
  return out;
}

}  // namespace

bbsym_status bbsym_effective_error_json(const bbsym_sequence* s,
                                        const bbsym_hamiltonian* h,
                                        int bath_dim, uint64_t seed,
                                        const double* taus, size_t n_taus,
                                        int cap_dim, char** out_json) {
  return guarded([&] {
    require(s && h && out_json, "null argument");
    auto tau_list = tau_vector(taus, n_taus);
    auto bath = bbsym::BathModel::random(h->impl.labels(), bath_dim, seed);
    auto report = bbsym::effective_error(s->impl, h->impl, bath, tau_list,
                                         effective_cap(cap_dim));
    bbsym::json j = scaling_json(report, "norm_error");
    j["bath_dim"] = bath_dim;
    j["seed"] = seed;
    *out_json = dup_string(j.dump());
  });
}

bbsym_status bbsym_leakage_curve_json(const bbsym_sequence* s,
                                      const bbsym_hamiltonian* h, int bath_dim,
                                      uint64_t seed, const double* taus,
                                      size_t n_taus, int n_cycles, int cap_dim,
                                      char** out_json) {
  return guarded([&] {
    require(s && h && out_json, "null argument");
    auto tau_list = tau_vector(taus, n_taus);
    require(!tau_list.empty(), "need at least one tau value");
    auto bath = bbsym::BathModel::random(h->impl.labels(), bath_dim, seed);
    auto dfs = bbsym::collective_dfs_basis(s->impl.n_qubits());
    require(dfs.dimension > 0,
            "collective DFS is empty for this qubit count; no leakage target");
    bbsym::Vec psi0 = dfs.basis.col(0);
    std::vector<bbsym::ScalingPoint> points;
    for (double tau : tau_list) {
      double leak = bbsym::leakage_after_cycles(s->impl, h->impl, bath, tau,
                                                n_cycles, dfs.basis, psi0,
                                                effective_cap(cap_dim));
      points.push_back({tau, leak});
    }
    auto report = bbsym::fit_scaling(points);
    bbsym::json j = scaling_json(report, "leakage");
    j["bath_dim"] = bath_dim;
    j["seed"] = seed;
    j["n_cycles"] = n_cycles;
    j["dfs_dimension"] = dfs.dimension;
    *out_json = dup_string(j.dump());
  });
}

bbsym_status bbsym_collective_dfs_json(uint32_t n_qubits, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    auto report = bbsym::collective_dfs_basis(n_qubits);
    bbsym::json sectors = bbsym::json::array();
    for (const auto& s : report.sectors)
      sectors.push_back({{"two_j", s.two_j},
                         {"multiplicity", s.multiplicity},
                         {"dimension", s.dimension}});
    bbsym::json j = {{"n_qubits", n_qubits},
                     {"dimension", report.dimension},
                     {"annihilation_residual", report.annihilation_residual},
                     {"sectors", std::move(sectors)}};
    *out_json = dup_string(j.dump());
  });
}

}  // extern "C"
