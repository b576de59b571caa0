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

// Command-line front end. Talks to the engine exclusively through the
// public C API (bbsym.h); everything here is argument plumbing, JSON
// assembly and report assertions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bbsym.h"

namespace {

using nlohmann::json;

// Failure carrying the machine-readable code for the error report.
struct CliError {
  std::string code;  // "validation" | "closure" | "cap" | "internal"
  std::string message;
};

int exit_code_for(const std::string& code) {
  if (code == "validation" || code == "closure") return 2;
  if (code == "cap") return 3;
  return 1;
}

void check(bbsym_status status) {
  if (status == BBSYM_OK) return;
  throw CliError{bbsym_status_name(status), bbsym_last_error()};
}

struct StrPtr {
  char* p = nullptr;
  ~StrPtr() { bbsym_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct HamPtr {
  bbsym_hamiltonian* p = nullptr;
  ~HamPtr() { bbsym_hamiltonian_free(p); }
};

struct SeqPtr {
  bbsym_sequence* p = nullptr;
  ~SeqPtr() { bbsym_sequence_free(p); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"validation", "cannot open file: " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "name[:n]" or "@file.json".
void load_hamiltonian(const std::string& spec, uint32_t n_hint, HamPtr& out) {
  if (!spec.empty() && spec[0] == '@') {
    std::string text = read_file(spec.substr(1));
    check(bbsym_hamiltonian_from_json(text.c_str(), &out.p));
  } else {
    check(bbsym_hamiltonian_build(spec.c_str(), n_hint, &out.p));
  }
}

void load_sequence(const std::string& spec, uint32_t n_hint, SeqPtr& out) {
  if (!spec.empty() && spec[0] == '@') {
    std::string text = read_file(spec.substr(1));
    check(bbsym_sequence_from_json(text.c_str(), n_hint, &out.p));
  } else {
    check(bbsym_sequence_build(spec.c_str(), n_hint, &out.p));
  }
}

std::string spec_base(const std::string& spec) {
  size_t colon = spec.rfind(':');
  return colon == std::string::npos ? spec : spec.substr(0, colon);
}

std::optional<uint32_t> spec_qubits(const std::string& spec) {
  size_t colon = spec.rfind(':');
  if (colon == std::string::npos) return std::nullopt;
  try {
    return static_cast<uint32_t>(std::stoul(spec.substr(colon + 1)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Natural target for built-in sequences when --hamiltonian is omitted.
std::string default_target_builder(const std::string& sequence_spec) {
  std::string base = spec_base(sequence_spec);
  if (base == "mqe8" || base == "mqe16_qx" || base == "full_elim16") return "hnn";
  if (base == "linear_elim4" || base == "collective6" || base == "free" ||
      base == "collective14" || base == "collective14_block3")
    return "linear";
  throw CliError{"validation",
                 "no default target Hamiltonian for sequence \"" + base +
                     "\"; pass --hamiltonian"};
}

std::vector<double> parse_taus(const std::string& text) {
  std::vector<double> taus;
  if (text.rfind("logspace:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(9));
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3)
      throw CliError{"validation",
                     "--tau logspace form is logspace:<hi_exp>:<lo_exp>:<count>"};
    try {
      double hi = std::stod(parts[0]), lo = std::stod(parts[1]);
      int count = std::stoi(parts[2]);
      if (count < 2) throw std::invalid_argument("count");
      for (int k = 0; k < count; ++k)
        taus.push_back(std::pow(10.0, hi + (lo - hi) * k / (count - 1)));
    } catch (const std::exception&) {
      throw CliError{"validation", "bad logspace spec: " + text};
    }
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        taus.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw CliError{"validation", "bad tau value: " + item};
      }
    }
  }
  if (taus.empty()) throw CliError{"validation", "empty tau list"};
  std::sort(taus.begin(), taus.end(), std::greater<>());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
  return taus;
}

// ---------------------------------------------------------------------------
// Assertions: --assert <spec>, evaluated against facts each command exposes.

using Facts = std::map<std::string, json>;

double fact_number(const Facts& facts, const std::string& key,
                   const std::string& spec) {
  auto it = facts.find(key);
  if (it == facts.end() || it->second.is_null())
    throw CliError{"validation", "assertion \"" + spec +
                                     "\" is not applicable here (no fact \"" +
                                     key + "\")"};
  return it->second.get<double>();
}

bool evaluate_assertion(const std::string& spec, const Facts& facts,
                        std::string& detail) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw CliError{"validation", "empty assertion"};
  const std::string& kind = parts[0];
  auto num_arg = [&](size_t i) {
    if (i >= parts.size())
      throw CliError{"validation", "assertion \"" + spec + "\" needs an argument"};
    try {
      return std::stod(parts[i]);
    } catch (const std::exception&) {
      throw CliError{"validation", "bad number in assertion \"" + spec + "\""};
    }
  };

  if (kind == "exact" || kind == "exact-or-slope") {
    auto it = facts.find("classification");
    if (it == facts.end())
      throw CliError{"validation",
                     "assertion \"" + spec + "\" is not applicable here"};
    bool exact = it->second == "exact";
    detail = "classification=" + it->second.get<std::string>();
    if (exact) return true;
    if (kind == "exact") return false;
    // fall through to the slope window
  }
  if (kind == "slope" || kind == "exact-or-slope") {
    double lo = num_arg(1), hi = num_arg(2);
    auto it = facts.find("slope");
    if (it == facts.end() || it->second.is_null()) {
      detail = "no slope available";
      return false;
    }
    double slope = it->second.get<double>();
    detail = "slope=" + std::to_string(slope);
    return slope >= lo && slope <= hi;
  }
  if (kind == "empty") {
    double v = fact_number(facts, "surviving", spec);
    detail = "surviving=" + std::to_string(static_cast<long long>(v));
    return v == 0;
  }
  if (kind == "surviving" || kind == "pulses" || kind == "segments" ||
      kind == "order-log2" || kind == "dfs-dim-log2" || kind == "dfs-dim" ||
      kind == "collective-dim") {
    static const std::map<std::string, std::string> key_map = {
        {"surviving", "surviving"},       {"pulses", "pulses"},
        {"segments", "segments"},         {"order-log2", "order_log2"},
        {"dfs-dim-log2", "dfs_dim_log2"}, {"dfs-dim", "dfs_dim"},
        {"collective-dim", "collective_dim"}};
    double want = num_arg(1);
    double got = fact_number(facts, key_map.at(kind), spec);
    detail = key_map.at(kind) + "=" + std::to_string(static_cast<long long>(got));
    return got == want;
  }
  if (kind == "abelian" || kind == "not-abelian") {
    auto it = facts.find("abelian");
    if (it == facts.end())
      throw CliError{"validation",
                     "assertion \"" + spec + "\" is not applicable here"};
    bool abelian = it->second.get<bool>();
    detail = abelian ? "abelian" : "not abelian";
    return (kind == "abelian") == abelian;
  }
  if (kind == "residual-max") {
    double v = fact_number(facts, "annihilation_residual", spec);
    detail = "residual=" + std::to_string(v);
    return v <= num_arg(1);
  }
  if (kind == "leak-max") {
    double v = fact_number(facts, "max_leakage", spec);
    detail = "max_leakage=" + std::to_string(v);
    return v <= num_arg(1);
  }
  if (kind == "slope-gap") {
    double v = fact_number(facts, "slope_gap", spec);
    detail = "slope_gap=" + std::to_string(v);
    return v >= num_arg(1);
  }
  throw CliError{"validation", "unknown assertion \"" + spec + "\""};
}

// Returns true when every assertion passes; annotates the report.
bool apply_assertions(const std::vector<std::string>& asserts, const Facts& facts,
                      json& report) {
  if (asserts.empty()) return true;
  json results = json::array();
  bool all_pass = true;
  for (const auto& spec : asserts) {
    std::string detail;
    bool pass = evaluate_assertion(spec, facts, detail);
    all_pass = all_pass && pass;
    results.push_back({{"assert", spec}, {"pass", pass}, {"detail", detail}});
  }
  report["assertions"] = std::move(results);
  return all_pass;
}

void emit(const json& report, const std::string& out_path) {
  std::string text = report.dump(2);
  text += '\n';
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError{"validation", "cannot write file: " + out_path};
    out << text;
  }
  std::cout << text;
}

json ham_meta(const std::string& spec, const HamPtr& h) {
  return {{"spec", spec},
          {"n_qubits", bbsym_hamiltonian_n_qubits(h.p)},
          {"term_count", bbsym_hamiltonian_term_count(h.p)}};
}

json seq_meta(const std::string& spec, const SeqPtr& s) {
  StrPtr weight;
  check(bbsym_sequence_total_weight(s.p, &weight.p));
  return {{"spec", spec},
          {"n_qubits", bbsym_sequence_n_qubits(s.p)},
          {"pulse_count", bbsym_sequence_pulse_count(s.p)},
          {"evolve_count", bbsym_sequence_evolve_count(s.p)},
          {"total_weight", weight.str()}};
}

json ham_json(const HamPtr& h) {
  StrPtr text;
  check(bbsym_hamiltonian_to_json(h.p, &text.p));
  return json::parse(text.str());
}

// Shared option state.
struct CommonOpts {
  std::string hamiltonian_spec;
  std::string sequence_spec;
  uint32_t n_qubits = 0;
  std::string tau_spec;
  int bath_dim = 2;
  uint64_t seed = 7;
  int cap_dim = 0;  // 0 -> library default
  std::string out_path;
  std::vector<std::string> asserts;
};

// Resolve hamiltonian + sequence, allowing either to default off the other.
void resolve_pair(CommonOpts& opt, bool need_hamiltonian, HamPtr& ham,
                  SeqPtr& seq) {
  uint32_t n = opt.n_qubits;
  if (n == 0 && !opt.sequence_spec.empty()) {
    auto from_spec = spec_qubits(opt.sequence_spec);
    if (from_spec) n = *from_spec;
    std::string base = spec_base(opt.sequence_spec);
    if (n == 0 && (base == "collective14" || base == "collective14_block3")) n = 3;
  }
  if (!opt.hamiltonian_spec.empty()) {
    load_hamiltonian(opt.hamiltonian_spec, n, ham);
    n = bbsym_hamiltonian_n_qubits(ham.p);
  }
  if (!opt.sequence_spec.empty()) {
    load_sequence(opt.sequence_spec, n, seq);
    n = bbsym_sequence_n_qubits(seq.p);
  }
  if (need_hamiltonian && !ham.p) {
    if (opt.sequence_spec.empty())
      throw CliError{"validation", "need --hamiltonian or --sequence"};
    opt.hamiltonian_spec = default_target_builder(opt.sequence_spec);
    load_hamiltonian(opt.hamiltonian_spec, n, ham);
  }
}

// ---------------------------------------------------------------------------

int cmd_symmetrize(CommonOpts& opt) {
  HamPtr ham;
  SeqPtr seq;
  resolve_pair(opt, /*need_hamiltonian=*/true, ham, seq);
  if (!seq.p) throw CliError{"validation", "symmetrize needs --sequence"};

  HamPtr avg;
  check(bbsym_average_hamiltonian(seq.p, ham.p, &avg.p));
  StrPtr weight;
  check(bbsym_sequence_total_weight(seq.p, &weight.p));
  HamPtr avg_weighted;
  check(bbsym_hamiltonian_scale(avg.p, weight.p, &avg_weighted.p));
  StrPtr groups;
  check(bbsym_collective_groups_json(avg.p, &groups.p));
  StrPtr frames;
  check(bbsym_frames_json(seq.p, &frames.p));

  json avg_json = ham_json(avg);
  json surviving = json::array();
  for (const auto& term : avg_json["terms"]) surviving.push_back(term["pauli"]);

  json report = {{"command", "symmetrize"},
                 {"hamiltonian", ham_meta(opt.hamiltonian_spec, ham)},
                 {"sequence", seq_meta(opt.sequence_spec, seq)},
                 {"average", avg_json},
                 {"average_times_weight", ham_json(avg_weighted)},
                 {"surviving_systems", std::move(surviving)},
                 {"term_count_before", bbsym_hamiltonian_term_count(ham.p)},
                 {"term_count_after", bbsym_hamiltonian_term_count(avg.p)},
                 {"collective_groups", json::parse(groups.str())},
                 {"frames", json::parse(frames.str())}};

  Facts facts = {{"surviving", bbsym_hamiltonian_term_count(avg.p)},
                 {"pulses", bbsym_sequence_pulse_count(seq.p)},
                 {"segments", bbsym_sequence_evolve_count(seq.p)}};
  bool ok = apply_assertions(opt.asserts, facts, report);
  emit(report, opt.out_path);
  return ok ? 0 : 4;
}

int cmd_analyze(CommonOpts& opt) {
  HamPtr ham;
  SeqPtr seq;
  resolve_pair(opt, /*need_hamiltonian=*/true, ham, seq);

  json report = {{"command", "analyze"},
                 {"hamiltonian", ham_meta(opt.hamiltonian_spec, ham)}};
  const bbsym_hamiltonian* subject = ham.p;
  HamPtr avg;
  if (seq.p) {
    check(bbsym_average_hamiltonian(seq.p, ham.p, &avg.p));
    subject = avg.p;
    report["sequence"] = seq_meta(opt.sequence_spec, seq);
    report["average"] = ham_json(avg);
  }
  StrPtr group;
  check(bbsym_group_analysis_json(subject, &group.p));
  json group_json = json::parse(group.str());
  report["group"] = group_json;

  Facts facts = {{"surviving", bbsym_hamiltonian_term_count(subject)},
                 {"abelian", group_json["abelian"]},
                 {"order_log2", group_json["order_log2"]},
                 {"dfs_dim_log2", group_json["dfs_dimension_log2"]},
                 {"dfs_dim", group_json["dfs_dimension"]}};
  if (seq.p) {
    facts["pulses"] = bbsym_sequence_pulse_count(seq.p);
    facts["segments"] = bbsym_sequence_evolve_count(seq.p);
  }
  bool ok = apply_assertions(opt.asserts, facts, report);
  emit(report, opt.out_path);
  return ok ? 0 : 4;
}

int cmd_verify(CommonOpts& opt) {
  if (opt.sequence_spec.empty())
    throw CliError{"validation", "verify needs --sequence"};
  HamPtr ham;
  SeqPtr seq;
  resolve_pair(opt, /*need_hamiltonian=*/true, ham, seq);

  std::vector<double> taus =
      parse_taus(opt.tau_spec.empty() ? "logspace:-1:-3:5" : opt.tau_spec);
  StrPtr scaling;
  check(bbsym_effective_error_json(seq.p, ham.p, opt.bath_dim, opt.seed,
                                   taus.data(), taus.size(), opt.cap_dim,
                                   &scaling.p));
  json scaling_json = json::parse(scaling.str());

  HamPtr avg;
  check(bbsym_average_hamiltonian(seq.p, ham.p, &avg.p));
  StrPtr weight;
  check(bbsym_sequence_total_weight(seq.p, &weight.p));
  HamPtr avg_weighted;
  check(bbsym_hamiltonian_scale(avg.p, weight.p, &avg_weighted.p));

  json report = {{"command", "verify"},
                 {"hamiltonian", ham_meta(opt.hamiltonian_spec, ham)},
                 {"sequence", seq_meta(opt.sequence_spec, seq)},
                 {"scaling", scaling_json},
                 {"average", ham_json(avg)},
                 {"average_times_weight", ham_json(avg_weighted)}};

  Facts facts = {{"classification", scaling_json["classification"]},
                 {"slope", scaling_json["slope"]},
                 {"pulses", bbsym_sequence_pulse_count(seq.p)},
                 {"segments", bbsym_sequence_evolve_count(seq.p)},
                 {"surviving", bbsym_hamiltonian_term_count(avg.p)}};
  bool ok = apply_assertions(opt.asserts, facts, report);
  emit(report, opt.out_path);
  return ok ? 0 : 4;
}

int cmd_dfs(CommonOpts& opt, uint32_t collective_n) {
  json report = {{"command", "dfs"}};
  Facts facts;
  if (collective_n > 0) {
    StrPtr text;
    check(bbsym_collective_dfs_json(collective_n, &text.p));
    json collective = json::parse(text.str());
    report["collective"] = collective;
    facts["collective_dim"] = collective["dimension"];
    facts["annihilation_residual"] = collective["annihilation_residual"];
  } else {
    HamPtr ham;
    SeqPtr seq;
    resolve_pair(opt, /*need_hamiltonian=*/true, ham, seq);
    const bbsym_hamiltonian* subject = ham.p;
    HamPtr avg;
    report["hamiltonian"] = ham_meta(opt.hamiltonian_spec, ham);
    if (seq.p) {
      check(bbsym_average_hamiltonian(seq.p, ham.p, &avg.p));
      subject = avg.p;
      report["sequence"] = seq_meta(opt.sequence_spec, seq);
    }
    StrPtr group;
    check(bbsym_group_analysis_json(subject, &group.p));
    json group_json = json::parse(group.str());
    report["group"] = group_json;
    facts["abelian"] = group_json["abelian"];
    facts["order_log2"] = group_json["order_log2"];
    facts["dfs_dim_log2"] = group_json["dfs_dimension_log2"];
    facts["dfs_dim"] = group_json["dfs_dimension"];
    facts["surviving"] = bbsym_hamiltonian_term_count(subject);
  }
  bool ok = apply_assertions(opt.asserts, facts, report);
  emit(report, opt.out_path);
  return ok ? 0 : 4;
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

int cmd_sweep(CommonOpts& opt, int n_seeds, int n_cycles) {
  if (opt.sequence_spec.empty())
    throw CliError{"validation", "sweep needs --sequence"};
  HamPtr ham;
  SeqPtr seq;
  resolve_pair(opt, /*need_hamiltonian=*/true, ham, seq);
  uint32_t n = bbsym_sequence_n_qubits(seq.p);
  SeqPtr free_seq;
  check(bbsym_sequence_build("free", n, &free_seq.p));

  std::vector<double> taus =
      parse_taus(opt.tau_spec.empty() ? "logspace:-1.25:-2.25:5" : opt.tau_spec);

  std::string csv = "tau,norm_error,leakage_sym,leakage_unsym,seed\n";
  std::vector<double> slopes_err, slopes_sym, slopes_unsym;
  double max_leak_sym = 0.0;
  json per_seed = json::array();
  for (int k = 0; k < n_seeds; ++k) {
    uint64_t seed = opt.seed + static_cast<uint64_t>(k);
    StrPtr err_text, sym_text, unsym_text;
    check(bbsym_effective_error_json(seq.p, ham.p, opt.bath_dim, seed,
                                     taus.data(), taus.size(), opt.cap_dim,
                                     &err_text.p));
    check(bbsym_leakage_curve_json(seq.p, ham.p, opt.bath_dim, seed, taus.data(),
                                   taus.size(), n_cycles, opt.cap_dim,
                                   &sym_text.p));
    check(bbsym_leakage_curve_json(free_seq.p, ham.p, opt.bath_dim, seed,
                                   taus.data(), taus.size(), n_cycles,
                                   opt.cap_dim, &unsym_text.p));
    json err = json::parse(err_text.str());
    json sym = json::parse(sym_text.str());
    json unsym = json::parse(unsym_text.str());
    for (size_t i = 0; i < taus.size(); ++i) {
      char row[256];
      std::snprintf(row, sizeof(row), "%.12g,%.12g,%.12g,%.12g,%llu\n", taus[i],
                    err["points"][i]["norm_error"].get<double>(),
                    sym["points"][i]["leakage"].get<double>(),
                    unsym["points"][i]["leakage"].get<double>(),
                    static_cast<unsigned long long>(seed));
      csv += row;
      max_leak_sym =
          std::max(max_leak_sym, sym["points"][i]["leakage"].get<double>());
    }
    json entry = {{"seed", seed},
                  {"norm_error_slope", err["slope"]},
                  {"leakage_sym_slope", sym["slope"]},
                  {"leakage_unsym_slope", unsym["slope"]}};
    per_seed.push_back(entry);
    if (!err["slope"].is_null()) slopes_err.push_back(err["slope"].get<double>());
    if (!sym["slope"].is_null()) slopes_sym.push_back(sym["slope"].get<double>());
    if (!unsym["slope"].is_null())
      slopes_unsym.push_back(unsym["slope"].get<double>());
  }

  double med_sym = median(slopes_sym);
  double med_unsym = median(slopes_unsym);
  json report = {{"command", "sweep"},
                 {"hamiltonian", ham_meta(opt.hamiltonian_spec, ham)},
                 {"sequence", seq_meta(opt.sequence_spec, seq)},
                 {"seeds", per_seed},
                 {"median_norm_error_slope", median(slopes_err)},
                 {"median_leakage_sym_slope", med_sym},
                 {"median_leakage_unsym_slope", med_unsym},
                 {"rows", n_seeds * static_cast<int>(taus.size())}};
  if (!std::isnan(med_sym) && !std::isnan(med_unsym))
    report["slope_gap"] = med_sym - med_unsym;

  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw CliError{"validation", "cannot write file: " + opt.out_path};
    out << csv;
    report["csv_path"] = opt.out_path;
  } else {
    report["csv"] = csv;
  }

  Facts facts = {{"max_leakage", max_leak_sym}};
  if (report.contains("slope_gap")) facts["slope_gap"] = report["slope_gap"];
  bool ok = apply_assertions(opt.asserts, facts, report);
  std::string out_path;  // the CSV already went to --out; report to stdout
  emit(report, out_path);
  return ok ? 0 : 4;
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool with_numeric) {
  cmd->add_option("--hamiltonian", opt.hamiltonian_spec,
                  "Hamiltonian: builder[:n] (linear, bilinear, hnn, zz_chain, "
                  "pairwise_isotropic) or @file.json");
  cmd->add_option("--sequence", opt.sequence_spec,
                  "Sequence: name[:n] (free, linear_elim4, mqe8, mqe16_qx, "
                  "full_elim16, collective6, collective14_block3) or @file.json");
  cmd->add_option("--n", opt.n_qubits, "Qubit count when a spec omits it")
      ->envname("BB_N");
  cmd->add_option("--out", opt.out_path, "Write the report (or CSV) to a file")
      ->envname("BB_OUT");
  cmd->add_option("--assert", opt.asserts,
                  "Machine-checkable assertion; repeatable. Forms: exact, "
                  "slope:lo:hi, exact-or-slope:lo:hi, empty, surviving:k, "
                  "pulses:k, segments:k, abelian, not-abelian, order-log2:k, "
                  "dfs-dim:k, dfs-dim-log2:k, collective-dim:k, "
                  "residual-max:x, leak-max:x, slope-gap:x");
  if (with_numeric) {
    cmd->add_option("--tau", opt.tau_spec,
                    "Segment times: comma list or logspace:<hi>:<lo>:<count>")
        ->envname("BB_TAU");
    cmd->add_option("--bath-dim", opt.bath_dim, "Bath factor dimension")
        ->envname("BB_BATH_DIM");
    cmd->add_option("--seed", opt.seed, "Base seed for bath sampling")
        ->envname("BB_SEED");
    cmd->add_option("--cap-dim", opt.cap_dim,
                    "Dense dimension cap (0 = library default)")
        ->envname("BB_CAP_DIM");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bang-bang pulse-sequence symmetrization engine"};
  app.set_version_flag("--version", bbsym_version());
  app.set_config("--config");
  app.require_subcommand(1);

  CommonOpts opt;
  uint32_t collective_n = 0;
  int n_seeds = 5;
  int n_cycles = 1;

  CLI::App* symmetrize =
      app.add_subcommand("symmetrize", "Average Hamiltonian under a sequence");
  add_common(symmetrize, opt, /*with_numeric=*/false);

  CLI::App* analyze =
      app.add_subcommand("analyze", "Error-group analysis of (averaged) couplings");
  add_common(analyze, opt, /*with_numeric=*/false);

  CLI::App* verify = app.add_subcommand(
      "verify", "Dense check: cycle unitary vs average Hamiltonian");
  add_common(verify, opt, /*with_numeric=*/true);

  CLI::App* dfs = app.add_subcommand(
      "dfs", "Decoherence-free subspace: collective or group-based");
  add_common(dfs, opt, /*with_numeric=*/false);
  dfs->add_option("--collective", collective_n,
                  "Collective DFS of this many qubits");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Multi-seed scaling sweep with leakage curves (CSV)");
  add_common(sweep, opt, /*with_numeric=*/true);
  sweep->add_option("--n-seeds", n_seeds, "Number of consecutive seeds");
  sweep->add_option("--cycles", n_cycles, "Cycles per leakage evaluation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    json err = {{"error", {{"code", "validation"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << std::endl;
    return 2;
  }

  try {
    if (symmetrize->parsed()) return cmd_symmetrize(opt);
    if (analyze->parsed()) return cmd_analyze(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (dfs->parsed()) return cmd_dfs(opt, collective_n);
    if (sweep->parsed()) return cmd_sweep(opt, n_seeds, n_cycles);
    return 2;
  } catch (const CliError& e) {
    json err = {{"error", {{"code", e.code}, {"message", e.message}}}};
    std::cout << err.dump(2) << std::endl;
    return exit_code_for(e.code);
  } catch (const std::exception& e) {
    json err = {{"error", {{"code", "internal"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << std::endl;
    return 1;
  }
}
