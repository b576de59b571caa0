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

#include "bbsym/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace bbsym {

namespace {

std::string signed_str(const PauliString& p) {
  std::string s = p.str();
  if (p.phase_exponent() == 0) s = "+" + s;
  return s;
}

Rat rat_from_json(const json& v) {
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long long>());
  throw ValidationError(
      "coefficients must be exact rationals: a string like \"3/4\" or an "
      "integer, got " + v.dump());
}

std::pair<std::string, uint32_t> split_spec(const std::string& spec,
                                            std::optional<uint32_t> n_qubits,
                                            bool n_required) {
  std::string name = spec;
  std::optional<uint32_t> n = n_qubits;
  size_t colon = spec.rfind(':');
  if (colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::string num = spec.substr(colon + 1);
    try {
      size_t used = 0;
      unsigned long v = std::stoul(num, &used);
      if (used != num.size() || v == 0) throw std::invalid_argument(num);
      n = static_cast<uint32_t>(v);
    } catch (const std::exception&) {
      throw ValidationError("bad qubit count in spec \"" + spec + "\"");
    }
  }
  if (!n.has_value()) {
    if (n_required)
      throw ValidationError("spec \"" + spec +
                            "\" needs a qubit count (\"" + name + ":<n>\")");
    n = 0;
  }
  return {name, *n};
}

}  // namespace

json hamiltonian_to_json(const SBHamiltonian& h) {
  json terms = json::array();
  for (const auto& term : h.terms()) {
    json bath = json::object();
    for (const auto& [label, coeff] : term.bath) bath[label] = coeff.str();
    terms.push_back({{"pauli", term.system.str()}, {"bath", std::move(bath)}});
  }
  return {{"n_qubits", h.n_qubits()}, {"terms", std::move(terms)}};
}

SBHamiltonian hamiltonian_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("Hamiltonian JSON must be an object");
  std::optional<uint32_t> n;
  if (j.contains("n_qubits")) {
    if (!j["n_qubits"].is_number_integer() || j["n_qubits"].get<int64_t>() <= 0 ||
        j["n_qubits"].get<int64_t>() > int64_t{UINT32_MAX})
      throw ValidationError("\"n_qubits\" must be a positive integer");
    n = j["n_qubits"].get<uint32_t>();
  }
  if (!j.contains("terms") || !j["terms"].is_array())
    throw ValidationError("Hamiltonian JSON needs a \"terms\" array");
  std::vector<InteractionTerm> terms;
  for (const auto& jt : j["terms"]) {
    if (!jt.is_object() || !jt.contains("pauli") || !jt.contains("bath"))
      throw ValidationError("each term needs \"pauli\" and \"bath\" fields");
    PauliString word = PauliString::parse(jt["pauli"].get<std::string>());
    if (!n.has_value()) n = word.n_qubits();
    BathVector bath;
    if (!jt["bath"].is_object())
      throw ValidationError("\"bath\" must be an object of label -> coefficient");
    for (const auto& [label, coeff] : jt["bath"].items()) {
      Rat r = rat_from_json(coeff);
      if (!r.is_zero()) bath[label] = r;
    }
    terms.push_back({std::move(word), std::move(bath)});
  }
  if (!n.has_value())
    throw ValidationError("empty Hamiltonian JSON needs an explicit \"n_qubits\"");
  return SBHamiltonian(*n, std::move(terms));
}

SBHamiltonian hamiltonian_from_spec(const std::string& spec,
                                    std::optional<uint32_t> n_qubits) {
  auto [name, n] = split_spec(spec, n_qubits, /*n_required=*/true);
  if (name == "linear") return build_linear(n);
  if (name == "bilinear") return build_bilinear_nn(n);
  if (name == "hnn") return build_hnn(n);
  if (name == "zz_chain") return restrict_mqe_example(MqeExample::zz_chain, n);
  if (name == "pairwise_isotropic")
    return restrict_mqe_example(MqeExample::pairwise_isotropic, n);
  throw ValidationError(
      "unknown Hamiltonian builder \"" + name +
      "\" (known: linear, bilinear, hnn, zz_chain, pairwise_isotropic)");
}

namespace {

// Replaces a trailing dagger sign with the "_dag" suffix, anywhere before a
// parenthesized argument list as well: "O†(1,3)" -> "O_dag(1,3)".
std::string normalize_dagger(const std::string& name) {
  std::string out;
  size_t i = 0;
  while (i < name.size()) {
    if (name.compare(i, 3, "†") == 0) {
      out += "_dag";
      i += 3;
    } else {
      out += name[i++];
    }
  }
  return out;
}

bool parse_pair_args(const std::string& args, uint32_t& a, uint32_t& b) {
  size_t comma = args.find(',');
  if (comma == std::string::npos) return false;
  try {
    size_t ua = 0, ub = 0;
    std::string first = args.substr(0, comma), second = args.substr(comma + 1);
    a = static_cast<uint32_t>(std::stoul(first, &ua));
    b = static_cast<uint32_t>(std::stoul(second, &ub));
    return ua == first.size() && ub == second.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

Pulse pulse_from_name(const std::string& raw_name, uint32_t n_qubits) {
  std::string name = normalize_dagger(raw_name);
  auto bad = [&] {
    return ValidationError(
        "unknown pulse name \"" + raw_name +
        "\" (known: I, X, Y, Z, X_O.., X_OO.., Z_pairs, X(q), XX(i,j), "
        "pauli:<word>, O, O_O, O_OO, O(i,j), O_via_nn(i,i+2); exchange names "
        "accept a _dag suffix)");
  };
  if (name == "I") return Pulse::identity(n_qubits);
  if (name.size() == 1 && (name[0] == 'X' || name[0] == 'Y' || name[0] == 'Z'))
    return Pulse::collective(name[0], n_qubits);
  if (name.size() == 3 && name.substr(1) == "_O" &&
      (name[0] == 'X' || name[0] == 'Y' || name[0] == 'Z'))
    return Pulse::collective_odd(name[0], n_qubits);
  if (name.size() == 4 && name.substr(1) == "_OO" &&
      (name[0] == 'X' || name[0] == 'Y' || name[0] == 'Z'))
    return Pulse::collective_mod4(name[0], n_qubits);
  if (name == "Z_pairs") return Pulse::z_pairs(n_qubits);
  if (name.rfind("pauli:", 0) == 0)
    return Pulse::pauli(PauliString::parse(name.substr(6)));

  bool dag = false;
  std::string base = name;
  std::string args;
  size_t open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')') throw bad();
    base = name.substr(0, open);
    args = name.substr(open + 1, name.size() - open - 2);
  }
  if (base.size() > 4 && base.substr(base.size() - 4) == "_dag") {
    dag = true;
    base = base.substr(0, base.size() - 4);
  }

  if (args.empty()) {
    if (base == "O") return Pulse::exchange_pairs(n_qubits, dag);
    if (base == "O_O") return Pulse::exchange_next_nearest(n_qubits, dag);
    if (base == "O_OO") return Pulse::exchange_blocks(n_qubits, dag);
    throw bad();
  }
  if (base == "O") {
    uint32_t a = 0, b = 0;
    if (!parse_pair_args(args, a, b)) throw bad();
    return Pulse::exchange(a, b, n_qubits, dag);
  }
  if (base == "O_via_nn" && !dag) {
    uint32_t a = 0, b = 0;
    if (!parse_pair_args(args, a, b) || b != a + 2) throw bad();
    return Pulse::swap_decomposed(a, n_qubits);
  }
  if (base.size() == 1 && (base[0] == 'X' || base[0] == 'Y' || base[0] == 'Z') &&
      !dag) {
    try {
      size_t used = 0;
      uint32_t q = static_cast<uint32_t>(std::stoul(args, &used));
      if (used != args.size()) throw bad();
      return Pulse::single(n_qubits, base[0], q);
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception&) {
      throw bad();
    }
  }
  if (base.size() == 2 && base[0] == base[1] &&
      (base[0] == 'X' || base[0] == 'Y' || base[0] == 'Z') && !dag) {
    uint32_t a = 0, b = 0;
    if (!parse_pair_args(args, a, b)) throw bad();
    return Pulse::pauli_product(base[0], a, b, n_qubits);
  }
  throw bad();
}

Pulse pulse_from_tableau_json(const json& j) {
  if (!j.is_object() || j.empty())
    throw ValidationError("pulse tableau must be an object of X<q>/Z<q> images");
  uint32_t n = static_cast<uint32_t>(j.size() / 2);
  if (j.size() != 2 * static_cast<size_t>(n))
    throw ValidationError("pulse tableau needs exactly one X and one Z image per qubit");
  std::vector<PauliString> x_images, z_images;
  x_images.reserve(n);
  z_images.reserve(n);
  for (uint32_t q = 1; q <= n; ++q) {
    std::string xk = "X" + std::to_string(q);
    std::string zk = "Z" + std::to_string(q);
    if (!j.contains(xk) || !j.contains(zk))
      throw ValidationError("pulse tableau is missing \"" + xk + "\" or \"" + zk +
                            "\"");
    x_images.push_back(PauliString::parse(j[xk].get<std::string>()));
    z_images.push_back(PauliString::parse(j[zk].get<std::string>()));
  }
  return Pulse("custom", n, std::move(x_images), std::move(z_images), {});
}

json pulse_to_json(const Pulse& p) {
  try {
    Pulse named = pulse_from_name(p.name(), p.n_qubits());
    bool same = true;
    for (uint32_t q = 1; q <= p.n_qubits() && same; ++q)
      same = named.x_image(q) == p.x_image(q) && named.z_image(q) == p.z_image(q);
    if (same) return p.name();
  } catch (const ValidationError&) {
    // fall through to the explicit tableau
  }
  json tableau = json::object();
  for (uint32_t q = 1; q <= p.n_qubits(); ++q) {
    tableau["X" + std::to_string(q)] = signed_str(p.x_image(q));
    tableau["Z" + std::to_string(q)] = signed_str(p.z_image(q));
  }
  return tableau;
}

json sequence_to_json(const Sequence& s) {
  json events = json::array();
  for (const auto& ev : s.events()) {
    if (ev.kind == SequenceEvent::Kind::apply) {
      json pj = pulse_to_json(*ev.pulse);
      if (pj.is_string())
        events.push_back({{"pulse", std::move(pj)}});
      else
        events.push_back({{"pulse_tableau", std::move(pj)}});
    } else {
      events.push_back({{"evolve", ev.weight.str()}});
    }
  }
  return {{"name", s.name()},
          {"n_qubits", s.n_qubits()},
          {"events", std::move(events)}};
}

Sequence sequence_from_json(const json& j, std::optional<uint32_t> n_hint) {
  if (!j.is_object() || !j.contains("events") || !j["events"].is_array())
    throw ValidationError("sequence JSON needs an \"events\" array");
  std::optional<uint32_t> n = n_hint;
  if (j.contains("n_qubits")) {
    if (!j["n_qubits"].is_number_integer() || j["n_qubits"].get<int64_t>() <= 0 ||
        j["n_qubits"].get<int64_t>() > int64_t{UINT32_MAX})
      throw ValidationError("\"n_qubits\" must be a positive integer");
    n = j["n_qubits"].get<uint32_t>();
  }
  if (!n.has_value()) {
    for (const auto& ev : j["events"])
      if (ev.is_object() && ev.contains("pulse_tableau")) {
        n = pulse_from_tableau_json(ev["pulse_tableau"]).n_qubits();
        break;
      }
  }
  if (!n.has_value())
    throw ValidationError(
        "cannot infer the qubit count; add \"n_qubits\" to the sequence JSON");
  std::string name = j.value("name", std::string("custom"));
  std::vector<SequenceEvent> events;
  for (const auto& ev : j["events"]) {
    if (!ev.is_object()) throw ValidationError("sequence events must be objects");
    if (ev.contains("pulse"))
      events.push_back(
          SequenceEvent::apply(pulse_from_name(ev["pulse"].get<std::string>(), *n)));
    else if (ev.contains("pulse_tableau"))
      events.push_back(
          SequenceEvent::apply(pulse_from_tableau_json(ev["pulse_tableau"])));
    else if (ev.contains("evolve"))
      events.push_back(SequenceEvent::evolve(rat_from_json(ev["evolve"])));
    else
      throw ValidationError(
          "each event needs \"pulse\", \"pulse_tableau\" or \"evolve\"");
  }
  return Sequence(std::move(name), *n, std::move(events));
}

Sequence sequence_from_spec(const std::string& spec,
                            std::optional<uint32_t> n_qubits) {
  auto [name, n] = split_spec(spec, n_qubits, /*n_required=*/false);
  if (name == "collective14_block3" || name == "collective14") {
    if (n != 0 && n != 3)
      throw ValidationError("collective14_block3 is defined on exactly 3 qubits");
    return seq_collective14_block3();
  }
  if (n == 0)
    throw ValidationError("sequence \"" + name +
                          "\" needs a qubit count (\"" + name + ":<n>\")");
  if (name == "free") return Sequence::free_evolution(n);
  if (name == "linear_elim4") return seq_linear_elim4(n);
  if (name == "mqe8") return seq_mqe8(n);
  if (name == "mqe16_qx") return seq_mqe16_qx(n);
  if (name == "full_elim16") return seq_full_elim16(n);
  if (name == "collective6") return seq_collective6(n);
  throw ValidationError(
      "unknown sequence \"" + name +
      "\" (known: free, linear_elim4, mqe8, mqe16_qx, full_elim16, "
      "collective6, collective14_block3)");
}

json frames_json(const Sequence& s) {
  json out = json::array();
  int index = 1;
  for (const auto& [frame, weight] : s.toggling_frames()) {
    out.push_back({{"index", index++},
                   {"weight", weight.str()},
                   {"frame", pulse_to_json(frame)}});
  }
  return out;
}

json group_json(const ErrorGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.str());
  json out = {{"abelian", g.is_abelian()},
              {"rank", g.rank()},
              {"generators", std::move(gens)},
              {"order_log2", nullptr},
              {"order", nullptr},
              {"dfs_dimension_log2", nullptr},
              {"dfs_dimension", nullptr}};
  if (g.is_abelian()) {
    out["order_log2"] = g.order_log2();
    out["dfs_dimension_log2"] = g.dfs_dimension_log2();
    // Exact JSON numbers only (doubles lose exactness past 2^53).
    if (g.order_log2() < 53) out["order"] = uint64_t{1} << g.order_log2();
    if (g.dfs_dimension_log2() < 53)
      out["dfs_dimension"] = uint64_t{1} << g.dfs_dimension_log2();
  }
  return out;
}

json collective_groups_json(const SBHamiltonian& h) {
  // Bucket by the exact bath vector; first appearance fixes bucket order.
  std::vector<std::pair<BathVector, std::vector<std::string>>> buckets;
  for (const auto& term : h.terms()) {
    auto it = std::find_if(buckets.begin(), buckets.end(),
                           [&](const auto& b) { return b.first == term.bath; });
    if (it == buckets.end()) {
      buckets.push_back({term.bath, {term.system.str()}});
    } else {
      it->second.push_back(term.system.str());
    }
  }
  json out = json::array();
  for (const auto& [bath, systems] : buckets) {
    json bj = json::object();
    for (const auto& [label, coeff] : bath) bj[label] = coeff.str();
    out.push_back({{"bath", std::move(bj)},
                   {"systems", systems},
                   {"size", systems.size()}});
  }
  return out;
}

}  // namespace bbsym
