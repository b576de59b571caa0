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

#ifndef BBSYM_JSON_IO_HPP
#define BBSYM_JSON_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "bbsym/group.hpp"
#include "bbsym/hamiltonian.hpp"
#include "bbsym/sequence.hpp"

namespace bbsym {

using nlohmann::json;

// {"n_qubits": 4, "terms": [{"pauli": "XIII", "bath": {"B1x": "1"}}, ...]}
// Coefficients are exact rationals as strings ("3/4") or JSON integers;
// floating-point coefficients are rejected. A "-" prefix on the Pauli word
// folds into the coefficients.
json hamiltonian_to_json(const SBHamiltonian& h);
SBHamiltonian hamiltonian_from_json(const json& j);

// "linear" | "bilinear" | "hnn" | "zz_chain" | "pairwise_isotropic",
// optionally suffixed ":<n>"; n_qubits fills in when the suffix is absent.
SBHamiltonian hamiltonian_from_spec(const std::string& spec,
                                    std::optional<uint32_t> n_qubits = {});

// Pulse name vocabulary (the "_dag" suffix marks the inverse of an exchange
// pulse; a trailing dagger sign is accepted as an alias):
//   I | X | Y | Z | X_O ... | X_OO ... | Z_pairs | X(3) | XX(1,2) |
//   pauli:<word> | O | O_O | O_OO | O(i,j) | O_via_nn(i,i+2)  [+ _dag forms]
Pulse pulse_from_name(const std::string& name, uint32_t n_qubits);
// {"X1": "+ZII", ..., "Z1": "-XII", ...}: explicit conjugation tableau.
Pulse pulse_from_tableau_json(const json& j);
// Name string when the name round-trips to the same tableau, else a
// {"pulse_tableau": ...}-ready tableau object.
json pulse_to_json(const Pulse& p);

// {"name": ..., "n_qubits": 4, "events": [{"pulse": "X_O"} |
//  {"pulse_tableau": {...}} | {"evolve": "1"}, ...]}
// Events are listed in operator-notation order (last acts first).
json sequence_to_json(const Sequence& s);
Sequence sequence_from_json(const json& j, std::optional<uint32_t> n_hint = {});

// Built-in sequence name, optionally ":<n>".
Sequence sequence_from_spec(const std::string& spec,
                            std::optional<uint32_t> n_qubits = {});

// [{"index": 1, "weight": "1", "frame": <pulse json>}, ...] in time order.
json frames_json(const Sequence& s);

// {"abelian": ..., "rank": ..., "order_log2": ..., "order": ...,
//  "dfs_dimension_log2": ..., "dfs_dimension": ..., "generators": [...]}
// Order/dimension fields are null when not defined (non-Abelian) or too
// large for an exact JSON number.
json group_json(const ErrorGroup& g);

// Terms bucketed by identical bath vector, preserving canonical order:
// [{"bath": {...}, "systems": [...], "size": k}, ...]. Equal-weight buckets
// of same-letter words are how block-collective structure shows up.
json collective_groups_json(const SBHamiltonian& h);

}  // namespace bbsym

#endif  // BBSYM_JSON_IO_HPP
